#include "orichain/ptrans.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace orichain {

namespace {

void check_chain_size(int n) {
  if (n < 1) {
    throw std::invalid_argument("chain size must be positive, got " +
                                std::to_string(n));
  }
}

void check_point(int n, int x, const char* what) {
  if (x < 1 || x > n) {
    throw std::invalid_argument(std::string(what) + " " + std::to_string(x) +
                                " outside chain [1," + std::to_string(n) + "]");
  }
}

}  // namespace

std::string_view to_string(MonoidLabel label) {
  switch (label) {
    case MonoidLabel::PT: return "PT";
    case MonoidLabel::T: return "T";
    case MonoidLabel::I: return "I";
    case MonoidLabel::S: return "S";
    case MonoidLabel::OP: return "OP";
    case MonoidLabel::OR: return "OR";
    case MonoidLabel::POP: return "POP";
    case MonoidLabel::POR: return "POR";
    case MonoidLabel::POPI: return "POPI";
    case MonoidLabel::PORI: return "PORI";
    case MonoidLabel::DPC: return "DPC";
    case MonoidLabel::C: return "C";
    case MonoidLabel::D: return "D";
  }
  return "?";
}

std::optional<MonoidLabel> parse_monoid_label(std::string_view text) {
  for (MonoidLabel label : all_monoid_labels) {
    if (text == to_string(label)) return label;
  }
  return std::nullopt;
}

PTrans PTrans::make(int n, std::span<const std::pair<int, int>> pairs) {
  check_chain_size(n);
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  for (auto [x, y] : pairs) {
    check_point(n, x, "domain point");
    check_point(n, y, "image point");
    if (img[x - 1] != 0) {
      throw std::invalid_argument("duplicate domain element " +
                                  std::to_string(x));
    }
    img[x - 1] = y;
  }
  return PTrans(n, std::move(img));
}

PTrans PTrans::make(int n, std::initializer_list<std::pair<int, int>> pairs) {
  return make(n, std::span<const std::pair<int, int>>(pairs.begin(),
                                                      pairs.size()));
}

PTrans PTrans::full_map(int n, std::vector<int> images) {
  check_chain_size(n);
  if (static_cast<int>(images.size()) != n) {
    throw std::invalid_argument("full map on chain " + std::to_string(n) +
                                " needs exactly " + std::to_string(n) +
                                " images, got " +
                                std::to_string(images.size()));
  }
  for (int y : images) check_point(n, y, "image point");
  return PTrans(n, std::move(images));
}

PTrans PTrans::from_image_vector(int n, std::vector<int> img) {
  check_chain_size(n);
  if (static_cast<int>(img.size()) != n) {
    throw std::invalid_argument("image vector length " +
                                std::to_string(img.size()) +
                                " does not match chain size " +
                                std::to_string(n));
  }
  for (int y : img) {
    if (y < 0 || y > n) {
      throw std::invalid_argument("image entry " + std::to_string(y) +
                                  " outside [0," + std::to_string(n) + "]");
    }
  }
  return PTrans(n, std::move(img));
}

PTrans PTrans::identity(int n) {
  check_chain_size(n);
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) img[i - 1] = i;
  return PTrans(n, std::move(img));
}

PTrans PTrans::empty_map(int n) {
  check_chain_size(n);
  return PTrans(n, std::vector<int>(static_cast<std::size_t>(n), 0));
}

int PTrans::width() const {
  return static_cast<int>(
      std::count_if(img_.begin(), img_.end(), [](int y) { return y != 0; }));
}

int PTrans::rank() const {
  std::vector<int> vals;
  vals.reserve(img_.size());
  for (int y : img_) {
    if (y != 0) vals.push_back(y);
  }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return static_cast<int>(vals.size());
}

bool PTrans::defined(int x) const { return (*this)[x] != 0; }

int PTrans::operator[](int x) const {
  if (x < 1 || x > n_) {
    throw std::out_of_range("point " + std::to_string(x) + " outside chain [1," +
                            std::to_string(n_) + "]");
  }
  return img_[x - 1];
}

std::vector<int> PTrans::domain() const {
  std::vector<int> out;
  for (int x = 1; x <= n_; ++x) {
    if (img_[x - 1] != 0) out.push_back(x);
  }
  return out;
}

std::vector<int> PTrans::image() const {
  std::vector<int> out;
  for (int y : img_) {
    if (y != 0) out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PTrans PTrans::inverse() const {
  if (!is_injective()) {
    throw std::domain_error("inverse requires an injective transformation");
  }
  std::vector<int> inv(img_.size(), 0);
  for (int x = 1; x <= n_; ++x) {
    int y = img_[x - 1];
    if (y != 0) inv[y - 1] = x;
  }
  return PTrans(n_, std::move(inv));
}

PTrans compose(const PTrans& alpha, const PTrans& beta) {
  if (alpha.chain_size() != beta.chain_size()) {
    throw std::domain_error("chain-size mismatch: " +
                            std::to_string(alpha.chain_size()) + " vs " +
                            std::to_string(beta.chain_size()));
  }
  const int n = alpha.chain_size();
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  for (int x = 1; x <= n; ++x) {
    int y = alpha[x];
    if (y != 0) img[x - 1] = beta[y];
  }
  return PTrans::from_image_vector(n, std::move(img));
}

PTrans restrict_to(const PTrans& alpha, std::span<const int> points) {
  const int n = alpha.chain_size();
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  for (int x : points) {
    if (x >= 1 && x <= n) img[x - 1] = alpha[x];
  }
  return PTrans::from_image_vector(n, std::move(img));
}

bool restrictions_of_width(const PTrans& alpha, int w,
                           const std::function<bool(const PTrans&)>& sink) {
  if (w < 1) {
    throw std::invalid_argument("restriction width must be positive, got " +
                                std::to_string(w));
  }
  const std::vector<int> dom = alpha.domain();
  const int k = static_cast<int>(dom.size());
  if (w > k) return false;

  // Index odometer over w-subsets of dom, lexicographic.
  std::vector<int> idx(static_cast<std::size_t>(w));
  for (int i = 0; i < w; ++i) idx[i] = i;
  std::vector<int> subset(static_cast<std::size_t>(w));
  while (true) {
    for (int i = 0; i < w; ++i) subset[i] = dom[idx[i]];
    if (sink(restrict_to(alpha, subset))) return true;

    int pos = w - 1;
    while (pos >= 0 && idx[pos] == k - w + pos) --pos;
    if (pos < 0) return false;
    ++idx[pos];
    for (int i = pos + 1; i < w; ++i) idx[i] = idx[i - 1] + 1;
  }
}

std::vector<PTrans> restrictions_of_width(const PTrans& alpha, int w) {
  std::vector<PTrans> out;
  restrictions_of_width(alpha, w, [&](const PTrans& beta) {
    out.push_back(beta);
    return false;
  });
  return out;
}

PTrans rotation(int n, int k) {
  check_chain_size(n);
  if (k < 0) {
    throw std::invalid_argument("rotation power must be non-negative, got " +
                                std::to_string(k));
  }
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) img[i - 1] = (i + k - 1) % n + 1;
  return PTrans::from_image_vector(n, std::move(img));
}

PTrans reflection(int n) {
  check_chain_size(n);
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) img[i - 1] = n + 1 - i;
  return PTrans::from_image_vector(n, std::move(img));
}

std::vector<PTrans> dihedral_elements(int n) {
  check_chain_size(n);
  std::vector<PTrans> out;
  for (int k = 0; k < n; ++k) out.push_back(rotation(n, k));
  if (n >= 3) {
    const PTrans h = reflection(n);
    for (int k = 0; k < n; ++k) out.push_back(compose(h, rotation(n, k)));
  }
  return out;
}

std::string to_text(const PTrans& alpha) {
  const int n = alpha.chain_size();
  std::string out = "n=" + std::to_string(n) + "; ";
  if (alpha.is_full()) {
    out += '[';
    for (int x = 1; x <= n; ++x) {
      if (x > 1) out += ',';
      out += std::to_string(alpha[x]);
    }
    out += ']';
    return out;
  }
  out += '{';
  bool first = true;
  for (int x = 1; x <= n; ++x) {
    if (!alpha.defined(x)) continue;
    if (!first) out += ", ";
    first = false;
    out += std::to_string(x) + ":" + std::to_string(alpha[x]);
  }
  out += '}';
  return out;
}

namespace {

// Minimal cursor over the transformation text grammar. Whitespace is
// tolerated between tokens on input; output is always in canonical form.
struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = pos < text.size()
                            ? "'" + std::string(1, text[pos]) + "'"
                            : "end of input";
    throw std::invalid_argument("parse error at offset " + std::to_string(pos) +
                                ": expected " + expected + ", found " + found);
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      fail(std::string("'") + c + "'");
    }
    ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == start) fail("an integer");
    long value = 0;
    for (std::size_t i = start; i < pos; ++i) {
      value = value * 10 + (text[i] - '0');
      if (value > 1'000'000) {
        throw std::invalid_argument("integer too large at offset " +
                                    std::to_string(start));
      }
    }
    return static_cast<int>(value);
  }

  void done() {
    skip_ws();
    if (pos != text.size()) fail("end of input");
  }
};

}  // namespace

PTrans parse_ptrans(std::string_view text) {
  Cursor cur{text};
  cur.skip_ws();
  cur.expect('n');
  cur.expect('=');
  const int n = cur.integer();
  if (n < 1) {
    throw std::invalid_argument("chain size must be positive, got " +
                                std::to_string(n));
  }
  cur.expect(';');
  cur.skip_ws();

  if (cur.peek_is('[')) {
    cur.expect('[');
    std::vector<int> images;
    images.push_back(cur.integer());
    while (cur.peek_is(',')) {
      cur.expect(',');
      images.push_back(cur.integer());
    }
    cur.expect(']');
    cur.done();
    return PTrans::full_map(n, std::move(images));
  }

  cur.expect('{');
  std::vector<std::pair<int, int>> pairs;
  if (!cur.peek_is('}')) {
    while (true) {
      const int x = cur.integer();
      cur.expect(':');
      const int y = cur.integer();
      if (!pairs.empty() && x <= pairs.back().first) {
        throw std::invalid_argument("domain points must be strictly increasing; "
                                    "saw " + std::to_string(x) + " after " +
                                    std::to_string(pairs.back().first));
      }
      pairs.emplace_back(x, y);
      if (!cur.peek_is(',')) break;
      cur.expect(',');
    }
  }
  cur.expect('}');
  cur.done();
  return PTrans::make(n, pairs);
}

}  // namespace orichain
