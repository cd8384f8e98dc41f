#include "orichain/chain_seq.hpp"

#include <algorithm>
#include <stdexcept>

namespace orichain {

ChainSeq::ChainSeq(int chain, std::vector<int> values)
    : chain_(chain), values_(std::move(values)) {
  if (chain_ < 1) {
    throw std::invalid_argument("chain size must be positive, got " +
                                std::to_string(chain_));
  }
  for (int v : values_) {
    if (v < 1 || v > chain_) {
      throw std::invalid_argument("sequence value " + std::to_string(v) +
                                  " outside chain [1," + std::to_string(chain_) +
                                  "]");
    }
  }
}

int ChainSeq::value(int pos) const {
  if (pos < 1 || pos > length()) {
    throw std::out_of_range("sequence position " + std::to_string(pos) +
                            " outside [1," + std::to_string(length()) + "]");
  }
  return values_[pos - 1];
}

std::string to_text(const ChainSeq& s) {
  std::string out = "(";
  for (int i = 0; i < s.length(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(s.values()[i]);
  }
  out += ')';
  return out;
}

int descent_count(const ChainSeq& s) {
  const int t = s.length();
  if (t <= 1) return 0;
  int count = 0;
  for (int i = 0; i < t; ++i) {
    if (s.values()[i] > s.values()[(i + 1) % t]) ++count;
  }
  return count;
}

int ascent_count(const ChainSeq& s) {
  const int t = s.length();
  if (t <= 1) return 0;
  int count = 0;
  for (int i = 0; i < t; ++i) {
    if (s.values()[i] < s.values()[(i + 1) % t]) ++count;
  }
  return count;
}

bool is_cyclic(const ChainSeq& s) { return descent_count(s) <= 1; }

bool is_anticyclic(const ChainSeq& s) { return ascent_count(s) <= 1; }

bool is_oriented(const ChainSeq& s) {
  return is_cyclic(s) || is_anticyclic(s);
}

DihedralElement::DihedralElement(int degree, int rotation, bool reflected)
    : degree_(degree), rotation_(rotation), reflected_(reflected) {
  if (degree_ < 1) {
    throw std::invalid_argument("dihedral degree must be positive, got " +
                                std::to_string(degree_));
  }
  if (rotation_ < 0 || rotation_ >= degree_) {
    throw std::invalid_argument("rotation amount " + std::to_string(rotation_) +
                                " outside [0," + std::to_string(degree_ - 1) +
                                "]");
  }
}

std::vector<DihedralElement> DihedralElement::all(int degree) {
  std::vector<DihedralElement> out;
  out.reserve(2 * static_cast<std::size_t>(degree));
  for (int r = 0; r < degree; ++r) out.emplace_back(degree, r, false);
  for (int r = 0; r < degree; ++r) out.emplace_back(degree, r, true);
  return out;
}

int DihedralElement::apply(int pos) const {
  if (pos < 1 || pos > degree_) {
    throw std::out_of_range("position " + std::to_string(pos) +
                            " outside [1," + std::to_string(degree_) + "]");
  }
  const int after_reflection = reflected_ ? degree_ + 1 - pos : pos;
  return (after_reflection - 1 + rotation_) % degree_ + 1;
}

DihedralElement DihedralElement::compose(const DihedralElement& other) const {
  if (degree_ != other.degree_) {
    throw std::domain_error("degree mismatch: " + std::to_string(degree_) +
                            " vs " + std::to_string(other.degree_));
  }
  // h^f1 g^r1 . h^f2 g^r2, rewritten with g^r h = h g^-r.
  if (!other.reflected_) {
    return {degree_, (rotation_ + other.rotation_) % degree_, reflected_};
  }
  const int r = ((other.rotation_ - rotation_) % degree_ + degree_) % degree_;
  return {degree_, r, !reflected_};
}

DihedralElement DihedralElement::inverse() const {
  if (reflected_) return *this;  // reflections are involutions
  return {degree_, (degree_ - rotation_) % degree_, false};
}

ChainSeq act(const DihedralElement& sigma, const ChainSeq& s) {
  if (sigma.degree() != s.length()) {
    throw std::domain_error("degree mismatch: element of degree " +
                            std::to_string(sigma.degree()) +
                            " acting on sequence of length " +
                            std::to_string(s.length()));
  }
  std::vector<int> out(s.values().size());
  for (int i = 1; i <= s.length(); ++i) {
    out[i - 1] = s.values()[sigma.apply(i) - 1];
  }
  return {s.chain(), std::move(out)};
}

std::optional<DihedralElement> find_sorting_symmetry(const ChainSeq& s) {
  if (s.empty()) {
    throw std::domain_error("find_sorting_symmetry requires a nonempty sequence");
  }
  const int t = s.length();
  for (bool reflected : {false, true}) {
    for (int r = 0; r < t; ++r) {
      DihedralElement sigma(t, r, reflected);
      ChainSeq moved = act(sigma, s);
      if (std::is_sorted(moved.values().begin(), moved.values().end())) {
        return sigma;
      }
    }
  }
  return std::nullopt;
}

}  // namespace orichain
