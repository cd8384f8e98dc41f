#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orichain {

// Tags for the monoid classes a transformation can be tested against.
enum class MonoidLabel {
  PT,    // all partial transformations
  T,     // full transformations
  I,     // partial permutations (symmetric inverse monoid)
  S,     // permutations (symmetric group)
  OP,    // orientation-preserving full transformations
  OR,    // oriented full transformations
  POP,   // orientation-preserving partial transformations
  POR,   // oriented partial transformations
  POPI,  // orientation-preserving partial permutations
  PORI,  // oriented partial permutations
  DPC,   // partial isometries of the cycle graph
  C,     // cyclic group generated by the rotation g
  D,     // dihedral group generated by g and h
};

inline constexpr std::array<MonoidLabel, 13> all_monoid_labels = {
    MonoidLabel::PT,   MonoidLabel::T,    MonoidLabel::I,   MonoidLabel::S,
    MonoidLabel::OP,   MonoidLabel::OR,   MonoidLabel::POP, MonoidLabel::POR,
    MonoidLabel::POPI, MonoidLabel::PORI, MonoidLabel::DPC, MonoidLabel::C,
    MonoidLabel::D};

std::string_view to_string(MonoidLabel label);
std::optional<MonoidLabel> parse_monoid_label(std::string_view text);

// A partial transformation on the chain {1, ..., n}. Stored densely: entry
// i-1 of the image vector holds the image of point i, with 0 meaning
// "undefined". The domain is therefore always implicitly sorted. Values are
// immutable after construction; all point values in the API are 1-based.
class PTrans {
public:
  // Degenerate chain-0 empty map, so the type is usable in containers.
  PTrans() = default;

  static PTrans make(int n, std::span<const std::pair<int, int>> pairs);
  static PTrans make(int n, std::initializer_list<std::pair<int, int>> pairs);
  // Full map [y1,...,yn] with i |-> yi.
  static PTrans full_map(int n, std::vector<int> images);
  // Dense representation; 0 marks an undefined point.
  static PTrans from_image_vector(int n, std::vector<int> img);
  static PTrans identity(int n);
  static PTrans empty_map(int n);

  int chain_size() const { return n_; }
  int width() const;  // number of domain points
  int rank() const;   // number of distinct image values
  bool is_full() const { return width() == n_; }
  bool is_injective() const { return rank() == width(); }
  bool is_permutation() const { return is_full() && is_injective(); }
  bool is_empty_map() const { return width() == 0; }

  bool defined(int x) const;
  // Image of x, or 0 when x is not in the domain.
  int operator[](int x) const;

  std::vector<int> domain() const;  // strictly increasing
  std::vector<int> image() const;   // sorted distinct image values
  const std::vector<int>& image_vector() const { return img_; }

  // Inverse partial permutation; requires injectivity.
  PTrans inverse() const;

  // Orders by chain size, then lexicographically on the dense image vector
  // (undefined sorts before every value). This is the enumeration order used
  // throughout the census machinery.
  auto operator<=>(const PTrans&) const = default;
  bool operator==(const PTrans&) const = default;

private:
  PTrans(int n, std::vector<int> img) : n_(n), img_(std::move(img)) {}

  int n_ = 0;
  std::vector<int> img_;
};

// Left-to-right composition: x(alpha beta) = (x alpha) beta. The composite is
// defined at x iff x alpha is defined and lands in Dom(beta).
PTrans compose(const PTrans& alpha, const PTrans& beta);
inline PTrans operator*(const PTrans& alpha, const PTrans& beta) {
  return compose(alpha, beta);
}

// Restriction to Dom(alpha) intersected with the given points.
PTrans restrict_to(const PTrans& alpha, std::span<const int> points);

// All restrictions of alpha to w-element subsets of its domain, in
// lexicographic subset order. The sink returns true to stop early; the
// function returns true iff it was stopped. Width < w yields nothing.
bool restrictions_of_width(const PTrans& alpha, int w,
                           const std::function<bool(const PTrans&)>& sink);
std::vector<PTrans> restrictions_of_width(const PTrans& alpha, int w);

// The chain rotation g^k (i |-> ((i + k - 1) mod n) + 1) and the chain
// reflection h (i |-> n + 1 - i).
PTrans rotation(int n, int k);
PTrans reflection(int n);

// 1, g, ..., g^{n-1}, h, hg, ..., hg^{n-1} in that order; for n in {1, 2}
// only the cyclic part (the listed reflections would duplicate it).
std::vector<PTrans> dihedral_elements(int n);

// Text grammar used by the CLI and golden files:
//   full map:    "n=4; [1,2,1,2]"
//   partial map: "n=5; {1:2, 3:5, 4:1}"   (domain strictly increasing)
//   empty map:   "n=3; {}"
std::string to_text(const PTrans& alpha);
PTrans parse_ptrans(std::string_view text);

}  // namespace orichain
