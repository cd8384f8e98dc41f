#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace orichain {

// A finite sequence of values drawn from the chain {1 < 2 < ... < n}.
// The empty sequence is legal; values are validated at construction and
// never re-checked by the predicates below.
class ChainSeq {
public:
  ChainSeq(int chain, std::vector<int> values);

  int chain() const { return chain_; }
  int length() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }
  std::span<const int> values() const { return values_; }

  // 1-based access: value(1) is the first entry.
  int value(int pos) const;

  bool operator==(const ChainSeq&) const = default;

private:
  int chain_;
  std::vector<int> values_;
};

// Text form "(3,1,2)"; the empty sequence prints as "()".
std::string to_text(const ChainSeq& s);

// Number of positions i with a_i > a_{i+1}, indices wrapping (a_{t+1} = a_1).
// Zero for sequences of length <= 1.
int descent_count(const ChainSeq& s);

// Wraparound count of positions with a_i < a_{i+1}.
int ascent_count(const ChainSeq& s);

bool is_cyclic(const ChainSeq& s);      // at most one wraparound descent
bool is_anticyclic(const ChainSeq& s);  // at most one wraparound ascent
bool is_oriented(const ChainSeq& s);    // cyclic or anti-cyclic

// An element of the dihedral group D_2t acting on the positions 1..t of a
// length-t sequence. Canonical form is h^f g^r: reflection first (when the
// flag is set), then rotation by r. The composition table follows from
// g h = h g^-1.
class DihedralElement {
public:
  DihedralElement(int degree, int rotation, bool reflected);

  static DihedralElement identity(int degree) { return {degree, 0, false}; }

  // All 2t canonical elements of degree t, in the order
  // 1, g, ..., g^{t-1}, h, hg, ..., hg^{t-1}. For degree <= 2 some of them
  // coincide as position maps; they are still listed separately.
  static std::vector<DihedralElement> all(int degree);

  int degree() const { return degree_; }
  int rotation_amount() const { return rotation_; }
  bool reflected() const { return reflected_; }
  bool is_identity() const { return rotation_ == 0 && !reflected_; }

  // Image of a 1-based position under the permutation.
  int apply(int pos) const;

  // Group product "this then other" (positions act on the right).
  DihedralElement compose(const DihedralElement& other) const;
  DihedralElement inverse() const;

  bool operator==(const DihedralElement&) const = default;

private:
  int degree_;
  int rotation_;
  bool reflected_;
};

// (a_1, ..., a_t) |-> (a_{1 sigma}, ..., a_{t sigma}).
// Requires sigma.degree() == s.length().
ChainSeq act(const DihedralElement& sigma, const ChainSeq& s);

// Some sigma with act(sigma, s) non-decreasing, if one exists. Unreflected
// elements are preferred, then the least rotation amount; so a cyclic
// sequence always gets an unreflected answer. Requires length >= 1.
std::optional<DihedralElement> find_sorting_symmetry(const ChainSeq& s);

}  // namespace orichain
