#pragma once

#include "orichain/chain_seq.hpp"
#include "orichain/ptrans.hpp"

namespace orichain {

// Orientation attributes of a transformation's image sequence.
struct OrientationClass {
  bool cyclic = false;
  bool anticyclic = false;

  bool oriented() const { return cyclic || anticyclic; }
  bool operator==(const OrientationClass&) const = default;
};

// (a_1 alpha, ..., a_t alpha) over the sorted domain {a_1 < ... < a_t}.
ChainSeq image_sequence(const PTrans& alpha);

// The definitional orientation test: a direct descent/ascent scan of the
// image sequence. This is the ground truth every local characterization in
// this module is checked against.
OrientationClass classify(const PTrans& alpha);

// Membership in any of the monoid classes. DPC requires chain size >= 3.
bool is_member(const PTrans& alpha, MonoidLabel label);

// Triple test for orientation-preservation on full maps: every ordered
// triple of chain points and its image are both cyclic or both anti-cyclic.
// Equivalent to OP membership only for rank != 2; the rank-2 maps that
// satisfy it without preserving orientation are the reason the rank
// restriction exists.
bool hv_triple_test(const PTrans& alpha);

// Quadruple test for orientedness on full maps: every oriented ordered
// quadruple maps to an oriented quadruple. Holds for all ranks.
bool hv_quadruple_test(const PTrans& alpha);

// Every cyclic ordered triple maps to a cyclic triple (full maps).
bool cyclic_triple_test(const PTrans& alpha);

// w = 3: every non-decreasing triple maps to a cyclic triple.
// w = 4: every non-decreasing quadruple maps to an oriented quadruple.
bool nondecreasing_tuple_test(const PTrans& alpha, int w);

// Local characterization: every width-w restriction of alpha has a cyclic
// (w = 3) or oriented (w = 4) image sequence. Vacuously true when
// width(alpha) < w. Partial inputs are allowed.
bool local_width_test(const PTrans& alpha, int w);

// Rank-2 orientation-preservation: with Dom(alpha) = {i_1 < ... < i_k}, true
// iff one of the two kernel classes is a contiguous block {i_r, ..., i_s} of
// the domain enumeration (the other then being the wraparound complement).
// Requires rank(alpha) == 2.
bool rank2_pop_test(const PTrans& alpha);

// Complete local decision procedures. Both must agree with classify on every
// transformation; rank 2 needs its own branch on the preserving side, while
// the oriented side holds unrestricted.
bool decide_pop_local(const PTrans& alpha);  // rank <= 1 | rank-2 kernel test | width-3 local
bool decide_por_local(const PTrans& alpha);  // width-4 local

// The full transformation extending a width >= 3 partial one by
// right-constant interpolation over the domain gaps: with
// Dom(alpha) = {i_1 < ... < i_k},
//   i |-> i_1 alpha   for 1 <= i <= i_2 - 1,
//   i |-> i_l alpha   for i_l <= i < i_{l+1}  (l = 2..k-1),
//   i |-> i_k alpha   for i_k <= i <= n.
PTrans bar_extend(const PTrans& alpha);

}  // namespace orichain
