#pragma once

#include <array>
#include <string>
#include <utility>

#include "topo/forms.hpp"
#include "topo/topograph.hpp"

namespace topo {

struct NormalizedPQ {
  Int p, q;
  bool mirrored;  // exactly one of the inputs was negative
};

/*
 * Positive representative of coprime nonzero (p, q).  Negating both
 * parameters gives the same surface pair; negating exactly one gives the
 * mirror, whose symmetrized forms are the negated ones (recorded in the
 * flag).  Throws ZeroParameter / NotCoprime.
 */
NormalizedPQ normalize_params(const Int& p, const Int& q);

// (r, s) with ps - qr = 1, pinned by s = p^{-1} mod q, 1 <= s < q.
std::pair<Int, Int> compute_rs(const Int& p, const Int& q);

/*
 * Surface-pair parameters.  p, q are normalized positive and > 1; k, n are
 * free integers.  When the raw (p, q) had mixed signs the pair is a mirror:
 * n is negated here and seifert_forms() negates the forms, so comparisons
 * refer to the surfaces actually requested.
 */
struct SeifertParams {
  Int p, q, k, n;
  Int r, s;
  bool mirrored = false;

  static SeifertParams make(const Int& p, const Int& q, const Int& k, const Int& n);

  bool operator==(const SeifertParams&) const = default;
};

struct SeifertMatrixPair {
  Mat2 v0, v1;
};

// V1 = [[pq, -kp], [1-kp, n]], V0 = [[pq, qr-kp], [ps-kp, rs-2kr+n]].
SeifertMatrixPair seifert_matrices(const SeifertParams& params);

// Raw formula with an explicit (r, s) choice; used to check that any valid
// choice yields the same isomorphism classes.
SeifertMatrixPair seifert_matrices_for(const Int& p, const Int& q, const Int& k, const Int& n,
                                       const Int& r, const Int& s);

struct SeifertFormPair {
  BinaryQuadraticForm q0, q1;
};

/*
 * Half of the symmetrized Seifert forms:
 *   Q0 = (pq, ps+qr-2kp, rs-2kr+n),  Q1 = (pq, 1-2kp, n).
 * Scaling by 2 preserves isomorphism, so every comparison on these matches
 * the doubled forms.  Mirrored parameters yield the negated forms.
 */
SeifertFormPair seifert_forms(const SeifertParams& params);

// invariant(Q0) != invariant(Q1): the surfaces are provably non-isotopic
// through an orientation-preserving homeomorphism.
bool distinguishable(const SeifertParams& params);

// Also rejects Q0 ~ -Q1: no homeomorphism of either orientation.
bool oriented_pair_distinct(const SeifertParams& params);

// 2kp != 1 (mod q) and n >= k(pk-1)/q + (pq/12 - 1/6 + 1/(2pq)), exactly.
bool thm_main_bound(const SeifertParams& params);

// qn == k(pk-1): the boundary knot has trivial Alexander polynomial and the
// surfaces are isotopic, so the forms must compare equal.
bool parabola_alexander_trivial(const SeifertParams& params);

// C = p(nq - k(pk-1)); the Alexander polynomial is C t^2 + (1-2C) t + C.
Int alexander_coefficient(const SeifertParams& params);

// qn > k(pk-1), equivalent to Q1 (and Q0) positive definite before the
// mirror negation.
bool q1_positive_definite(const SeifertParams& params);

// Unique w with 0 <= w <= u/2 and w == +-v (mod u); requires u >= 1.
Int bracket_reduce(const Int& v, const Int& u);

struct LemmaBounds {
  Rat t0, t1;
};

/*
 * Non-isomorphism thresholds for (ux+v0*y)^2 + t*y^2 vs (ux+v1*y)^2 + t*y^2:
 * t0 = (u/2-1)^2/3 and t1 = max over integer c in [2, u+1] of
 * ([v0]_u^2 - [c*v1]_u^2)/(c^2-1), after swapping so [v0]_u < [v1]_u.
 * The cap at u+1 is enough: [c*v1]_u is periodic in c with period dividing
 * u while c^2-1 grows.  Requires even u >= 2; throws CongruentInputs when
 * v0 == +-v1 (mod u).
 */
LemmaBounds lemma_bounds(const Int& u, const Int& v0, const Int& v1);

// k threshold for the n = 0 family: max((q(1+p^2)+1)/(2p), (q^2+2)/(2p));
// for |k| beyond it (and 2kp != 1 mod q) the factorized forms split.
Rat n_zero_k_threshold(const SeifertParams& params);

// Affine symmetries of the (k, n) plane: tau translates along the parabola
// by q and preserves both isomorphism classes; rho reflects in k = s/2 and
// swaps them.  Both fix the offset n - k(pk-1)/q.
SeifertParams tau(const SeifertParams& params);
SeifertParams rho(const SeifertParams& params);

/*
 * Canonical key of the <tau, rho>-orbit of (k, n): the sorted pair of
 * (k mod q, parabola offset re-anchored at that residue) for k and s-k.
 * Two parameter points share a key iff they lie in the same orbit.
 */
struct OrbitKey {
  std::array<std::pair<Int, Rat>, 2> anchors;

  bool operator==(const OrbitKey&) const = default;
};

OrbitKey orbit_key(const SeifertParams& params);
std::string to_string(const OrbitKey& key);

}  // namespace topo
