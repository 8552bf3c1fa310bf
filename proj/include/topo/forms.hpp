#pragma once

#include <optional>
#include <string>

#include "topo/numeric.hpp"

namespace topo {

// Integral binary quadratic form Q(x,y) = a*x^2 + h*xy + b*y^2.
struct BinaryQuadraticForm {
  Int a, h, b;

  bool operator==(const BinaryQuadraticForm&) const = default;
};

BinaryQuadraticForm operator-(const BinaryQuadraticForm& f);

// Lexicographic coefficient order (a, h, b); used for canonical class keys.
bool lex_less(const BinaryQuadraticForm& lhs, const BinaryQuadraticForm& rhs);

std::string to_string(const BinaryQuadraticForm& f);

// 2x2 integer matrix acting on column vectors.
struct Mat2 {
  Int m11, m12, m21, m22;

  Int det() const;
  bool unimodular() const;

  static Mat2 identity();

  bool operator==(const Mat2&) const = default;
};

Mat2 operator*(const Mat2& lhs, const Mat2& rhs);
Mat2 transpose(const Mat2& m);
Mat2 inverse_unimodular(const Mat2& m);  // throws NonUnimodular
std::string to_string(const Mat2& m);

// Change-of-basis matrices are the unimodular ones; act() enforces that.
using UnimodularMatrix = Mat2;

/*
 * Values of a form on a superbase (v1, v2, -v1-v2): qa = Q(v1), qb = Q(v2),
 * qc = Q(v1+v2).  For the marked base v1=(1,0), v2=(0,1) this is
 * (a, b, a+h+b), and the form is recovered by a = qa, b = qb,
 * h = qc - qa - qb.
 */
struct VertexTriple {
  Int qa, qb, qc;

  static VertexTriple of(const BinaryQuadraticForm& f);
  BinaryQuadraticForm to_form() const;

  bool operator==(const VertexTriple&) const = default;
};

Int evaluate(const BinaryQuadraticForm& f, const Int& x, const Int& y);

// h^2 - 4ab; preserved by every unimodular action.
Int discriminant(const BinaryQuadraticForm& f);

// Pullback: act(f, p)(v) = f(p*v).  Throws NonUnimodular when |det p| != 1.
BinaryQuadraticForm act(const BinaryQuadraticForm& f, const Mat2& p);

// Fourth value around an edge: Q(v1+v2) + Q(v1-v2) = 2(Q(v1) + Q(v2)).
Int neighbor_value(const Int& qa, const Int& qb, const Int& c_opposite);

/*
 * Unique Gauss-reduced representative of a definite form's proper class:
 * -a < h <= a <= b with h >= 0 when a == b (sign-mirrored for negative
 * definite forms).  Reduced forms are equal iff the inputs are properly
 * equivalent; a full GL2(Z) comparison must also try the h-negated mirror,
 * which gauss_class_key does.  Throws NotDefinite.
 */
BinaryQuadraticForm gauss_reduce_definite(const BinaryQuadraticForm& f);

// Canonical key of the full GL2(Z) class of a definite form: the
// lexicographically smaller of the reduced form and the reduced h-mirror.
BinaryQuadraticForm gauss_class_key(const BinaryQuadraticForm& f);

/*
 * Positive-certificate search: some unimodular P with entries in
 * [-bound, bound] and act(f0, P) == f1, or nullopt.  Absence does not
 * certify non-isomorphism.  The identity is preferred when it works.
 */
std::optional<UnimodularMatrix> bounded_isomorphism_search(const BinaryQuadraticForm& f0,
                                                           const BinaryQuadraticForm& f1,
                                                           long bound);

// |{(x,y) : |x|,|y| <= coord_bound, Q(x,y) = target}|.  Boxed so it
// terminates for indefinite forms; callers choose the bound.
long representation_census(const BinaryQuadraticForm& f, const Int& target, long coord_bound);

}  // namespace topo
