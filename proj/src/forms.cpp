#include "topo/forms.hpp"

#include <sstream>
#include <utility>

#include "topo/errors.hpp"

namespace topo {

BinaryQuadraticForm operator-(const BinaryQuadraticForm& f) {
  return {Int(-f.a), Int(-f.h), Int(-f.b)};
}

bool lex_less(const BinaryQuadraticForm& lhs, const BinaryQuadraticForm& rhs) {
  if (lhs.a != rhs.a) return lhs.a < rhs.a;
  if (lhs.h != rhs.h) return lhs.h < rhs.h;
  return lhs.b < rhs.b;
}

std::string to_string(const BinaryQuadraticForm& f) {
  std::ostringstream os;
  os << "(" << f.a << "," << f.h << "," << f.b << ")";
  return os.str();
}

Int Mat2::det() const { return m11 * m22 - m12 * m21; }

bool Mat2::unimodular() const {
  Int d = det();
  return d == 1 || d == -1;
}

Mat2 Mat2::identity() { return {1, 0, 0, 1}; }

Mat2 operator*(const Mat2& lhs, const Mat2& rhs) {
  return {lhs.m11 * rhs.m11 + lhs.m12 * rhs.m21, lhs.m11 * rhs.m12 + lhs.m12 * rhs.m22,
          lhs.m21 * rhs.m11 + lhs.m22 * rhs.m21, lhs.m21 * rhs.m12 + lhs.m22 * rhs.m22};
}

Mat2 transpose(const Mat2& m) { return {m.m11, m.m21, m.m12, m.m22}; }

Mat2 inverse_unimodular(const Mat2& m) {
  Int d = m.det();
  if (d == 1) return {m.m22, Int(-m.m12), Int(-m.m21), m.m11};
  if (d == -1) return {Int(-m.m22), m.m12, m.m21, Int(-m.m11)};
  throw NonUnimodular();
}

std::string to_string(const Mat2& m) {
  std::ostringstream os;
  os << "[[" << m.m11 << "," << m.m12 << "],[" << m.m21 << "," << m.m22 << "]]";
  return os.str();
}

VertexTriple VertexTriple::of(const BinaryQuadraticForm& f) {
  return {f.a, f.b, f.a + f.h + f.b};
}

BinaryQuadraticForm VertexTriple::to_form() const { return {qa, qc - qa - qb, qb}; }

Int evaluate(const BinaryQuadraticForm& f, const Int& x, const Int& y) {
  return f.a * x * x + f.h * x * y + f.b * y * y;
}

Int discriminant(const BinaryQuadraticForm& f) { return f.h * f.h - 4 * f.a * f.b; }

BinaryQuadraticForm act(const BinaryQuadraticForm& f, const Mat2& p) {
  if (!p.unimodular()) throw NonUnimodular();
  Int a = evaluate(f, p.m11, p.m21);
  Int b = evaluate(f, p.m12, p.m22);
  Int h = 2 * f.a * p.m11 * p.m12 + f.h * (p.m11 * p.m22 + p.m12 * p.m21) +
          2 * f.b * p.m21 * p.m22;
  return {a, h, b};
}

Int neighbor_value(const Int& qa, const Int& qb, const Int& c_opposite) {
  return 2 * (qa + qb) - c_opposite;
}

BinaryQuadraticForm gauss_reduce_definite(const BinaryQuadraticForm& f) {
  if (discriminant(f) >= 0) throw NotDefinite();
  const bool negative = f.a < 0;
  Int a = negative ? Int(-f.a) : f.a;
  Int h = negative ? Int(-f.h) : f.h;
  Int b = negative ? Int(-f.b) : f.b;
  for (;;) {
    if (h <= -a || h > a) {
      // translate x -> x + t*y so that h lands in (-a, a]
      Int hn = window_mod(h, 2 * a, Int(1 - a));
      Int t = (hn - h) / (2 * a);
      b += h * t + a * t * t;
      h = hn;
    }
    if (a > b) {
      std::swap(a, b);
      h = -h;
      continue;
    }
    if (a == b && h < 0) h = -h;
    break;
  }
  if (negative) return {Int(-a), Int(-h), Int(-b)};
  return {a, h, b};
}

BinaryQuadraticForm gauss_class_key(const BinaryQuadraticForm& f) {
  BinaryQuadraticForm proper = gauss_reduce_definite(f);
  BinaryQuadraticForm mirror = gauss_reduce_definite({f.a, Int(-f.h), f.b});
  return lex_less(proper, mirror) ? proper : mirror;
}

std::optional<UnimodularMatrix> bounded_isomorphism_search(const BinaryQuadraticForm& f0,
                                                           const BinaryQuadraticForm& f1,
                                                           long bound) {
  if (bound < 1) throw InvalidParameter("search bound must be at least 1");
  if (f0 == f1) return Mat2::identity();
  for (long c11 = -bound; c11 <= bound; ++c11) {
    for (long c21 = -bound; c21 <= bound; ++c21) {
      Mat2 p;
      p.m11 = c11;
      p.m21 = c21;
      if (evaluate(f0, p.m11, p.m21) != f1.a) continue;
      for (long c12 = -bound; c12 <= bound; ++c12) {
        for (long c22 = -bound; c22 <= bound; ++c22) {
          p.m12 = c12;
          p.m22 = c22;
          if (!p.unimodular()) continue;
          if (act(f0, p) == f1) return p;
        }
      }
    }
  }
  return std::nullopt;
}

long representation_census(const BinaryQuadraticForm& f, const Int& target, long coord_bound) {
  if (coord_bound < 1) throw InvalidParameter("census bound must be at least 1");
  long count = 0;
  for (long x = -coord_bound; x <= coord_bound; ++x) {
    for (long y = -coord_bound; y <= coord_bound; ++y) {
      if (evaluate(f, Int(x), Int(y)) == target) ++count;
    }
  }
  return count;
}

}  // namespace topo
