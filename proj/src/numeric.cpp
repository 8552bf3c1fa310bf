#include "topo/numeric.hpp"

#include "topo/errors.hpp"

namespace topo {

Int floor_mod(const Int& a, const Int& m) {
  if (m <= 0) throw InvalidParameter("floor_mod requires a positive modulus");
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int window_mod(const Int& a, const Int& m, const Int& lo) {
  Int shifted = a - lo;
  return floor_mod(shifted, m) + lo;
}

bool is_perfect_square(const Int& a) {
  if (a < 0) return false;
  return mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw InvalidParameter("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) { return v.get_str(); }

}  // namespace topo
