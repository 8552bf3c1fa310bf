#pragma once

#include <gmpxx.h>

#include <string>

namespace topo {

// Every coefficient, form value and derived bound in this library is exact.
// Descent and river values outgrow 64 bits on adversarial inputs, so the
// integer type is arbitrary-precision throughout.
using Int = mpz_class;
using Rat = mpq_class;

// Remainder of a modulo m in [0, m); requires m > 0.
Int floor_mod(const Int& a, const Int& m);

// Representative of a modulo m in the window [lo, lo + m); requires m > 0.
Int window_mod(const Int& a, const Int& m, const Int& lo);

bool is_perfect_square(const Int& a);

Int gcd(const Int& a, const Int& b);

// num/den reduced to canonical form, den forced positive; requires den != 0.
Rat make_rat(const Int& num, const Int& den);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

}  // namespace topo
