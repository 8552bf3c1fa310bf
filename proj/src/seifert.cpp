#include "topo/seifert.hpp"

#include <algorithm>
#include <sstream>

#include "topo/errors.hpp"

namespace topo {

NormalizedPQ normalize_params(const Int& p, const Int& q) {
  if (p == 0 || q == 0) throw ZeroParameter();
  if (gcd(p, q) != 1) throw NotCoprime();
  bool mirrored = (p < 0) != (q < 0);
  return {Int(abs(p)), Int(abs(q)), mirrored};
}

std::pair<Int, Int> compute_rs(const Int& p, const Int& q) {
  if (p < 1 || q < 2) throw InvalidParameter("compute_rs needs normalized p >= 1, q >= 2");
  if (gcd(p, q) != 1) throw NotCoprime();
  Int s;
  // invertible since gcd(p, q) = 1; result lands in [1, q-1]
  mpz_invert(s.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  Int r = (p * s - 1) / q;
  return {r, s};
}

SeifertParams SeifertParams::make(const Int& p, const Int& q, const Int& k, const Int& n) {
  NormalizedPQ norm = normalize_params(p, q);
  if (norm.p < 2 || norm.q < 2) throw InvalidParameter("|p| and |q| must both exceed 1");
  auto [r, s] = compute_rs(norm.p, norm.q);
  SeifertParams out;
  out.p = norm.p;
  out.q = norm.q;
  out.k = k;
  out.n = norm.mirrored ? Int(-n) : n;
  out.r = r;
  out.s = s;
  out.mirrored = norm.mirrored;
  return out;
}

SeifertMatrixPair seifert_matrices_for(const Int& p, const Int& q, const Int& k, const Int& n,
                                       const Int& r, const Int& s) {
  Mat2 v1{p * q, Int(-k * p), 1 - k * p, n};
  Mat2 v0{p * q, q * r - k * p, p * s - k * p, r * s - 2 * k * r + n};
  return {v0, v1};
}

SeifertMatrixPair seifert_matrices(const SeifertParams& params) {
  return seifert_matrices_for(params.p, params.q, params.k, params.n, params.r, params.s);
}

SeifertFormPair seifert_forms(const SeifertParams& params) {
  const Int &p = params.p, &q = params.q, &k = params.k, &n = params.n;
  const Int &r = params.r, &s = params.s;
  BinaryQuadraticForm q0{p * q, p * s + q * r - 2 * k * p, r * s - 2 * k * r + n};
  BinaryQuadraticForm q1{p * q, 1 - 2 * k * p, n};
  if (params.mirrored) return {-q0, -q1};
  return {q0, q1};
}

bool distinguishable(const SeifertParams& params) {
  SeifertFormPair f = seifert_forms(params);
  return !(invariant(f.q0) == invariant(f.q1));
}

bool oriented_pair_distinct(const SeifertParams& params) {
  SeifertFormPair f = seifert_forms(params);
  TopographInvariant i0 = invariant(f.q0);
  if (i0 == invariant(f.q1)) return false;
  return !(i0 == invariant(-f.q1));
}

bool thm_main_bound(const SeifertParams& params) {
  const Int &p = params.p, &q = params.q, &k = params.k, &n = params.n;
  if (floor_mod(2 * k * p, q) == 1) return false;
  Rat bound = make_rat(k * (p * k - 1), q) + make_rat(p * q, Int(12)) -
              make_rat(Int(1), Int(6)) + make_rat(Int(1), 2 * p * q);
  return Rat(n) >= bound;
}

bool parabola_alexander_trivial(const SeifertParams& params) {
  return params.q * params.n == params.k * (params.p * params.k - 1);
}

Int alexander_coefficient(const SeifertParams& params) {
  const Int &p = params.p, &q = params.q, &k = params.k, &n = params.n;
  return p * (n * q - k * (p * k - 1));
}

bool q1_positive_definite(const SeifertParams& params) {
  return params.q * params.n > params.k * (params.p * params.k - 1);
}

Int bracket_reduce(const Int& v, const Int& u) {
  if (u < 1) throw InvalidParameter("bracket_reduce needs a positive modulus");
  Int m = floor_mod(v, u);
  Int alt = u - m;
  return m <= alt ? m : alt;
}

LemmaBounds lemma_bounds(const Int& u, const Int& v0, const Int& v1) {
  if (u < 2 || floor_mod(u, Int(2)) != 0)
    throw InvalidParameter("lemma_bounds needs a positive even modulus");
  Int w0 = bracket_reduce(v0, u);
  Int w1 = bracket_reduce(v1, u);
  if (w0 == w1) throw CongruentInputs();
  if (w0 > w1) std::swap(w0, w1);

  Int half = u / 2 - 1;
  Rat t0 = make_rat(half * half, Int(3));

  Rat t1;
  bool first = true;
  for (Int c = 2; c <= u + 1; ++c) {
    Int wc = bracket_reduce(c * w1, u);
    Rat term = make_rat(w0 * w0 - wc * wc, c * c - 1);
    if (first || term > t1) {
      t1 = term;
      first = false;
    }
  }
  return {t0, t1};
}

Rat n_zero_k_threshold(const SeifertParams& params) {
  const Int &p = params.p, &q = params.q;
  Rat first = make_rat(q * (1 + p * p) + 1, 2 * p);
  Rat second = make_rat(q * q + 2, 2 * p);
  return first > second ? first : second;
}

SeifertParams tau(const SeifertParams& params) {
  SeifertParams out = params;
  out.k = params.k + params.q;
  out.n = params.n + 2 * params.k * params.p + params.p * params.q - 1;
  return out;
}

SeifertParams rho(const SeifertParams& params) {
  SeifertParams out = params;
  out.k = params.s - params.k;
  out.n = params.n - 2 * params.k * params.r + params.r * params.s;
  return out;
}

OrbitKey orbit_key(const SeifertParams& params) {
  const Int &p = params.p, &q = params.q, &k = params.k, &n = params.n;
  Rat offset = Rat(n) - make_rat(k * (p * k - 1), q);
  auto anchor = [&](const Int& kk) {
    Int m = floor_mod(kk, q);
    Rat value = offset + make_rat(m * (p * m - 1), q);
    return std::pair<Int, Rat>{m, value};
  };
  OrbitKey key{{anchor(k), anchor(params.s - k)}};
  std::sort(key.anchors.begin(), key.anchors.end());
  return key;
}

std::string to_string(const OrbitKey& key) {
  std::ostringstream os;
  os << key.anchors[0].first << ":" << key.anchors[0].second.get_str() << "|"
     << key.anchors[1].first << ":" << key.anchors[1].second.get_str();
  return os.str();
}

}  // namespace topo
