#pragma once

// Shared helpers for the test binaries: a deterministic RNG and reference
// implementations that compute expected values by routes independent of the
// library code under test.

#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "kmb/laurent.hpp"
#include "kmb/rootdata.hpp"
#include "kmb/weyl.hpp"

namespace kmb::testutil {

// All randomized tests draw from this engine with a fixed seed so failures
// reproduce exactly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : eng_(seed) {}

  Int pick(Int lo, Int hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<Int>(eng_() % span);
  }

  IntVec exponent(int rank, Int bound) {
    IntVec e(rank);
    for (auto& x : e) x = pick(-bound, bound);
    return e;
  }

  LaurentPoly poly(int rank, int max_terms, Int exp_bound, Int coeff_bound) {
    LaurentPoly f = lp_zero(rank);
    int n = static_cast<int>(pick(1, max_terms));
    for (int t = 0; t < n; ++t) {
      Int c = pick(-coeff_bound, coeff_bound);
      if (c == 0) c = 1;
      f = lp_add(f, lp_monomial(rank, exponent(rank, exp_bound), BigInt(c)));
    }
    return f;
  }

  // Random element of the invariant subring: an integer combination of orbit
  // sums of random weights.
  LaurentPoly invariant_poly(const RootDatum& d, const ParabolicSubset& j, int orbits,
                             Int exp_bound, Int coeff_bound) {
    LaurentPoly f = lp_zero(d.rank);
    for (int t = 0; t < orbits; ++t) {
      Int c = pick(-coeff_bound, coeff_bound);
      if (c == 0) c = 1;
      f = lp_add(f, lp_scale(orbit_sum(d, j, exponent(d.rank, exp_bound)), BigInt(c)));
    }
    return f;
  }

  std::vector<int> word(const RootDatum& d, const ParabolicSubset& j, int len) {
    std::vector<int> w(len);
    for (auto& x : w) x = j[static_cast<size_t>(pick(0, static_cast<Int>(j.size()) - 1))];
    return w;
  }

 private:
  std::mt19937_64 eng_;
};

inline LaurentPoly lp_from_terms(int rank, std::vector<std::pair<IntVec, Int>> ts) {
  LaurentPoly f = lp_zero(rank);
  for (auto& [e, c] : ts) f = lp_add(f, lp_monomial(rank, e, BigInt(c)));
  return f;
}

inline LaurentPoly act_element(const WeylElement& w, const LaurentPoly& f) {
  return lp_act(w.action, f);
}

// Positive roots of the subsystem spanned by j, paired with their coroots.
// Walks the finite group and collects w(alpha_i) with coroot pulled back by
// w^{-1}; a pair is positive exactly when the coroot pairs positively with
// the sum of fundamental weights.
struct RootCorootPair {
  IntVec root;
  IntVec coroot;  // covector row
};

inline std::vector<RootCorootPair> positive_pairs(const RootDatum& d, const ParabolicSubset& j) {
  auto rho_parts = fundamental_weights(d, j);
  IntVec rho(d.rank, 0);
  for (auto& w : rho_parts)
    for (int t = 0; t < d.rank; ++t) rho[t] += w[t];

  auto group = enumerate_group(d, j);
  std::set<IntVec> seen;
  std::vector<RootCorootPair> out;
  for (auto& w : group) {
    auto winv = *inverse_unimodular(w.action);
    for (int i : j) {
      IntVec beta = mat_apply(w.action, d.simple_roots[i]);
      IntVec beta_vee = row_apply(d.simple_coroots[i], winv);
      Int h = std::inner_product(rho.begin(), rho.end(), beta_vee.begin(), Int(0));
      if (h <= 0) continue;
      if (seen.insert(beta).second) out.push_back({beta, beta_vee});
    }
  }
  return out;
}

// Dimension of the highest-weight module by the product formula over
// positive coroots; independent of the operator-based character code.
inline BigInt dimension_oracle(const RootDatum& d, const ParabolicSubset& j, const IntVec& lambda) {
  auto pairs = positive_pairs(d, j);
  auto rho_parts = fundamental_weights(d, j);
  IntVec rho(d.rank, 0);
  for (auto& w : rho_parts)
    for (int t = 0; t < d.rank; ++t) rho[t] += w[t];

  BigRat dim(1);
  for (auto& p : pairs) {
    Int num = 0, den = 0;
    for (int t = 0; t < d.rank; ++t) {
      num += (lambda[t] + rho[t]) * p.coroot[t];
      den += rho[t] * p.coroot[t];
    }
    dim *= BigRat(num, den);
  }
  if (boost::multiprecision::denominator(dim) != 1) return BigInt(-1);
  return boost::multiprecision::numerator(dim);
}

// Demazure operator on a single monomial, in closed form.
inline LaurentPoly monomial_demazure_oracle(const RootDatum& d, int i, const IntVec& mu) {
  Int h = 0;
  for (int t = 0; t < d.rank; ++t) h += mu[t] * d.simple_coroots[i][t];
  LaurentPoly out = lp_zero(d.rank);
  if (h >= 0) {
    for (Int k = 0; k <= h; ++k) {
      IntVec e = mu;
      for (int t = 0; t < d.rank; ++t) e[t] -= k * d.simple_roots[i][t];
      out = lp_add(out, lp_monomial(d.rank, e));
    }
  } else if (h <= -2) {
    for (Int k = 1; k <= -h - 1; ++k) {
      IntVec e = mu;
      for (int t = 0; t < d.rank; ++t) e[t] += k * d.simple_roots[i][t];
      out = lp_sub(out, lp_monomial(d.rank, e));
    }
  }
  return out;
}

// Alternating orbit sum sum_w (-1)^{l(w)} e^{w(mu)} over the finite group.
inline LaurentPoly alternating_sum(const RootDatum& d, const ParabolicSubset& j, const IntVec& mu) {
  LaurentPoly out = lp_zero(d.rank);
  for (auto& w : enumerate_group(d, j)) {
    BigInt sign = (w.length() % 2 == 0) ? 1 : -1;
    out = lp_add(out, lp_monomial(d.rank, mat_apply(w.action, mu), sign));
  }
  return out;
}

// Character via the quotient of alternating sums; independent of the
// operator-based route.
inline LaurentPoly character_oracle(const RootDatum& d, const ParabolicSubset& j,
                                    const IntVec& lambda) {
  auto rho_parts = fundamental_weights(d, j);
  IntVec rho(d.rank, 0);
  for (auto& w : rho_parts)
    for (int t = 0; t < d.rank; ++t) rho[t] += w[t];
  IntVec top = lambda;
  for (int t = 0; t < d.rank; ++t) top[t] += rho[t];
  return divide_exact(alternating_sum(d, j, top), alternating_sum(d, j, rho));
}

}  // namespace kmb::testutil
