#pragma once

#include <map>
#include <string>
#include <vector>

#include "kmb/weyl.hpp"

namespace kmb {

// Element of the group ring Z[Z^rank], exponent vectors mapped to exact
// integer coefficients. The map never stores zero coefficients, so equality
// is structural and iteration order is the canonical term order.
struct LaurentPoly {
  int rank = 0;
  std::map<IntVec, BigInt> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const LaurentPoly& o) const = default;
};

LaurentPoly lp_zero(int rank);
LaurentPoly lp_one(int rank);
LaurentPoly lp_monomial(int rank, IntVec mu, BigInt c = BigInt(1));

LaurentPoly lp_add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly lp_sub(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly lp_neg(const LaurentPoly& f);
LaurentPoly lp_mul(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly lp_scale(const LaurentPoly& f, const BigInt& c);

// Pullback along a lattice map: exponents move by the matrix. Group elements
// and diagram automorphisms both act this way.
LaurentPoly lp_act(const IntMat& m, const LaurentPoly& f);

// Isobaric Demazure operator for one simple reflection:
//   (f - e^{-alpha_i} * s_i(f)) / (1 - e^{-alpha_i}),
// computed by exact long division; a nonzero remainder is an arithmetic bug
// and raises DivisionNotExact.
LaurentPoly demazure_step(const RootDatum& d, int i, const LaurentPoly& f);

// Composite operator along a reduced word (rightmost letter applied first).
LaurentPoly demazure_word(const RootDatum& d, const std::vector<int>& word, const LaurentPoly& f);

LaurentPoly orbit_sum(const RootDatum& d, const ParabolicSubset& j, const IntVec& mu);

// Character of the highest-weight representation attached to a dominant
// weight: the composite Demazure operator along the longest element.
LaurentPoly weyl_character(const RootDatum& d, const ParabolicSubset& j, const IntVec& lambda);

BigInt evaluate_at_one(const LaurentPoly& f);
bool is_invariant(const RootDatum& d, const ParabolicSubset& j, const LaurentPoly& f);

// Exact division in the Laurent ring; raises NotDivisible when g does not
// divide f.
LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly divide_coeffs_exact(const LaurentPoly& f, const BigInt& c);

// Text form "c*x^[e1,...,er]" joined by " + ", terms in descending
// lexicographic exponent order; the zero polynomial prints as "0".
std::string lp_format(const LaurentPoly& f);
LaurentPoly lp_parse(int rank, const std::string& text);

}  // namespace kmb
