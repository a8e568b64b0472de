#include "kmb/laurent.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kmb {

namespace {

void check_same_rank(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.rank != g.rank) fail(Err::RankMismatch, "polynomials live in different rings");
}

void add_term(LaurentPoly& f, const IntVec& mu, const BigInt& c) {
  if (c == 0) return;
  auto it = f.terms.find(mu);
  if (it == f.terms.end()) {
    f.terms.emplace(mu, c);
    return;
  }
  it->second += c;
  if (it->second == 0) f.terms.erase(it);
}

}  // namespace

LaurentPoly lp_zero(int rank) { return LaurentPoly{rank, {}}; }

LaurentPoly lp_one(int rank) { return lp_monomial(rank, IntVec(rank, 0)); }

LaurentPoly lp_monomial(int rank, IntVec mu, BigInt c) {
  if (static_cast<int>(mu.size()) != rank) fail(Err::RankMismatch, "exponent has wrong dimension");
  LaurentPoly f{rank, {}};
  if (c != 0) f.terms.emplace(std::move(mu), std::move(c));
  return f;
}

LaurentPoly lp_add(const LaurentPoly& f, const LaurentPoly& g) {
  check_same_rank(f, g);
  LaurentPoly r = f;
  for (const auto& [mu, c] : g.terms) add_term(r, mu, c);
  return r;
}

LaurentPoly lp_sub(const LaurentPoly& f, const LaurentPoly& g) {
  check_same_rank(f, g);
  LaurentPoly r = f;
  for (const auto& [mu, c] : g.terms) add_term(r, mu, -c);
  return r;
}

LaurentPoly lp_neg(const LaurentPoly& f) {
  LaurentPoly r{f.rank, {}};
  for (const auto& [mu, c] : f.terms) r.terms.emplace(mu, -c);
  return r;
}

LaurentPoly lp_mul(const LaurentPoly& f, const LaurentPoly& g) {
  check_same_rank(f, g);
  LaurentPoly r{f.rank, {}};
  IntVec mu(f.rank);
  for (const auto& [a, ca] : f.terms)
    for (const auto& [b, cb] : g.terms) {
      for (int i = 0; i < f.rank; ++i) mu[i] = a[i] + b[i];
      add_term(r, mu, ca * cb);
    }
  return r;
}

LaurentPoly lp_scale(const LaurentPoly& f, const BigInt& c) {
  LaurentPoly r{f.rank, {}};
  if (c == 0) return r;
  for (const auto& [mu, k] : f.terms) r.terms.emplace(mu, k * c);
  return r;
}

LaurentPoly lp_act(const IntMat& m, const LaurentPoly& f) {
  if (m.rows != f.rank || m.cols != f.rank) fail(Err::RankMismatch, "action matrix has wrong shape");
  LaurentPoly r{f.rank, {}};
  for (const auto& [mu, c] : f.terms) add_term(r, mat_apply(m, mu), c);
  return r;
}

LaurentPoly demazure_step(const RootDatum& d, int i, const LaurentPoly& f) {
  if (i < 0 || i >= d.num_simple()) fail(Err::BadInput, "reflection index out of range");
  if (f.rank != d.rank) fail(Err::RankMismatch, "polynomial rank differs from the datum");
  if (f.is_zero()) return f;

  const IntVec& alpha = d.simple_roots[i];
  // numerator = f - e^{-alpha} * s_i(f)
  LaurentPoly num = f;
  IntVec shifted(d.rank);
  for (const auto& [mu, c] : f.terms) {
    const IntVec smu = reflect(d, i, mu);
    for (int t = 0; t < d.rank; ++t) shifted[t] = smu[t] - alpha[t];
    add_term(num, shifted, -c);
  }

  // Long division by (1 - e^{-alpha}): repeatedly cancel the term whose
  // pairing with the coroot is largest; each cancellation pushes weight
  // down by alpha, so a bounded number of steps empties an exact numerator.
  Int h_max = 0, h_min = 0;
  bool first = true;
  for (const auto& [mu, c] : num.terms) {
    const Int h = pair_root_coroot(d, mu, i);
    if (first || h > h_max) h_max = h;
    if (first || h < h_min) h_min = h;
    first = false;
  }
  const size_t step_limit =
      num.terms.size() * static_cast<size_t>(h_max - h_min + 2) + 16;

  LaurentPoly quotient{d.rank, {}};
  size_t steps = 0;
  while (!num.is_zero()) {
    if (++steps > step_limit) fail(Err::DivisionNotExact, "Demazure numerator is not divisible");
    auto lead = num.terms.begin();
    Int lead_h = pair_root_coroot(d, lead->first, i);
    for (auto it = std::next(num.terms.begin()); it != num.terms.end(); ++it) {
      const Int h = pair_root_coroot(d, it->first, i);
      if (h > lead_h || (h == lead_h && it->first > lead->first)) {
        lead = it;
        lead_h = h;
      }
    }
    const IntVec mu = lead->first;
    const BigInt c = lead->second;
    // num -= c * e^mu * (1 - e^{-alpha}); the erase removes c * e^mu.
    add_term(quotient, mu, c);
    num.terms.erase(lead);
    for (int t = 0; t < d.rank; ++t) shifted[t] = mu[t] - alpha[t];
    add_term(num, shifted, c);
  }
  return quotient;
}

LaurentPoly demazure_word(const RootDatum& d, const std::vector<int>& word, const LaurentPoly& f) {
  for (int i : word)
    if (i < 0 || i >= d.num_simple()) fail(Err::BadInput, "word letter out of range");
  const auto [len, reduced] =
      length_and_reduced_word(d, word_matrix(d, word), std::max<int>(kDefaultMaxLen, word.size()));
  (void)reduced;
  if (len != static_cast<int>(word.size()))
    fail(Err::WordNotReduced, "composite Demazure operator needs a reduced word");
  LaurentPoly r = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = demazure_step(d, *it, r);
  return r;
}

LaurentPoly orbit_sum(const RootDatum& d, const ParabolicSubset& j, const IntVec& mu) {
  check_parabolic(d, j);
  if (static_cast<int>(mu.size()) != d.rank) fail(Err::RankMismatch, "weight has wrong dimension");
  if (!is_finite_type(d, j)) fail(Err::NotFiniteType, "orbit sums need a finite-type subset");
  std::set<IntVec> orbit{mu};
  std::vector<IntVec> frontier{mu};
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const IntVec& x : frontier)
      for (int i : j) {
        IntVec y = reflect(d, i, x);
        if (orbit.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  LaurentPoly r{d.rank, {}};
  for (const IntVec& x : orbit) r.terms.emplace(x, 1);
  return r;
}

LaurentPoly weyl_character(const RootDatum& d, const ParabolicSubset& j, const IntVec& lambda) {
  check_parabolic(d, j);
  if (static_cast<int>(lambda.size()) != d.rank) fail(Err::RankMismatch, "weight has wrong dimension");
  if (!is_finite_type(d, j)) fail(Err::NotFiniteType, "characters need a finite-type subset");
  for (int i : j)
    if (pair_root_coroot(d, lambda, i) < 0)
      fail(Err::NotDominant, "weight pairs negatively with coroot " + std::to_string(i));
  const WeylElement w0 = longest_element(d, j);
  return demazure_word(d, w0.word, lp_monomial(d.rank, lambda));
}

BigInt evaluate_at_one(const LaurentPoly& f) {
  BigInt s = 0;
  for (const auto& [mu, c] : f.terms) s += c;
  return s;
}

bool is_invariant(const RootDatum& d, const ParabolicSubset& j, const LaurentPoly& f) {
  check_parabolic(d, j);
  if (f.rank != d.rank) fail(Err::RankMismatch, "polynomial rank differs from the datum");
  for (int i : j)
    if (!(lp_act(reflection_matrix(d, i), f) == f)) return false;
  return true;
}

LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
  check_same_rank(f, g);
  if (g.is_zero()) fail(Err::NotDivisible, "division by zero");
  if (f.is_zero()) return f;

  // Newton polytopes add under multiplication, so every exponent of the
  // quotient is bounded below componentwise by min(f) - min(g).
  IntVec lower(f.rank), fmin(f.rank), gmin(f.rank);
  for (int t = 0; t < f.rank; ++t) {
    bool first = true;
    for (const auto& [mu, c] : f.terms) {
      if (first || mu[t] < fmin[t]) fmin[t] = mu[t];
      first = false;
    }
    first = true;
    for (const auto& [mu, c] : g.terms) {
      if (first || mu[t] < gmin[t]) gmin[t] = mu[t];
      first = false;
    }
    lower[t] = fmin[t] - gmin[t];
  }

  const auto& [gl_mu, gl_c] = *g.terms.rbegin();  // lexicographically largest
  LaurentPoly r = f;
  LaurentPoly q{f.rank, {}};
  IntVec e(f.rank);
  while (!r.is_zero()) {
    const auto& [rl_mu, rl_c] = *r.terms.rbegin();
    if (rl_c % gl_c != 0) fail(Err::NotDivisible, "leading coefficient does not divide");
    for (int t = 0; t < f.rank; ++t) {
      e[t] = rl_mu[t] - gl_mu[t];
      if (e[t] < lower[t]) fail(Err::NotDivisible, "quotient support left the feasible box");
    }
    const BigInt c = rl_c / gl_c;
    add_term(q, e, c);
    r = lp_sub(r, lp_mul(lp_monomial(f.rank, e, c), g));
  }
  return q;
}

LaurentPoly divide_coeffs_exact(const LaurentPoly& f, const BigInt& c) {
  if (c == 0) fail(Err::NotDivisible, "division by zero");
  LaurentPoly r{f.rank, {}};
  for (const auto& [mu, k] : f.terms) {
    if (k % c != 0) fail(Err::NotDivisible, "coefficient not divisible");
    r.terms.emplace(mu, k / c);
  }
  return r;
}

std::string lp_format(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    out << it->second.str() << "*x^[";
    for (size_t t = 0; t < it->first.size(); ++t) {
      if (t) out << ",";
      out << it->first[t];
    }
    out << "]";
  }
  return out.str();
}

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

Int parse_int(const std::string& s) {
  if (s.empty()) fail(Err::ParseError, "empty integer");
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    fail(Err::ParseError, "bad integer '" + s + "'");
  }
  if (pos != s.size()) fail(Err::ParseError, "trailing junk in integer '" + s + "'");
  return v;
}

}  // namespace

LaurentPoly lp_parse(int rank, const std::string& text) {
  const std::string body = strip(text);
  if (body == "0") return lp_zero(rank);
  LaurentPoly f{rank, {}};
  size_t pos = 0;
  while (pos < body.size()) {
    size_t next = body.find('+', pos);
    if (next == std::string::npos) next = body.size();
    const std::string term = strip(body.substr(pos, next - pos));
    pos = next + 1;
    if (term.empty()) fail(Err::ParseError, "empty term");
    const size_t star = term.find("*x^[");
    if (star == std::string::npos || term.back() != ']')
      fail(Err::ParseError, "term '" + term + "' is not of the form c*x^[...]");
    BigInt coef;
    try {
      coef = BigInt(strip(term.substr(0, star)));
    } catch (const std::exception&) {
      fail(Err::ParseError, "bad coefficient in '" + term + "'");
    }
    const std::string exps = term.substr(star + 4, term.size() - star - 5);
    IntVec mu;
    size_t e = 0;
    while (true) {
      size_t comma = exps.find(',', e);
      const std::string piece = strip(exps.substr(e, comma == std::string::npos
                                                         ? std::string::npos
                                                         : comma - e));
      if (!piece.empty() || !exps.empty()) mu.push_back(parse_int(piece));
      if (comma == std::string::npos) break;
      e = comma + 1;
    }
    if (static_cast<int>(mu.size()) != rank)
      fail(Err::RankMismatch, "term '" + term + "' has wrong exponent count");
    add_term(f, mu, coef);
  }
  return f;
}

}  // namespace kmb
