#include "kmb/steinberg.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

namespace kmb {

namespace {

void check_nested(const RootDatum& d, const ParabolicSubset& sub, const ParabolicSubset& sup) {
  check_parabolic(d, sub);
  check_parabolic(d, sup);
  if (!subset_contains(sup, sub)) fail(Err::BadInput, "basis pair needs nested parabolic subsets");
  if (!is_finite_type(d, sup)) fail(Err::NotFiniteType, "outer parabolic subgroup must be finite");
}

std::vector<std::vector<LaurentPoly>> pm_identity(int n, int rank) {
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n, lp_zero(rank)));
  for (int i = 0; i < n; ++i) m[i][i] = lp_one(rank);
  return m;
}

std::vector<std::vector<LaurentPoly>> pm_mul(const std::vector<std::vector<LaurentPoly>>& a,
                                             const std::vector<std::vector<LaurentPoly>>& b,
                                             int rank) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<LaurentPoly>> r(n, std::vector<LaurentPoly>(n, lp_zero(rank)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (b[k][j].is_zero()) continue;
        r[i][j] = lp_add(r[i][j], lp_mul(a[i][k], b[k][j]));
      }
    }
  return r;
}

// Columns are the simple roots indexed by sup; linearly independent whenever
// sup is finite type, which every caller has already checked.
IntMat sup_root_columns(const RootDatum& d, const ParabolicSubset& sup) {
  IntMat cols(d.rank, static_cast<int>(sup.size()));
  for (size_t j = 0; j < sup.size(); ++j)
    for (int i = 0; i < d.rank; ++i) cols.at(i, static_cast<int>(j)) = d.simple_roots[sup[j]][i];
  return cols;
}

// Positive roots of the subsystem spanned by sup: group orbit of the simple
// roots, kept when the simple-root coordinates are all nonnegative.
std::vector<IntVec> positive_subsystem_roots(const RootDatum& d, const ParabolicSubset& sup) {
  const IntMat cols = sup_root_columns(d, sup);

  std::set<IntVec> all;
  for (const auto& w : enumerate_group(d, sup))
    for (int i : sup) all.insert(mat_apply(w.action, d.simple_roots[i]));

  std::vector<IntVec> out;
  for (const IntVec& beta : all) {
    auto c = express_in_columns(cols, beta);
    if (!c) fail(Err::NotInGroup, "subsystem root left the root lattice");
    bool nonneg = true;
    for (const auto& x : *c) nonneg = nonneg && x >= 0;
    if (nonneg) out.push_back(beta);
  }
  if (out.size() * 2 != all.size())
    fail(Err::NotInGroup, "subsystem roots do not split into opposite halves");
  return out;
}

}  // namespace

LaurentPoly relative_pushforward(const RootDatum& d, const ParabolicSubset& sub,
                                 const ParabolicSubset& sup, const LaurentPoly& f) {
  check_nested(d, sub, sup);
  if (!is_invariant(d, sub, f))
    fail(Err::NotInvariant, "pushforward input must be invariant under the inner subgroup");
  const WeylElement w0sup = longest_element(d, sup);
  const WeylElement w0sub = longest_element(d, sub);
  const WeylElement rel =
      element_from_matrix(d, mat_mul(w0sup.action, w0sub.action));
  return demazure_word(d, rel.word, f);
}

LaurentPoly pairing(const RootDatum& d, const ParabolicSubset& sup, const LaurentPoly& f,
                    const LaurentPoly& g) {
  check_parabolic(d, sup);
  if (!is_finite_type(d, sup)) fail(Err::NotFiniteType, "pairing needs a finite-type subset");
  const WeylElement w0 = longest_element(d, sup);
  return demazure_word(d, w0.word, lp_mul(f, g));
}

LaurentPoly poly_determinant(const std::vector<std::vector<LaurentPoly>>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) fail(Err::BadInput, "determinant of an empty matrix");
  const int rank = a[0][0].rank;
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n) fail(Err::BadInput, "determinant needs a square matrix");

  // dp[mask] = signed sum over bijections of the first popcount(mask) rows
  // onto the columns of mask.
  std::vector<LaurentPoly> dp(size_t(1) << n, lp_zero(rank));
  dp[0] = lp_one(rank);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const int r = std::popcount(mask) - 1;
    LaurentPoly acc = lp_zero(rank);
    for (int c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      const unsigned rest = mask & ~(1u << c);
      if (dp[rest].is_zero() || a[r][c].is_zero()) continue;
      const int above = std::popcount(rest >> (c + 1));
      LaurentPoly term = lp_mul(dp[rest], a[r][c]);
      acc = (above % 2 == 0) ? lp_add(acc, term) : lp_sub(acc, term);
    }
    dp[mask] = std::move(acc);
  }
  return dp[(size_t(1) << n) - 1];
}

std::vector<std::vector<LaurentPoly>> poly_adjugate(
    const std::vector<std::vector<LaurentPoly>>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) fail(Err::BadInput, "adjugate of an empty matrix");
  const int rank = a[0][0].rank;
  auto b = pm_identity(n, rank);
  for (int k = 1; k < n; ++k) {
    auto m = pm_mul(a, b, rank);
    LaurentPoly tr = lp_zero(rank);
    for (int i = 0; i < n; ++i) tr = lp_add(tr, m[i][i]);
    const LaurentPoly c = divide_coeffs_exact(lp_neg(tr), BigInt(k));
    for (int i = 0; i < n; ++i) m[i][i] = lp_add(m[i][i], c);
    b = std::move(m);
  }
  if (n % 2 == 0)
    for (auto& row : b)
      for (auto& e : row) e = lp_neg(e);
  return b;
}

LaurentPoly gram_determinant_factored(const RootDatum& d, const ParabolicSubset& sup,
                                      const std::vector<LaurentPoly>& basis) {
  check_parabolic(d, sup);
  if (!is_finite_type(d, sup)) fail(Err::NotFiniteType, "factored route needs a finite group");
  const auto group = enumerate_group(d, sup);
  const int n = static_cast<int>(group.size());
  if (static_cast<int>(basis.size()) != n)
    fail(Err::BadInput, "factored route needs |basis| = group order");

  std::vector<std::vector<LaurentPoly>> b(n, std::vector<LaurentPoly>(n, lp_zero(d.rank)));
  for (int w = 0; w < n; ++w)
    for (int v = 0; v < n; ++v) b[w][v] = lp_act(group[w].action, basis[v]);
  const LaurentPoly det_b = poly_determinant(b);

  LaurentPoly pi = lp_one(d.rank);
  for (const IntVec& beta : positive_subsystem_roots(d, sup)) {
    IntVec neg(d.rank);
    for (int t = 0; t < d.rank; ++t) neg[t] = -beta[t];
    pi = lp_mul(pi, lp_sub(lp_one(d.rank), lp_monomial(d.rank, neg)));
  }
  LaurentPoly denom = lp_one(d.rank);
  for (const auto& w : group) denom = lp_mul(denom, lp_act(w.action, pi));

  return divide_exact(lp_mul(det_b, det_b), denom);
}

bool is_invariant_unit(const RootDatum& d, const ParabolicSubset& sup, const LaurentPoly& f) {
  if (f.terms.size() != 1) return false;
  const auto& [mu, c] = *f.terms.begin();
  if (c != 1 && c != -1) return false;
  for (int i : sup)
    if (pair_root_coroot(d, mu, i) != 0) return false;
  return true;
}

RelativeBasis::RelativeBasis(RootDatum datum, ParabolicSubset sub, ParabolicSubset sup,
                             std::vector<WeylElement> reps, std::vector<LaurentPoly> basis,
                             std::vector<std::vector<LaurentPoly>> gram, LaurentPoly unit)
    : datum_(std::move(datum)),
      sub_(std::move(sub)),
      sup_(std::move(sup)),
      reps_(std::move(reps)),
      basis_(std::move(basis)),
      gram_(std::move(gram)),
      unit_(std::move(unit)),
      dual_cache_(std::make_shared<DualCache>()) {}

const std::vector<LaurentPoly>& RelativeBasis::dual() const {
  std::call_once(dual_cache_->once, [this] {
    if (!is_invariant_unit(datum_, sup_, unit_))
      fail(Err::NotABasis, "dual family needs a unit Gram determinant");
    const int n = size();
    const auto adj = poly_adjugate(gram_);
    // Inverse of the unit +-e^mu is +-e^{-mu}.
    const auto& [mu, c] = *unit_.terms.begin();
    IntVec neg(datum_.rank);
    for (int t = 0; t < datum_.rank; ++t) neg[t] = -mu[t];
    const LaurentPoly inv_unit = lp_monomial(datum_.rank, neg, c);

    std::vector<LaurentPoly> out(n, lp_zero(datum_.rank));
    for (int v = 0; v < n; ++v)
      for (int u = 0; u < n; ++u)
        out[v] = lp_add(out[v], lp_mul(lp_mul(adj[u][v], inv_unit), basis_[u]));
    dual_cache_->value = std::move(out);
  });
  return dual_cache_->value;
}

std::vector<LaurentPoly> RelativeBasis::coordinates(const LaurentPoly& f) const {
  if (!is_invariant(datum_, sub_, f))
    fail(Err::NotInvariant, "coordinates need an invariant of the inner subgroup");
  const auto& duals = dual();
  std::vector<LaurentPoly> out;
  out.reserve(duals.size());
  for (const auto& dv : duals) out.push_back(pairing(datum_, sup_, f, dv));
  return out;
}

namespace {

std::vector<WeylElement> coset_representatives(const RootDatum& d, const ParabolicSubset& sub,
                                               const ParabolicSubset& sup) {
  std::vector<WeylElement> reps;
  for (auto& w : enumerate_group(d, sup))
    if (is_min_coset_rep(d, w.action, sub, {})) reps.push_back(std::move(w));
  return reps;
}

std::vector<std::vector<LaurentPoly>> gram_of(const RootDatum& d, const ParabolicSubset& sup,
                                              const std::vector<LaurentPoly>& basis) {
  const int n = static_cast<int>(basis.size());
  std::vector<std::vector<LaurentPoly>> g(n, std::vector<LaurentPoly>(n, lp_zero(d.rank)));
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v) {
      g[u][v] = pairing(d, sup, basis[u], basis[v]);
      if (v != u) g[v][u] = g[u][v];
    }
  return g;
}

// Determinant routing: the division-free recursion for small matrices, the
// squared-factorization shortcut for a full-ring basis too large for it.
LaurentPoly gram_det(const RootDatum& d, const ParabolicSubset& sub, const ParabolicSubset& sup,
                     const std::vector<LaurentPoly>& basis,
                     const std::vector<std::vector<LaurentPoly>>& gram) {
  if (basis.size() <= 8 || !sub.empty()) return poly_determinant(gram);
  return gram_determinant_factored(d, sup, basis);
}

}  // namespace

RelativeBasis assemble_basis(const RootDatum& d, const ParabolicSubset& sub,
                             const ParabolicSubset& sup, std::vector<LaurentPoly> elements) {
  check_nested(d, sub, sup);
  auto reps = coset_representatives(d, sub, sup);
  if (reps.size() != elements.size())
    fail(Err::BadInput, "element count differs from the coset count");
  for (const auto& e : elements)
    if (!is_invariant(d, sub, e))
      fail(Err::NotInvariant, "candidate element is not invariant under the inner subgroup");
  auto gram = gram_of(d, sup, elements);
  LaurentPoly det = gram_det(d, sub, sup, elements, gram);
  return RelativeBasis(d, sub, sup, std::move(reps), std::move(elements), std::move(gram),
                       std::move(det));
}

namespace {

// Closed-form candidate family: e_v = pushforward of v(e^{rho_v}) where
// rho_v adds the fundamental weights whose simple root v sends negative.
// Variant flips: replace v by v^{-1}, negate rho, or both.
std::vector<LaurentPoly> candidate_elements(const RootDatum& d, const ParabolicSubset& sub,
                                            const ParabolicSubset& sup,
                                            const std::vector<WeylElement>& reps, bool use_inverse,
                                            bool negate) {
  const auto fw = fundamental_weights(d, sup);
  const IntMat cols = sup_root_columns(d, sup);
  std::vector<LaurentPoly> out;
  out.reserve(reps.size());
  for (const auto& rep : reps) {
    IntMat v = rep.action;
    if (use_inverse) v = *inverse_unimodular(v);

    IntVec rho(d.rank, 0);
    for (size_t k = 0; k < sup.size(); ++k) {
      // A root is negative exactly when its simple-root coordinates are; the
      // image of a simple root under a group element is always a root, so one
      // negative coordinate decides.
      const IntVec img = mat_apply(v, d.simple_roots[sup[k]]);
      auto coords = express_in_columns(cols, img);
      if (!coords) fail(Err::NotInGroup, "root image left the root lattice");
      bool negative = false;
      for (const auto& x : *coords) negative = negative || x < 0;
      if (negative)
        for (int t = 0; t < d.rank; ++t) rho[t] += fw[k][t];
    }
    if (negate)
      for (auto& x : rho) x = -x;

    LaurentPoly raw = lp_act(v, lp_monomial(d.rank, rho));
    out.push_back(sub.empty() ? raw : relative_pushforward(d, {}, sub, raw));
  }
  return out;
}

}  // namespace

RelativeBasis steinberg_basis(const RootDatum& d, const ParabolicSubset& sub,
                              const ParabolicSubset& sup, Int search_budget) {
  check_nested(d, sub, sup);
  const auto reps = coset_representatives(d, sub, sup);

  for (int variant = 0; variant < 4; ++variant) {
    const bool use_inverse = variant & 1;
    const bool negate = variant & 2;
    auto elements = candidate_elements(d, sub, sup, reps, use_inverse, negate);
    auto gram = gram_of(d, sup, elements);
    LaurentPoly det = gram_det(d, sub, sup, elements, gram);
    if (is_invariant_unit(d, sup, det))
      return RelativeBasis(d, sub, sup, reps, std::move(elements), std::move(gram),
                           std::move(det));
  }

  // Greedy fallback: orbit sums of small monomials, extended whenever the
  // leading Gram minor stays nonzero, unit-checked at full size.
  const int n = static_cast<int>(reps.size());
  std::vector<LaurentPoly> chosen;
  std::vector<std::vector<LaurentPoly>> gram;
  std::set<std::string> tried;
  Int budget = search_budget;

  IntVec mu(d.rank, -2);
  bool exhausted = false;
  while (!exhausted && static_cast<int>(chosen.size()) < n) {
    LaurentPoly cand = orbit_sum(d, sub, mu);

    // advance the box cursor
    int pos = d.rank - 1;
    while (pos >= 0 && mu[pos] == 2) mu[pos--] = -2;
    if (pos < 0) exhausted = true;
    else ++mu[pos];

    if (!tried.insert(lp_format(cand)).second) continue;
    if (--budget < 0) fail(Err::NoBasisFound, "basis search budget exhausted");

    const int m = static_cast<int>(chosen.size());
    std::vector<std::vector<LaurentPoly>> g(m + 1, std::vector<LaurentPoly>(m + 1, lp_zero(d.rank)));
    for (int u = 0; u < m; ++u)
      for (int v = 0; v < m; ++v) g[u][v] = gram[u][v];
    for (int u = 0; u <= m; ++u) {
      const LaurentPoly& left = (u == m) ? cand : chosen[u];
      g[u][m] = pairing(d, sup, left, cand);
      g[m][u] = g[u][m];
    }
    if (poly_determinant(g).is_zero()) continue;
    chosen.push_back(std::move(cand));
    gram = std::move(g);
  }
  if (static_cast<int>(chosen.size()) == n) {
    LaurentPoly det = poly_determinant(gram);
    if (is_invariant_unit(d, sup, det))
      return RelativeBasis(d, sub, sup, reps, std::move(chosen), std::move(gram), std::move(det));
  }
  fail(Err::NoBasisFound, "no candidate family produced a unit Gram determinant");
}

LaurentPoly verify_basis(const RelativeBasis& rb, bool check_dual) {
  const RootDatum& d = rb.datum();
  for (const auto& e : rb.basis())
    if (!is_invariant(d, rb.sub(), e))
      fail(Err::NotInvariant, "basis element is not invariant under the inner subgroup");

  const auto gram = gram_of(d, rb.sup(), rb.basis());
  if (gram != rb.gram()) fail(Err::NotABasis, "stored Gram matrix does not match a recomputation");
  for (const auto& row : gram)
    for (const auto& e : row)
      if (!is_invariant(d, rb.sup(), e))
        fail(Err::NotInvariant, "Gram entry is not invariant under the outer subgroup");

  const LaurentPoly det = gram_det(d, rb.sub(), rb.sup(), rb.basis(), gram);
  if (!(det == rb.unit())) fail(Err::NotABasis, "stored determinant does not match a recomputation");
  if (!is_invariant_unit(d, rb.sup(), det))
    fail(Err::NotABasis, "Gram determinant is not a unit of the invariant ring");

  if (check_dual) {
    const auto& duals = rb.dual();
    const int n = rb.size();
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        const LaurentPoly p = pairing(d, rb.sup(), rb.basis()[u], duals[v]);
        const LaurentPoly want = (u == v) ? lp_one(d.rank) : lp_zero(d.rank);
        if (!(p == want)) fail(Err::NotABasis, "dual family fails the delta identity");
      }
  }
  return rb.unit();
}

std::vector<LaurentPoly> dual_basis(const RelativeBasis& rb) { return rb.dual(); }

}  // namespace kmb
