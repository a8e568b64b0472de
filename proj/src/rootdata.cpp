#include "kmb/rootdata.hpp"

#include <algorithm>
#include <numeric>

namespace kmb {

Int pair_root_coroot(const RootDatum& d, const IntVec& x, int coroot_index) {
  const IntVec& c = d.simple_coroots[coroot_index];
  Int s = 0;
  for (int i = 0; i < d.rank; ++i) s += c[i] * x[i];
  return s;
}

IntMat cartan_matrix(const RootDatum& d) {
  const int n = d.num_simple();
  IntMat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = pair_root_coroot(d, d.simple_roots[i], j);
  return a;
}

void check_parabolic(const RootDatum& d, const ParabolicSubset& j) {
  for (size_t k = 0; k < j.size(); ++k) {
    if (j[k] < 0 || j[k] >= d.num_simple()) fail(Err::BadInput, "parabolic index out of range");
    if (k > 0 && j[k] <= j[k - 1]) fail(Err::BadInput, "parabolic subset must be sorted and duplicate-free");
  }
}

ParabolicSubset full_subset(const RootDatum& d) {
  ParabolicSubset j(d.num_simple());
  std::iota(j.begin(), j.end(), 0);
  return j;
}

bool subset_contains(const ParabolicSubset& outer, const ParabolicSubset& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

RootDatum validate_datum(int rank, std::vector<IntVec> simple_roots,
                         std::vector<IntVec> simple_coroots,
                         std::vector<std::string> labels) {
  if (rank < 0) fail(Err::BadInput, "rank must be nonnegative");
  const int n = static_cast<int>(simple_roots.size());
  if (static_cast<int>(simple_coroots.size()) != n)
    fail(Err::BadInput, "root and coroot counts differ");
  if (n > rank) fail(Err::NotFree, "more simple roots than lattice rank");
  for (const auto& r : simple_roots)
    if (static_cast<int>(r.size()) != rank) fail(Err::BadInput, "root has wrong dimension");
  for (const auto& c : simple_coroots)
    if (static_cast<int>(c.size()) != rank) fail(Err::BadInput, "coroot has wrong dimension");
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
  if (static_cast<int>(labels.size()) != n) fail(Err::BadInput, "label count mismatch");

  RootDatum d{rank, std::move(simple_roots), std::move(simple_coroots), std::move(labels)};

  const IntMat a = cartan_matrix(d);
  for (int i = 0; i < n; ++i) {
    if (a.at(i, i) != 2) fail(Err::NotGCM, "diagonal Cartan entry is not 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a.at(i, j) > 0) fail(Err::NotGCM, "positive off-diagonal Cartan entry");
      if ((a.at(i, j) == 0) != (a.at(j, i) == 0))
        fail(Err::NotGCM, "asymmetric vanishing in Cartan matrix");
    }
  }

  if (n > 0) {
    IntMat root_cols(rank, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < rank; ++i) root_cols.at(i, j) = d.simple_roots[j][i];
    if (rank_integer(root_cols) != n) fail(Err::NotFree, "simple roots are linearly dependent");
  }

  for (int i = 0; i < n; ++i) {
    Int g = 0;
    for (Int x : d.simple_coroots[i]) g = std::gcd(g, x < 0 ? -x : x);
    if (g != 1) fail(Err::NotSimplyConnected, "coroot entries have gcd != 1");
  }
  return d;
}

bool is_finite_type(const RootDatum& d, const ParabolicSubset& j) {
  check_parabolic(d, j);
  const int k = static_cast<int>(j.size());
  if (k == 0) return true;
  if (k > 16) fail(Err::BadInput, "finite-type check limited to 16 simple roots");
  const IntMat a = cartan_matrix(d);
  // Every principal minor of the sub-Cartan block must be positive.
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> idx;
    for (int t = 0; t < k; ++t)
      if (mask & (1u << t)) idx.push_back(j[t]);
    IntMat sub(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
    for (size_t r = 0; r < idx.size(); ++r)
      for (size_t c = 0; c < idx.size(); ++c) sub.at(static_cast<int>(r), static_cast<int>(c)) = a.at(idx[r], idx[c]);
    if (det_exact(sub) <= 0) return false;
  }
  return true;
}

namespace {

Int l1_norm(const IntVec& v) {
  Int s = 0;
  for (Int x : v) s += (x < 0 ? -x : x);
  return s;
}

// Canonical representative of the integral solution coset x0 + L, where L is
// spanned by kernel: smallest L1 norm, then lexicographically smallest. The
// lattice is searched inside a box that provably contains every vector of
// norm <= |x0|_1.
IntVec canonical_solution(IntVec x0, const std::vector<IntVec>& kernel) {
  if (kernel.empty()) return x0;
  const int dim = static_cast<int>(kernel.size());
  const int rank = static_cast<int>(x0.size());

  // Greedy descent first so the certified search box stays small.
  bool improved = true;
  while (improved) {
    improved = false;
    for (const IntVec& k : kernel) {
      for (int s : {1, -1}) {
        IntVec cand(rank);
        for (int i = 0; i < rank; ++i) cand[i] = x0[i] + s * k[i];
        if (l1_norm(cand) < l1_norm(x0)) { x0 = cand; improved = true; }
      }
    }
  }

  // B = (K^t K)^{-1} K^t recovers kernel coefficients from vectors in the
  // lattice span; row-wise max entries bound the coefficients of any
  // candidate with L1 norm <= |x0|_1.
  IntMat ktk(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Int s = 0;
      for (int t = 0; t < rank; ++t) s += kernel[i][t] * kernel[j][t];
      ktk.at(i, j) = s;
    }
  std::vector<std::vector<BigRat>> inv(dim, std::vector<BigRat>(dim));
  {
    std::vector<std::vector<BigRat>> m(dim, std::vector<BigRat>(2 * dim));
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) m[i][j] = ktk.at(i, j);
      m[i][dim + i] = 1;
    }
    for (int c = 0; c < dim; ++c) {
      int p = -1;
      for (int i = c; i < dim; ++i)
        if (m[i][c] != 0) { p = i; break; }
      if (p < 0) fail(Err::BadInput, "kernel basis is degenerate");
      std::swap(m[c], m[p]);
      const BigRat pv = m[c][c];
      for (auto& x : m[c]) x /= pv;
      for (int i = 0; i < dim; ++i) {
        if (i == c || m[i][c] == 0) continue;
        const BigRat f = m[i][c];
        for (int j = 0; j < 2 * dim; ++j) m[i][j] -= f * m[c][j];
      }
    }
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) inv[i][j] = m[i][dim + j];
  }

  const Int base = l1_norm(x0);
  std::vector<Int> radius(dim, 0);
  for (int i = 0; i < dim; ++i) {
    BigRat row_max = 0;
    for (int j = 0; j < rank; ++j) {
      BigRat e = 0;
      for (int t = 0; t < dim; ++t) e += inv[i][t] * BigRat(kernel[t][j]);
      if (e < 0) e = -e;
      if (e > row_max) row_max = e;
    }
    const BigRat bound = row_max * 2 * base;
    radius[i] = checked_narrow(boost::multiprecision::numerator(bound) /
                                   boost::multiprecision::denominator(bound) + 1);
  }

  BigInt volume = 1;
  for (Int r : radius) volume *= 2 * r + 1;
  if (volume > 4'000'000) fail(Err::BadInput, "weight normalization search space too large");

  IntVec best = x0;
  std::vector<Int> c(dim, 0);
  for (int i = 0; i < dim; ++i) c[i] = -radius[i];
  while (true) {
    IntVec cand = x0;
    for (int i = 0; i < dim; ++i)
      for (int t = 0; t < rank; ++t) cand[t] += c[i] * kernel[i][t];
    if (l1_norm(cand) < l1_norm(best) ||
        (l1_norm(cand) == l1_norm(best) && cand < best))
      best = cand;
    int pos = dim - 1;
    while (pos >= 0 && c[pos] == radius[pos]) { c[pos] = -radius[pos]; --pos; }
    if (pos < 0) break;
    ++c[pos];
  }
  return best;
}

}  // namespace

std::vector<IntVec> fundamental_weights(const RootDatum& d, const ParabolicSubset& j) {
  check_parabolic(d, j);
  const int k = static_cast<int>(j.size());
  IntMat coroot_rows(k, d.rank);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < d.rank; ++c) coroot_rows.at(r, c) = d.simple_coroots[j[r]][c];
  std::vector<IntVec> out;
  for (int t = 0; t < k; ++t) {
    IntVec b(k, 0);
    b[t] = 1;
    auto sol = integral_solve(coroot_rows, b);
    if (!sol) fail(Err::NoIntegralSolution, "no integral fundamental weight for index " +
                                                std::to_string(j[t]));
    out.push_back(canonical_solution(sol->particular, sol->kernel));
  }
  return out;
}

DiagramAutomorphism validate_automorphism(const RootDatum& d, const IntMat& m) {
  if (m.rows != d.rank || m.cols != d.rank) fail(Err::NotAutomorphism, "matrix has wrong shape");
  const BigInt det = det_exact(m);
  if (det != 1 && det != -1) fail(Err::NotAutomorphism, "matrix is not a lattice automorphism");
  const int n = d.num_simple();
  std::vector<int> perm(n, -1);
  std::vector<bool> hit(n, false);
  for (int i = 0; i < n; ++i) {
    const IntVec img = mat_apply(m, d.simple_roots[i]);
    for (int t = 0; t < n; ++t)
      if (img == d.simple_roots[t]) { perm[i] = t; break; }
    if (perm[i] < 0) fail(Err::NotAutomorphism, "image of a simple root is not a simple root");
    if (hit[perm[i]]) fail(Err::NotAutomorphism, "simple-root images collide");
    hit[perm[i]] = true;
  }
  for (int i = 0; i < n; ++i) {
    // Dual compatibility: the coroot of the image must pull back to the
    // original coroot under the matrix.
    if (row_apply(d.simple_coroots[perm[i]], m) != d.simple_coroots[i])
      fail(Err::NotAutomorphism, "coroots are not permuted compatibly");
  }
  const IntMat a = cartan_matrix(d);
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < n; ++t)
      if (a.at(perm[i], perm[t]) != a.at(i, t))
        fail(Err::NotAutomorphism, "Cartan matrix not preserved");
  return DiagramAutomorphism{m, perm};
}

DiagramAutomorphism identity_automorphism(const RootDatum& d) {
  std::vector<int> perm(d.num_simple());
  std::iota(perm.begin(), perm.end(), 0);
  return DiagramAutomorphism{IntMat::identity(d.rank), perm};
}

ParabolicSubset apply_to_subset(const DiagramAutomorphism& g, const ParabolicSubset& j) {
  ParabolicSubset out;
  out.reserve(j.size());
  for (int i : j) out.push_back(g.root_perm[i]);
  std::sort(out.begin(), out.end());
  return out;
}

DiagramAutomorphism compose(const RootDatum& d, const DiagramAutomorphism& a,
                            const DiagramAutomorphism& b) {
  DiagramAutomorphism out;
  out.action = mat_mul(a.action, b.action);
  out.root_perm.resize(d.num_simple());
  for (int i = 0; i < d.num_simple(); ++i) out.root_perm[i] = a.root_perm[b.root_perm[i]];
  return out;
}

}  // namespace kmb
