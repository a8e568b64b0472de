#include "kmb/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kmb {

namespace {

// Matrix of the simple roots as columns; the coordinate space of this matrix
// is where positivity of roots is decided.
IntMat root_column_matrix(const RootDatum& d) {
  const int n = d.num_simple();
  IntMat r(d.rank, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < d.rank; ++i) r.at(i, j) = d.simple_roots[j][i];
  return r;
}

// Simple-root coordinates of a lattice vector, or nullopt when the vector is
// outside the root lattice span or has non-integral coordinates.
std::optional<IntVec> root_coordinates(const RootDatum& d, const IntMat& cols, const IntVec& v) {
  auto x = express_in_columns(cols, v);
  if (!x) return std::nullopt;
  IntVec out(x->size());
  for (size_t i = 0; i < x->size(); ++i) {
    if (boost::multiprecision::denominator((*x)[i]) != 1) return std::nullopt;
    out[i] = checked_narrow(boost::multiprecision::numerator((*x)[i]));
  }
  return out;
}

// +1 for a positive root, -1 for a negative one, 0 for mixed signs (which
// never happens for images of roots under the group).
int coord_sign(const IntVec& coords) {
  bool pos = false, neg = false;
  for (Int c : coords) {
    if (c > 0) pos = true;
    if (c < 0) neg = true;
  }
  if (pos && !neg) return 1;
  if (neg && !pos) return -1;
  return 0;
}

// Action of s_i on simple-root coordinates: e_j -> e_j - a_{ji} e_i.
IntMat sigma_generator(const IntMat& cartan, int i) {
  const int n = cartan.rows;
  IntMat m = IntMat::identity(n);
  for (int j = 0; j < n; ++j) m.at(i, j) -= cartan.at(j, i);
  return m;
}

bool is_identity(const IntMat& m) {
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

int positive_root_sign(const RootDatum& d, const IntMat& cols, const IntVec& v) {
  auto c = root_coordinates(d, cols, v);
  if (!c) fail(Err::NotInGroup, "vector is not in the root lattice");
  const int s = coord_sign(*c);
  if (s == 0) fail(Err::NotInGroup, "matrix does not permute the roots");
  return s;
}

}  // namespace

IntVec reflect(const RootDatum& d, int i, const IntVec& x) {
  if (i < 0 || i >= d.num_simple()) fail(Err::BadInput, "reflection index out of range");
  if (static_cast<int>(x.size()) != d.rank) fail(Err::BadInput, "vector has wrong dimension");
  const Int p = pair_root_coroot(d, x, i);
  IntVec out = x;
  for (int t = 0; t < d.rank; ++t) out[t] -= p * d.simple_roots[i][t];
  return out;
}

IntMat reflection_matrix(const RootDatum& d, int i) {
  if (i < 0 || i >= d.num_simple()) fail(Err::BadInput, "reflection index out of range");
  IntMat m = IntMat::identity(d.rank);
  for (int r = 0; r < d.rank; ++r)
    for (int c = 0; c < d.rank; ++c) m.at(r, c) -= d.simple_roots[i][r] * d.simple_coroots[i][c];
  return m;
}

WeylElement identity_element(const RootDatum& d) {
  return WeylElement{IntMat::identity(d.rank), {}};
}

IntMat word_matrix(const RootDatum& d, const std::vector<int>& word) {
  IntMat m = IntMat::identity(d.rank);
  for (int i : word) m = mat_mul(m, reflection_matrix(d, i));
  return m;
}

std::pair<int, std::vector<int>> length_and_reduced_word(const RootDatum& d, const IntMat& m,
                                                         int max_len) {
  if (m.rows != d.rank || m.cols != d.rank) fail(Err::NotInGroup, "matrix has wrong shape");
  const int n = d.num_simple();
  auto minv_opt = inverse_unimodular(m);
  if (!minv_opt) fail(Err::NotInGroup, "matrix is not a lattice automorphism");
  if (n == 0) {
    if (!is_identity(m)) fail(Err::NotInGroup, "nontrivial matrix in the trivial group");
    return {0, {}};
  }
  const IntMat cols = root_column_matrix(d);
  const IntMat cartan = cartan_matrix(d);

  // Column j of sigma_inv holds the simple-root coordinates of
  // w^{-1}(alpha_j); descents are read off these columns and stripping is
  // pure integer arithmetic from here on.
  IntMat sigma_inv(n, n);
  for (int j = 0; j < n; ++j) {
    auto c = root_coordinates(d, cols, mat_apply(*minv_opt, d.simple_roots[j]));
    if (!c) fail(Err::NotInGroup, "matrix does not preserve the root lattice");
    for (int i = 0; i < n; ++i) sigma_inv.at(i, j) = (*c)[i];
  }

  std::vector<IntMat> sigma(n);
  for (int i = 0; i < n; ++i) sigma[i] = sigma_generator(cartan, i);

  std::vector<int> word;
  while (!is_identity(sigma_inv)) {
    int descent = -1;
    for (int i = 0; i < n && descent < 0; ++i) {
      IntVec col(n);
      for (int r = 0; r < n; ++r) col[r] = sigma_inv.at(r, i);
      if (coord_sign(col) == -1) descent = i;
    }
    if (descent < 0) fail(Err::NotInGroup, "no descent from a non-identity matrix");
    sigma_inv = mat_mul(sigma_inv, sigma[descent]);
    word.push_back(descent);
    if (static_cast<int>(word.size()) > max_len)
      fail(Err::NotInGroup, "descent stripping exceeded the length bound");
  }
  if (word_matrix(d, word) != m)
    fail(Err::NotInGroup, "matrix acts on roots like a group element but differs on the lattice");
  return {static_cast<int>(word.size()), word};
}

WeylElement element_from_matrix(const RootDatum& d, const IntMat& m, int max_len) {
  auto [len, word] = length_and_reduced_word(d, m, max_len);
  (void)len;
  return WeylElement{m, std::move(word)};
}

WeylElement element_from_word(const RootDatum& d, const std::vector<int>& word, int max_len) {
  for (int i : word)
    if (i < 0 || i >= d.num_simple()) fail(Err::BadInput, "word letter out of range");
  return element_from_matrix(d, word_matrix(d, word),
                             std::max(max_len, static_cast<int>(word.size())));
}

std::vector<WeylElement> enumerate_group(const RootDatum& d, const ParabolicSubset& j, int max_len,
                                         bool* complete) {
  check_parabolic(d, j);
  std::set<IntMat> seen;
  std::vector<IntMat> frontier{IntMat::identity(d.rank)};
  seen.insert(frontier[0]);
  std::vector<std::pair<int, IntMat>> found{{0, frontier[0]}};
  bool closed = true;
  std::vector<IntMat> gens;
  for (int i : j) gens.push_back(reflection_matrix(d, i));
  if (max_len == 0 && !gens.empty()) closed = false;

  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<IntMat> next;
    for (const IntMat& w : frontier)
      for (const IntMat& s : gens) {
        IntMat ws = mat_mul(w, s);
        if (seen.insert(ws).second) next.push_back(std::move(ws));
      }
    frontier = std::move(next);
    for (const IntMat& w : frontier) found.emplace_back(len, w);
    if (len == max_len && !frontier.empty()) {
      // One more expansion decides whether the bound truncated the group.
      for (const IntMat& w : frontier)
        for (const IntMat& s : gens)
          if (!seen.count(mat_mul(w, s))) { closed = false; break; }
      break;
    }
  }
  if (complete) *complete = closed;

  std::vector<WeylElement> out;
  out.reserve(found.size());
  for (auto& [len, m] : found) {
    WeylElement e = element_from_matrix(d, m, std::max(max_len, len));
    if (e.length() != len) fail(Err::NotInGroup, "enumeration depth disagrees with word length");
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.word < b.word;
  });
  return out;
}

WeylElement longest_element(const RootDatum& d, const ParabolicSubset& j, int max_len) {
  check_parabolic(d, j);
  if (!is_finite_type(d, j)) fail(Err::NotFiniteType, "longest element needs a finite-type subset");
  const IntMat cols = root_column_matrix(d);
  IntMat m = IntMat::identity(d.rank);
  std::vector<int> word;
  // Greedy ascent: any right multiplication by an ascent generator gains one
  // length; the walk stops exactly at the longest element.
  for (int guard = 0;; ++guard) {
    if (guard > 4 * max_len + 8) fail(Err::NotInGroup, "longest-element walk exceeded the bound");
    int up = -1;
    for (int idx : j)
      if (positive_root_sign(d, cols, mat_apply(m, d.simple_roots[idx])) > 0) { up = idx; break; }
    if (up < 0) break;
    m = mat_mul(m, reflection_matrix(d, up));
    word.push_back(up);
  }
  return element_from_matrix(d, m, std::max(max_len, static_cast<int>(word.size())));
}

bool is_min_coset_rep(const RootDatum& d, const IntMat& w, const ParabolicSubset& j,
                      const ParabolicSubset& k) {
  check_parabolic(d, j);
  check_parabolic(d, k);
  const IntMat cols = root_column_matrix(d);
  auto winv = inverse_unimodular(w);
  if (!winv) fail(Err::NotInGroup, "matrix is not a lattice automorphism");
  for (int idx : j)
    if (positive_root_sign(d, cols, mat_apply(*winv, d.simple_roots[idx])) < 0) return false;
  for (int idx : k)
    if (positive_root_sign(d, cols, mat_apply(w, d.simple_roots[idx])) < 0) return false;
  return true;
}

WeylElement min_double_coset_rep(const RootDatum& d, const IntMat& w, const ParabolicSubset& j,
                                 const ParabolicSubset& k, int max_len) {
  check_parabolic(d, j);
  check_parabolic(d, k);
  const IntMat cols = root_column_matrix(d);
  IntMat m = w;
  auto minv_opt = inverse_unimodular(m);
  if (!minv_opt) fail(Err::NotInGroup, "matrix is not a lattice automorphism");
  IntMat minv = *minv_opt;

  // Each pass strips one descent, shortening the element, so termination is
  // bounded by the initial length.
  for (int guard = 0;; ++guard) {
    if (guard > 4 * max_len + 8) fail(Err::NotInGroup, "coset reduction exceeded the length bound");
    int move = -1;
    bool left = true;
    for (int idx : j)
      if (positive_root_sign(d, cols, mat_apply(minv, d.simple_roots[idx])) < 0) { move = idx; break; }
    if (move < 0) {
      left = false;
      for (int idx : k)
        if (positive_root_sign(d, cols, mat_apply(m, d.simple_roots[idx])) < 0) { move = idx; break; }
    }
    if (move < 0) break;
    const IntMat s = reflection_matrix(d, move);
    if (left) {
      m = mat_mul(s, m);
      minv = mat_mul(minv, s);
    } else {
      m = mat_mul(m, s);
      minv = mat_mul(s, minv);
    }
  }
  return element_from_matrix(d, m, max_len);
}

CosetTable double_coset_table(const RootDatum& d, const ParabolicSubset& j,
                              const ParabolicSubset& k, int max_len) {
  bool complete = false;
  std::vector<WeylElement> all = enumerate_group(d, full_subset(d), max_len, &complete);
  CosetTable t;
  t.left = j;
  t.right = k;
  t.complete = complete;
  for (auto& w : all)
    if (is_min_coset_rep(d, w.action, j, k)) t.reps.push_back(std::move(w));
  return t;
}

std::pair<ParabolicSubset, bool> stabilizer_simples(const RootDatum& d, const ParabolicSubset& j,
                                                    const ParabolicSubset& k, const IntMat& w,
                                                    int max_len) {
  check_parabolic(d, j);
  check_parabolic(d, k);
  if (!is_finite_type(d, j) || !is_finite_type(d, k))
    fail(Err::NotFiniteType, "stabilizer computation needs finite parabolic subgroups");
  auto winv_opt = inverse_unimodular(w);
  if (!winv_opt) fail(Err::NotInGroup, "matrix is not a lattice automorphism");
  const IntMat& winv = *winv_opt;

  ParabolicSubset s;
  for (int idx : j) {
    const IntVec img = mat_apply(winv, d.simple_roots[idx]);
    for (int t : k)
      if (img == d.simple_roots[t]) { s.push_back(idx); break; }
  }

  bool complete_j = false, complete_k = false, complete_s = false;
  const auto wj = enumerate_group(d, j, max_len, &complete_j);
  const auto wk = enumerate_group(d, k, max_len, &complete_k);
  const auto ws = enumerate_group(d, s, max_len, &complete_s);
  bool verified = complete_j && complete_k && complete_s;
  if (verified) {
    std::set<IntMat> wk_set;
    for (const auto& u : wk) wk_set.insert(u.action);
    std::set<IntMat> intersection;
    for (const auto& u : wj)
      if (wk_set.count(mat_mul(winv, mat_mul(u.action, w)))) intersection.insert(u.action);
    std::set<IntMat> generated;
    for (const auto& u : ws) generated.insert(u.action);
    verified = (intersection == generated);
  }
  return {s, verified};
}

std::vector<WeylElement> coset_intersection_set(const RootDatum& d, const ParabolicSubset& p,
                                                const ParabolicSubset& q, const ParabolicSubset& pp,
                                                const ParabolicSubset& qp, const IntMat& wp,
                                                int max_len) {
  if (!subset_contains(pp, p) || !subset_contains(qp, q))
    fail(Err::BadInput, "coset intersection needs nested parabolic subsets");
  if (!is_finite_type(d, pp) || !is_finite_type(d, qp))
    fail(Err::NotFiniteType, "coset intersection needs finite outer parabolic subgroups");
  if (!is_min_coset_rep(d, wp, pp, qp))
    fail(Err::BadInput, "representative is not minimal for the outer pair");

  const auto wpp = enumerate_group(d, pp, max_len);
  const auto wqp = enumerate_group(d, qp, max_len);
  std::set<IntMat> coset;
  for (const auto& u : wpp) {
    const IntMat uw = mat_mul(u.action, wp);
    for (const auto& v : wqp) coset.insert(mat_mul(uw, v.action));
  }
  std::vector<WeylElement> out;
  for (const IntMat& m : coset)
    if (is_min_coset_rep(d, m, p, q)) out.push_back(element_from_matrix(d, m, max_len));
  std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.word < b.word;
  });
  return out;
}

WeylElement apply_automorphism(const RootDatum& d, const DiagramAutomorphism& g,
                               const WeylElement& w, int max_len) {
  auto ginv = inverse_unimodular(g.action);
  if (!ginv) fail(Err::NotAutomorphism, "automorphism matrix is not invertible over the integers");
  return element_from_matrix(d, mat_mul(g.action, mat_mul(w.action, *ginv)), max_len);
}

}  // namespace kmb
