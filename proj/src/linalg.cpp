#include "kmb/linalg.hpp"

#include <algorithm>
#include <limits>

namespace kmb {

namespace {

using BigMat = std::vector<std::vector<BigInt>>;

BigMat to_big(const IntMat& m) {
  BigMat r(m.rows, std::vector<BigInt>(m.cols));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r[i][j] = m.at(i, j);
  return r;
}

BigMat big_identity(int n) {
  BigMat r(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

IntMat from_big(const BigMat& m) {
  IntMat r(static_cast<int>(m.size()), m.empty() ? 0 : static_cast<int>(m[0].size()));
  for (int i = 0; i < r.rows; ++i)
    for (int j = 0; j < r.cols; ++j) r.at(i, j) = checked_narrow(m[i][j]);
  return r;
}

// Fraction-free Gaussian elimination; pivots accumulate as exact minors.
BigInt bareiss_det(BigMat m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) { p = i; break; }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = t / prev;  // exact by the Bareiss identity
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

Int checked_narrow(const BigInt& v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    fail(Err::BadInput, "integer value does not fit in 64 bits");
  return static_cast<Int>(v);
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat mat_mul(const IntMat& x, const IntMat& y) {
  if (x.cols != y.rows) fail(Err::BadInput, "matrix product shape mismatch");
  IntMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int xv = x.at(i, k);
      if (xv == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += xv * y.at(k, j);
    }
  return r;
}

IntVec mat_apply(const IntMat& m, const IntVec& v) {
  if (m.cols != static_cast<int>(v.size())) fail(Err::BadInput, "matrix apply shape mismatch");
  IntVec r(m.rows, 0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r[i] += m.at(i, j) * v[j];
  return r;
}

IntVec row_apply(const IntVec& row, const IntMat& m) {
  if (m.rows != static_cast<int>(row.size())) fail(Err::BadInput, "row apply shape mismatch");
  IntVec r(m.cols, 0);
  for (int j = 0; j < m.cols; ++j)
    for (int i = 0; i < m.rows; ++i) r[j] += row[i] * m.at(i, j);
  return r;
}

IntMat transpose(const IntMat& m) {
  IntMat r(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

BigInt det_exact(const IntMat& m) {
  if (m.rows != m.cols) fail(Err::BadInput, "determinant of non-square matrix");
  return bareiss_det(to_big(m));
}

std::optional<IntMat> inverse_unimodular(const IntMat& m) {
  if (m.rows != m.cols) return std::nullopt;
  const int n = m.rows;
  const BigInt d = det_exact(m);
  if (d != 1 && d != -1) return std::nullopt;
  // Adjugate via cofactors; n <= 8 throughout this project.
  BigMat big = to_big(m);
  IntMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      BigMat minor(n - 1, std::vector<BigInt>(n - 1));
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor[rr][cc++] = big[r][c];
        }
        ++rr;
      }
      BigInt cof = bareiss_det(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      inv.at(j, i) = checked_narrow(cof / d);
    }
  return inv;
}

std::optional<std::vector<BigRat>> express_in_columns(const IntMat& b, const IntVec& v) {
  if (b.rows != static_cast<int>(v.size())) fail(Err::BadInput, "express shape mismatch");
  const int rows = b.rows, cols = b.cols;
  std::vector<std::vector<BigRat>> m(rows, std::vector<BigRat>(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m[i][j] = b.at(i, j);
    m[i][cols] = v[i];
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    const BigRat pv = m[r][c];
    for (auto& x : m[r]) x /= pv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const BigRat f = m[i][c];
      for (int j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (static_cast<int>(pivot_col.size()) != cols)
    fail(Err::BadInput, "express_in_columns requires full column rank");
  for (int i = r; i < rows; ++i)
    if (m[i][cols] != 0) return std::nullopt;
  std::vector<BigRat> x(cols);
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = m[i][cols];
  return x;
}

int rank_integer(const IntMat& m) {
  const SmithForm sf = smith_normal_form(m);
  int r = 0;
  const int n = std::min(sf.s.rows, sf.s.cols);
  for (int i = 0; i < n; ++i)
    if (sf.s.at(i, i) != 0) ++r;
  return r;
}

SmithForm smith_normal_form(const IntMat& a) {
  const int rows = a.rows, cols = a.cols;
  BigMat s = to_big(a);
  BigMat u = big_identity(rows);
  BigMat v = big_identity(cols);

  auto row_op = [&](int dst, int src, const BigInt& f) {  // row dst -= f * row src
    for (int j = 0; j < cols; ++j) s[dst][j] -= f * s[src][j];
    for (int j = 0; j < rows; ++j) u[dst][j] -= f * u[src][j];
  };
  auto col_op = [&](int dst, int src, const BigInt& f) {  // col dst -= f * col src
    for (int i = 0; i < rows; ++i) s[i][dst] -= f * s[i][src];
    for (int i = 0; i < cols; ++i) v[i][dst] -= f * v[i][src];
  };
  auto swap_rows = [&](int i, int j) { std::swap(s[i], s[j]); std::swap(u[i], u[j]); };
  auto swap_cols = [&](int i, int j) {
    for (int r = 0; r < rows; ++r) std::swap(s[r][i], s[r][j]);
    for (int r = 0; r < cols; ++r) std::swap(v[r][i], v[r][j]);
  };

  const int n = std::min(rows, cols);
  for (int t = 0; t < n; ++t) {
    // Move a minimal-magnitude nonzero entry of the trailing block to (t, t).
    while (true) {
      int pi = -1, pj = -1;
      BigInt best = 0;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j) {
          if (s[i][j] == 0) continue;
          BigInt m = abs(s[i][j]);
          if (pi < 0 || m < best) { best = m; pi = i; pj = j; }
        }
      if (pi < 0) break;  // trailing block is zero
      if (pi != t) swap_rows(t, pi);
      if (pj != t) swap_cols(t, pj);
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (s[i][t] == 0) continue;
        BigInt q = s[i][t] / s[t][t];
        if (q != 0) row_op(i, t, q);
        if (s[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (s[t][j] == 0) continue;
        BigInt q = s[t][j] / s[t][t];
        if (q != 0) col_op(j, t, q);
        if (s[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (s[t][t] == 0) continue;
    if (s[t][t] < 0) {
      for (int j = 0; j < cols; ++j) s[t][j] = -s[t][j];
      for (int j = 0; j < rows; ++j) u[t][j] = -u[t][j];
    }
  }
  // Enforce the divisibility chain s_t | s_{t+1}.
  for (int t = 0; t + 1 < n; ++t) {
    if (s[t][t] == 0) continue;
    for (int k = t + 1; k < n; ++k) {
      if (s[k][k] % s[t][t] == 0) continue;
      // Fold entry (k, k) into column t, then re-reduce the 2x2 corner.
      col_op(t, k, BigInt(-1));
      while (s[k][t] != 0) {
        BigInt q = s[t][t] / s[k][t];
        row_op(t, k, q);
        swap_rows(t, k);
      }
      while (s[t][k] != 0) {
        BigInt q = s[t][k] / s[t][t];
        if (q != 0) col_op(k, t, q);
        if (s[t][k] != 0) { swap_cols(t, k); }
      }
      if (s[t][t] < 0) {
        for (int j = 0; j < cols; ++j) s[t][j] = -s[t][j];
        for (int j = 0; j < rows; ++j) u[t][j] = -u[t][j];
      }
      if (s[k][k] < 0) {
        for (int j = 0; j < cols; ++j) s[k][j] = -s[k][j];
        for (int j = 0; j < rows; ++j) u[k][j] = -u[k][j];
      }
    }
  }
  return SmithForm{from_big(u), from_big(s), from_big(v)};
}

std::optional<IntegralSolution> integral_solve(const IntMat& a, const IntVec& b) {
  if (a.rows != static_cast<int>(b.size())) fail(Err::BadInput, "integral solve shape mismatch");
  const SmithForm sf = smith_normal_form(a);
  const IntVec c = mat_apply(sf.u, b);
  const int n = std::min(a.rows, a.cols);
  IntVec z(a.cols, 0);
  for (int i = 0; i < a.rows; ++i) {
    const Int di = (i < n) ? sf.s.at(i, i) : 0;
    if (di == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % di != 0) return std::nullopt;
      z[i] = c[i] / di;
    }
  }
  IntegralSolution sol;
  sol.particular = mat_apply(sf.v, z);
  for (int j = 0; j < a.cols; ++j) {
    const bool free_col = (j >= n) || (sf.s.at(j, j) == 0);
    if (!free_col) continue;
    IntVec k(a.cols);
    for (int i = 0; i < a.cols; ++i) k[i] = sf.v.at(i, j);
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

}  // namespace kmb
