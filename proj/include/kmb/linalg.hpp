#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "kmb/error.hpp"

namespace kmb {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;

// Dense row-major integer matrix. Lattice data in this project is tiny
// (rank <= 8), so everything is stored flat and copied freely; exact
// algorithms that can overflow work in BigInt internally.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  static IntMat identity(int n);

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  Int at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  bool operator==(const IntMat& o) const = default;
  // Lexicographic on (rows, cols, entries); used as an ordered-map key.
  auto operator<=>(const IntMat& o) const = default;
};

IntMat mat_mul(const IntMat& x, const IntMat& y);
IntVec mat_apply(const IntMat& m, const IntVec& v);       // m * column vector
IntVec row_apply(const IntVec& row, const IntMat& m);     // covector * m
IntMat transpose(const IntMat& m);

BigInt det_exact(const IntMat& m);

// Integer inverse; only exists when det = +-1.
std::optional<IntMat> inverse_unimodular(const IntMat& m);

// Unique rational solution of B x = v where B has full column rank.
// Returns nullopt when v is outside the column span.
std::optional<std::vector<BigRat>> express_in_columns(const IntMat& b, const IntVec& v);

int rank_integer(const IntMat& m);

// S = U * A * V with U, V unimodular and S diagonal with the divisibility
// chain s_1 | s_2 | ... .
struct SmithForm {
  IntMat u, s, v;
};
SmithForm smith_normal_form(const IntMat& a);

// General solution of A x = b over the integers.
struct IntegralSolution {
  IntVec particular;
  std::vector<IntVec> kernel;  // basis of the integer null space
};
std::optional<IntegralSolution> integral_solve(const IntMat& a, const IntVec& b);

Int checked_narrow(const BigInt& v);

}  // namespace kmb
