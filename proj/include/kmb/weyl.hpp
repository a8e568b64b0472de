#pragma once

#include <utility>
#include <vector>

#include "kmb/rootdata.hpp"

namespace kmb {

// Group elements are identified by their action matrix on the character
// lattice; the stored word is the lexicographically least reduced word,
// produced by smallest-index descent stripping.
struct WeylElement {
  IntMat action;
  std::vector<int> word;

  int length() const { return static_cast<int>(word.size()); }
  bool operator==(const WeylElement& o) const { return action == o.action; }
};

// Bound on word lengths for canonicalization and breadth-first enumeration.
// Finite groups of the ranks handled here stay well below it; Kac-Moody
// callers pass an explicit bound.
inline constexpr int kDefaultMaxLen = 24;

IntVec reflect(const RootDatum& d, int i, const IntVec& x);
IntMat reflection_matrix(const RootDatum& d, int i);
WeylElement identity_element(const RootDatum& d);

IntMat word_matrix(const RootDatum& d, const std::vector<int>& word);
std::pair<int, std::vector<int>> length_and_reduced_word(const RootDatum& d, const IntMat& m,
                                                         int max_len = kDefaultMaxLen);
WeylElement element_from_matrix(const RootDatum& d, const IntMat& m, int max_len = kDefaultMaxLen);
WeylElement element_from_word(const RootDatum& d, const std::vector<int>& word,
                              int max_len = kDefaultMaxLen);

// All elements of the standard parabolic subgroup W_J with length <= max_len,
// sorted by (length, word). *complete reports whether the search closed
// before hitting the bound.
std::vector<WeylElement> enumerate_group(const RootDatum& d, const ParabolicSubset& j,
                                         int max_len = kDefaultMaxLen, bool* complete = nullptr);

// Longest element of a finite-type parabolic subgroup, with reduced word.
WeylElement longest_element(const RootDatum& d, const ParabolicSubset& j,
                            int max_len = kDefaultMaxLen);

// Membership in the set of minimal double-coset representatives: w^{-1}
// sends the simple roots of j to positive roots and w those of k.
bool is_min_coset_rep(const RootDatum& d, const IntMat& w, const ParabolicSubset& j,
                      const ParabolicSubset& k);

WeylElement min_double_coset_rep(const RootDatum& d, const IntMat& w, const ParabolicSubset& j,
                                 const ParabolicSubset& k, int max_len = kDefaultMaxLen);

struct CosetTable {
  ParabolicSubset left, right;
  std::vector<WeylElement> reps;
  bool complete = false;
};

CosetTable double_coset_table(const RootDatum& d, const ParabolicSubset& j,
                              const ParabolicSubset& k, int max_len = kDefaultMaxLen);

// Simple indices j of J with w^{-1}(alpha_j) a simple root of K, plus a
// brute-force confirmation that these generate W_J intersected with the
// w-conjugate of W_K.
std::pair<ParabolicSubset, bool> stabilizer_simples(const RootDatum& d, const ParabolicSubset& j,
                                                    const ParabolicSubset& k, const IntMat& w,
                                                    int max_len = kDefaultMaxLen);

// Elements of the finite double coset W_{pp} wp W_{qp} that are minimal
// for (p, q), sorted by (length, word).
std::vector<WeylElement> coset_intersection_set(const RootDatum& d, const ParabolicSubset& p,
                                                const ParabolicSubset& q, const ParabolicSubset& pp,
                                                const ParabolicSubset& qp, const IntMat& wp,
                                                int max_len = kDefaultMaxLen);

WeylElement apply_automorphism(const RootDatum& d, const DiagramAutomorphism& g,
                               const WeylElement& w, int max_len = kDefaultMaxLen);

}  // namespace kmb
