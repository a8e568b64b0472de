#pragma once

#include <string>
#include <vector>

#include "kmb/error.hpp"
#include "kmb/linalg.hpp"

namespace kmb {

// Character lattice Z^rank together with simple roots (column vectors in the
// lattice) and simple coroots (covectors, stored as rows that pair with
// lattice vectors by dot product). Instances come out of validate_datum and
// are treated as immutable afterwards.
struct RootDatum {
  int rank = 0;
  std::vector<IntVec> simple_roots;
  std::vector<IntVec> simple_coroots;
  std::vector<std::string> labels;

  int num_simple() const { return static_cast<int>(simple_roots.size()); }
};

// Sorted, duplicate-free list of simple-root indices.
using ParabolicSubset = std::vector<int>;

// Lattice automorphism permuting the simple roots; root_perm[i] is the index
// of the image of root i.
struct DiagramAutomorphism {
  IntMat action;
  std::vector<int> root_perm;
};

Int pair_root_coroot(const RootDatum& d, const IntVec& x, int coroot_index);
IntMat cartan_matrix(const RootDatum& d);

void check_parabolic(const RootDatum& d, const ParabolicSubset& j);
ParabolicSubset full_subset(const RootDatum& d);
bool subset_contains(const ParabolicSubset& outer, const ParabolicSubset& inner);

RootDatum validate_datum(int rank, std::vector<IntVec> simple_roots,
                         std::vector<IntVec> simple_coroots,
                         std::vector<std::string> labels);

bool is_finite_type(const RootDatum& d, const ParabolicSubset& j);

// One weight per index in j, pairing to 1 with its own coroot and 0 with the
// other coroots of j. Among all integral solutions the one with the smallest
// sum of absolute coordinates is returned, ties broken lexicographically.
std::vector<IntVec> fundamental_weights(const RootDatum& d, const ParabolicSubset& j);

DiagramAutomorphism validate_automorphism(const RootDatum& d, const IntMat& m);
DiagramAutomorphism identity_automorphism(const RootDatum& d);
ParabolicSubset apply_to_subset(const DiagramAutomorphism& g, const ParabolicSubset& j);
DiagramAutomorphism compose(const RootDatum& d, const DiagramAutomorphism& a,
                            const DiagramAutomorphism& b);

}  // namespace kmb
