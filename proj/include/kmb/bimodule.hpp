#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "kmb/steinberg.hpp"

namespace kmb {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

// Alternating chain P(0) <= Q(0) >= P(1) <= Q(1) ... >= P(n+1) with one
// twist per Q. parabolics holds the chain in order, so its length is odd and
// at least 3; twists has one entry per Q (possibly the identity).
struct BSSequence {
  std::vector<ParabolicSubset> parabolics;
  std::vector<DiagramAutomorphism> twists;

  int steps() const { return static_cast<int>(twists.size()); }
  const ParabolicSubset& p(int i) const { return parabolics[2 * static_cast<size_t>(i)]; }
  const ParabolicSubset& q(int i) const { return parabolics[2 * static_cast<size_t>(i) + 1]; }
};

// Chain with every twist the identity.
BSSequence plain_sequence(const RootDatum& d, std::vector<ParabolicSubset> parabolics);

// Shape, containment, finiteness, and twist checks. A twist that fails to
// stabilize its Q as an index set is the unsupported regime.
void validate_sequence(const RootDatum& d, const BSSequence& seq);

// Free left R^{W_{P(0)}}-module with basis the product of per-step relative
// bases, carrying a right R^{W_{P(n+1)}}-action computed by coordinate
// reduction. Immutable apart from the action cache, which is a thread-safe
// memo table shared between copies.
class BSBimodule {
 public:
  BSBimodule(RootDatum datum, BSSequence seq);

  const RootDatum& datum() const { return datum_; }
  const BSSequence& seq() const { return seq_; }
  const ParabolicSubset& left_ring() const { return seq_.parabolics.front(); }
  const ParabolicSubset& right_ring() const { return seq_.parabolics.back(); }
  const std::vector<RelativeBasis>& factors() const { return factors_; }

  // Product basis labels, one tuple of per-factor indices per basis element,
  // in first-factor-major lexicographic order.
  const std::vector<std::vector<int>>& basis_labels() const { return labels_; }

  // Product of the per-step group-order quotients; always |basis_labels|.
  Int rank() const { return rank_; }

  // Composite of the per-step twists, the grading component of the module.
  const DiagramAutomorphism& total_twist() const { return total_twist_; }

  // Matrix of right multiplication by f in the product basis: column u holds
  // the coordinates of basis[u] * f. Entries are W_{P(0)}-invariant. Cached
  // by the text form of f.
  PolyMatrix right_act(const LaurentPoly& f) const;

 private:
  friend BSBimodule concat(const BSBimodule&, const BSBimodule&);
  struct Pasted {};
  BSBimodule(Pasted, RootDatum datum, BSSequence seq, std::vector<RelativeBasis> factors);
  void finish_setup();

  RootDatum datum_;
  BSSequence seq_;
  std::vector<RelativeBasis> factors_;
  std::vector<std::vector<int>> labels_;
  Int rank_ = 0;
  DiagramAutomorphism total_twist_;

  struct Cache {
    std::shared_mutex mu;
    std::map<std::string, PolyMatrix> map;
  };
  std::shared_ptr<Cache> cache_;
};

// Module of the joined chain, reusing both factor lists. The junction needs
// the right ring of m1 to equal the left ring of m2 as index sets.
BSBimodule concat(const BSBimodule& m1, const BSBimodule& m2);

// Rank-1 module (P <= P >= P) acting as the identity on R^{W_P}.
BSBimodule identity_bimodule(const RootDatum& d, const ParabolicSubset& p);

// Rank-1 module over (R, R) whose right action precomposes with g.
BSBimodule twist_module(const RootDatum& d, const DiagramAutomorphism& g);

}  // namespace kmb
