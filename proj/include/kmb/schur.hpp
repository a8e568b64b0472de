#pragma once

#include <map>
#include <vector>

#include "kmb/bimodule.hpp"

namespace kmb {

// Formal integer combination of group elements, keyed by canonical reduced
// word. Zero coefficients are never stored.
using GroupSum = std::map<std::vector<int>, BigInt>;

// Integer combination of (J, K) double cosets, each named by its minimal
// representative's canonical word.
struct CosetCombination {
  ParabolicSubset left, right;
  std::map<std::vector<int>, BigInt> coeffs;

  bool operator==(const CosetCombination& o) const = default;
};

// Sum of the elements of the double coset W_J w W_K; w must be its minimal
// representative. The ambient group must be finite.
GroupSum indicator(const RootDatum& d, const ParabolicSubset& j, const ParabolicSubset& k,
                   const WeylElement& w);

// The combination with a single coset, coefficient 1.
CosetCombination coset_of(const RootDatum& d, const ParabolicSubset& j, const ParabolicSubset& k,
                          const WeylElement& w);

// Unit of the (J, J) algebra: the coset of the identity.
CosetCombination coset_unit(const RootDatum& d, const ParabolicSubset& j);

// Expansion into the group algebra: the sum of coeff * indicator over cosets.
GroupSum expand(const RootDatum& d, const CosetCombination& a);

// Composition over the shared middle subset: expand both sides, multiply in
// the group algebra, divide the redundant |W_K| factor out exactly, and
// re-collect into (left(a), right(b)) cosets. The result's expansion is
// checked against the divided product, so a non-bi-invariant product cannot
// slip through.
CosetCombination convolve(const RootDatum& d, const CosetCombination& a,
                          const CosetCombination& b);

// Product of the per-step group-order quotients of an untwisted chain,
// computed purely by group enumeration. Independent of the module machinery;
// used to cross-check its ranks.
Int rank_oracle(const RootDatum& d, const BSSequence& seq);

}  // namespace kmb
