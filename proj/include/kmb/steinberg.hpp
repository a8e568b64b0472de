#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "kmb/laurent.hpp"

namespace kmb {

// Pushforward from the W_sub-invariant subring to the W_sup-invariant one:
// the composite Demazure operator along the minimal representative of
// w0(sup) * W_sub. Identity when sub == sup.
LaurentPoly relative_pushforward(const RootDatum& d, const ParabolicSubset& sub,
                                 const ParabolicSubset& sup, const LaurentPoly& f);

// Bilinear form (f, g) -> full pushforward of f*g to the W_sup-invariants.
LaurentPoly pairing(const RootDatum& d, const ParabolicSubset& sup, const LaurentPoly& f,
                    const LaurentPoly& g);

// Determinant of a square matrix over the Laurent ring, computed by a
// division-free subset recursion.
LaurentPoly poly_determinant(const std::vector<std::vector<LaurentPoly>>& a);

// Adjugate via the Faddeev-LeVerrier recursion; the trace divisions are exact
// because the ring is torsion-free.
std::vector<std::vector<LaurentPoly>> poly_adjugate(const std::vector<std::vector<LaurentPoly>>& a);

// Gram determinant of a free basis of the full ring over the W_sup-invariants
// through the factorization det G = (det B)^2 / prod_w w(Pi) with
// B[w][v] = w(basis[v]) and Pi the product of (1 - e^{-alpha}) over positive
// roots. Independent of poly_determinant; only valid for sub = {}.
LaurentPoly gram_determinant_factored(const RootDatum& d, const ParabolicSubset& sup,
                                      const std::vector<LaurentPoly>& basis);

// Free-module basis of R^{W_sub} over R^{W_sup}, indexed by the minimal
// representatives of the cosets W_sub * v in W_sup. Immutable once built; the
// dual basis is materialized on first use and shared between copies.
class RelativeBasis {
 public:
  RelativeBasis(RootDatum datum, ParabolicSubset sub, ParabolicSubset sup,
                std::vector<WeylElement> reps, std::vector<LaurentPoly> basis,
                std::vector<std::vector<LaurentPoly>> gram, LaurentPoly unit);

  const RootDatum& datum() const { return datum_; }
  const ParabolicSubset& sub() const { return sub_; }
  const ParabolicSubset& sup() const { return sup_; }
  int size() const { return static_cast<int>(basis_.size()); }
  const std::vector<WeylElement>& reps() const { return reps_; }
  const std::vector<LaurentPoly>& basis() const { return basis_; }
  const std::vector<std::vector<LaurentPoly>>& gram() const { return gram_; }

  // det(gram); a basis certificate only when this is +-e^mu with invariant mu.
  const LaurentPoly& unit() const { return unit_; }

  // Dual family under the pairing: (basis[u], dual()[v]) = delta_{uv}.
  // Requires a unit determinant; computed lazily, thread-safe.
  const std::vector<LaurentPoly>& dual() const;

  // Coefficients of f in this basis: f = sum_v coords[v] * basis[v] with all
  // coords W_sup-invariant.
  std::vector<LaurentPoly> coordinates(const LaurentPoly& f) const;

 private:
  RootDatum datum_;
  ParabolicSubset sub_, sup_;
  std::vector<WeylElement> reps_;
  std::vector<LaurentPoly> basis_;
  std::vector<std::vector<LaurentPoly>> gram_;
  LaurentPoly unit_;

  struct DualCache {
    std::once_flag once;
    std::vector<LaurentPoly> value;
  };
  std::shared_ptr<DualCache> dual_cache_;
};

// True when f is a unit of the W_sup-invariant subring: a single term with
// coefficient +-1 whose exponent pairs to zero with every coroot of sup.
bool is_invariant_unit(const RootDatum& d, const ParabolicSubset& sup, const LaurentPoly& f);

// Wrap hand-picked W_sub-invariant elements as a candidate basis: computes
// the coset representatives, Gram matrix, and determinant, but does not
// require the determinant to be a unit. verify_basis decides.
RelativeBasis assemble_basis(const RootDatum& d, const ParabolicSubset& sub,
                             const ParabolicSubset& sup, std::vector<LaurentPoly> elements);

inline constexpr Int kDefaultSearchBudget = 10000;

// Construct a verified basis: a closed-form candidate family first (several
// sign/inverse variants), then a budgeted greedy search over orbit sums of
// small monomials. Deterministic for a fixed datum.
RelativeBasis steinberg_basis(const RootDatum& d, const ParabolicSubset& sub,
                              const ParabolicSubset& sup,
                              Int search_budget = kDefaultSearchBudget);

// Recompute the Gram data of rb from scratch and check the basis contract:
// invariance of the elements, unit determinant, and (when check_dual) the
// delta identity of the dual family. Returns the unit.
LaurentPoly verify_basis(const RelativeBasis& rb, bool check_dual = true);

// The dual family as a standalone operation.
std::vector<LaurentPoly> dual_basis(const RelativeBasis& rb);

}  // namespace kmb
