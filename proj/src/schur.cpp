#include "kmb/schur.hpp"

#include <set>
#include <utility>

namespace kmb {

namespace {

void check_ambient_finite(const RootDatum& d) {
  if (!is_finite_type(d, full_subset(d)))
    fail(Err::AmbientInfinite, "the ambient group must be finite");
}

void add_term(GroupSum& s, std::vector<int> word, const BigInt& c) {
  auto [it, inserted] = s.try_emplace(std::move(word), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) s.erase(it);
  }
}

}  // namespace

GroupSum indicator(const RootDatum& d, const ParabolicSubset& j, const ParabolicSubset& k,
                   const WeylElement& w) {
  check_ambient_finite(d);
  check_parabolic(d, j);
  check_parabolic(d, k);
  if (!is_min_coset_rep(d, w.action, j, k))
    fail(Err::BadInput, "coset must be named by its minimal representative");

  // Products repeat |W_J cap w W_K w^-1| times; dedupe on the raw matrix so
  // each coset element is canonicalized exactly once.
  GroupSum out;
  std::set<std::vector<Int>> seen;
  for (const auto& a : enumerate_group(d, j)) {
    const IntMat aw = mat_mul(a.action, w.action);
    for (const auto& b : enumerate_group(d, k)) {
      IntMat m = mat_mul(aw, b.action);
      if (seen.insert(m.a).second) out.emplace(element_from_matrix(d, m).word, BigInt(1));
    }
  }
  return out;
}

CosetCombination coset_of(const RootDatum& d, const ParabolicSubset& j, const ParabolicSubset& k,
                          const WeylElement& w) {
  check_ambient_finite(d);
  check_parabolic(d, j);
  check_parabolic(d, k);
  if (!is_min_coset_rep(d, w.action, j, k))
    fail(Err::BadInput, "coset must be named by its minimal representative");
  CosetCombination out{j, k, {}};
  out.coeffs.emplace(w.word, BigInt(1));
  return out;
}

CosetCombination coset_unit(const RootDatum& d, const ParabolicSubset& j) {
  return coset_of(d, j, j, identity_element(d));
}

GroupSum expand(const RootDatum& d, const CosetCombination& a) {
  GroupSum out;
  for (const auto& [word, c] : a.coeffs) {
    const WeylElement w = element_from_word(d, word);
    for (const auto& [u, one] : indicator(d, a.left, a.right, w)) add_term(out, u, c);
  }
  return out;
}

CosetCombination convolve(const RootDatum& d, const CosetCombination& a,
                          const CosetCombination& b) {
  check_ambient_finite(d);
  if (a.right != b.left) fail(Err::MiddleMismatch, "shared middle subsets differ");

  const GroupSum ga = expand(d, a);
  const GroupSum gb = expand(d, b);
  // Multiply on raw matrices and canonicalize each distinct product once.
  std::vector<std::pair<IntMat, BigInt>> right_terms;
  right_terms.reserve(gb.size());
  for (const auto& [v, cv] : gb) right_terms.emplace_back(word_matrix(d, v), cv);
  std::map<std::vector<Int>, BigInt> raw;
  for (const auto& [u, cu] : ga) {
    const IntMat mu = word_matrix(d, u);
    for (const auto& [mv, cv] : right_terms) {
      IntMat m = mat_mul(mu, mv);
      const BigInt c = cu * cv;
      auto [it, inserted] = raw.try_emplace(std::move(m.a), c);
      if (!inserted) it->second += c;
    }
  }

  const BigInt middle_order(enumerate_group(d, a.right).size());
  GroupSum product;
  CosetCombination out{a.left, b.right, {}};
  for (auto& [data, c] : raw) {
    if (c == 0) continue;
    if (c % middle_order != 0)
      fail(Err::NotDivisible, "group-algebra product is not divisible by the middle order");
    c /= middle_order;
    IntMat m(d.rank, d.rank);
    m.a = data;
    const WeylElement e = element_from_matrix(d, m);
    product.emplace(e.word, c);
    if (is_min_coset_rep(d, m, a.left, b.right)) out.coeffs.emplace(e.word, c);
  }
  if (expand(d, out) != product)
    fail(Err::NotDivisible, "product is not constant on double cosets");
  return out;
}

Int rank_oracle(const RootDatum& d, const BSSequence& seq) {
  validate_sequence(d, seq);
  const IntMat id = IntMat::identity(d.rank);
  for (const auto& g : seq.twists)
    if (!(g.action == id)) fail(Err::BadInput, "the group-order oracle needs an untwisted chain");
  check_ambient_finite(d);

  Int rank = 1;
  for (int i = 0; i < seq.steps(); ++i) {
    const Int order_q = static_cast<Int>(enumerate_group(d, seq.q(i)).size());
    const Int order_p = static_cast<Int>(enumerate_group(d, seq.p(i + 1)).size());
    rank *= order_q / order_p;
  }
  return rank;
}

}  // namespace kmb
