#include "kmb/bimodule.hpp"

#include <algorithm>
#include <utility>

namespace kmb {

BSSequence plain_sequence(const RootDatum& d, std::vector<ParabolicSubset> parabolics) {
  BSSequence s;
  s.parabolics = std::move(parabolics);
  if (s.parabolics.size() >= 3)
    s.twists.assign(s.parabolics.size() / 2, identity_automorphism(d));
  return s;
}

void validate_sequence(const RootDatum& d, const BSSequence& seq) {
  const size_t len = seq.parabolics.size();
  if (len < 3 || len % 2 == 0)
    fail(Err::BadInput, "chain must alternate P <= Q >= P with odd length at least 3");
  if (seq.twists.size() != len / 2) fail(Err::BadInput, "one twist per Q is required");
  for (const auto& p : seq.parabolics) check_parabolic(d, p);
  for (int i = 0; i < seq.steps(); ++i) {
    if (!subset_contains(seq.q(i), seq.p(i)) || !subset_contains(seq.q(i), seq.p(i + 1)))
      fail(Err::BadInput, "chain containments are violated");
    if (!is_finite_type(d, seq.q(i)))
      fail(Err::NotFiniteType, "every upper parabolic subgroup must be finite");
    const DiagramAutomorphism g = validate_automorphism(d, seq.twists[i].action);
    if (apply_to_subset(g, seq.q(i)) != seq.q(i))
      fail(Err::UnsupportedTwist, "twist does not stabilize its upper parabolic subset");
  }
}

BSBimodule::BSBimodule(RootDatum datum, BSSequence seq)
    : datum_(std::move(datum)), seq_(std::move(seq)), cache_(std::make_shared<Cache>()) {
  validate_sequence(datum_, seq_);
  factors_.reserve(static_cast<size_t>(seq_.steps()));
  for (int i = 0; i < seq_.steps(); ++i) {
    const ParabolicSubset sub = apply_to_subset(seq_.twists[i], seq_.p(i + 1));
    factors_.push_back(steinberg_basis(datum_, sub, seq_.q(i)));
  }
  finish_setup();
}

BSBimodule::BSBimodule(Pasted, RootDatum datum, BSSequence seq, std::vector<RelativeBasis> factors)
    : datum_(std::move(datum)),
      seq_(std::move(seq)),
      factors_(std::move(factors)),
      cache_(std::make_shared<Cache>()) {
  validate_sequence(datum_, seq_);
  finish_setup();
}

void BSBimodule::finish_setup() {
  // Rank two ways: group-order quotients and the label count must agree.
  Int quotients = 1;
  for (int i = 0; i < seq_.steps(); ++i) {
    const Int order_q = static_cast<Int>(enumerate_group(datum_, seq_.q(i)).size());
    const Int order_p = static_cast<Int>(enumerate_group(datum_, seq_.p(i + 1)).size());
    if (order_q % order_p != 0) fail(Err::BadInput, "subgroup order does not divide");
    quotients *= order_q / order_p;
  }

  labels_.assign(1, {});
  for (const auto& rb : factors_) {
    std::vector<std::vector<int>> next;
    next.reserve(labels_.size() * static_cast<size_t>(rb.size()));
    for (const auto& prefix : labels_)
      for (int u = 0; u < rb.size(); ++u) {
        auto label = prefix;
        label.push_back(u);
        next.push_back(std::move(label));
      }
    labels_ = std::move(next);
  }
  rank_ = static_cast<Int>(labels_.size());
  if (rank_ != quotients) fail(Err::BadInput, "basis size disagrees with the group-order count");

  total_twist_ = identity_automorphism(datum_);
  for (const auto& g : seq_.twists) total_twist_ = compose(datum_, total_twist_, g);
}

PolyMatrix BSBimodule::right_act(const LaurentPoly& f) const {
  if (f.rank != datum_.rank) fail(Err::RankMismatch, "polynomial rank does not match the datum");
  if (!is_invariant(datum_, right_ring(), f))
    fail(Err::NotInvariant, "right action input must be invariant under the right ring's group");

  const std::string key = lp_format(f);
  {
    std::shared_lock lock(cache_->mu);
    auto it = cache_->map.find(key);
    if (it != cache_->map.end()) return it->second;
  }

  // Walk factors right to left. After step i the entry at (v-block, u-block)
  // is the W_{Q(i)}-invariant coefficient of basis pattern v in the reduction
  // of basis pattern u times f over factors i..n. Crossing into step i sends
  // a coefficient through that step's twist.
  PolyMatrix e = {{f}};
  for (int i = seq_.steps() - 1; i >= 0; --i) {
    const RelativeBasis& rb = factors_[i];
    const int s = rb.size();
    const int rows = static_cast<int>(e.size());
    const int cols = static_cast<int>(e[0].size());
    PolyMatrix ne(static_cast<size_t>(s) * rows,
                  std::vector<LaurentPoly>(static_cast<size_t>(s) * cols, lp_zero(datum_.rank)));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        if (e[r][c].is_zero()) continue;
        const LaurentPoly crossed = lp_act(seq_.twists[i].action, e[r][c]);
        for (int u = 0; u < s; ++u) {
          const auto coords = rb.coordinates(lp_mul(rb.basis()[u], crossed));
          for (int v = 0; v < s; ++v) {
            if (coords[v].is_zero()) continue;
            ne[static_cast<size_t>(v) * rows + r][static_cast<size_t>(u) * cols + c] = coords[v];
          }
        }
      }
    e = std::move(ne);
  }

  std::unique_lock lock(cache_->mu);
  return cache_->map.try_emplace(key, std::move(e)).first->second;
}

BSBimodule concat(const BSBimodule& m1, const BSBimodule& m2) {
  const RootDatum& d = m1.datum();
  const RootDatum& d2 = m2.datum();
  if (d.rank != d2.rank || d.simple_roots != d2.simple_roots ||
      d.simple_coroots != d2.simple_coroots)
    fail(Err::BadInput, "modules live over different root data");
  if (m1.right_ring() != m2.left_ring())
    fail(Err::RingMismatch, "junction rings differ between the two modules");

  BSSequence joined;
  joined.parabolics = m1.seq().parabolics;
  joined.parabolics.insert(joined.parabolics.end(), m2.seq().parabolics.begin() + 1,
                           m2.seq().parabolics.end());
  joined.twists = m1.seq().twists;
  joined.twists.insert(joined.twists.end(), m2.seq().twists.begin(), m2.seq().twists.end());

  std::vector<RelativeBasis> factors = m1.factors();
  factors.insert(factors.end(), m2.factors().begin(), m2.factors().end());
  return BSBimodule(BSBimodule::Pasted{}, d, std::move(joined), std::move(factors));
}

BSBimodule identity_bimodule(const RootDatum& d, const ParabolicSubset& p) {
  return BSBimodule(d, plain_sequence(d, {p, p, p}));
}

BSBimodule twist_module(const RootDatum& d, const DiagramAutomorphism& g) {
  BSSequence s;
  s.parabolics = {{}, {}, {}};
  s.twists = {g};
  return BSBimodule(d, std::move(s));
}

}  // namespace kmb
