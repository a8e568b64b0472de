#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <vector>

#include "kmb/standard.hpp"
#include "kmb/steinberg.hpp"
#include "test_util.hpp"

using namespace kmb;
using testutil::lp_from_terms;

namespace {

bool fails_with(Err want, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == want;
  }
  return false;
}

LaurentPoly reproduce(const RelativeBasis& rb, const LaurentPoly& f) {
  auto coords = rb.coordinates(f);
  LaurentPoly acc = lp_zero(rb.datum().rank);
  for (int v = 0; v < rb.size(); ++v) acc = lp_add(acc, lp_mul(coords[v], rb.basis()[v]));
  return acc;
}

}  // namespace

TEST_CASE("pairing on the rank one ring") {
  RootDatum a1 = standard_datum("A1");
  ParabolicSubset full = {0};
  LaurentPoly one = lp_one(1);
  LaurentPoly t = lp_monomial(1, {1});
  LaurentPoly tinv = lp_monomial(1, {-1});

  CHECK(pairing(a1, full, one, one) == one);
  CHECK(pairing(a1, full, t, t) == lp_from_terms(1, {{{2}, 1}, {{0}, 1}, {{-2}, 1}}));
  CHECK(pairing(a1, full, one, tinv).is_zero());
  CHECK(pairing(a1, full, tinv, tinv) == lp_from_terms(1, {{{0}, -1}}));
  CHECK(pairing(a1, full, one, t) == lp_from_terms(1, {{{1}, 1}, {{-1}, 1}}));
}

TEST_CASE("pairing is symmetric and linear over the invariants") {
  RootDatum b2 = standard_datum("B2");
  ParabolicSubset full = {0, 1};
  testutil::Rng rng(71);
  for (int k = 0; k < 10; ++k) {
    LaurentPoly f = rng.poly(2, 4, 3, 4);
    LaurentPoly g = rng.poly(2, 4, 3, 4);
    LaurentPoly h = rng.invariant_poly(b2, full, 2, 2, 3);
    CHECK(pairing(b2, full, f, g) == pairing(b2, full, g, f));
    CHECK(pairing(b2, full, lp_mul(h, f), g) == lp_mul(h, pairing(b2, full, f, g)));
    CHECK(pairing(b2, full, lp_add(f, g), g) ==
          lp_add(pairing(b2, full, f, g), pairing(b2, full, g, g)));
    CHECK(is_invariant(b2, full, pairing(b2, full, f, g)));
  }
  CHECK(fails_with(Err::NotFiniteType, [] {
    RootDatum aff = standard_datum("affineA1");
    pairing(aff, {0, 1}, lp_one(3), lp_one(3));
  }));
}

TEST_CASE("pushforward identities") {
  RootDatum a3 = standard_datum("A3");
  testutil::Rng rng(72);
  for (int k = 0; k < 8; ++k) {
    LaurentPoly f = rng.poly(3, 4, 2, 4);
    // Equal subsets give the identity map.
    LaurentPoly inv = rng.invariant_poly(a3, {0, 2}, 2, 2, 3);
    CHECK(relative_pushforward(a3, {0, 2}, {0, 2}, inv) == inv);

    // Full pushforward of a product is the pairing.
    LaurentPoly g = rng.poly(3, 4, 2, 4);
    CHECK(relative_pushforward(a3, {}, {0, 1, 2}, lp_mul(f, g)) ==
          pairing(a3, {0, 1, 2}, f, g));

    // Stagewise composition agrees with the direct map.
    LaurentPoly staged = relative_pushforward(a3, {}, {0}, f);
    staged = relative_pushforward(a3, {0}, {0, 1}, staged);
    staged = relative_pushforward(a3, {0, 1}, {0, 1, 2}, staged);
    CHECK(staged == relative_pushforward(a3, {}, {0, 1, 2}, f));
    CHECK(is_invariant(a3, {0, 1, 2}, staged));
  }

  RootDatum a2 = standard_datum("A2");
  CHECK(fails_with(Err::NotInvariant,
                   [&] { relative_pushforward(a2, {0}, {0, 1}, lp_monomial(2, {1, 0})); }));
  CHECK(fails_with(Err::BadInput,
                   [&] { relative_pushforward(a2, {0}, {1}, lp_one(2)); }));
  CHECK(fails_with(Err::NotFiniteType, [] {
    RootDatum aff = standard_datum("affineA1");
    relative_pushforward(aff, {}, {0, 1}, lp_one(3));
  }));
}

TEST_CASE("polynomial determinant and adjugate") {
  // Frozen 2x2 over the rank one ring.
  LaurentPoly t = lp_monomial(1, {1});
  LaurentPoly tinv = lp_monomial(1, {-1});
  std::vector<std::vector<LaurentPoly>> m = {{t, lp_one(1)}, {lp_zero(1), tinv}};
  CHECK(poly_determinant(m) == lp_one(1));

  std::vector<std::vector<LaurentPoly>> sing = {{lp_one(1), t}, {tinv, lp_one(1)}};
  CHECK(poly_determinant(sing).is_zero());

  testutil::Rng rng(73);
  for (int n = 1; n <= 4; ++n) {
    for (int rep = 0; rep < 4; ++rep) {
      std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n, lp_zero(2)));
      std::vector<std::vector<LaurentPoly>> b(n, std::vector<LaurentPoly>(n, lp_zero(2)));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          a[i][j] = rng.poly(2, 2, 2, 3);
          b[i][j] = rng.poly(2, 2, 2, 3);
        }
      LaurentPoly da = poly_determinant(a);

      // a * adj(a) = det(a) * I.
      auto adj = poly_adjugate(a);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          LaurentPoly acc = lp_zero(2);
          for (int k = 0; k < n; ++k) acc = lp_add(acc, lp_mul(a[i][k], adj[k][j]));
          CHECK(acc == (i == j ? da : lp_zero(2)));
        }

      // det(ab) = det(a) det(b).
      std::vector<std::vector<LaurentPoly>> ab(n, std::vector<LaurentPoly>(n, lp_zero(2)));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) ab[i][j] = lp_add(ab[i][j], lp_mul(a[i][k], b[k][j]));
      CHECK(poly_determinant(ab) == lp_mul(da, poly_determinant(b)));
    }
  }

  CHECK(fails_with(Err::BadInput, [] { poly_determinant({}); }));
  CHECK(fails_with(Err::BadInput, [&] { poly_determinant({{lp_one(1), lp_one(1)}}); }));
}

TEST_CASE("basis of the rank one ring") {
  RootDatum a1 = standard_datum("A1");
  RelativeBasis rb = steinberg_basis(a1, {}, {0});

  CHECK(rb.size() == 2);
  REQUIRE(rb.reps().size() == 2);
  CHECK(rb.reps()[0].word == std::vector<int>{});
  CHECK(rb.reps()[1].word == std::vector<int>{0});

  LaurentPoly one = lp_one(1);
  LaurentPoly t = lp_monomial(1, {1});
  LaurentPoly tinv = lp_monomial(1, {-1});
  CHECK(rb.basis()[0] == one);
  CHECK(rb.basis()[1] == tinv);

  CHECK(rb.gram()[0][0] == one);
  CHECK(rb.gram()[0][1].is_zero());
  CHECK(rb.gram()[1][0].is_zero());
  CHECK(rb.gram()[1][1] == lp_from_terms(1, {{{0}, -1}}));
  CHECK(rb.unit() == lp_from_terms(1, {{{0}, -1}}));

  CHECK(verify_basis(rb) == rb.unit());
  CHECK(rb.dual()[0] == one);
  CHECK(rb.dual()[1] == lp_from_terms(1, {{{-1}, -1}}));

  auto coords = rb.coordinates(t);
  REQUIRE(coords.size() == 2);
  CHECK(coords[0] == lp_from_terms(1, {{{1}, 1}, {{-1}, 1}}));
  CHECK(coords[1] == lp_from_terms(1, {{{0}, -1}}));
  CHECK(reproduce(rb, t) == t);
}

TEST_CASE("hand assembled families in rank one") {
  RootDatum a1 = standard_datum("A1");
  LaurentPoly one = lp_one(1);
  LaurentPoly t = lp_monomial(1, {1});
  LaurentPoly c = lp_from_terms(1, {{{1}, 1}, {{-1}, 1}});

  // {1, t} works: Gram [[1, c], [c, c^2 - 1]] has determinant -1.
  RelativeBasis alt = assemble_basis(a1, {}, {0}, {one, t});
  CHECK(alt.gram()[0][1] == c);
  CHECK(alt.gram()[1][1] == lp_sub(lp_mul(c, c), one));
  CHECK(alt.unit() == lp_from_terms(1, {{{0}, -1}}));
  CHECK(verify_basis(alt) == alt.unit());
  CHECK(alt.dual()[0] == lp_add(lp_sub(one, lp_mul(c, c)), lp_mul(c, t)));
  CHECK(alt.dual()[1] == lp_sub(c, t));
  CHECK(reproduce(alt, lp_from_terms(1, {{{2}, 3}, {{0}, -1}})) ==
        lp_from_terms(1, {{{2}, 3}, {{0}, -1}}));

  // {1, t + t^{-1}} is not free: the second element is already invariant.
  RelativeBasis bad = assemble_basis(a1, {}, {0}, {one, c});
  CHECK(bad.unit().is_zero());
  CHECK(fails_with(Err::NotABasis, [&] { verify_basis(bad); }));
  CHECK(fails_with(Err::NotABasis, [&] { bad.dual(); }));
  CHECK(fails_with(Err::NotABasis, [&] { bad.coordinates(t); }));

  CHECK(fails_with(Err::BadInput, [&] { assemble_basis(a1, {}, {0}, {one}); }));
  CHECK(fails_with(Err::NotInvariant, [&] { assemble_basis(a1, {0}, {0}, {t}); }));
}

TEST_CASE("factored determinant agrees with the direct one") {
  // Unit family from the constructor.
  RootDatum a2 = standard_datum("A2");
  RelativeBasis ra = steinberg_basis(a2, {}, {0, 1});
  CHECK(ra.size() == 6);
  LaurentPoly direct = poly_determinant(ra.gram());
  CHECK(direct == ra.unit());
  CHECK(gram_determinant_factored(a2, {0, 1}, ra.basis()) == direct);

  // Degenerate family: both routes see the same non-unit determinant.
  RootDatum a1 = standard_datum("A1");
  LaurentPoly one = lp_one(1);
  LaurentPoly f = lp_from_terms(1, {{{1}, 1}, {{2}, 1}});
  RelativeBasis deg = assemble_basis(a1, {}, {0}, {one, f});
  CHECK(gram_determinant_factored(a1, {0}, deg.basis()) == poly_determinant(deg.gram()));
  CHECK(!is_invariant_unit(a1, {0}, deg.unit()));

  CHECK(fails_with(Err::BadInput,
                   [&] { gram_determinant_factored(a2, {0}, {one, one, one}); }));
}

TEST_CASE("unit recognition") {
  RootDatum a2 = standard_datum("A2");
  CHECK(is_invariant_unit(a2, {0, 1}, lp_one(2)));
  CHECK(is_invariant_unit(a2, {0, 1}, lp_from_terms(2, {{{0, 0}, -1}})));
  CHECK(!is_invariant_unit(a2, {0, 1}, lp_from_terms(2, {{{0, 0}, 2}})));
  CHECK(!is_invariant_unit(a2, {0, 1}, lp_from_terms(2, {{{1, 0}, 1}})));
  CHECK(!is_invariant_unit(a2, {0, 1}, lp_from_terms(2, {{{0, 0}, 1}, {{1, 1}, 1}})));
  CHECK(!is_invariant_unit(a2, {0, 1}, lp_zero(2)));
  // Pairing to zero with the coroots of the subset is all that is needed.
  CHECK(is_invariant_unit(a2, {0}, lp_from_terms(2, {{{0, 1}, -1}})));
  CHECK(!is_invariant_unit(a2, {1}, lp_from_terms(2, {{{0, 1}, -1}})));
}

TEST_CASE("relative pairs across the built in data") {
  struct Pair {
    const char* name;
    ParabolicSubset sub, sup;
    int size;
  };
  const Pair cases[] = {
      {"A1", {}, {0}, 2},       {"A2", {}, {0, 1}, 6},   {"A2", {0}, {0, 1}, 3},
      {"A2", {1}, {0, 1}, 3},   {"A2", {0, 1}, {0, 1}, 1}, {"B2", {}, {0, 1}, 8},
      {"B2", {0}, {0, 1}, 4},   {"A1xA1", {}, {0, 1}, 4},  {"A1xA1", {0}, {0, 1}, 2},
      {"A3", {0, 1}, {0, 1, 2}, 4}, {"G2", {}, {0}, 2},     {"G2", {0}, {0, 1}, 6},
  };
  testutil::Rng rng(74);
  for (const auto& cse : cases) {
    CAPTURE(cse.name);
    RootDatum d = standard_datum(cse.name);
    RelativeBasis rb = steinberg_basis(d, cse.sub, cse.sup);
    CHECK(rb.size() == cse.size);

    // Rank law: the group orders divide out to the coset count.
    size_t order_sup = enumerate_group(d, cse.sup).size();
    size_t order_sub = enumerate_group(d, cse.sub).size();
    CHECK(static_cast<size_t>(rb.size()) * order_sub == order_sup);

    CHECK(verify_basis(rb) == rb.unit());
    for (const auto& e : rb.basis()) CHECK(is_invariant(d, cse.sub, e));
    for (const auto& e : rb.dual()) CHECK(is_invariant(d, cse.sub, e));

    // Basis elements have indicator coordinates; zero has zero coordinates.
    auto indicator = rb.coordinates(rb.basis()[rb.size() - 1]);
    for (int v = 0; v < rb.size(); ++v)
      CHECK(indicator[v] == (v == rb.size() - 1 ? lp_one(d.rank) : lp_zero(d.rank)));
    for (const auto& c : rb.coordinates(lp_zero(d.rank))) CHECK(c.is_zero());

    // Random invariants of the inner subgroup decompose and reassemble.
    for (int k = 0; k < 3; ++k) {
      LaurentPoly f = rng.invariant_poly(d, cse.sub, 2, 2, 3);
      auto coords = rb.coordinates(f);
      LaurentPoly acc = lp_zero(d.rank);
      for (int v = 0; v < rb.size(); ++v) {
        CHECK(is_invariant(d, cse.sup, coords[v]));
        acc = lp_add(acc, lp_mul(coords[v], rb.basis()[v]));
      }
      CHECK(acc == f);

      // Scaling by an invariant of the outer subgroup scales coordinates.
      LaurentPoly g = rng.invariant_poly(d, cse.sup, 2, 1, 2);
      auto scaled = rb.coordinates(lp_mul(f, g));
      for (int v = 0; v < rb.size(); ++v) CHECK(scaled[v] == lp_mul(g, coords[v]));
    }
  }
}

TEST_CASE("basis construction rejects bad pairs") {
  RootDatum a2 = standard_datum("A2");
  CHECK(fails_with(Err::BadInput, [&] { steinberg_basis(a2, {0}, {1}); }));
  CHECK(fails_with(Err::BadInput, [&] { steinberg_basis(a2, {2}, {0, 1}); }));
  CHECK(fails_with(Err::NotFiniteType, [] {
    RootDatum aff = standard_datum("affineA1");
    steinberg_basis(aff, {0}, {0, 1});
  }));
  CHECK(fails_with(Err::NotInvariant,
                   [&] { steinberg_basis(a2, {0}, {0, 1}).coordinates(lp_monomial(2, {1, 0})); }));
}

TEST_CASE("verification catches tampered data") {
  RootDatum a1 = standard_datum("A1");
  RelativeBasis rb = steinberg_basis(a1, {}, {0});

  auto gram = rb.gram();
  gram[0][1] = lp_one(1);
  RelativeBasis wrong_gram(a1, {}, {0}, rb.reps(), rb.basis(), gram, rb.unit());
  CHECK(fails_with(Err::NotABasis, [&] { verify_basis(wrong_gram); }));

  RelativeBasis wrong_unit(a1, {}, {0}, rb.reps(), rb.basis(), rb.gram(), lp_one(1));
  CHECK(fails_with(Err::NotABasis, [&] { verify_basis(wrong_unit); }));

  // The delta identity is part of the full check but not the light one.
  CHECK(verify_basis(rb, false) == rb.unit());
  CHECK(dual_basis(rb) == rb.dual());
}
