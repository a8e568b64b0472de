#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "kmb/laurent.hpp"
#include "kmb/standard.hpp"
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

}  // namespace

TEST_CASE("ring arithmetic") {
  testutil::Rng rng(31);
  for (int t = 0; t < 15; ++t) {
    LaurentPoly f = rng.poly(2, 5, 4, 5);
    LaurentPoly g = rng.poly(2, 5, 4, 5);
    LaurentPoly h = rng.poly(2, 5, 4, 5);
    CHECK(lp_add(f, g) == lp_add(g, f));
    CHECK(lp_mul(f, g) == lp_mul(g, f));
    CHECK(lp_mul(f, lp_add(g, h)) == lp_add(lp_mul(f, g), lp_mul(f, h)));
    CHECK(lp_mul(lp_mul(f, g), h) == lp_mul(f, lp_mul(g, h)));
    CHECK(lp_sub(f, f).is_zero());
    CHECK(lp_add(f, lp_neg(f)).is_zero());
    CHECK(lp_mul(f, lp_one(2)) == f);
    CHECK(lp_scale(f, BigInt(3)) == lp_add(f, lp_add(f, f)));
    CHECK(evaluate_at_one(lp_mul(f, g)) == evaluate_at_one(f) * evaluate_at_one(g));
  }
  CHECK(fails_with(Err::RankMismatch, [] { lp_add(lp_one(1), lp_one(2)); }));
  CHECK(fails_with(Err::RankMismatch, [] { lp_monomial(2, {1}); }));

  // (t + t^{-1})^2 in rank one.
  LaurentPoly sq = lp_mul(lp_from_terms(1, {{{1}, 1}, {{-1}, 1}}),
                          lp_from_terms(1, {{{1}, 1}, {{-1}, 1}}));
  CHECK(sq == lp_from_terms(1, {{{2}, 1}, {{0}, 2}, {{-2}, 1}}));
}

TEST_CASE("lattice actions") {
  RootDatum a1 = standard_datum("A1");
  LaurentPoly t = lp_monomial(1, {1});
  CHECK(lp_act(reflection_matrix(a1, 0), t) == lp_monomial(1, {-1}));

  RootDatum a2 = standard_datum("A2");
  testutil::Rng rng(32);
  for (int k = 0; k < 10; ++k) {
    LaurentPoly f = rng.poly(2, 4, 3, 4);
    // Action is a ring homomorphism.
    LaurentPoly g = rng.poly(2, 4, 3, 4);
    IntMat m = word_matrix(a2, {0, 1});
    CHECK(lp_act(m, lp_mul(f, g)) == lp_mul(lp_act(m, f), lp_act(m, g)));
    CHECK(lp_act(IntMat::identity(2), f) == f);
  }
}

TEST_CASE("single Demazure steps") {
  RootDatum a1 = standard_datum("A1");
  auto t = [](Int k) { return lp_monomial(1, {k}); };
  CHECK(demazure_step(a1, 0, t(1)) == lp_from_terms(1, {{{1}, 1}, {{-1}, 1}}));
  CHECK(demazure_step(a1, 0, t(-1)).is_zero());
  CHECK(demazure_step(a1, 0, t(0)) == lp_one(1));
  CHECK(demazure_step(a1, 0, t(-3)) == lp_from_terms(1, {{{-1}, -1}, {{1}, -1}}));

  // Closed form for monomials, independent of the long-division route.
  testutil::Rng rng(33);
  for (const char* name : {"A2", "B2", "G2"}) {
    RootDatum d = standard_datum(name);
    for (int k = 0; k < 25; ++k) {
      IntVec mu = rng.exponent(2, 6);
      for (int i = 0; i < 2; ++i)
        CHECK(demazure_step(d, i, lp_monomial(2, mu)) ==
              testutil::monomial_demazure_oracle(d, i, mu));
    }
  }
}

TEST_CASE("Demazure operator identities") {
  testutil::Rng rng(34);
  for (const char* name : {"A2", "B2"}) {
    RootDatum d = standard_datum(name);
    for (int k = 0; k < 10; ++k) {
      LaurentPoly f = rng.poly(2, 5, 4, 4);
      for (int i = 0; i < 2; ++i) {
        LaurentPoly df = demazure_step(d, i, f);
        // The image is invariant and the operator restricts to the identity
        // on it.
        CHECK(lp_act(reflection_matrix(d, i), df) == df);
        CHECK(demazure_step(d, i, df) == df);
        // Twisted Leibniz over invariants: D(g f) = g D(f).
        LaurentPoly g = rng.invariant_poly(d, {i}, 2, 3, 3);
        CHECK(demazure_step(d, i, lp_mul(g, f)) == lp_mul(g, df));
      }
    }
  }
}

TEST_CASE("composite Demazure operators") {
  RootDatum a2 = standard_datum("A2");
  CHECK(fails_with(Err::WordNotReduced,
                   [&] { demazure_word(a2, {0, 0}, lp_one(2)); }));
  CHECK(fails_with(Err::WordNotReduced,
                   [&] { demazure_word(a2, {0, 1, 0, 1}, lp_one(2)); }));
  CHECK(demazure_word(a2, {}, lp_monomial(2, {3, -2})) == lp_monomial(2, {3, -2}));

  // The operator only depends on the group element, not the reduced word.
  testutil::Rng rng(35);
  for (int k = 0; k < 8; ++k) {
    LaurentPoly f = rng.poly(2, 4, 3, 3);
    CHECK(demazure_word(a2, {0, 1, 0}, f) == demazure_word(a2, {1, 0, 1}, f));
  }
  RootDatum b2 = standard_datum("B2");
  for (int k = 0; k < 8; ++k) {
    LaurentPoly f = rng.poly(2, 4, 3, 3);
    CHECK(demazure_word(b2, {0, 1, 0, 1}, f) == demazure_word(b2, {1, 0, 1, 0}, f));
  }
}

TEST_CASE("orbit sums") {
  RootDatum a2 = standard_datum("A2");
  CHECK(orbit_sum(a2, {0, 1}, {1, 0}) ==
        lp_from_terms(2, {{{1, 0}, 1}, {{-1, 1}, 1}, {{0, -1}, 1}}));
  CHECK(orbit_sum(a2, {}, {1, 0}) == lp_monomial(2, {1, 0}));
  CHECK(orbit_sum(a2, {0, 1}, {0, 0}) == lp_one(2));
  CHECK(fails_with(Err::NotFiniteType, [] {
    RootDatum aff = standard_datum("affineA1");
    orbit_sum(aff, {0, 1}, {1, 0, 0});
  }));
}

TEST_CASE("characters of small highest weights") {
  RootDatum a2 = standard_datum("A2");
  LaurentPoly v3 = weyl_character(a2, {0, 1}, {1, 0});
  CHECK(v3 == lp_from_terms(2, {{{1, 0}, 1}, {{-1, 1}, 1}, {{0, -1}, 1}}));

  LaurentPoly adj = weyl_character(a2, {0, 1}, {1, 1});
  CHECK(adj.terms.size() == 7);
  CHECK(adj.terms.at({0, 0}) == 2);
  CHECK(evaluate_at_one(adj) == 8);
  CHECK(is_invariant(a2, {0, 1}, adj));

  CHECK(fails_with(Err::NotDominant, [&] { weyl_character(a2, {0, 1}, {-1, 0}); }));
  CHECK(fails_with(Err::NotFiniteType, [] {
    RootDatum aff = standard_datum("affineA1");
    weyl_character(aff, {0, 1}, {1, 1, 0});
  }));
}

TEST_CASE("characters match the alternating-sum oracle") {
  struct Case {
    const char* name;
    IntVec lambda;
  };
  const Case cases[] = {
      {"A1", {3}},         {"A2", {1, 0}}, {"A2", {1, 1}}, {"A2", {2, 1}},
      {"A1xA1", {2, 3}},   {"B2", {1, 0}}, {"B2", {0, 1}}, {"B2", {1, 1}},
      {"G2", {1, 0}},      {"G2", {0, 1}}, {"A3", {1, 0, 1}},
  };
  for (const auto& c : cases) {
    RootDatum d = standard_datum(c.name);
    ParabolicSubset full = full_subset(d);
    LaurentPoly got = weyl_character(d, full, c.lambda);
    CHECK(got == testutil::character_oracle(d, full, c.lambda));
    CHECK(evaluate_at_one(got) == testutil::dimension_oracle(d, full, c.lambda));
    CHECK(is_invariant(d, full, got));
  }

  // Proper parabolic: the character only sees the chosen subsystem.
  RootDatum a3 = standard_datum("A3");
  LaurentPoly partial = weyl_character(a3, {0, 1}, {1, 0, 0});
  CHECK(partial == testutil::character_oracle(a3, {0, 1}, {1, 0, 0}));
  CHECK(evaluate_at_one(partial) == 3);
}

TEST_CASE("exact division") {
  testutil::Rng rng(36);
  for (int k = 0; k < 20; ++k) {
    LaurentPoly f = rng.poly(2, 4, 3, 4);
    LaurentPoly g = rng.poly(2, 4, 3, 4);
    if (g.is_zero()) continue;
    CHECK(divide_exact(lp_mul(f, g), g) == f);
  }
  LaurentPoly t = lp_monomial(1, {1});
  CHECK(fails_with(Err::NotDivisible, [&] {
    divide_exact(lp_add(t, lp_one(1)), lp_sub(t, lp_one(1)));
  }));
  CHECK(fails_with(Err::NotDivisible, [&] { divide_exact(t, lp_zero(1)); }));
  CHECK(divide_exact(lp_zero(1), t).is_zero());

  CHECK(divide_coeffs_exact(lp_scale(t, BigInt(6)), BigInt(3)) == lp_scale(t, BigInt(2)));
  CHECK(fails_with(Err::NotDivisible, [&] {
    divide_coeffs_exact(lp_add(lp_scale(t, BigInt(2)), lp_one(1)), BigInt(2));
  }));
}

TEST_CASE("invariance detection") {
  RootDatum a1 = standard_datum("A1");
  CHECK(is_invariant(a1, {0}, lp_from_terms(1, {{{1}, 1}, {{-1}, 1}})));
  CHECK_FALSE(is_invariant(a1, {0}, lp_monomial(1, {1})));
  CHECK(is_invariant(a1, {}, lp_monomial(1, {1})));

  testutil::Rng rng(37);
  RootDatum b2 = standard_datum("B2");
  for (int k = 0; k < 10; ++k)
    CHECK(is_invariant(b2, {0, 1}, rng.invariant_poly(b2, {0, 1}, 3, 3, 4)));
}

TEST_CASE("text round trips") {
  LaurentPoly f = lp_from_terms(1, {{{1}, 1}, {{-1}, 1}});
  CHECK(lp_format(f) == "1*x^[1] + 1*x^[-1]");
  CHECK(lp_format(lp_zero(3)) == "0");
  CHECK(lp_format(lp_from_terms(2, {{{1, 2}, 3}, {{0, 0}, -1}})) ==
        "3*x^[1,2] + -1*x^[0,0]");
  CHECK(lp_parse(1, "1*x^[1] + 1*x^[-1]") == f);
  CHECK(lp_parse(2, "0") == lp_zero(2));
  // Like terms collapse and zero sums vanish.
  CHECK(lp_parse(1, "2*x^[0] + -2*x^[0]") == lp_zero(1));

  testutil::Rng rng(38);
  for (int k = 0; k < 20; ++k) {
    LaurentPoly g = rng.poly(3, 6, 5, 9);
    CHECK(lp_parse(3, lp_format(g)) == g);
  }

  CHECK(fails_with(Err::ParseError, [] { lp_parse(1, "nonsense"); }));
  CHECK(fails_with(Err::ParseError, [] { lp_parse(1, "x^[1]"); }));
  CHECK(fails_with(Err::RankMismatch, [] { lp_parse(2, "1*x^[1]"); }));
}
