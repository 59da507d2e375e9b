#include <doctest.h>

#include "invforge/errors.hpp"
#include "invforge/fixtures.hpp"
#include "invforge/invariants.hpp"
#include "support.hpp"

using namespace invforge;
using test_support::P;

TEST_CASE("parsing") {
  const auto x3 = VarContext::x_ring(3);
  const auto f = P("4*x0*x2^3 - 3*x1^2*x2^2", x3);
  CHECK(f.size() == 2);
  CHECK(f.coefficient(Monomial{1, 0, 3, 0}) == 4);
  CHECK(f.coefficient(Monomial{0, 2, 2, 0}) == -3);

  const auto u4 = VarContext::u_ring(4);
  CHECK(P("t*u4 + 3*u2^2", u4) == P("x0*u4 + 3*u2^2", u4));
  CHECK(P("  3 u2 ^2+t *u4 ", u4) == P("x0*u4 + 3*u2^2", u4));
  CHECK(P("-1/2*u2 + 7", u4).coefficient(Monomial{0, 1, 0, 0}) == Rational(-1, 2));
  CHECK(P("0", u4).is_zero());
  CHECK(P("u2 - u2", u4).is_zero());
  CHECK(P("2*u2*u2", u4) == P("2*u2^2", u4));
  CHECK(P("x0^-2*x1", VarContext::localized_x_ring(2)).leading().monomial == Monomial{-2, 1, 0});
  CHECK(P("lambda^2*u2", VarContext::mixed_ring(3)).size() == 1);

  CHECK_THROWS_AS(P("u9", VarContext::u_ring(8)), ParseError);
  CHECK_THROWS_AS(P("x1", u4), ParseError);
  CHECK_THROWS_AS(P("x0^-1", VarContext::x_ring(2)), ParseError);
  CHECK_THROWS_AS(P("u2 +", u4), ParseError);
  CHECK_THROWS_AS(P("", u4), ParseError);
  CHECK_THROWS_AS(P("3/0*u2", u4), ParseError);
  try {
    P("u2 + u5", u4);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("formatting") {
  CHECK(format_poly(P("x0*x2 - x1^2", VarContext::x_ring(2))) == "x0*x2 - x1^2");
  CHECK(format_poly(Polynomial(VarContext::x_ring(2))) == "0");
  CHECK(format_poly(P("4*x0*u2^3 + x0^2*u3^2", VarContext::u_ring(3))) == "x0^2*u3^2 + 4*x0*u2^3");
  CHECK(format_poly(P("-x1 + 1/3", VarContext::x_ring(2))) == "-x1 + 1/3");
  CHECK(format_poly(P("4*x0*u2^3 + x0^2*u3^2", VarContext::u_ring(3)), Format::Json) ==
        R"({"ring":{"kind":"u","n":3},"terms":[{"c":"1","e":[2,0,2]},{"c":"4","e":[1,3,0]}]})");
  CHECK(format_poly(P("-1/2*x1", VarContext::x_ring(2)), Format::Json) ==
        R"({"ring":{"kind":"x","n":2},"terms":[{"c":"-1/2","e":[0,1,0]}]})");
}

TEST_CASE("round trips") {
  std::mt19937 rng(4);
  for (auto ctx : {VarContext::x_ring(4), VarContext::u_ring(6), VarContext::localized_x_ring(3), VarContext::mixed_ring(4)}) {
    for (int k = 0; k < 25; ++k) {
      auto f = test_support::random_poly(rng, ctx, 5, 4);
      f *= Rational(1, 1 + static_cast<int>(rng() % 4));
      CHECK(parse_poly(format_poly(f), ctx) == f);
      CHECK(parse_poly_json(format_poly(f, Format::Json), ctx) == f);
    }
  }
  for (int n : {2, 3, 4, 5, 6, 8}) {
    const auto fixtures = load_fixtures(INVFORGE_FIXTURE_DIR, n);
    for (const auto& rec : fixtures.generators) {
      if (!rec.polynomial) continue;
      CHECK(parse_poly(format_poly(*rec.polynomial), rec.polynomial->context()) == *rec.polynomial);
    }
    for (const auto& g : fixtures.effective.generators()) {
      CHECK(parse_poly(format_poly(g.u_form), g.u_form.context()) == g.u_form);
      CHECK(parse_poly(format_poly(g.x_form), g.x_form.context()) == g.x_form);
    }
    for (const auto& rec : fixtures.relations) {
      if (rec.polynomial) CHECK(parse_poly(format_poly(*rec.polynomial), rec.polynomial->context()) == *rec.polynomial);
    }
  }
  CHECK_THROWS_AS(parse_poly_json(R"({"ring":{"kind":"x","n":2},"terms":[]})", VarContext::u_ring(2)), ContextMismatch);
  CHECK_THROWS_AS(parse_poly_json("{", VarContext::u_ring(2)), ParseError);
}

TEST_CASE("fixture classification") {
  const auto f5 = load_fixtures(INVFORGE_FIXTURE_DIR, 5);
  REQUIRE(f5.generators.size() == 4);
  std::vector<std::string> names;
  for (const auto& r : f5.generators) names.push_back(r.name);
  CHECK(names == std::vector<std::string>{"f4", "f8", "f12", "f18"});
  CHECK(f5.generators[2].status == FixtureStatus::TranscriptionSuspect);
  CHECK(f5.generators[2].counterpart.has_value());
  CHECK(f5.generators[2].counterpart_changes == 2);
  CHECK(f5.validated.size() == 3);
  CHECK(f5.effective.size() == 4);
  REQUIRE(f5.relations.size() == 1);
  CHECK(f5.relations[0].status == FixtureStatus::Validated);

  // every validated generator passes the x-coordinate check after conversion
  for (int n : {2, 3, 4, 5, 6, 8}) {
    const auto fixtures = load_fixtures(INVFORGE_FIXTURE_DIR, n);
    for (const auto& g : fixtures.validated.generators()) CHECK(verify_invariant_x(n, g.x_form));
    const auto again = load_fixtures(INVFORGE_FIXTURE_DIR, n);
    for (std::size_t i = 0; i < fixtures.generators.size(); ++i) {
      CHECK(fixtures.generators[i].status == again.generators[i].status);
    }
  }
  CHECK_THROWS_AS(load_fixtures(INVFORGE_FIXTURE_DIR, 7), Error);
}
