#include <doctest.h>

#include "invforge/coords.hpp"
#include "invforge/errors.hpp"
#include "invforge/fixtures.hpp"
#include "invforge/invariants.hpp"
#include "invforge/linalg.hpp"
#include "support.hpp"

using namespace invforge;
using test_support::P;

namespace {

// Both lists span the same space: each element of one is a rational
// combination of the other.
bool same_span(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  std::vector<Polynomial> all(a);
  all.insert(all.end(), b.begin(), b.end());
  std::vector<Monomial> basis;
  for (const auto& f : all)
    for (const auto& t : f.terms()) basis.push_back(t.monomial);
  std::sort(basis.begin(), basis.end(), MonomialDescending{});
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  auto matrix_of = [&](const std::vector<Polynomial>& fs) {
    RationalMatrix m(basis.size(), fs.size());
    for (std::size_t c = 0; c < fs.size(); ++c) {
      const auto v = coeff_vector(fs[c], basis);
      for (std::size_t r = 0; r < basis.size(); ++r) m(r, c) = v[r];
    }
    return m;
  };
  return rank(matrix_of(a)) == a.size() && rank(matrix_of(all)) == a.size();
}

GeneratorSet set_of(int n, const std::vector<std::pair<std::string, std::string>>& forms) {
  GeneratorSet gens(n);
  for (const auto& [name, text] : forms) gens.add(make_generator(n, name, P(text, VarContext::u_ring(n))));
  return gens;
}

}  // namespace

TEST_CASE("invariant basis examples") {
  const auto u3 = VarContext::u_ring(3);
  const auto b34 = invariant_basis(3, 4);
  REQUIRE(b34.elements.size() == 1);
  CHECK(b34.elements[0] == P("4*x0*u2^3 + x0^2*u3^2", u3));
  CHECK(invariant_basis(5, 3).elements.empty());
  const auto b42 = invariant_basis(4, 2);
  REQUIRE(b42.elements.size() == 1);
  CHECK(b42.elements[0] == P("x0*u4 + 3*u2^2", VarContext::u_ring(4)));
}

TEST_CASE("direct invariant basis examples") {
  const auto b22 = invariant_basis_direct(2, 2);
  REQUIRE(b22.elements.size() == 1);
  CHECK(b22.elements[0] == P("x0*x2 - x1^2", VarContext::x_ring(2)));
  CHECK(invariant_basis_direct(3, 2).elements.empty());
  const auto b43 = invariant_basis_direct(4, 3);
  REQUIRE(b43.elements.size() == 1);
  CHECK(same_span(b43.elements, {u_to_x(P("u2^3 - x0*u2*u4 + x0*u3^2", VarContext::u_ring(4)))}));
}

TEST_CASE("basis soundness") {
  for (int n = 2; n <= 6; ++n) {
    for (int d = 1; d <= 8; ++d) {
      for (const auto& f : invariant_basis(n, d).elements) {
        CHECK(verify_invariant_u(n, f));
        CHECK(verify_invariant_x(n, u_to_x(f)));
        CHECK(normalize(f) == f);
      }
    }
  }
}

TEST_CASE("both routes agree for small forms") {
  for (int n = 2; n <= 5; ++n) {
    for (int d = 1; n * d <= 24; ++d) {
      const auto fast = invariant_basis(n, d);
      const auto direct = invariant_basis_direct(n, d);
      std::vector<Polynomial> converted;
      for (const auto& f : fast.elements) converted.push_back(u_to_x(f));
      CAPTURE(n);
      CAPTURE(d);
      CHECK(fast.elements.size() == direct.elements.size());
      CHECK(same_span(converted, direct.elements));
    }
  }
}

TEST_CASE("verification") {
  CHECK(verify_invariant_x(2, P("x0*x2 - x1^2", VarContext::x_ring(2))));
  for (int n = 2; n <= 5; ++n) {
    CHECK_FALSE(verify_invariant_x(n, P("x1", VarContext::x_ring(n))));
    CHECK(verify_invariant_x(n, Polynomial::constant(VarContext::x_ring(n), 3)));
    CHECK_FALSE(verify_invariant_u(n, P("x0^3", VarContext::u_ring(n))));
  }
  const auto u3 = VarContext::u_ring(3);
  CHECK(verify_invariant_u(3, P("4*x0*u2^3 + x0^2*u3^2", u3)));
  CHECK_FALSE(verify_invariant_u(3, P("x0*u2^3", u3)));
  CHECK_THROWS_AS(verify_invariant_u(3, P("x0*u2", VarContext::u_ring(2))), ContextMismatch);
  CHECK_THROWS_AS(make_generator(3, "g", P("x0*u2^3", u3)), Error);
}

TEST_CASE("membership") {
  const auto u5 = VarContext::u_ring(5);
  const auto f4 = invariant_basis(5, 4).elements.at(0);
  const auto gens = set_of(5, {{"f4", format_poly(f4)}});
  const auto rep = is_member(gens, f4 * f4);
  REQUIRE(rep.has_value());
  CHECK(*rep == P("f4^2", gens.gen_context()));
  CHECK(expand_in_generators(gens, *rep) == f4 * f4);

  const auto full = mingenset(5, 4, std::vector<int>{4, 8, 12, 18});
  CHECK_FALSE(is_member(gens, full[1].u_form).has_value());

  const auto g4 = mingenset(4, 2, std::vector<int>{2, 3});
  const auto quartic = invariant_basis(4, 4).elements;
  REQUIRE(quartic.size() == 1);
  const auto rep4 = is_member(g4, quartic[0]);
  REQUIRE(rep4.has_value());
  REQUIRE(rep4->size() == 1);
  CHECK(rep4->leading().monomial == Monomial{2, 0});
  CHECK(expand_in_generators(g4, *rep4) == quartic[0]);

  CHECK_THROWS_AS(is_member(gens, P("x0 + u2", u5)), NonIsobaric);
  CHECK_THROWS_AS(is_member(gens, P("u2 + u3", u5)), NonIsobaric);
  CHECK_THROWS_AS(is_member(gens, P("x0", VarContext::u_ring(4))), ContextMismatch);
}

TEST_CASE("membership representations expand back") {
  const auto gens = mingenset(6, 5, std::vector<int>{2, 4, 6, 10, 15});
  for (int d = 2; d <= 12; d += 2) {
    for (const auto& f : invariant_basis(6, d).elements) {
      const auto rep = is_member(gens, f);
      REQUIRE(rep.has_value());
      CHECK(expand_in_generators(gens, *rep) == f);
    }
  }
}

TEST_CASE("minimal generating sets") {
  const auto g2 = mingenset(2, 1, std::vector<int>{2});
  REQUIRE(g2.size() == 1);
  CHECK(g2[0].u_form == P("x0*u2", VarContext::u_ring(2)));
  CHECK(g2[0].x_form == P("x0*x2 - x1^2", VarContext::x_ring(2)));

  const auto g4 = mingenset(4, 2, std::vector<int>{2, 3});
  REQUIRE(g4.size() == 2);
  const auto u4 = VarContext::u_ring(4);
  CHECK(g4[0].u_form == normalize(P("t*u4 + 3*u2^2", u4)));
  CHECK(g4[1].u_form == normalize(P("u2^3 - t*u2*u4 + t*u3^2", u4)));

  const auto g5 = mingenset(5, 4, std::vector<int>{4, 8, 12, 18});
  CHECK(g5.degrees() == std::vector<int>{4, 8, 12, 18});

  CHECK_THROWS_AS(mingenset(4, 2, std::vector<int>{2, 4}), DegreeMismatch);
  CHECK_THROWS_AS(mingenset(4, 3, std::vector<int>{2, 3}), DegreeMismatch);
  CHECK_THROWS_AS(mingenset(5, 4, std::vector<int>{4, 8, 12, 16}), DegreeMismatch);
}

TEST_CASE("generating sets are minimal, weighted and deterministic") {
  for (int n : {2, 3, 4, 5, 6}) {
    const auto table = known_degree_table(n);
    const auto gens = mingenset(n, table.r, table.degrees);
    CHECK(gens == mingenset(n, table.r, table.degrees));
    for (std::size_t i = 0; i < gens.size(); ++i) {
      CHECK(2 * gens[i].weight == n * gens[i].degree);
      CHECK(gens[i].x_form == u_to_x(gens[i].u_form));
      CHECK(verify_invariant_x(n, gens[i].x_form));
      CHECK_FALSE(is_member(gens.without(i), gens[i].u_form).has_value());
    }
  }
}

TEST_CASE("degree tables") {
  CHECK(known_degree_table(5).r == 4);
  CHECK(known_degree_table(5).degrees == std::vector<int>{4, 8, 12, 18});
  CHECK(known_degree_table(8).degrees == std::vector<int>{2, 3, 4, 5, 6, 7, 8, 9, 10});
  CHECK(known_degree_table(2).degrees == std::vector<int>{2});
  CHECK_THROWS_AS(known_degree_table(7), OutOfRange);
}

TEST_CASE("computed and fixture generators generate each other") {
  for (int n : {3, 4, 5, 6}) {
    CAPTURE(n);
    const auto fixtures = load_fixtures(INVFORGE_FIXTURE_DIR, n);
    const auto table = known_degree_table(n);
    const auto computed = mingenset(n, table.r, table.degrees);
    for (const auto& rec : fixtures.generators) {
      if (rec.status != FixtureStatus::Validated) continue;
      const Polynomial u = rec.coordinates == Coordinates::U ? *rec.polynomial : phi(*rec.polynomial);
      CHECK(is_member(computed, u).has_value());
    }
    for (const auto& g : computed.generators()) CHECK(is_member(fixtures.effective, g.u_form).has_value());
  }
}
