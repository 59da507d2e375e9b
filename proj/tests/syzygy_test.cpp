#include <doctest.h>

#include "invforge/errors.hpp"
#include "invforge/fixtures.hpp"
#include "invforge/invariants.hpp"
#include "invforge/linalg.hpp"
#include "invforge/syzygy.hpp"
#include "support.hpp"

using namespace invforge;
using test_support::P;

namespace {

const char* kQuinticRelation =
    "1296*f18^2 + 48*f12^3 - f4^5*f8^2 + 6*f4^3*f8^3 - 9*f4*f8^4 + 2*f4^4*f8*f12 + 18*f4^2*f8^2*f12"
    " - 72*f8^3*f12 - f4^3*f12^2 - 72*f4*f8*f12^2";

}  // namespace

TEST_CASE("expansion in generators") {
  const auto g4 = mingenset(4, 2, std::vector<int>{2, 3});
  const auto& ctx = g4.gen_context();
  CHECK(expand_in_generators(g4, P("f2", ctx)) == P("x0*u4 + 3*u2^2", VarContext::u_ring(4)));
  CHECK(expand_in_generators(g4, Polynomial(ctx)).is_zero());
  CHECK(expand_in_generators(g4, P("f2^2", ctx) - P("f2", ctx) * P("f2", ctx)).is_zero());
  CHECK_THROWS_AS(expand_in_generators(g4, P("x0", VarContext::u_ring(4))), ContextMismatch);
}

TEST_CASE("a single generator has no relations") {
  const auto g2 = mingenset(2, 1, std::vector<int>{2});
  for (int d = 1; d <= 20; ++d) CHECK(syzygy_basis(g2, d).empty());
  const auto g5 = mingenset(5, 4, std::vector<int>{4, 8, 12, 18});
  CHECK(syzygy_basis(g5, 5).empty());
  CHECK_THROWS_AS(syzygy_basis(GeneratorSet(3), 4), OutOfRange);
}

TEST_CASE("the quintic relation") {
  const auto fixtures = load_fixtures(INVFORGE_FIXTURE_DIR, 5);
  const auto& gens = fixtures.effective;
  const auto basis = syzygy_basis(gens, 36);
  REQUIRE(basis.size() == 1);
  const auto relation = P(kQuinticRelation, gens.gen_context());
  CHECK(basis[0].relation == normalize(relation));
  CHECK(basis[0].degree == 36);
  CHECK(check_syzygy(gens, relation));
  CHECK(check_syzygy(gens, Polynomial(gens.gen_context())));
  CHECK_FALSE(check_syzygy(gens, relation + P("f18^2", gens.gen_context())));
  for (int d = 4; d < 36; d += 4) CHECK(syzygy_basis(gens, d).empty());
}

TEST_CASE("minimal relations") {
  const auto g5 = mingenset(5, 4, std::vector<int>{4, 8, 12, 18});
  const auto m5 = minimal_syzygies(g5, std::vector<int>{36});
  REQUIRE(m5.size() == 1);
  CHECK(check_syzygy(g5, m5[0].relation));

  const auto g6 = mingenset(6, 5, std::vector<int>{2, 4, 6, 10, 15});
  const auto m6 = minimal_syzygies(g6, std::vector<int>{30});
  REQUIRE(m6.size() == 1);
  CHECK(check_syzygy(g6, m6[0].relation));

  // at degree 32 every relation is f2 times the degree-30 one
  const auto m6b = minimal_syzygies(g6, std::vector<int>{30, 32});
  CHECK(m6b.size() == 1);
  CHECK(syzygy_basis(g6, 32).size() == 1);
}

TEST_CASE("relations of higher degree follow from the minimal ones") {
  const auto g8 = mingenset(8, 9, std::vector<int>{2, 3, 4, 5, 6, 7, 8, 9, 10});
  const std::vector<int> degrees{16, 17, 18, 19};
  const auto minimal = minimal_syzygies(g8, degrees);
  CHECK(minimal.size() == 4);
  for (const auto& s : minimal) CHECK(check_syzygy(g8, s.relation));

  for (int d : degrees) {
    const auto all = syzygy_basis(g8, d);
    // candidates: generator-monomial multiples of earlier minimal relations
    // and the minimal relations of degree d
    std::vector<Polynomial> span;
    for (const auto& s : minimal) {
      if (s.degree > d) continue;
      for (const auto& m : powers2(g8.degrees(), d - s.degree)) span.push_back(shift(s.relation, m));
    }
    const auto candidates = powers2(g8.degrees(), d);
    RationalMatrix system(candidates.size(), span.size());
    for (std::size_t c = 0; c < span.size(); ++c) {
      const auto v = coeff_vector(span[c], candidates);
      for (std::size_t r = 0; r < candidates.size(); ++r) system(r, c) = v[r];
    }
    for (const auto& s : all) {
      CHECK(check_syzygy(g8, s.relation));
      CHECK(solve_affine(system, coeff_vector(s.relation, candidates)).has_value());
    }
  }
}
