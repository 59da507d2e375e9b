#pragma once

#include <random>
#include <string>

#include "invforge/polynomial.hpp"
#include "invforge/textio.hpp"

namespace test_support {

using namespace invforge;

inline Polynomial P(const std::string& text, const ContextPtr& ctx) { return parse_poly(text, ctx); }

// Random polynomial with small integer coefficients and exponents; slot 0 may
// carry a negative exponent if the ring allows it.
inline Polynomial random_poly(std::mt19937& rng, const ContextPtr& ctx, int terms = 4, int max_exp = 3) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    Monomial m(ctx->slot_count());
    for (std::size_t s = 0; s < ctx->slot_count(); ++s) {
      int e = exp(rng);
      if (ctx->allows_negative(s)) e -= 1;
      m.set(s, e);
    }
    out.push_back({m, Rational(coeff(rng))});
  }
  return Polynomial::from_terms(ctx, std::move(out));
}


}  // namespace test_support
