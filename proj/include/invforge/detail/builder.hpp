#pragma once

#include <unordered_map>
#include <vector>

#include "invforge/polynomial.hpp"

namespace invforge {

// Hash-map accumulator for assembling a Polynomial term by term.
class PolynomialBuilder {
 public:
  explicit PolynomialBuilder(ContextPtr ctx, std::size_t expected_terms = 0);

  void add(const Monomial& m, const Rational& c);
  // Accumulates a * b.
  void add_product(const Monomial& m, const Rational& a, const Rational& b);

  Polynomial build() &&;

  // Wraps terms that are already sorted, merged and nonzero.
  static Polynomial adopt_sorted(ContextPtr ctx, std::vector<Term> terms);

 private:
  ContextPtr ctx_;
  std::unordered_map<Monomial, Rational, MonomialHash> acc_;
  Rational scratch_;
};

}  // namespace invforge
