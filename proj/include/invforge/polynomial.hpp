#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "invforge/context.hpp"
#include "invforge/monomial.hpp"
#include "invforge/rational.hpp"

namespace invforge {

struct Term {
  Monomial monomial;
  Rational coeff;

  bool operator==(const Term&) const = default;
};

// Sparse polynomial over Q. Terms are stored in descending canonical order
// with no zero coefficients; every operation preserves that.
class Polynomial {
 public:
  explicit Polynomial(ContextPtr ctx);

  static Polynomial constant(ContextPtr ctx, const Rational& c);
  static Polynomial variable(ContextPtr ctx, std::size_t slot);
  static Polynomial monomial(ContextPtr ctx, const Monomial& m, const Rational& c = 1);
  // Combines duplicate monomials and drops zeros.
  static Polynomial from_terms(ContextPtr ctx, std::vector<Term> terms);

  const ContextPtr& context() const noexcept { return ctx_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  // The greatest term; requires !is_zero().
  const Term& leading() const { return terms_.front(); }

  Rational coefficient(const Monomial& m) const;

  // Same slot layout, different tag (e.g. XRing -> LocalizedXRing).
  // Throws ContextMismatch if the layouts differ or a negative exponent is
  // not permitted by the target.
  Polynomial retag(ContextPtr target) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  bool operator==(const Polynomial& other) const;

 private:
  friend class PolynomialBuilder;

  ContextPtr ctx_;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

// Multiplies by a monomial (negative exponents allowed where the context
// permits them).
Polynomial shift(const Polynomial& f, const Monomial& m);

// Images for a ring homomorphism, indexed by source slot.
using SlotImages = std::map<std::size_t, Polynomial>;

// Ring-homomorphic image of f in `target`. Every slot occurring in f needs an
// image. A negative exponent requires a single-term image.
Polynomial substitute(const Polynomial& f, const SlotImages& images, ContextPtr target);

// Maximum total exponent sum. Throws ZeroPolynomial.
int degree(const Polynomial& f);
bool is_homogeneous(const Polynomial& f);

// Common slot weight of the terms under the context's weight table.
// Throws ZeroPolynomial / NonIsobaric.
int weight(const Polynomial& f);
// weight() restricted to URing / MixedRing inputs (x0 weighs 0).
int weight_u(const Polynomial& f);
// weight() restricted to XRing / LocalizedXRing inputs.
int weight_x(const Polynomial& f);
bool is_isobaric(const Polynomial& f);

// True iff f is isobaric and n * deg f == 2 * weight_u f. Throws ZeroPolynomial.
bool is_isobaric_balanced(const Polynomial& f, int n);

// Integer coefficients with content 1 and positive leading coefficient.
// Throws ZeroPolynomial.
Polynomial normalize(const Polynomial& f);

// Coefficients of f over `basis`. Throws OutOfRange if a term of f is missing
// from the basis.
std::vector<Rational> coeff_vector(const Polynomial& f, std::span<const Monomial> basis);

// Sum of coeffs[j] * basis[j].
Polynomial from_coeff_vector(ContextPtr ctx, std::span<const Monomial> basis,
                             std::span<const Rational> coeffs);

}  // namespace invforge
