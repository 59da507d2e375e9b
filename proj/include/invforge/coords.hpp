#pragma once

#include "invforge/derivation.hpp"
#include "invforge/polynomial.hpp"

namespace invforge {

// --- derivations in x-coordinates (XRing(n)) --------------------------------

// x0 -> 0, xi -> i x_{i-1}.
Derivation d1(int n);
// xi -> (n - i) x_{i+1}, xn -> 0.
Derivation d2(int n);

// --- derivations in u-coordinates (URing(n)) --------------------------------

// u2 -> 0, ui -> i u_{i-1}, x0 -> 0.
Derivation dhat1(int n);
// ui -> (n - i) u_{i+1} with u_{n+1} = 0, x0 -> 0.
Derivation dhat2(int n);
// ui -> (n - 2i) ui, x0 -> n x0. Every monomial is an eigenvector.
Derivation e_derivation(int n);

// x0 * dhat2 - (n - 1) * u2 * dhat1. Its kernel on weight-balanced
// polynomials is the ring of invariants.
Derivation reduced_operator(int n);

// x0 times the action of d2 in the coordinates (x0, u2, ..., un, lambda),
// as a derivation of MixedRing(n):
//   x0     -> -n x0^2 lambda
//   lambda -> x0 lambda^2 - (n - 1) u2
//   u2     -> (n - 2) x0 u3 - (n - 4) x0 u2 lambda
//   ui     -> (n - i) x0 u_{i+1} - (n - 2i) x0 ui lambda - i (n - 1) u2 u_{i-1},  i > 2
Derivation full_operator(int n);

// --- coordinate changes -----------------------------------------------------

// lambda = -x1 / x0 in LocalizedXRing(n).
Polynomial lambda_localized(int n);

// sigma(a) = sum_i d1^i(a) lambda^i / i!, for a in XRing(n). The result lives
// in LocalizedXRing(n) and is annihilated by d1.
Polynomial sigma(const Polynomial& f);

// ui = sum_{k=0}^{i} C(i, k) x_{i-k} lambda^k, expanded in LocalizedXRing(n).
Polynomial u_closed_form(int i, int n);

// xi = sum_{k=0}^{i-2} (-1)^k C(i, k) u_{i-k} lambda^k + (-1)^i x0 lambda^i,
// in MixedRing(n).
Polynomial x_closed_form(int i, int n);

// d2(ui) written in MixedRing(n):
//   i = 2:  (n - 2) u3 - (n - 4) u2 lambda
//   i > 2:  (n - i) u_{i+1} - (n - 2i) ui lambda - i (n - 1) u2 u_{i-1} / x0
Polynomial d2_u_closed_form(int i, int n);

// Embeds a URing(n) polynomial into MixedRing(n).
Polynomial to_mixed(const Polynomial& f);

// Expands a URing(n) or MixedRing(n) polynomial in LocalizedXRing(n) via the
// closed forms of ui and lambda.
Polynomial to_localized(const Polynomial& f);

// The multiplicative map x0 -> x0, x1 -> 0, xi -> ui, from XRing(n) to URing(n).
Polynomial phi(const Polynomial& f);

// Rewrites a URing(n) polynomial in x-coordinates. Throws ResidualDenominator
// if a negative power of x0 survives (the input is not in k[x0, ..., xn]).
Polynomial u_to_x(const Polynomial& f);

// --- alternating binomial sums behind the closed form of d2(ui) -------------

// Coefficient of x0 lambda^{i+1}:
//   sum_{k=0}^{i-2} (-1)^{i-k+1} (n - (i - k)) C(i, k),   i > 1.
long long lambda_top_coefficient_sum(int i, int n);
// Closed form n + i - n i.
long long lambda_top_coefficient(int i, int n);

// Coefficient of u_p lambda^{i+1-p} (i > 3, 2 <= p <= i + 1):
//   sum_{k=max(p,3)}^{i+1} (-1)^{k-p} (n - (k - 1)) C(k, p) C(i, k - 1).
long long u_shift_coefficient_sum(int p, int i, int n);
// Closed form: n - i (p = i + 1), 2i - n (p = i), -i (p = i - 1),
// -(n - 1) i (p = 2), 0 otherwise.
long long u_shift_coefficient(int p, int i, int n);

}  // namespace invforge
