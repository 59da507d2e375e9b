#include "invforge/coords.hpp"

#include <string>

#include "invforge/errors.hpp"

namespace invforge {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

void require_index(int i, int n, const char* where) {
  if (n < 2) throw OutOfRange(std::string(where) + ": n must be at least 2");
  if (i < 2 || i > n) {
    throw OutOfRange(std::string(where) + ": index " + std::to_string(i) + " outside 2.." + std::to_string(n));
  }
}

Polynomial var(const ContextPtr& ctx, std::size_t slot) { return Polynomial::variable(ctx, slot); }

Polynomial zero(const ContextPtr& ctx) { return Polynomial(ctx); }

Polynomial x0_inverse(const ContextPtr& ctx) {
  Monomial m(ctx->slot_count());
  m.set(0, -1);
  return Polynomial::monomial(ctx, m);
}

}  // namespace

Derivation d1(int n) {
  const ContextPtr ctx = VarContext::x_ring(n);
  std::vector<Polynomial> images{zero(ctx)};
  for (int i = 1; i <= n; ++i) images.push_back(var(ctx, i - 1) * Rational(i));
  return Derivation(ctx, std::move(images));
}

Derivation d2(int n) {
  const ContextPtr ctx = VarContext::x_ring(n);
  std::vector<Polynomial> images;
  for (int i = 0; i < n; ++i) images.push_back(var(ctx, i + 1) * Rational(n - i));
  images.push_back(zero(ctx));
  return Derivation(ctx, std::move(images));
}

Derivation dhat1(int n) {
  const ContextPtr ctx = VarContext::u_ring(n);
  std::vector<Polynomial> images{zero(ctx), zero(ctx)};
  for (int i = 3; i <= n; ++i) images.push_back(var(ctx, ctx->u_slot(i - 1)) * Rational(i));
  return Derivation(ctx, std::move(images));
}

Derivation dhat2(int n) {
  const ContextPtr ctx = VarContext::u_ring(n);
  std::vector<Polynomial> images{zero(ctx)};
  for (int i = 2; i < n; ++i) images.push_back(var(ctx, ctx->u_slot(i + 1)) * Rational(n - i));
  images.push_back(zero(ctx));
  return Derivation(ctx, std::move(images));
}

Derivation e_derivation(int n) {
  const ContextPtr ctx = VarContext::u_ring(n);
  std::vector<Polynomial> images{var(ctx, 0) * Rational(n)};
  for (int i = 2; i <= n; ++i) images.push_back(var(ctx, ctx->u_slot(i)) * Rational(n - 2 * i));
  return Derivation(ctx, std::move(images));
}

Derivation reduced_operator(int n) {
  const ContextPtr ctx = VarContext::u_ring(n);
  const Polynomial x0 = var(ctx, 0);
  const Polynomial u2 = var(ctx, ctx->u_slot(2)) * Rational(-(n - 1));
  return Derivation::combine(x0, dhat2(n), u2, dhat1(n));
}

Polynomial d2_u_closed_form(int i, int n) {
  require_index(i, n, "d2_u_closed_form");
  const ContextPtr ctx = VarContext::mixed_ring(n);
  const Polynomial lambda = var(ctx, ctx->lambda_slot());
  const auto u = [&](int j) { return var(ctx, ctx->u_slot(j)); };

  Polynomial out(ctx);
  if (i < n) out += u(i + 1) * Rational(n - i);
  out -= u(i) * lambda * Rational(n - 2 * i);
  if (i > 2) out -= u(2) * u(i - 1) * x0_inverse(ctx) * Rational(i * (n - 1));
  return out;
}

Derivation full_operator(int n) {
  const ContextPtr ctx = VarContext::mixed_ring(n);
  const Polynomial x0 = var(ctx, 0);
  const Polynomial lambda = var(ctx, ctx->lambda_slot());
  std::vector<Polynomial> images;
  images.push_back(x0 * x0 * lambda * Rational(-n));
  for (int i = 2; i <= n; ++i) images.push_back(x0 * d2_u_closed_form(i, n));
  images.push_back(x0 * lambda * lambda - var(ctx, ctx->u_slot(2)) * Rational(n - 1));
  return Derivation(ctx, std::move(images));
}

Polynomial lambda_localized(int n) {
  const ContextPtr ctx = VarContext::localized_x_ring(n);
  return -(var(ctx, 1) * x0_inverse(ctx));
}

Polynomial sigma(const Polynomial& f) {
  if (f.context()->kind() != RingKind::XRing) throw ContextMismatch("sigma expects an x-ring polynomial");
  const int n = f.context()->n();
  const ContextPtr loc = VarContext::localized_x_ring(n);
  const Derivation d = d1(n);
  const Polynomial lambda = lambda_localized(n);

  Polynomial derivative = f.retag(loc);
  Polynomial lambda_power = Polynomial::constant(loc, 1);
  Polynomial out = derivative;
  Rational factorial = 1;
  for (int i = 1; !derivative.is_zero(); ++i) {
    derivative = d.apply(derivative);
    if (derivative.is_zero()) break;
    lambda_power = lambda_power * lambda;
    factorial *= i;
    out += derivative * lambda_power * Rational(1 / factorial);
  }
  return out;
}

Polynomial u_closed_form(int i, int n) {
  require_index(i, n, "u_closed_form");
  const ContextPtr ctx = VarContext::localized_x_ring(n);
  const Polynomial lambda = lambda_localized(n);
  Polynomial out(ctx);
  Polynomial lambda_power = Polynomial::constant(ctx, 1);
  for (int k = 0; k <= i; ++k) {
    out += var(ctx, i - k) * lambda_power * Rational(static_cast<long>(binomial(i, k)));
    lambda_power = lambda_power * lambda;
  }
  return out;
}

Polynomial x_closed_form(int i, int n) {
  require_index(i, n, "x_closed_form");
  const ContextPtr ctx = VarContext::mixed_ring(n);
  const Polynomial lambda = var(ctx, ctx->lambda_slot());
  Polynomial out(ctx);
  for (int k = 0; k <= i - 2; ++k) {
    const long long sign = k % 2 == 0 ? 1 : -1;
    out += var(ctx, ctx->u_slot(i - k)) * pow(lambda, k) * Rational(static_cast<long>(sign * binomial(i, k)));
  }
  out += var(ctx, 0) * pow(lambda, i) * Rational(i % 2 == 0 ? 1 : -1);
  return out;
}

Polynomial to_mixed(const Polynomial& f) {
  if (f.context()->kind() != RingKind::URing) throw ContextMismatch("to_mixed expects a u-ring polynomial");
  const ContextPtr ctx = VarContext::mixed_ring(f.context()->n());
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(ctx->slot_count());
    for (std::size_t s = 0; s < t.monomial.size(); ++s) m.set(s, t.monomial[s]);
    terms.push_back(Term{m, t.coeff});
  }
  return Polynomial::from_terms(ctx, std::move(terms));
}

Polynomial to_localized(const Polynomial& f) {
  const RingKind kind = f.context()->kind();
  if (kind != RingKind::URing && kind != RingKind::MixedRing) {
    throw ContextMismatch("to_localized expects a u-ring or mixed-ring polynomial");
  }
  const int n = f.context()->n();
  const ContextPtr loc = VarContext::localized_x_ring(n);
  SlotImages images;
  images.emplace(0, var(loc, 0));
  for (int i = 2; i <= n; ++i) images.emplace(f.context()->u_slot(i), u_closed_form(i, n));
  if (kind == RingKind::MixedRing) images.emplace(f.context()->lambda_slot(), lambda_localized(n));
  return substitute(f, images, loc);
}

Polynomial phi(const Polynomial& f) {
  if (f.context()->kind() != RingKind::XRing) throw ContextMismatch("phi expects an x-ring polynomial");
  const int n = f.context()->n();
  const ContextPtr u = VarContext::u_ring(n);
  SlotImages images;
  images.emplace(0, var(u, 0));
  images.emplace(1, zero(u));
  for (int i = 2; i <= n; ++i) images.emplace(i, var(u, u->u_slot(i)));
  return substitute(f, images, u);
}

Polynomial u_to_x(const Polynomial& f) {
  if (f.context()->kind() != RingKind::URing) throw ContextMismatch("u_to_x expects a u-ring polynomial");
  const Polynomial loc = to_localized(f);
  for (const auto& t : loc.terms()) {
    if (t.monomial[0] < 0) {
      throw ResidualDenominator("x0^" + std::to_string(t.monomial[0]) +
                                " survives the conversion; the input is not a polynomial in x0..xn");
    }
  }
  return loc.retag(VarContext::x_ring(f.context()->n()));
}

long long lambda_top_coefficient_sum(int i, int n) {
  if (i <= 1) throw OutOfRange("lambda_top_coefficient_sum: i must exceed 1");
  long long total = 0;
  for (int k = 0; k <= i - 2; ++k) {
    const long long sign = (i - k + 1) % 2 == 0 ? 1 : -1;
    total += sign * (n - (i - k)) * binomial(i, k);
  }
  return total;
}

long long lambda_top_coefficient(int i, int n) {
  if (i <= 1) throw OutOfRange("lambda_top_coefficient: i must exceed 1");
  return static_cast<long long>(n) + i - static_cast<long long>(n) * i;
}

namespace {

void require_shift_range(int p, int i, const char* where) {
  if (i <= 3) throw OutOfRange(std::string(where) + ": i must exceed 3");
  if (p < 2 || p > i + 1) throw OutOfRange(std::string(where) + ": p outside 2..i+1");
}

}  // namespace

long long u_shift_coefficient_sum(int p, int i, int n) {
  require_shift_range(p, i, "u_shift_coefficient_sum");
  long long total = 0;
  for (int k = std::max(p, 3); k <= i + 1; ++k) {
    const long long sign = (k - p) % 2 == 0 ? 1 : -1;
    total += sign * (n - (k - 1)) * binomial(k, p) * binomial(i, k - 1);
  }
  return total;
}

long long u_shift_coefficient(int p, int i, int n) {
  require_shift_range(p, i, "u_shift_coefficient");
  if (p == i + 1) return n - i;
  if (p == i) return 2LL * i - n;
  if (p == i - 1) return -i;
  if (p == 2) return -static_cast<long long>(n - 1) * i;
  return 0;
}

}  // namespace invforge
