#include "invforge/polynomial.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>

#include "invforge/detail/builder.hpp"
#include "invforge/errors.hpp"

namespace invforge {

// ---- PolynomialBuilder ------------------------------------------------------

PolynomialBuilder::PolynomialBuilder(ContextPtr ctx, std::size_t expected_terms) : ctx_(std::move(ctx)) {
  if (expected_terms) acc_.reserve(expected_terms);
}

void PolynomialBuilder::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void PolynomialBuilder::add_product(const Monomial& m, const Rational& a, const Rational& b) {
  mpq_mul(scratch_.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
  add(m, scratch_);
}

Polynomial PolynomialBuilder::build() && {
  std::vector<Term> terms;
  terms.reserve(acc_.size());
  for (auto& [m, c] : acc_) {
    if (c != 0) terms.push_back(Term{m, std::move(c)});
  }
  acc_.clear();
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return compare(a.monomial, b.monomial) > 0; });
  return adopt_sorted(ctx_, std::move(terms));
}

Polynomial PolynomialBuilder::adopt_sorted(ContextPtr ctx, std::vector<Term> terms) {
  Polynomial p(std::move(ctx));
  p.terms_ = std::move(terms);
  return p;
}

// ---- Polynomial -------------------------------------------------------------

namespace {

void check_monomial(const VarContext& ctx, const Monomial& m) {
  if (m.size() != ctx.slot_count()) throw ContextMismatch("monomial length does not match the ring");
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0 && !ctx.allows_negative(i)) {
      throw ContextMismatch("negative exponent on " + ctx.slot_name(i) + " is not permitted in this ring");
    }
  }
}

Integer denominator_lcm(const Polynomial& f) {
  Integer l = 1;
  for (const auto& t : f.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  return l;
}

// f * scale with scale chosen so that every coefficient is integral.
std::vector<std::pair<Monomial, Integer>> integral_terms(const Polynomial& f, const Integer& scale) {
  std::vector<std::pair<Monomial, Integer>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Integer v = scale / t.coeff.get_den();
    v *= t.coeff.get_num();
    out.emplace_back(t.monomial, std::move(v));
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw ContextMismatch("polynomial without a ring");
}

Polynomial Polynomial::constant(ContextPtr ctx, const Rational& c) {
  Polynomial p(ctx);
  if (c != 0) p.terms_.push_back(Term{Monomial(ctx->slot_count()), c});
  return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t slot) {
  if (slot >= ctx->slot_count()) throw OutOfRange("no slot " + std::to_string(slot) + " in this ring");
  Monomial m(ctx->slot_count());
  m.set(slot, 1);
  return monomial(std::move(ctx), m, 1);
}

Polynomial Polynomial::monomial(ContextPtr ctx, const Monomial& m, const Rational& c) {
  check_monomial(*ctx, m);
  Polynomial p(std::move(ctx));
  if (c != 0) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<Term> terms) {
  PolynomialBuilder builder(ctx, terms.size());
  for (const auto& t : terms) {
    check_monomial(*ctx, t.monomial);
    builder.add(t.monomial, t.coeff);
  }
  return std::move(builder).build();
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.degree() == 0 &&
                            !terms_.front().monomial.has_negative());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return compare(t.monomial, key) > 0; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

Polynomial Polynomial::retag(ContextPtr target) const {
  if (target->slot_count() != ctx_->slot_count()) throw ContextMismatch("retag: slot layouts differ");
  for (const auto& t : terms_) check_monomial(*target, t.monomial);
  Polynomial p(std::move(target));
  p.terms_ = terms_;
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

// Merge of two descending term lists; sign = +1 or -1 applied to b.
std::vector<Term> merge_terms(std::span<const Term> a, std::span<const Term> b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (s != 0) out.push_back(Term{a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_context(ctx_, other.ctx_, "add");
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_context(ctx_, other.ctx_, "subtract");
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_context(a.ctx_, b.ctx_, "multiply");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ctx_);

  // Work over Z: a = A / la, b = B / lb.
  const Integer la = denominator_lcm(a);
  const Integer lb = denominator_lcm(b);
  const auto ia = integral_terms(a, la);
  const auto ib = integral_terms(b, lb);

  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(ia.size() * ib.size(), 1u << 22));
  for (const auto& [ma, ca] : ia) {
    for (const auto& [mb, cb] : ib) {
      auto [it, inserted] = acc.try_emplace(ma * mb);
      mpz_addmul(it->second.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }

  const Integer den = la * lb;
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c == 0) continue;
    Rational q;
    q.get_num() = std::move(c);
    q.get_den() = den;
    if (den != 1) q.canonicalize();
    terms.push_back(Term{m, std::move(q)});
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return compare(x.monomial, y.monomial) > 0; });
  return PolynomialBuilder::adopt_sorted(a.ctx_, std::move(terms));
}

bool Polynomial::operator==(const Polynomial& other) const {
  return same_context(ctx_, other.ctx_) && terms_ == other.terms_;
}

// ---- free functions ---------------------------------------------------------

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result = Polynomial::constant(base.context(), 1);
  Polynomial square = base;
  while (exponent) {
    if (exponent & 1u) result = result * square;
    exponent >>= 1;
    if (exponent) square = square * square;
  }
  return result;
}

Polynomial shift(const Polynomial& f, const Monomial& m) {
  check_monomial(*f.context(), m);
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial p = t.monomial * m;
    check_monomial(*f.context(), p);
    terms.push_back(Term{p, t.coeff});
  }
  // Multiplying by a monomial preserves the canonical order.
  return PolynomialBuilder::adopt_sorted(f.context(), std::move(terms));
}

namespace {

class Substituter {
 public:
  Substituter(const SlotImages& images, ContextPtr target) : images_(images), target_(std::move(target)) {}

  Polynomial run(const std::vector<const Term*>& terms, std::size_t slots) {
    if (terms.empty()) return Polynomial(target_);
    if (slots == 0) {
      Rational sum = 0;
      for (const Term* t : terms) sum += t->coeff;
      return Polynomial::constant(target_, sum);
    }
    const std::size_t slot = slots - 1;
    std::map<int, std::vector<const Term*>, std::greater<>> groups;
    for (const Term* t : terms) groups[t->monomial[slot]].push_back(t);
    if (groups.size() == 1 && groups.begin()->first == 0) return run(terms, slot);

    const Polynomial& image = image_of(slot);
    const int emin = groups.rbegin()->first;
    // Horner over the shifted exponents e - emin.
    Polynomial acc(target_);
    int prev = groups.begin()->first;
    for (auto& [e, group] : groups) {
      if (!acc.is_zero() && prev != e) acc = acc * power(slot, image, static_cast<unsigned>(prev - e));
      acc += run(group, slot);
      prev = e;
    }
    if (emin > 0) return acc * power(slot, image, static_cast<unsigned>(emin));
    if (emin < 0) return inverse_power(acc, slot, image, -emin);
    return acc;
  }

 private:
  const Polynomial& image_of(std::size_t slot) const {
    auto it = images_.find(slot);
    if (it == images_.end()) throw OutOfRange("substitute: no image for slot " + std::to_string(slot));
    require_same_context(it->second.context(), target_, "substitute");
    return it->second;
  }

  const Polynomial& power(std::size_t slot, const Polynomial& image, unsigned e) {
    auto key = std::make_pair(slot, e);
    auto it = powers_.find(key);
    if (it == powers_.end()) it = powers_.emplace(key, pow(image, e)).first;
    return it->second;
  }

  Polynomial inverse_power(const Polynomial& acc, std::size_t slot, const Polynomial& image, int k) {
    if (image.size() != 1) {
      throw OutOfRange("substitute: negative exponent on slot " + std::to_string(slot) +
                       " needs a single-term image");
    }
    const Term& t = image.leading();
    Monomial inv(t.monomial.size());
    for (std::size_t i = 0; i < inv.size(); ++i) inv.set(i, -k * t.monomial[i]);
    Rational c = 1;
    for (int i = 0; i < k; ++i) c /= t.coeff;
    return shift(acc, inv) * c;
  }

  const SlotImages& images_;
  ContextPtr target_;
  std::map<std::pair<std::size_t, unsigned>, Polynomial> powers_;
};

}  // namespace

Polynomial substitute(const Polynomial& f, const SlotImages& images, ContextPtr target) {
  std::vector<const Term*> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back(&t);
  Substituter sub(images, std::move(target));
  return sub.run(terms, f.context()->slot_count());
}

int degree(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("degree of the zero polynomial is undefined");
  return f.leading().monomial.degree();
}

bool is_homogeneous(const Polynomial& f) {
  if (f.is_zero()) return true;
  const int d = f.leading().monomial.degree();
  return f.terms().back().monomial.degree() == d;
}

int weight(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("weight of the zero polynomial is undefined");
  const VarContext& ctx = *f.context();
  const int w = f.leading().monomial.weight(ctx);
  for (const auto& t : f.terms()) {
    if (t.monomial.weight(ctx) != w) throw NonIsobaric("polynomial is not isobaric");
  }
  return w;
}

int weight_u(const Polynomial& f) {
  const RingKind k = f.context()->kind();
  if (k != RingKind::URing && k != RingKind::MixedRing) throw ContextMismatch("weight_u needs a u-ring polynomial");
  return weight(f);
}

int weight_x(const Polynomial& f) {
  const RingKind k = f.context()->kind();
  if (k != RingKind::XRing && k != RingKind::LocalizedXRing) {
    throw ContextMismatch("weight_x needs an x-ring polynomial");
  }
  return weight(f);
}

bool is_isobaric(const Polynomial& f) {
  if (f.is_zero()) return true;
  const VarContext& ctx = *f.context();
  const int w = f.leading().monomial.weight(ctx);
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const Term& t) { return t.monomial.weight(ctx) == w; });
}

bool is_isobaric_balanced(const Polynomial& f, int n) {
  if (f.is_zero()) throw ZeroPolynomial("balance of the zero polynomial is undefined");
  if (!is_homogeneous(f) || !is_isobaric(f)) return false;
  return n * degree(f) == 2 * weight_u(f);
}

Polynomial normalize(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("cannot normalize the zero polynomial");
  const Integer l = denominator_lcm(f);
  auto ints = integral_terms(f, l);
  Integer g = 0;
  for (const auto& [m, c] : ints) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (ints.front().second < 0) g = -g;
  std::vector<Term> terms;
  terms.reserve(ints.size());
  for (auto& [m, c] : ints) {
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    terms.push_back(Term{m, Rational(c)});
  }
  return PolynomialBuilder::adopt_sorted(f.context(), std::move(terms));
}

std::vector<Rational> coeff_vector(const Polynomial& f, std::span<const Monomial> basis) {
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  index.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  std::vector<Rational> out(basis.size());
  for (const auto& t : f.terms()) {
    auto it = index.find(t.monomial);
    if (it == index.end()) throw OutOfRange("coeff_vector: a term lies outside the basis");
    out[it->second] = t.coeff;
  }
  return out;
}

Polynomial from_coeff_vector(ContextPtr ctx, std::span<const Monomial> basis, std::span<const Rational> coeffs) {
  if (basis.size() != coeffs.size()) throw OutOfRange("from_coeff_vector: length mismatch");
  PolynomialBuilder builder(ctx, basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    check_monomial(*ctx, basis[i]);
    builder.add(basis[i], coeffs[i]);
  }
  return std::move(builder).build();
}

}  // namespace invforge
