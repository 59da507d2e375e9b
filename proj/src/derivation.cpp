#include "invforge/derivation.hpp"

#include <string>
#include <utility>

#include "invforge/detail/builder.hpp"
#include "invforge/errors.hpp"

namespace invforge {

Derivation::Derivation(ContextPtr context, std::vector<Polynomial> images)
    : ctx_(std::move(context)), images_(std::move(images)) {
  if (images_.size() != ctx_->slot_count()) {
    throw ContextMismatch("derivation needs one image per slot: expected " + std::to_string(ctx_->slot_count()) +
                          ", got " + std::to_string(images_.size()));
  }
  for (const auto& img : images_) require_same_context(img.context(), ctx_, "derivation image");
}

Polynomial Derivation::apply(const Polynomial& f) const {
  const ContextPtr& target = f.context();
  const bool localized_lift = ctx_->kind() == RingKind::XRing && target->kind() == RingKind::LocalizedXRing &&
                              ctx_->n() == target->n();
  if (!localized_lift) require_same_context(ctx_, target, "apply derivation");

  PolynomialBuilder builder(target, f.size() * 2);
  Monomial reduced;
  for (std::size_t slot = 0; slot < images_.size(); ++slot) {
    const Polynomial& img = images_[slot];
    if (img.is_zero()) continue;
    for (const auto& t : f.terms()) {
      const int e = t.monomial[slot];
      if (e == 0) continue;
      reduced = t.monomial;
      reduced.add(slot, -1);
      const Rational scale = t.coeff * e;
      for (const auto& s : img.terms()) builder.add_product(reduced * s.monomial, scale, s.coeff);
    }
  }
  return std::move(builder).build();
}

Derivation Derivation::combine(const Polynomial& a, const Derivation& d1, const Polynomial& b, const Derivation& d2) {
  require_same_context(d1.ctx_, d2.ctx_, "combine derivations");
  std::vector<Polynomial> images;
  images.reserve(d1.images_.size());
  for (std::size_t i = 0; i < d1.images_.size(); ++i) images.push_back(a * d1.images_[i] + b * d2.images_[i]);
  return Derivation(d1.ctx_, std::move(images));
}

Polynomial partial(const Polynomial& f, std::size_t slot) {
  PolynomialBuilder builder(f.context(), f.size());
  Monomial reduced;
  for (const auto& t : f.terms()) {
    const int e = t.monomial[slot];
    if (e == 0) continue;
    reduced = t.monomial;
    reduced.add(slot, -1);
    builder.add(reduced, t.coeff * e);
  }
  return std::move(builder).build();
}

}  // namespace invforge
