#pragma once

#include <vector>

#include "invforge/polynomial.hpp"

namespace invforge {

// A derivation of the ring `context`, fixed by the image of each slot.
// Images live in the same ring.
class Derivation {
 public:
  Derivation(ContextPtr context, std::vector<Polynomial> images);

  const ContextPtr& context() const noexcept { return ctx_; }
  const Polynomial& image(std::size_t slot) const { return images_.at(slot); }

  // Sum over slots of (d f / d slot) * image(slot). f may live in `context`
  // or, for an x-ring derivation, in the localized x-ring; the result lives
  // in f's ring. Throws ContextMismatch otherwise.
  Polynomial apply(const Polynomial& f) const;

  // Linear combination a * D1 + b * D2 of derivations on the same ring,
  // where a and b are ring elements.
  static Derivation combine(const Polynomial& a, const Derivation& d1, const Polynomial& b, const Derivation& d2);

 private:
  ContextPtr ctx_;
  std::vector<Polynomial> images_;
};

inline Polynomial apply_derivation(const Derivation& d, const Polynomial& f) { return d.apply(f); }

// Partial derivative with respect to one slot.
Polynomial partial(const Polynomial& f, std::size_t slot);

}  // namespace invforge
