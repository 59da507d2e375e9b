#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>

#include "invforge/context.hpp"

namespace invforge {

// Exponent vector over the slots of a VarContext. Storage is inline.
class Monomial {
 public:
  using Exponent = std::int16_t;

  Monomial() = default;
  explicit Monomial(std::size_t slots);
  Monomial(std::initializer_list<int> exponents);
  explicit Monomial(std::span<const int> exponents);

  std::size_t size() const noexcept { return size_; }
  int operator[](std::size_t slot) const noexcept { return exps_[slot]; }
  void set(std::size_t slot, int value);
  void add(std::size_t slot, int delta);

  // Sum of exponents (slot 0 may contribute a negative amount in localized rings).
  int degree() const noexcept;
  // Sum of weight(slot) * exponent(slot).
  int weight(const VarContext& ctx) const;

  bool has_negative() const noexcept;

  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial& other) const noexcept;

  std::size_t hash() const noexcept;

 private:
  std::array<Exponent, VarContext::kMaxSlots> exps_{};
  std::uint8_t size_ = 0;
};

// Canonical order: total degree first; ties broken at the highest slot whose
// exponents differ, where the larger exponent ranks higher. Returns <0, 0, >0.
int compare(const Monomial& a, const Monomial& b) noexcept;

// Strict "ranks higher" predicate; sorting with it yields descending order.
struct MonomialDescending {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace invforge
