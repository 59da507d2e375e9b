#include "invforge/monomial.hpp"

#include <limits>
#include <string>

#include "invforge/errors.hpp"

namespace invforge {

namespace {

Monomial::Exponent narrow(int value) {
  if (value < std::numeric_limits<Monomial::Exponent>::min() ||
      value > std::numeric_limits<Monomial::Exponent>::max()) {
    throw OutOfRange("exponent " + std::to_string(value) + " overflows monomial storage");
  }
  return static_cast<Monomial::Exponent>(value);
}

}  // namespace

Monomial::Monomial(std::size_t slots) : size_(static_cast<std::uint8_t>(slots)) {
  if (slots > VarContext::kMaxSlots) throw OutOfRange("too many monomial slots");
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const int> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) exps_[i] = narrow(exponents[i]);
}

void Monomial::set(std::size_t slot, int value) { exps_[slot] = narrow(value); }

void Monomial::add(std::size_t slot, int delta) { exps_[slot] = narrow(exps_[slot] + delta); }

int Monomial::degree() const noexcept {
  int total = 0;
  for (std::size_t i = 0; i < size_; ++i) total += exps_[i];
  return total;
}

int Monomial::weight(const VarContext& ctx) const {
  int total = 0;
  for (std::size_t i = 0; i < size_; ++i) total += ctx.slot_weight(i) * exps_[i];
  return total;
}

bool Monomial::has_negative() const noexcept {
  for (std::size_t i = 0; i < size_; ++i) {
    if (exps_[i] < 0) return true;
  }
  return false;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(size_);
  for (std::size_t i = 0; i < size_; ++i) out.exps_[i] = narrow(exps_[i] + other.exps_[i]);
  return out;
}

bool Monomial::operator==(const Monomial& other) const noexcept {
  if (size_ != other.size_) return false;
  for (std::size_t i = 0; i < size_; ++i) {
    if (exps_[i] != other.exps_[i]) return false;
  }
  return true;
}

std::size_t Monomial::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < size_; ++i) {
    h ^= static_cast<std::uint16_t>(exps_[i]);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

int compare(const Monomial& a, const Monomial& b) noexcept {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace invforge
