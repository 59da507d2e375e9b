#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace invforge {

// Which polynomial ring a value lives in.
//   XRing(n)          k[x0, ..., xn]
//   URing(n)          k[x0, u2, ..., un]            (slot 0 is x0)
//   LocalizedXRing(n) k[x0, 1/x0, x1, ..., xn]
//   MixedRing(n)      k[x0, 1/x0, u2, ..., un, lambda]
//   GenRing           k[f_1, ..., f_m], one slot per generator symbol
enum class RingKind { XRing, URing, LocalizedXRing, MixedRing, GenRing };

struct GeneratorSymbol {
  std::string name;
  int degree = 0;
  int weight = 0;

  bool operator==(const GeneratorSymbol&) const = default;
};

class VarContext;
using ContextPtr = std::shared_ptr<const VarContext>;

class VarContext {
 public:
  static constexpr std::size_t kMaxSlots = 16;

  // Interned: the same (kind, n) always yields the same pointer.
  static ContextPtr x_ring(int n);
  static ContextPtr u_ring(int n);
  static ContextPtr localized_x_ring(int n);
  static ContextPtr mixed_ring(int n);
  // form_degree is informational (0 when unknown).
  static ContextPtr gen_ring(std::vector<GeneratorSymbol> generators, int form_degree = 0);

  RingKind kind() const noexcept { return kind_; }
  int n() const noexcept { return n_; }
  std::size_t slot_count() const noexcept { return names_.size(); }
  int slot_weight(std::size_t slot) const { return weights_.at(slot); }
  const std::string& slot_name(std::size_t slot) const { return names_.at(slot); }
  std::optional<std::size_t> slot_index(std::string_view name) const;
  bool allows_negative(std::size_t slot) const noexcept;
  const std::vector<GeneratorSymbol>& generators() const noexcept { return generators_; }

  // Slot of lambda in MixedRing.
  std::size_t lambda_slot() const;
  // Slot of u_i in URing / MixedRing, of x_i in the x-rings.
  std::size_t u_slot(int i) const;
  std::size_t x_slot(int i) const;

  bool operator==(const VarContext& other) const;

 private:
  VarContext(RingKind kind, int n, std::vector<std::string> names, std::vector<int> weights,
             std::vector<GeneratorSymbol> generators);

  RingKind kind_;
  int n_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  std::vector<GeneratorSymbol> generators_;
};

bool same_context(const ContextPtr& a, const ContextPtr& b);
// Throws ContextMismatch unless same_context(a, b).
void require_same_context(const ContextPtr& a, const ContextPtr& b, std::string_view where);

std::string_view kind_name(RingKind kind);

}  // namespace invforge
