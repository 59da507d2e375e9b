#include "invforge/context.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "invforge/errors.hpp"

namespace invforge {

namespace {

void require_form_degree(int n) {
  if (n < 2) throw OutOfRange("form degree must be at least 2, got " + std::to_string(n));
}

ContextPtr interned(RingKind kind, int n, ContextPtr (*make)(int)) {
  static std::mutex mutex;
  static std::map<std::pair<RingKind, int>, ContextPtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{kind, n}];
  if (!slot) slot = make(n);
  return slot;
}

}  // namespace

VarContext::VarContext(RingKind kind, int n, std::vector<std::string> names, std::vector<int> weights,
                       std::vector<GeneratorSymbol> generators)
    : kind_(kind),
      n_(n),
      names_(std::move(names)),
      weights_(std::move(weights)),
      generators_(std::move(generators)) {
  if (names_.size() > kMaxSlots) {
    throw OutOfRange("context needs " + std::to_string(names_.size()) + " slots; at most " +
                     std::to_string(kMaxSlots) + " are supported");
  }
}

ContextPtr VarContext::x_ring(int n) {
  require_form_degree(n);
  return interned(RingKind::XRing, n, [](int m) {
    std::vector<std::string> names;
    std::vector<int> weights;
    for (int i = 0; i <= m; ++i) {
      names.push_back("x" + std::to_string(i));
      weights.push_back(i);
    }
    return ContextPtr(new VarContext(RingKind::XRing, m, std::move(names), std::move(weights), {}));
  });
}

ContextPtr VarContext::localized_x_ring(int n) {
  require_form_degree(n);
  return interned(RingKind::LocalizedXRing, n, [](int m) {
    std::vector<std::string> names;
    std::vector<int> weights;
    for (int i = 0; i <= m; ++i) {
      names.push_back("x" + std::to_string(i));
      weights.push_back(i);
    }
    return ContextPtr(new VarContext(RingKind::LocalizedXRing, m, std::move(names), std::move(weights), {}));
  });
}

ContextPtr VarContext::u_ring(int n) {
  require_form_degree(n);
  return interned(RingKind::URing, n, [](int m) {
    std::vector<std::string> names{"x0"};
    std::vector<int> weights{0};
    for (int i = 2; i <= m; ++i) {
      names.push_back("u" + std::to_string(i));
      weights.push_back(i);
    }
    return ContextPtr(new VarContext(RingKind::URing, m, std::move(names), std::move(weights), {}));
  });
}

ContextPtr VarContext::mixed_ring(int n) {
  require_form_degree(n);
  return interned(RingKind::MixedRing, n, [](int m) {
    std::vector<std::string> names{"x0"};
    std::vector<int> weights{0};
    for (int i = 2; i <= m; ++i) {
      names.push_back("u" + std::to_string(i));
      weights.push_back(i);
    }
    names.push_back("lambda");
    weights.push_back(1);
    return ContextPtr(new VarContext(RingKind::MixedRing, m, std::move(names), std::move(weights), {}));
  });
}

ContextPtr VarContext::gen_ring(std::vector<GeneratorSymbol> generators, int form_degree) {
  std::vector<std::string> names;
  std::vector<int> weights;
  for (const auto& g : generators) {
    names.push_back(g.name);
    weights.push_back(g.degree);
  }
  return ContextPtr(
      new VarContext(RingKind::GenRing, form_degree, std::move(names), std::move(weights), std::move(generators)));
}

std::optional<std::size_t> VarContext::slot_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

bool VarContext::allows_negative(std::size_t slot) const noexcept {
  return slot == 0 && (kind_ == RingKind::LocalizedXRing || kind_ == RingKind::MixedRing);
}

std::size_t VarContext::lambda_slot() const {
  if (kind_ != RingKind::MixedRing) throw ContextMismatch("lambda exists only in the mixed ring");
  return names_.size() - 1;
}

std::size_t VarContext::u_slot(int i) const {
  if (kind_ != RingKind::URing && kind_ != RingKind::MixedRing) {
    throw ContextMismatch("u variables exist only in the u and mixed rings");
  }
  if (i < 2 || i > n_) throw OutOfRange("u" + std::to_string(i) + " is not a variable for n=" + std::to_string(n_));
  return static_cast<std::size_t>(i - 1);
}

std::size_t VarContext::x_slot(int i) const {
  if (kind_ != RingKind::XRing && kind_ != RingKind::LocalizedXRing) {
    throw ContextMismatch("x variables exist only in the x rings");
  }
  if (i < 0 || i > n_) throw OutOfRange("x" + std::to_string(i) + " is not a variable for n=" + std::to_string(n_));
  return static_cast<std::size_t>(i);
}

bool VarContext::operator==(const VarContext& other) const {
  return kind_ == other.kind_ && n_ == other.n_ && names_ == other.names_ && weights_ == other.weights_ &&
         generators_ == other.generators_;
}

bool same_context(const ContextPtr& a, const ContextPtr& b) { return a == b || (a && b && *a == *b); }

void require_same_context(const ContextPtr& a, const ContextPtr& b, std::string_view where) {
  if (!same_context(a, b)) {
    throw ContextMismatch(std::string(where) + ": operands live in different rings (" +
                          std::string(kind_name(a->kind())) + " vs " + std::string(kind_name(b->kind())) + ")");
  }
}

std::string_view kind_name(RingKind kind) {
  switch (kind) {
    case RingKind::XRing: return "x";
    case RingKind::URing: return "u";
    case RingKind::LocalizedXRing: return "xloc";
    case RingKind::MixedRing: return "mixed";
    case RingKind::GenRing: return "gen";
  }
  return "?";
}

}  // namespace invforge
