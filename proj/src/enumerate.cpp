#include "invforge/enumerate.hpp"

#include <algorithm>
#include <string>

#include "invforge/errors.hpp"

namespace invforge {

namespace {

// Depth-first search over slots in order. Each slot consumes part of the
// remaining degree and weight budgets. `degree_row` / `weight_row` may be
// null, in which case that constraint is absent.
class Composer {
 public:
  Composer(std::span<const int> degree_row, std::span<const int> weight_row, int degree, int weight)
      : degree_row_(degree_row), weight_row_(weight_row), current_(slot_count(degree_row, weight_row)) {
    walk(0, degree, weight);
    std::sort(out_.begin(), out_.end(), MonomialDescending{});
  }

  ExponentList take() && { return std::move(out_); }

 private:
  static std::size_t slot_count(std::span<const int> a, std::span<const int> b) {
    return std::max(a.size(), b.size());
  }

  int deg(std::size_t slot) const { return degree_row_.empty() ? 0 : degree_row_[slot]; }
  int wt(std::size_t slot) const { return weight_row_.empty() ? 0 : weight_row_[slot]; }

  void walk(std::size_t slot, int degree_left, int weight_left) {
    if (degree_left < 0 || weight_left < 0) return;
    if (slot == current_.size()) {
      if (degree_left == 0 && weight_left == 0) out_.push_back(current_);
      return;
    }
    const int dstep = deg(slot);
    const int wstep = wt(slot);
    int limit;
    if (dstep > 0 && wstep > 0) {
      limit = std::min(degree_left / dstep, weight_left / wstep);
    } else if (dstep > 0) {
      limit = degree_left / dstep;
    } else if (wstep > 0) {
      limit = weight_left / wstep;
    } else {
      throw OutOfRange("slot " + std::to_string(slot) + " has neither degree nor weight; enumeration is unbounded");
    }
    for (int a = 0; a <= limit; ++a) {
      current_.set(slot, a);
      walk(slot + 1, degree_left - a * dstep, weight_left - a * wstep);
    }
    current_.set(slot, 0);
  }

  std::span<const int> degree_row_;
  std::span<const int> weight_row_;
  Monomial current_;
  ExponentList out_;
};

}  // namespace

ExponentList weighted_compositions(std::span<const int> slot_weights, int degree, int weight) {
  if (degree < 0 || weight < 0) return {};
  const std::vector<int> ones(slot_weights.size(), 1);
  return Composer(ones, slot_weights, degree, weight).take();
}

ExponentList powers(int n, int d) {
  if (n < 2) throw OutOfRange("powers: n must be at least 2");
  if (d < 1) throw OutOfRange("powers: d must be at least 1");
  if ((n * d) % 2 != 0) return {};
  std::vector<int> weights{0};
  for (int i = 2; i <= n; ++i) weights.push_back(i);
  return weighted_compositions(weights, d, n * d / 2);
}

ExponentList powers2(std::span<const int> gen_degrees, int d) {
  if (gen_degrees.empty()) throw OutOfRange("powers2: no generators");
  for (int g : gen_degrees) {
    if (g <= 0) throw OutOfRange("powers2: generator degrees must be positive");
  }
  if (d < 0) return {};
  return Composer(gen_degrees, {}, d, 0).take();
}

ExponentList grad(std::span<const DegreeWeight> gen_profile, DegreeWeight target) {
  if (gen_profile.empty()) throw OutOfRange("grad: no generators");
  std::vector<int> degrees;
  std::vector<int> weights;
  for (const auto& g : gen_profile) {
    if (g.degree <= 0) throw OutOfRange("grad: generator degrees must be positive");
    degrees.push_back(g.degree);
    weights.push_back(g.weight);
  }
  if (target.degree < 0 || target.weight < 0) return {};
  return Composer(degrees, weights, target.degree, target.weight).take();
}

}  // namespace invforge
