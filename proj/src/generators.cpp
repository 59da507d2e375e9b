#include "invforge/generators.hpp"

#include <utility>

#include "invforge/detail/builder.hpp"
#include "invforge/errors.hpp"

namespace invforge {

GeneratorSet::GeneratorSet(int n) : n_(n) {
  if (n < 2) throw OutOfRange("form degree must be at least 2");
}

void GeneratorSet::add(Generator g) {
  require_same_context(g.u_form.context(), VarContext::u_ring(n_), "generator u-form");
  require_same_context(g.x_form.context(), VarContext::x_ring(n_), "generator x-form");
  gens_.push_back(std::move(g));
  gen_ctx_.reset();
}

GeneratorSet GeneratorSet::without(std::size_t index) const {
  GeneratorSet out(n_);
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i != index) out.gens_.push_back(gens_[i]);
  }
  return out;
}

std::vector<int> GeneratorSet::degrees() const {
  std::vector<int> out;
  for (const auto& g : gens_) out.push_back(g.degree);
  return out;
}

std::vector<DegreeWeight> GeneratorSet::profile() const {
  std::vector<DegreeWeight> out;
  for (const auto& g : gens_) out.push_back({g.degree, g.weight});
  return out;
}

const ContextPtr& GeneratorSet::gen_context() const {
  if (!gen_ctx_) {
    std::vector<GeneratorSymbol> symbols;
    for (const auto& g : gens_) symbols.push_back({g.name, g.degree, g.weight});
    gen_ctx_ = VarContext::gen_ring(std::move(symbols), n_);
  }
  return gen_ctx_;
}

bool GeneratorSet::operator==(const GeneratorSet& other) const {
  if (n_ != other.n_ || gens_.size() != other.gens_.size()) return false;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const auto& a = gens_[i];
    const auto& b = other.gens_[i];
    if (a.name != b.name || a.degree != b.degree || a.weight != b.weight || !(a.u_form == b.u_form) ||
        !(a.x_form == b.x_form)) {
      return false;
    }
  }
  return true;
}

ProductCache::ProductCache(const GeneratorSet& gens) : gens_(gens) {}

const Polynomial& ProductCache::power(std::size_t j, int k) {
  const auto key = std::make_pair(j, k);
  {
    std::lock_guard lock(mutex_);
    if (auto it = powers_.find(key); it != powers_.end()) return it->second;
  }
  Polynomial value = k == 1 ? gens_[j].u_form : power(j, k / 2) * power(j, k - k / 2);
  std::lock_guard lock(mutex_);
  return powers_.try_emplace(key, std::move(value)).first->second;
}

Polynomial ProductCache::product(const Monomial& alpha) {
  if (alpha.size() != gens_.size()) throw ContextMismatch("exponent vector does not match the generator set");
  std::vector<int> key(alpha.size());
  std::size_t last = alpha.size();
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    key[j] = alpha[j];
    if (alpha[j] < 0) throw OutOfRange("negative generator exponent");
    if (alpha[j] > 0) last = j;
  }
  if (last == alpha.size()) return Polynomial::constant(VarContext::u_ring(gens_.n()), 1);
  {
    std::lock_guard lock(mutex_);
    if (auto it = products_.find(key); it != products_.end()) return it->second;
  }
  Monomial rest = alpha;
  rest.set(last, 0);
  Polynomial value = product(rest) * power(last, alpha[last]);
  std::lock_guard lock(mutex_);
  return products_.try_emplace(std::move(key), std::move(value)).first->second;
}

Polynomial expand_in_generators(const GeneratorSet& gens, const Polynomial& g) {
  ProductCache cache(gens);
  return expand_in_generators(gens, g, cache);
}

Polynomial expand_in_generators(const GeneratorSet& gens, const Polynomial& g, ProductCache& cache) {
  require_same_context(g.context(), gens.gen_context(), "expand_in_generators");
  Polynomial out(VarContext::u_ring(gens.n()));
  for (const auto& t : g.terms()) out += cache.product(t.monomial) * t.coeff;
  return out;
}

}  // namespace invforge
