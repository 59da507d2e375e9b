#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "invforge/enumerate.hpp"
#include "invforge/polynomial.hpp"

namespace invforge {

struct Generator {
  std::string name;
  int degree = 0;
  int weight = 0;
  Polynomial u_form;
  Polynomial x_form;
};

// Ordered generators of (a subring of) the invariant ring of the binary
// form of degree n.
class GeneratorSet {
 public:
  explicit GeneratorSet(int n);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool empty() const noexcept { return gens_.empty(); }
  const Generator& operator[](std::size_t i) const { return gens_.at(i); }
  const std::vector<Generator>& generators() const noexcept { return gens_; }

  // Throws ContextMismatch if u_form is not in URing(n) or x_form not in XRing(n).
  void add(Generator g);

  GeneratorSet without(std::size_t index) const;

  std::vector<int> degrees() const;
  std::vector<DegreeWeight> profile() const;
  // GenRing with one slot per generator, in order. Stable per set contents.
  const ContextPtr& gen_context() const;

  bool operator==(const GeneratorSet& other) const;

 private:
  int n_;
  std::vector<Generator> gens_;
  mutable ContextPtr gen_ctx_;
};

// Memoized products of generator powers, keyed by exponent vector over the
// generator slots. Safe to share between threads.
class ProductCache {
 public:
  explicit ProductCache(const GeneratorSet& gens);

  // prod_j g_j^{alpha_j} as a URing(n) polynomial.
  Polynomial product(const Monomial& alpha);

 private:
  const Polynomial& power(std::size_t j, int k);

  const GeneratorSet& gens_;
  std::mutex mutex_;
  std::map<std::pair<std::size_t, int>, Polynomial> powers_;
  std::map<std::vector<int>, Polynomial> products_;
};

// Substitutes every generator symbol of g (a GenRing polynomial over
// gens.gen_context()) by its u-form. Throws ContextMismatch.
Polynomial expand_in_generators(const GeneratorSet& gens, const Polynomial& g);
Polynomial expand_in_generators(const GeneratorSet& gens, const Polynomial& g, ProductCache& cache);

}  // namespace invforge
