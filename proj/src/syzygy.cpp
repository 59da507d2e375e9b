#include "invforge/syzygy.hpp"

#include <algorithm>
#include <string>

#include "invforge/detail/assembly.hpp"
#include "invforge/enumerate.hpp"
#include "invforge/errors.hpp"
#include "invforge/linalg.hpp"
#include "invforge/parallel.hpp"

namespace invforge {

namespace {

struct DegreeSystem {
  ExponentList candidates;
  std::vector<RationalVector> kernel;
};

DegreeSystem kernel_at(const GeneratorSet& gens, ProductCache& cache, int d) {
  if (gens.empty()) throw OutOfRange("syzygies need at least one generator");
  DegreeSystem out;
  const std::vector<int> degrees = gens.degrees();
  out.candidates = powers2(degrees, d);
  if (out.candidates.empty()) return out;

  const ContextPtr u_ctx = VarContext::u_ring(gens.n());
  std::vector<Polynomial> expanded(out.candidates.size(), Polynomial(u_ctx));
  parallel_for(out.candidates.size(), [&](std::size_t j) { expanded[j] = cache.product(out.candidates[j]); });

  const int expected_weight = gens.n() * d / 2;
  for (const auto& p : expanded) {
    if (p.is_zero()) continue;
    if (!is_homogeneous(p) || degree(p) != d || !is_isobaric(p) || weight_u(p) != expected_weight) {
      throw NonIsobaric("candidate expansion at degree " + std::to_string(d) + " has the wrong grading");
    }
  }

  const auto system = detail::assemble_columns(expanded);
  out.kernel = nullspace(system.matrix);
  return out;
}

Syzygy make_syzygy(const GeneratorSet& gens, const ExponentList& candidates, const RationalVector& v, int d) {
  return Syzygy{normalize(from_coeff_vector(gens.gen_context(), candidates, v)), d};
}

// Largest index with a nonzero entry.
std::size_t last_nonzero(const RationalVector& v) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (sgn(v[i]) != 0) return i;
  }
  return v.size();
}

}  // namespace

std::vector<Syzygy> syzygy_basis(const GeneratorSet& gens, int d) {
  ProductCache cache(gens);
  const DegreeSystem sys = kernel_at(gens, cache, d);
  std::vector<Syzygy> out;
  for (const auto& v : sys.kernel) out.push_back(make_syzygy(gens, sys.candidates, v, d));
  return out;
}

std::vector<Syzygy> minimal_syzygies(const GeneratorSet& gens, std::span<const int> degrees) {
  if (!std::is_sorted(degrees.begin(), degrees.end())) throw OutOfRange("minimal_syzygies: degrees must be ascending");
  ProductCache cache(gens);
  const std::vector<int> gen_degrees = gens.degrees();
  std::vector<Syzygy> minimal;

  for (int d : degrees) {
    const DegreeSystem sys = kernel_at(gens, cache, d);
    if (sys.kernel.empty()) continue;

    // Columns: consequences of earlier relations, then the kernel basis.
    std::vector<RationalVector> columns;
    for (const auto& s : minimal) {
      if (s.degree >= d) continue;
      for (const auto& m : powers2(gen_degrees, d - s.degree)) {
        columns.push_back(coeff_vector(shift(s.relation, m), sys.candidates));
      }
    }
    const std::size_t known = columns.size();
    columns.insert(columns.end(), sys.kernel.begin(), sys.kernel.end());

    RationalMatrix stacked(sys.candidates.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      for (std::size_t r = 0; r < sys.candidates.size(); ++r) stacked(r, c) = columns[c][r];
    }
    // Free columns of the echelon form are exactly the last nonzero entries
    // of the nullspace vectors; every other kernel column is a new relation.
    std::vector<bool> dependent(columns.size(), false);
    for (const auto& v : nullspace(stacked)) dependent[last_nonzero(v)] = true;
    for (std::size_t c = known; c < columns.size(); ++c) {
      if (!dependent[c]) minimal.push_back(make_syzygy(gens, sys.candidates, columns[c], d));
    }
  }
  return minimal;
}

bool check_syzygy(const GeneratorSet& gens, const Polynomial& relation) {
  if (relation.is_zero()) return true;
  return expand_in_generators(gens, relation).is_zero();
}

}  // namespace invforge
