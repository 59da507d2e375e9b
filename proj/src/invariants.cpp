#include "invforge/invariants.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "invforge/coords.hpp"
#include "invforge/detail/assembly.hpp"
#include "invforge/enumerate.hpp"
#include "invforge/errors.hpp"
#include "invforge/linalg.hpp"
#include "invforge/parallel.hpp"

namespace invforge {

namespace {

std::vector<Polynomial> kernel_polynomials(const ContextPtr& ctx, const ExponentList& basis,
                                           const RationalMatrix& system) {
  std::vector<Polynomial> out;
  for (const auto& v : nullspace(system)) out.push_back(normalize(from_coeff_vector(ctx, basis, v)));
  return out;
}

}  // namespace

InvariantBasis invariant_basis(int n, int d) {
  InvariantBasis out{n, d, {}};
  const ExponentList candidates = powers(n, d);
  if (candidates.empty()) return out;

  const ContextPtr ctx = VarContext::u_ring(n);
  const Derivation op = reduced_operator(n);
  std::vector<Polynomial> images(candidates.size(), Polynomial(ctx));
  parallel_for(candidates.size(),
               [&](std::size_t j) { images[j] = op.apply(Polynomial::monomial(ctx, candidates[j])); });

  const auto system = detail::assemble_columns(images);
  out.elements = kernel_polynomials(ctx, candidates, system.matrix);
  return out;
}

InvariantBasis invariant_basis_direct(int n, int d) {
  if (n < 2 || d < 1) throw OutOfRange("invariant_basis_direct: need n >= 2 and d >= 1");
  InvariantBasis out{n, d, {}};
  if ((n * d) % 2 != 0) return out;

  const ContextPtr ctx = VarContext::x_ring(n);
  std::vector<int> weights;
  for (int i = 0; i <= n; ++i) weights.push_back(i);
  const ExponentList candidates = weighted_compositions(weights, d, n * d / 2);
  if (candidates.empty()) return out;

  const Derivation first = d1(n);
  const Derivation second = d2(n);
  std::vector<Polynomial> images1;
  std::vector<Polynomial> images2;
  for (const auto& m : candidates) {
    const Polynomial p = Polynomial::monomial(ctx, m);
    images1.push_back(first.apply(p));
    images2.push_back(second.apply(p));
  }
  const auto sys1 = detail::assemble_columns(images1);
  const auto sys2 = detail::assemble_columns(images2);
  RationalMatrix stacked(sys1.matrix.rows() + sys2.matrix.rows(), candidates.size());
  for (std::size_t r = 0; r < sys1.matrix.rows(); ++r) {
    std::copy(sys1.matrix.row(r).begin(), sys1.matrix.row(r).end(), stacked.row(r).begin());
  }
  for (std::size_t r = 0; r < sys2.matrix.rows(); ++r) {
    std::copy(sys2.matrix.row(r).begin(), sys2.matrix.row(r).end(), stacked.row(sys1.matrix.rows() + r).begin());
  }
  out.elements = kernel_polynomials(ctx, candidates, stacked);
  return out;
}

std::optional<Polynomial> is_member(const GeneratorSet& gens, const Polynomial& f) {
  const int n = gens.n();
  require_same_context(f.context(), VarContext::u_ring(n), "is_member");
  if (f.is_zero()) throw ZeroPolynomial("is_member: target is zero");
  if (!is_homogeneous(f) || !is_isobaric(f)) throw NonIsobaric("is_member: target is not homogeneous and isobaric");
  const DegreeWeight target{degree(f), weight_u(f)};

  if (gens.empty()) {
    if (target.degree == 0) return Polynomial::constant(gens.gen_context(), f.leading().coeff);
    return std::nullopt;
  }
  const auto profile = gens.profile();
  const ExponentList candidates = grad(profile, target);
  if (candidates.empty()) return std::nullopt;

  ProductCache cache(gens);
  std::vector<Polynomial> expanded(candidates.size(), Polynomial(f.context()));
  parallel_for(candidates.size(), [&](std::size_t j) { expanded[j] = cache.product(candidates[j]); });

  const Polynomial extra[] = {f};
  const auto system = detail::assemble_columns(expanded, extra);
  const auto rhs = coeff_vector(f, system.row_basis);
  const auto solution = solve_affine(system.matrix, rhs);
  if (!solution) return std::nullopt;
  return from_coeff_vector(gens.gen_context(), candidates, *solution);
}

bool verify_invariant_x(int n, const Polynomial& f) {
  require_same_context(f.context(), VarContext::x_ring(n), "verify_invariant_x");
  return d1(n).apply(f).is_zero() && d2(n).apply(f).is_zero();
}

bool verify_invariant_u(int n, const Polynomial& f) {
  require_same_context(f.context(), VarContext::u_ring(n), "verify_invariant_u");
  if (f.is_zero()) return true;
  if (!is_isobaric_balanced(f, n)) return false;
  return reduced_operator(n).apply(f).is_zero();
}

Generator make_generator(int n, std::string name, const Polynomial& u_form) {
  if (!verify_invariant_u(n, u_form)) throw Error("generator " + name + " fails the u-coordinate check");
  Polynomial x_form = u_to_x(u_form);
  if (!verify_invariant_x(n, x_form)) throw Error("generator " + name + " fails the x-coordinate check");
  const int deg = degree(u_form);
  return Generator{std::move(name), deg, weight_u(u_form), u_form, std::move(x_form)};
}

GeneratorSet mingenset(int n, int r, std::span<const int> degrees) {
  if (static_cast<int>(degrees.size()) != r) {
    throw DegreeMismatch("mingenset: " + std::to_string(r) + " generators requested but " +
                         std::to_string(degrees.size()) + " degrees given");
  }
  if (!std::is_sorted(degrees.begin(), degrees.end())) throw DegreeMismatch("mingenset: degrees must be ascending");
  GeneratorSet gens(n);
  if (degrees.empty()) return gens;

  for (int d = degrees.front(); d <= degrees.back(); ++d) {
    const InvariantBasis basis = invariant_basis(n, d);
    int count = 0;
    for (const auto& element : basis.elements) {
      if (is_member(gens, element)) continue;
      std::string name = "f" + std::to_string(d);
      if (count++ > 0) name += "_" + std::to_string(count);
      gens.add(make_generator(n, std::move(name), element));
    }
  }

  const std::vector<int> found = gens.degrees();
  if (!std::equal(found.begin(), found.end(), degrees.begin(), degrees.end())) {
    std::string got;
    for (int d : found) got += (got.empty() ? "" : ",") + std::to_string(d);
    throw DegreeMismatch("mingenset: discovered generator degrees {" + got + "} differ from the requested table");
  }
  return gens;
}

DegreeTable known_degree_table(int n) {
  switch (n) {
    case 2: return {1, {2}};
    case 3: return {1, {4}};
    case 4: return {2, {2, 3}};
    case 5: return {4, {4, 8, 12, 18}};
    case 6: return {5, {2, 4, 6, 10, 15}};
    case 8: return {9, {2, 3, 4, 5, 6, 7, 8, 9, 10}};
    default: throw OutOfRange("no generator degree table for n=" + std::to_string(n));
  }
}

}  // namespace invforge
