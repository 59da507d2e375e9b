#pragma once

#include <optional>
#include <span>
#include <vector>

#include "invforge/generators.hpp"
#include "invforge/polynomial.hpp"

namespace invforge {

// Linearly independent invariants of degree d, each normalized.
struct InvariantBasis {
  int n = 0;
  int d = 0;
  std::vector<Polynomial> elements;
};

// Kernel of the reduced operator on the span of powers(n, d): columns are
// the candidate monomials, rows the monomials of their images. Elements are
// URing(n) polynomials.
InvariantBasis invariant_basis(int n, int d);

// Independent route: common kernel of d1 and d2 on the degree-d, weight-nd/2
// monomials of XRing(n). Elements are XRing(n) polynomials.
InvariantBasis invariant_basis_direct(int n, int d);

// A representation of f as a polynomial in the generators (a GenRing
// polynomial over gens.gen_context()), or nullopt if f is not in the subring
// they generate. f must be a nonzero, homogeneous, isobaric URing(n)
// polynomial; otherwise NonIsobaric / ContextMismatch is thrown.
std::optional<Polynomial> is_member(const GeneratorSet& gens, const Polynomial& f);

// Walks the degrees from degrees.front() to degrees.back() and keeps every
// basis invariant that is not already generated. Throws DegreeMismatch if
// the kept degrees differ from `degrees` (which must be sorted, |degrees| = r).
GeneratorSet mingenset(int n, int r, std::span<const int> degrees);

struct DegreeTable {
  int r = 0;
  std::vector<int> degrees;
};

// Generator degrees for n in {2, 3, 4, 5, 6, 8}. Throws OutOfRange otherwise.
DegreeTable known_degree_table(int n);

// d1(f) = 0 and d2(f) = 0 for f in XRing(n).
bool verify_invariant_x(int n, const Polynomial& f);

// f is weight-balanced for n and annihilated by the reduced operator.
bool verify_invariant_u(int n, const Polynomial& f);

// Builds a verified generator from a u-form: computes the x-form and checks
// both. Throws Error if either check fails.
Generator make_generator(int n, std::string name, const Polynomial& u_form);

}  // namespace invforge
