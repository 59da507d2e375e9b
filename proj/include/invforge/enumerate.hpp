#pragma once

#include <span>
#include <utility>
#include <vector>

#include "invforge/monomial.hpp"

namespace invforge {

// Candidate exponent vectors, pairwise distinct, in descending canonical order.
using ExponentList = std::vector<Monomial>;

// Exponents (a0, a2, ..., an) over the u-ring slots with
//   a0 + a2 + ... + an = d   and   2 a2 + 3 a3 + ... + n an = n d / 2.
// Empty when n d is odd.
ExponentList powers(int n, int d);

// All a in Z+^m with sum a_j * gen_degrees[j] = d.
ExponentList powers2(std::span<const int> gen_degrees, int d);

struct DegreeWeight {
  int degree = 0;
  int weight = 0;
};

// All a in Z+^m with sum a_j * deg_j = target.degree and sum a_j * w_j = target.weight.
ExponentList grad(std::span<const DegreeWeight> gen_profile, DegreeWeight target);

// Every exponent vector over the slots with the given per-slot weights,
// total degree `degree` and weight `weight`. The building block of the three
// functions above, exposed for assembling row bases.
ExponentList weighted_compositions(std::span<const int> slot_weights, int degree, int weight);

}  // namespace invforge
