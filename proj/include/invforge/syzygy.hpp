#pragma once

#include <span>
#include <vector>

#include "invforge/generators.hpp"
#include "invforge/polynomial.hpp"

namespace invforge {

struct Syzygy {
  Polynomial relation;  // over gens.gen_context(), normalized
  int degree = 0;       // sum of alpha_j * deg(f_j)
};

// Canonical nullspace basis of the expansion map on the powers2 candidates
// of weighted degree d. Throws OutOfRange if gens is empty.
std::vector<Syzygy> syzygy_basis(const GeneratorSet& gens, int d);

// Relations of each degree that do not follow from the relations already
// returned for smaller degrees (multiplied by generator monomials).
// `degrees` must be ascending.
std::vector<Syzygy> minimal_syzygies(const GeneratorSet& gens, std::span<const int> degrees);

// expand_in_generators(gens, relation) == 0.
bool check_syzygy(const GeneratorSet& gens, const Polynomial& relation);

}  // namespace invforge
