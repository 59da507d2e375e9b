#pragma once

#include <span>
#include <vector>

#include "invforge/linalg.hpp"
#include "invforge/polynomial.hpp"

namespace invforge::detail {

// Coefficient matrix whose column j holds the coefficients of columns[j].
// Rows are indexed by every monomial occurring in `columns` or `extra`,
// in descending canonical order.
struct ColumnSystem {
  std::vector<Monomial> row_basis;
  RationalMatrix matrix;
};

ColumnSystem assemble_columns(std::span<const Polynomial> columns, std::span<const Polynomial> extra = {});

}  // namespace invforge::detail
