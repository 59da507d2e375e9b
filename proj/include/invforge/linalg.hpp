#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "invforge/rational.hpp"

namespace invforge {

using RationalVector = std::vector<Rational>;

// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t size);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  RationalVector multiply(std::span<const Rational> v) const;

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rank(const RationalMatrix& m);

// Basis of {v : Mv = 0}. Vector k has a 1 at the k-th free column (free
// columns ascending), 0 at every other free column, and the pivot entries
// forced by the reduced echelon form. Empty iff the nullity is 0.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

// Particular solution of Mv = b with every free variable set to 0, or
// nullopt when the system is inconsistent. Throws OutOfRange if b has the
// wrong length.
std::optional<RationalVector> solve_affine(const RationalMatrix& m, std::span<const Rational> b);

}  // namespace invforge
