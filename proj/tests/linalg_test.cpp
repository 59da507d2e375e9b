#include <doctest.h>

#include <random>

#include "invforge/errors.hpp"
#include "invforge/linalg.hpp"

using namespace invforge;

namespace {

// Textbook Gauss-Jordan over Q.
struct Rref {
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> pivots;
};

Rref naive_rref(std::vector<std::vector<Rational>> a, std::size_t cols) {
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const Rational lead = a[r][c];
    for (auto& v : a[r]) v /= lead;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

std::vector<std::vector<Rational>> to_rows(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
  return out;
}

std::vector<RationalVector> naive_nullspace(const RationalMatrix& m) {
  const Rref e = naive_rref(to_rows(m), m.cols());
  std::vector<RationalVector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (std::find(e.pivots.begin(), e.pivots.end(), f) != e.pivots.end()) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<RationalVector> naive_solve(const RationalMatrix& m, const RationalVector& b) {
  auto rows = to_rows(m);
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r].push_back(b[r]);
  const Rref e = naive_rref(rows, m.cols() + 1);
  RationalVector v(m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == m.cols()) return std::nullopt;
    v[e.pivots[i]] = e.rows[i][m.cols()];
  }
  return v;
}

RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, std::size_t rank_bound) {
  std::uniform_int_distribution<int> small(-4, 4);
  RationalMatrix left(rows, rank_bound);
  RationalMatrix right(rank_bound, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t k = 0; k < rank_bound; ++k) left(r, k) = small(rng);
  for (std::size_t k = 0; k < rank_bound; ++k)
    for (std::size_t c = 0; c < cols; ++c) {
        right(k, c) = Rational(small(rng), 1 + static_cast<int>(rng() % 3));
        right(k, c).canonicalize();
      }
  RationalMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      for (std::size_t k = 0; k < rank_bound; ++k) out(r, c) += left(r, k) * right(k, c);
  return out;
}

}  // namespace

TEST_CASE("nullspace examples") {
  CHECK(nullspace(RationalMatrix{{3, -12}}) == std::vector<RationalVector>{{4, 1}});
  CHECK(nullspace(RationalMatrix::identity(2)).empty());
  CHECK(nullspace(RationalMatrix{{1, 1}, {2, 2}}) == std::vector<RationalVector>{{-1, 1}});
  CHECK(nullspace(RationalMatrix(0, 3)).size() == 3);
}

TEST_CASE("solve_affine examples") {
  CHECK(solve_affine(RationalMatrix{{1}}, RationalVector{5}) == RationalVector{5});
  CHECK_FALSE(solve_affine(RationalMatrix{{1}, {1}}, RationalVector{1, 2}).has_value());
  CHECK(solve_affine(RationalMatrix{{2, 0}, {0, 4}}, RationalVector{6, 8}) == RationalVector{3, 2});
  CHECK_THROWS_AS(solve_affine(RationalMatrix{{1}}, RationalVector{1, 2}), OutOfRange);
}

TEST_CASE("rank examples") {
  CHECK(rank(RationalMatrix(3, 4)) == 0);
  CHECK(rank(RationalMatrix::identity(3)) == 3);
  CHECK(rank(RationalMatrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("randomized cross-check against naive row reduction") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = 1 + rng() % 9;
    const std::size_t cols = 1 + rng() % 9;
    const std::size_t bound = 1 + rng() % std::min(rows, cols);
    const RationalMatrix m = random_matrix(rng, rows, cols, bound);
    const auto ns = nullspace(m);
    CHECK(ns == naive_nullspace(m));
    CHECK(rank(m) + ns.size() == cols);
    for (const auto& v : ns) {
      for (const auto& x : m.multiply(v)) CHECK(x == 0);
    }
    RationalVector b(rows);
    for (auto& x : b) x = static_cast<int>(rng() % 7) - 3;
    const auto got = solve_affine(m, b);
    CHECK(got == naive_solve(m, b));
    if (got) CHECK(m.multiply(*got) == b);
  }
}

TEST_CASE("tall systems go through the sampled elimination") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t cols = 3 + rng() % 8;
    const std::size_t rows = 4 * cols + 40 + rng() % 50;
    const RationalMatrix m = random_matrix(rng, rows, cols, 1 + rng() % cols);
    CHECK(nullspace(m) == naive_nullspace(m));
    RationalVector b = m.multiply(RationalVector(cols, Rational(1)));
    CHECK(solve_affine(m, b) == naive_solve(m, b));
    b[rows - 1] += 1;
    CHECK(solve_affine(m, b) == naive_solve(m, b));
  }
}

TEST_CASE("deterministic output") {
  std::mt19937 rng(1);
  const RationalMatrix m = random_matrix(rng, 20, 12, 7);
  CHECK(nullspace(m) == nullspace(m));
}
