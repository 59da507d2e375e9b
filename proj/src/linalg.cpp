#include "invforge/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>

#include "invforge/errors.hpp"

namespace invforge {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw OutOfRange("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t size) {
  RationalMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

RationalVector RationalMatrix::multiply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw OutOfRange("matrix-vector length mismatch");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c] != 0 && (*this)(r, c) != 0) acc += (*this)(r, c) * v[c];
    }
    out[r] = std::move(acc);
  }
  return out;
}

namespace {

// Integer row with strictly increasing column indices and no zero entries.
using SparseRow = std::vector<std::pair<std::uint32_t, Integer>>;

SparseRow integral_row(std::span<const Rational> row) {
  Integer l = 1;
  for (const auto& x : row) {
    if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  SparseRow out;
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c] == 0) continue;
    Integer v = l / row[c].get_den();
    v *= row[c].get_num();
    out.emplace_back(static_cast<std::uint32_t>(c), std::move(v));
  }
  return out;
}

void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// target := p * target - a * pivot, where p is pivot's entry and a target's
// entry in column `col`. Removes column `col` from target.
void eliminate(SparseRow& target, const SparseRow& pivot, std::uint32_t col) {
  const auto find = [col](const SparseRow& r) {
    return std::lower_bound(r.begin(), r.end(), col, [](const auto& e, std::uint32_t c) { return e.first < c; });
  };
  auto ta = find(target);
  auto pa = find(pivot);
  const Integer a = ta->second;
  const Integer p = pa->second;
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  const Integer ps = p / g;
  const Integer as = a / g;

  SparseRow out;
  out.reserve(target.size() + pivot.size());
  std::size_t i = 0, j = 0;
  Integer tmp;
  while (i < target.size() || j < pivot.size()) {
    const std::uint32_t ci = i < target.size() ? target[i].first : UINT32_MAX;
    const std::uint32_t cj = j < pivot.size() ? pivot[j].first : UINT32_MAX;
    if (ci < cj) {
      tmp = target[i].second * ps;
      out.emplace_back(ci, std::move(tmp));
      ++i;
    } else if (cj < ci) {
      tmp = pivot[j].second * as;
      tmp = -tmp;
      out.emplace_back(cj, std::move(tmp));
      ++j;
    } else {
      tmp = target[i].second * ps;
      mpz_submul(tmp.get_mpz_t(), pivot[j].second.get_mpz_t(), as.get_mpz_t());
      if (tmp != 0) out.emplace_back(ci, std::move(tmp));
      ++i;
      ++j;
    }
  }
  target = std::move(out);
  make_primitive(target);
}

std::size_t cost(const SparseRow& r) {
  return mpz_sizeinbase(r.front().second.get_mpz_t(), 2) * 4 + r.size();
}

// Reduced row echelon form over Z: pivot rows sorted by pivot column, each
// pivot column zero in every other row. Entries are primitive per row.
struct Echelon {
  std::vector<SparseRow> rows;
  std::vector<std::uint32_t> pivots;
};

Echelon reduce(std::vector<SparseRow> input, std::size_t cols) {
  std::vector<std::vector<SparseRow>> buckets(cols);
  for (auto& r : input) {
    if (r.empty()) continue;
    make_primitive(r);
    buckets[r.front().first].push_back(std::move(r));
  }
  Echelon e;
  for (std::uint32_t c = 0; c < cols; ++c) {
    auto& bucket = buckets[c];
    if (bucket.empty()) continue;
    std::size_t best = 0;
    for (std::size_t k = 1; k < bucket.size(); ++k) {
      if (cost(bucket[k]) < cost(bucket[best])) best = k;
    }
    SparseRow pivot = std::move(bucket[best]);
    for (std::size_t k = 0; k < bucket.size(); ++k) {
      if (k == best) continue;
      SparseRow r = std::move(bucket[k]);
      eliminate(r, pivot, c);
      if (!r.empty()) buckets[r.front().first].push_back(std::move(r));
    }
    bucket.clear();
    bucket.shrink_to_fit();
    e.rows.push_back(std::move(pivot));
    e.pivots.push_back(c);
  }
  // Back substitution.
  for (std::size_t k = e.rows.size(); k-- > 0;) {
    const std::uint32_t c = e.pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      auto& r = e.rows[i];
      auto it = std::lower_bound(r.begin(), r.end(), c, [](const auto& x, std::uint32_t col) { return x.first < col; });
      if (it != r.end() && it->first == c) eliminate(r, e.rows[k], c);
    }
  }
  for (auto& r : e.rows) {
    if (r.front().second < 0) {
      for (auto& [col, v] : r) v = -v;
    }
  }
  return e;
}

std::vector<SparseRow> integral_rows(const RationalMatrix& m, std::span<const std::size_t> which) {
  std::vector<SparseRow> rows;
  rows.reserve(which.size());
  for (std::size_t r : which) rows.push_back(integral_row(m.row(r)));
  return rows;
}

std::vector<RationalVector> kernel_of(const Echelon& e, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols);
    v[f] = 1;
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
      const auto& r = e.rows[k];
      auto it = std::lower_bound(r.begin(), r.end(), static_cast<std::uint32_t>(f),
                                 [](const auto& x, std::uint32_t col) { return x.first < col; });
      if (it == r.end() || it->first != f) continue;
      Rational q(it->second, r.front().second);
      q.canonicalize();
      v[e.pivots[k]] = -q;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Integer multiples of the kernel vectors, for cheap exact dot products.
std::vector<std::vector<Integer>> integral_kernel(const std::vector<RationalVector>& kernel) {
  std::vector<std::vector<Integer>> out;
  for (const auto& v : kernel) {
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = (l / v[i].get_den()) * v[i].get_num();
    out.push_back(std::move(w));
  }
  return out;
}

// Echelon form of a row subset whose row space equals that of m. For tall
// matrices only a sample of rows is eliminated; every other row is checked
// against the sample's kernel and the failing ones are folded in until the
// sample's kernel annihilates all of m. Row space is determined by the
// kernel, so the result equals the echelon form of the full matrix.
Echelon full_echelon(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t sample = 2 * cols + 16;
  std::vector<std::size_t> all(rows);
  std::iota(all.begin(), all.end(), 0);
  if (rows <= sample + cols) return reduce(integral_rows(m, all), cols);

  std::vector<bool> chosen(rows, false);
  std::vector<std::size_t> picked;
  for (std::size_t k = 0; k < sample; ++k) {
    const std::size_t r = k * rows / sample;
    if (!chosen[r]) {
      chosen[r] = true;
      picked.push_back(r);
    }
  }
  for (;;) {
    Echelon e = reduce(integral_rows(m, picked), cols);
    const auto kernel = integral_kernel(kernel_of(e, cols));
    if (kernel.empty()) return e;
    std::vector<std::size_t> failing;
    Integer acc;
    for (std::size_t r = 0; r < rows && failing.size() < cols; ++r) {
      if (chosen[r]) continue;
      const SparseRow row = integral_row(m.row(r));
      for (const auto& v : kernel) {
        acc = 0;
        for (const auto& [c, x] : row) mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), v[c].get_mpz_t());
        if (acc != 0) {
          failing.push_back(r);
          break;
        }
      }
    }
    if (failing.empty()) return e;
    for (std::size_t r : failing) {
      chosen[r] = true;
      picked.push_back(r);
    }
  }
}

}  // namespace

std::size_t rank(const RationalMatrix& m) { return full_echelon(m).rows.size(); }

std::vector<RationalVector> nullspace(const RationalMatrix& m) { return kernel_of(full_echelon(m), m.cols()); }

std::optional<RationalVector> solve_affine(const RationalMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) {
    throw OutOfRange("solve_affine: right-hand side has " + std::to_string(b.size()) + " entries, matrix has " +
                     std::to_string(m.rows()) + " rows");
  }
  const std::size_t cols = m.cols();
  RationalMatrix aug(m.rows(), cols + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto src = m.row(r);
    auto dst = aug.row(r);
    std::copy(src.begin(), src.end(), dst.begin());
    dst[cols] = b[r];
  }
  const Echelon e = full_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
  RationalVector v(cols);
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    const auto& r = e.rows[k];
    if (r.back().first != cols) continue;
    Rational q(r.back().second, r.front().second);
    q.canonicalize();
    v[e.pivots[k]] = std::move(q);
  }
  return v;
}

}  // namespace invforge
