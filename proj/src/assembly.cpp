#include "invforge/detail/assembly.hpp"

#include <algorithm>
#include <unordered_map>

namespace invforge::detail {

ColumnSystem assemble_columns(std::span<const Polynomial> columns, std::span<const Polynomial> extra) {
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  auto collect = [&](const Polynomial& p) {
    for (const auto& t : p.terms()) index.try_emplace(t.monomial, 0);
  };
  for (const auto& p : columns) collect(p);
  for (const auto& p : extra) collect(p);

  ColumnSystem out;
  out.row_basis.reserve(index.size());
  for (const auto& [m, i] : index) out.row_basis.push_back(m);
  std::sort(out.row_basis.begin(), out.row_basis.end(), MonomialDescending{});
  for (std::size_t r = 0; r < out.row_basis.size(); ++r) index[out.row_basis[r]] = r;

  out.matrix = RationalMatrix(out.row_basis.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& t : columns[c].terms()) out.matrix(index.at(t.monomial), c) = t.coeff;
  }
  return out;
}

}  // namespace invforge::detail
