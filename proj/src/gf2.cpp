#include "xorkneser/errors.hpp"
#include "xorkneser/solver.hpp"

namespace xorkneser {

void GF2Matrix::append_row(Bitset row) {
  if (row.size() != columns_)
    throw UsageError("row length " + std::to_string(row.size()) + " != " +
                     std::to_string(columns_) + " columns");
  rows_.push_back(std::move(row));
}

std::size_t gf2_rank(const GF2Matrix &matrix) {
  std::vector<Bitset> rows;
  rows.reserve(matrix.rows());
  for (std::size_t i = 0; i < matrix.rows(); ++i)
    rows.push_back(matrix.row(i));

  std::size_t rank = 0;
  for (std::size_t col = 0; col < matrix.columns() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].test(col))
      ++pivot;
    if (pivot == rows.size())
      continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r)
      if (rows[r].test(col))
        rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

RankCheck check_rank_bound(const Family &family) {
  const Layout &layout = family.layout();
  if (layout.k() != 1)
    throw UsageError("rank check applies to k = 1 families only (got k=" +
                     std::to_string(layout.k()) + ")");
  GF2Matrix m(layout.universe_size());
  for (const auto &s : family.members())
    m.append_row(s.bits());
  for (int b = 0; b < layout.ell(); ++b) {
    Bitset block(layout.universe_size());
    for (int x = 0; x < layout.n(); ++x)
      block.set(layout.element(b, x));
    m.append_row(std::move(block));
  }
  RankCheck out;
  out.rank = gf2_rank(m);
  out.required = family.size() + static_cast<std::size_t>(layout.ell()) - 1;
  out.holds = out.rank >= out.required;
  return out;
}

} // namespace xorkneser
