#include <doctest.h>

#include "oracles.hpp"
#include "xorkneser/constructions.hpp"
#include "xorkneser/errors.hpp"
#include "xorkneser/solver.hpp"

using namespace xorkneser;

namespace {

GF2Matrix from_rows(const std::vector<std::vector<int>> &rows, std::size_t cols) {
  GF2Matrix m(cols);
  for (const auto &r : rows) {
    Bitset b(cols);
    for (std::size_t c = 0; c < cols; ++c)
      if (r[c])
        b.set(c);
    m.append_row(std::move(b));
  }
  return m;
}

} // namespace

TEST_CASE("rank of simple matrices") {
  std::vector<std::vector<int>> id(5, std::vector<int>(5, 0));
  for (int i = 0; i < 5; ++i)
    id[i][i] = 1;
  CHECK(gf2_rank(from_rows(id, 5)) == 5);
  CHECK(gf2_rank(from_rows({{1, 0, 1}, {1, 0, 1}}, 3)) == 1);
  CHECK(gf2_rank(GF2Matrix(4)) == 0);
  GF2Matrix m(3);
  CHECK_THROWS_AS(m.append_row(Bitset(4)), UsageError);
}

TEST_CASE("rank matches span enumeration") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng.below(12);
    const std::size_t cols = 1 + rng.below(70);
    std::vector<std::vector<int>> data(rows, std::vector<int>(cols));
    for (auto &r : data)
      for (auto &x : r)
        x = static_cast<int>(rng.below(2));
    // Occasionally force a dependency.
    if (rows >= 3 && trial % 3 == 0)
      for (std::size_t c = 0; c < cols; ++c)
        data[2][c] = data[0][c] ^ data[1][c];
    CHECK(gf2_rank(from_rows(data, cols)) == oracle::rank_by_span(data));
  }
}

TEST_CASE("rank bound on generated k = 1 families") {
  const RankCheck p3 = check_rank_bound(plane_family(3));
  CHECK(p3.holds);
  CHECK(p3.rank == 12);
  CHECK(p3.required == 12);

  CHECK(check_rank_bound(plane_family(5)).holds);

  for (int ell = 3; ell <= 20; ++ell) {
    const std::vector<int> fours(ell, 4);
    const RankCheck r = check_rank_bound(core_to_family(build_core(ell), fours));
    CHECK(r.holds);
    CHECK(r.rank <= static_cast<std::size_t>(4 * ell));
  }

  const RankCheck empty = check_rank_bound(Family(Layout(4, 3, 1)));
  CHECK(empty.holds);
  CHECK(empty.rank == 4);

  CHECK_THROWS_AS(check_rank_bound(construct_f2_lower(8, 2)), UsageError);
}

TEST_CASE("characteristic vectors of a plane family plus blocks") {
  const Family p = plane_family(3);
  std::vector<std::vector<int>> rows;
  for (const auto &m : p.members()) {
    std::vector<int> r(12, 0);
    for (auto e : m.elements())
      r[e] = 1;
    rows.push_back(r);
  }
  for (int b = 0; b < 4; ++b) {
    std::vector<int> r(12, 0);
    for (int x = 0; x < 3; ++x)
      r[b * 3 + x] = 1;
    rows.push_back(r);
  }
  CHECK(rows.size() == 13);
  CHECK(oracle::rank_by_span(rows) == 12);
}
