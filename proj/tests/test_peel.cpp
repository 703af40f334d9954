#include <doctest.h>

#include "generators.hpp"
#include "xorkneser/analysis.hpp"
#include "xorkneser/constructions.hpp"
#include "xorkneser/errors.hpp"

using namespace xorkneser;

namespace {

void check_trace(const Family &f) {
  const PeelingTrace t = peel(f);
  CHECK(t.partition_ok);
  CHECK(t.residual_b_disjoint);
  for (const auto &r : t.rounds) {
    CHECK(r.accounting_ok);
    CHECK(r.d >= 2);
    CHECK(r.d == r.containing.size());
  }
  CHECK(t.a_traces.size() == t.q());
  if (t.q() >= 2) {
    const auto report = verify_matching(t.matching(f.layout().k()));
    CHECK_MESSAGE(report.valid, report.reason);
    CHECK(report.within_bound);
  }
}

} // namespace

TEST_CASE("peeling the two-block construction") {
  check_trace(construct_f2_lower(8, 2));
  check_trace(construct_f2_lower(40, 2));
  check_trace(construct_f2_lower(81, 3));

  const PeelingTrace t = peel(construct_f2_lower(40, 2));
  CHECK(t.q() >= 2);
  // Lattice elements sit in one row and one column.
  CHECK_FALSE(t.degree_exceeds_k);
}

TEST_CASE("peeling random valid two-block families") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(6));
    const int k = 1 + static_cast<int>(rng.below(2));
    if (k > n)
      continue;
    const Family f = gen::greedy_valid_family(rng, Layout(2, n, k), 40);
    if (f.size() == 0)
      continue;
    const PeelingTrace t = peel(f);
    CHECK(t.partition_ok);
    CHECK(t.residual_b_disjoint);
    for (const auto &r : t.rounds)
      CHECK(r.accounting_ok);
  }
}

TEST_CASE("a family already disjoint in B needs no rounds") {
  const Layout layout(2, 4, 1);
  const Family f(layout, {TransversalSet(layout, {0, 4}), TransversalSet(layout, {1, 5}),
                          TransversalSet(layout, {2, 6})});
  const PeelingTrace t = peel(f);
  CHECK(t.q() == 0);
  CHECK(t.residual.size() == 3);
  CHECK(t.residual_b_disjoint);
  CHECK(t.partition_ok);
  CHECK_FALSE(t.degree_exceeds_k);
}

TEST_CASE("degree dichotomy") {
  CHECK(degree_dichotomy(construct_f2_lower(40, 2)) == Dichotomy::Holds);
  // 54 members = 2k^3: too small for the dichotomy.
  CHECK(degree_dichotomy(construct_f2_lower(81, 3)) == Dichotomy::Inapplicable);
  CHECK(degree_dichotomy(construct_f2_lower(200, 3)) == Dichotomy::Holds);
  const Layout layout(2, 4, 1);
  CHECK(degree_dichotomy(Family(layout, {TransversalSet(layout, {0, 4})})) ==
        Dichotomy::Inapplicable);
  CHECK_THROWS_AS(peel(plane_family(3)), UsageError);
  CHECK_THROWS_AS(degree_dichotomy(plane_family(3)), UsageError);
}
