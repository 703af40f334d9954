#include <doctest.h>

#include <cmath>
#include <string>

#include "oracles.hpp"
#include "xorkneser/combinatorics.hpp"
#include "xorkneser/constructions.hpp"
#include "xorkneser/errors.hpp"

using namespace xorkneser;

TEST_CASE("two-block construction sizes") {
  const Family f8 = construct_f2_lower(8, 2);
  CHECK(f8.size() == 8); // floor(8/2) + 4
  CHECK(f8.layout() == Layout(2, 8, 2));
  CHECK(verify_family(f8).valid);

  const Family f1 = construct_f2_lower(1, 1);
  CHECK(f1.size() == 1);
  CHECK(verify_family(f1).valid);

  const Family f40 = construct_f2_lower(40, 2);
  CHECK(f40.size() == 24);
  CHECK(verify_family(f40).valid);
}

TEST_CASE("two-block construction size formula over admissible n") {
  for (int k = 1; k <= 4; ++k) {
    const int lo = f2_lower_min_n(k);
    for (int n = lo; n <= 200; ++n) {
      const Family f = construct_f2_lower(n, k);
      const std::size_t expected = n / k + binomial_u64(2 * k, k) * k / 2 - k;
      CHECK(f.size() == expected);
      CHECK(f2_lower_size(n, k) == expected);
      CHECK(oracle::family_valid(oracle::as_sets(f), 2, n, k));
    }
  }
}

TEST_CASE("two-block construction rejects small n with the minimal admissible value") {
  CHECK(f2_lower_min_n(1) == 1);
  CHECK(f2_lower_min_n(2) == 8);
  CHECK(f2_lower_min_n(3) == 81);
  CHECK(f2_lower_min_n(4) == 544);
  try {
    construct_f2_lower(54, 3);
    FAIL("expected rejection");
  } catch (const PreconditionError &e) {
    CHECK(std::string(e.what()).find("81") != std::string::npos);
  }
  CHECK_THROWS_AS(construct_f2_lower(7, 2), PreconditionError);
  CHECK_THROWS_AS(construct_f2_lower(40, 3), PreconditionError);
}

TEST_CASE("two-block construction layout details") {
  // k = 2: K = {0,1,2,3}; H = {0,1},{0,2},{0,3}; lattice L_2 at B offsets 0..3.
  const Family f = construct_f2_lower(8, 2);
  const auto sets = oracle::as_sets(f);
  auto has = [&](std::vector<std::size_t> s) {
    return std::find(sets.begin(), sets.end(), s) != sets.end();
  };
  CHECK(has({0, 2, 8, 9}));   // H_2 with row 0 of L_2
  CHECK(has({0, 2, 10, 11})); // H_2 with row 1
  CHECK(has({1, 3, 8, 10}));  // G_2 with column 0
  CHECK(has({1, 3, 9, 11}));  // G_2 with column 1
  CHECK(has({0, 3, 12, 13})); // H_3 with row 0 of L_3
  CHECK(has({1, 2, 13, 15})); // G_3 with column 1
  // d = 4 - 4 = 0 leftover sets for n = 8.
  const Family g = construct_f2_lower(12, 2);
  const auto gs = oracle::as_sets(g);
  CHECK(std::find(gs.begin(), gs.end(), std::vector<std::size_t>{0, 1, 20, 21}) != gs.end());
  CHECK(std::find(gs.begin(), gs.end(), std::vector<std::size_t>{0, 1, 22, 23}) != gs.end());
}

TEST_CASE("projective plane families") {
  const Family p3 = plane_family(3);
  CHECK(p3.layout() == Layout(4, 3, 1));
  CHECK(p3.size() == 9);
  CHECK(p3.size() == 4 * 3 - 4 + 1);
  CHECK(verify_family(p3).valid);

  for (int q : {5, 7}) {
    const Family p = plane_family(q);
    const int ell = q + 1;
    CHECK(p.size() == static_cast<std::size_t>(q * q));
    CHECK(p.layout().universe_size() == static_cast<std::size_t>(ell * q));
    CHECK(p.size() == static_cast<std::size_t>(ell * q - ell + 1));
    CHECK(oracle::family_valid(oracle::as_sets(p), ell, q, 1));
  }

  // Any two members share exactly one element.
  const auto s = oracle::as_sets(plane_family(5));
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      int common = 0;
      for (auto x : s[a])
        common += std::count(s[b].begin(), s[b].end(), x);
      CHECK(common == 1);
    }

  for (int bad : {1, 2, 4, 9, 15})
    CHECK_THROWS_AS(plane_family(bad), PreconditionError);
}

TEST_CASE("matrix plan invariants") {
  for (int t = 2; t <= 5; ++t) {
    for (int k = t; k <= 12; ++k) {
      const MatrixPlan plan = make_matrix_plan(k, t);
      const int rows = (1 << t) - 1;
      REQUIRE(static_cast<int>(plan.h.size()) == rows);
      for (int r = 0; r < rows; ++r) {
        int sum = 0;
        bool nonzero = false;
        for (int b = 0; b < t; ++b) {
          CHECK((plan.c[r][b] == 0) == (plan.h[r][b] == 0));
          sum += plan.c[r][b];
          nonzero |= plan.h[r][b] != 0;
        }
        CHECK(sum == k);
        CHECK(nonzero);
        for (int s = r + 1; s < rows; ++s)
          CHECK(plan.h[r] != plan.h[s]);
      }
    }
  }
  // Even split, remainder to the lowest column: row 3 (binary 111) for k = 5.
  CHECK(make_matrix_plan(5, 3).c[6] == std::vector<int>{2, 2, 1});
  CHECK_THROWS_AS(make_matrix_plan(2, 3), PreconditionError);
  CHECK_THROWS_AS(make_matrix_plan(5, 1), UsageError);
}

TEST_CASE("matrix construction") {
  const Family a = matrix_family(4, 2, 2);
  CHECK(a.layout() == Layout(3, 4, 2));
  CHECK(a.size() == 4);
  CHECK(verify_family(a).valid);

  const Family b = matrix_family(3, 3, 3);
  CHECK(b.layout().ell() == 7);
  CHECK(b.size() == 1);

  const Family c = matrix_family(9, 3, 2);
  CHECK(c.size() == 9);
  CHECK(oracle::family_valid(oracle::as_sets(c), 3, 9, 3));

  CHECK_THROWS_AS(matrix_family(9, 2, 3), PreconditionError);
}

TEST_CASE("matrix construction size is floor(n/k)^t") {
  for (int t = 2; t <= 3; ++t)
    for (int k = t; k <= 4; ++k)
      for (int n = k; n <= 13; ++n) {
        const Family f = matrix_family(n, k, t);
        CHECK(f.size() == static_cast<std::size_t>(std::pow(n / k, t)));
        CHECK(oracle::family_valid(oracle::as_sets(f), (1 << t) - 1, n, k));
      }
}

TEST_CASE("extend_power") {
  const std::vector<int> two{0, 1};
  const Family e = extend_power(Family(Layout(2, 3, 2)), two);
  CHECK(e.empty());
  CHECK(e.layout() == Layout(3, 3, 2));

  const Family base = construct_f2_lower(8, 2);
  const std::vector<int> pick{3, 6};
  const Family once = extend_power(base, pick);
  CHECK(once.layout().ell() == 3);
  CHECK(once.size() == 8);
  CHECK(verify_family(once).valid);
  const Family twice = extend_power(once, two);
  CHECK(twice.size() == 8);
  CHECK(verify_family(twice).valid);
  for (const auto &m : twice.members()) {
    CHECK(m.contains(16 + 3));
    CHECK(m.contains(24 + 0));
  }

  const std::vector<int> bad_size{1};
  const std::vector<int> bad_range{0, 8};
  const std::vector<int> bad_dup{2, 2};
  CHECK_THROWS_AS(extend_power(base, bad_size), UsageError);
  CHECK_THROWS_AS(extend_power(base, bad_range), UsageError);
  CHECK_THROWS_AS(extend_power(base, bad_dup), UsageError);
}

TEST_CASE("kneser baseline family") {
  const Family f = kneser_family(7, 2, 3);
  CHECK(f.size() == 3);
  CHECK(verify_family(f).valid);
}
