#include "xorkneser/constructions.hpp"

#include <algorithm>
#include <limits>

#include "xorkneser/combinatorics.hpp"
#include "xorkneser/errors.hpp"

namespace xorkneser {

namespace {

// Refuse families whose bit storage would exceed 256 MiB.
void check_storage(std::uint64_t members, std::uint64_t universe) {
  constexpr std::uint64_t limit_bits = std::uint64_t{1} << 31;
  if (universe != 0 && members > limit_bits / universe)
    throw BudgetError("construction would need " + std::to_string(members) + " members over " +
                      std::to_string(universe) + " elements; exceeds storage limit");
}

TransversalSet from_elements(const Layout &layout, const std::vector<std::size_t> &elements) {
  return TransversalSet(layout, std::span<const std::size_t>(elements));
}

} // namespace

int f2_lower_min_n(int k) {
  if (k < 1 || k > 30)
    throw UsageError("k must be in [1, 30] (got " + std::to_string(k) + ")");
  const std::uint64_t central = binomial_u64(2 * k, k);
  const std::uint64_t need = (central - 2) * static_cast<std::uint64_t>(k) * k / 2;
  if (need > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
    throw UsageError("minimal n for k=" + std::to_string(k) + " does not fit in int");
  return std::max(k, static_cast<int>(need));
}

std::size_t f2_lower_size(int n, int k) {
  const std::uint64_t central = binomial_u64(2 * k, k);
  return static_cast<std::size_t>(n / k) + central * k / 2 - k;
}

Family construct_f2_lower(int n, int k) {
  const int min_n = f2_lower_min_n(k);
  if (n < min_n)
    throw PreconditionError("construction needs n >= (C(2k,k)-2)k^2/2 and n >= k; for k=" +
                            std::to_string(k) + " the minimal admissible n is " +
                            std::to_string(min_n) + " (got n=" + std::to_string(n) + ")");
  const Layout layout(2, n, k);
  check_storage(f2_lower_size(n, k), layout.universe_size());

  // Labels H_i: k-subsets of K = {0..2k-1} containing 0, lexicographic.
  const int m = static_cast<int>(binomial_u64(2 * k, k) / 2);
  std::vector<std::vector<std::size_t>> h_labels, g_labels;
  for (const auto &rest : k_subsets_lex(2 * k - 1, k - 1)) {
    std::vector<char> in_h(2 * k, 0);
    in_h[0] = 1;
    for (int x : rest)
      in_h[x + 1] = 1;
    std::vector<std::size_t> h, g;
    for (int x = 0; x < 2 * k; ++x)
      (in_h[x] ? h : g).push_back(static_cast<std::size_t>(x));
    h_labels.push_back(std::move(h));
    g_labels.push_back(std::move(g));
  }

  const std::size_t b0 = layout.block_begin(1);
  const std::size_t kk = static_cast<std::size_t>(k);
  std::vector<TransversalSet> members;
  for (int i = 1; i < m; ++i) {
    const std::size_t base = b0 + static_cast<std::size_t>(i - 1) * kk * kk;
    for (std::size_t r = 0; r < kk; ++r) {
      std::vector<std::size_t> row = h_labels[i];
      std::vector<std::size_t> col = g_labels[i];
      for (std::size_t j = 0; j < kk; ++j) {
        row.push_back(base + r * kk + j);
        col.push_back(base + r + j * kk);
      }
      members.push_back(from_elements(layout, row));
      members.push_back(from_elements(layout, col));
    }
  }
  const std::size_t leftover_base = b0 + static_cast<std::size_t>(m - 1) * kk * kk;
  const int d = n / k - (m - 1) * k;
  for (int j = 0; j < d; ++j) {
    std::vector<std::size_t> s = h_labels[0];
    for (std::size_t x = 0; x < kk; ++x)
      s.push_back(leftover_base + static_cast<std::size_t>(j) * kk + x);
    members.push_back(from_elements(layout, s));
  }
  return Family(layout, std::move(members));
}

Family plane_family(int q) {
  if (q < 3 || q % 2 == 0 || !is_prime(static_cast<std::uint64_t>(q)))
    throw PreconditionError("plane construction needs q an odd prime (got q=" +
                            std::to_string(q) + ")");
  if (q > 1021)
    throw UsageError("q too large (limit 1021)");

  struct Triple {
    int x, y, z;
  };
  // Normalized homogeneous coordinates (first nonzero entry is 1), in
  // lexicographic order. Points and lines share this list.
  std::vector<Triple> normalized;
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      for (int z = 0; z < q; ++z) {
        const int lead = x ? x : (y ? y : z);
        if (lead == 1)
          normalized.push_back({x, y, z});
      }
  auto incident = [q](const Triple &p, const Triple &l) {
    return (p.x * l.x + p.y * l.y + p.z * l.z) % q == 0;
  };

  const Triple v{1, 0, 0};
  const int ell = q + 1;
  const Layout layout(ell, q, 1);
  check_storage(static_cast<std::uint64_t>(q) * q, layout.universe_size());

  std::vector<std::size_t> point_index(normalized.size(), 0);
  std::vector<Triple> through_v, others;
  for (const auto &l : normalized)
    (incident(v, l) ? through_v : others).push_back(l);
  for (int b = 0; b < ell; ++b) {
    int pos = 0;
    for (std::size_t p = 0; p < normalized.size(); ++p) {
      const Triple &pt = normalized[p];
      if (pt.x == 1 && pt.y == 0 && pt.z == 0)
        continue;
      if (incident(pt, through_v[b]))
        point_index[p] = layout.element(b, pos++);
    }
  }

  std::vector<TransversalSet> members;
  members.reserve(others.size());
  for (const auto &l : others) {
    Bitset bits(layout.universe_size());
    for (std::size_t p = 0; p < normalized.size(); ++p)
      if (incident(normalized[p], l))
        bits.set(point_index[p]);
    members.emplace_back(std::move(bits));
  }
  return Family(layout, std::move(members));
}

MatrixPlan make_matrix_plan(int k, int t) {
  if (t < 2 || t > 20)
    throw UsageError("t must be in [2, 20] (got " + std::to_string(t) + ")");
  if (k < t)
    throw PreconditionError("matrix construction needs k >= t (got k=" + std::to_string(k) +
                            ", t=" + std::to_string(t) + ")");
  MatrixPlan plan;
  plan.t = t;
  const int rows = (1 << t) - 1;
  for (int r = 0; r < rows; ++r) {
    const int alpha = r + 1;
    std::vector<int> h(t), c(t, 0);
    int weight = 0;
    for (int beta = 0; beta < t; ++beta) {
      h[beta] = (alpha >> beta) & 1;
      weight += h[beta];
    }
    // Even split of k over the nonzero columns, remainder to the lowest ones.
    int extra = k % weight;
    for (int beta = 0; beta < t; ++beta) {
      if (!h[beta])
        continue;
      c[beta] = k / weight + (extra > 0 ? 1 : 0);
      if (extra > 0)
        --extra;
    }
    plan.h.push_back(std::move(h));
    plan.c.push_back(std::move(c));
  }
  return plan;
}

Family matrix_family(int n, int k, int t) {
  if (k < 1 || n < k)
    throw UsageError("matrix construction needs 1 <= k <= n (got n=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + ")");
  const MatrixPlan plan = make_matrix_plan(k, t);
  const int ell = (1 << t) - 1;
  const int m = n / k;
  const Layout layout(ell, n, k);

  std::uint64_t size = 1;
  for (int i = 0; i < t; ++i) {
    size *= static_cast<std::uint64_t>(m);
    check_storage(size, layout.universe_size());
  }

  // Cell A^p_{α,β} starts at offset p k + prefix[α][β] inside block α.
  std::vector<std::vector<int>> prefix(ell, std::vector<int>(t + 1, 0));
  for (int a = 0; a < ell; ++a)
    for (int b = 0; b < t; ++b)
      prefix[a][b + 1] = prefix[a][b] + plan.c[a][b];

  std::vector<TransversalSet> members;
  members.reserve(static_cast<std::size_t>(size));
  std::vector<int> phi(t, 0);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    Bitset bits(layout.universe_size());
    for (int b = 0; b < t; ++b)
      for (int a = 0; a < ell; ++a)
        for (int x = 0; x < plan.c[a][b]; ++x)
          bits.set(layout.element(a, phi[b] * k + prefix[a][b] + x));
    members.emplace_back(std::move(bits));
    for (int b = t - 1; b >= 0; --b) {
      if (++phi[b] < m)
        break;
      phi[b] = 0;
    }
  }
  return Family(layout, std::move(members));
}

Family extend_power(const Family &family, std::span<const int> extra_offsets) {
  const Layout &old = family.layout();
  if (static_cast<int>(extra_offsets.size()) != old.k())
    throw UsageError("extension set must have exactly k=" + std::to_string(old.k()) +
                     " elements (got " + std::to_string(extra_offsets.size()) + ")");
  std::vector<int> sorted(extra_offsets.begin(), extra_offsets.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.front() < 0 ||
      sorted.back() >= old.n())
    throw UsageError("extension set must be distinct offsets in [0, " + std::to_string(old.n()) +
                     ")");
  const Layout layout(old.ell() + 1, old.n(), old.k());
  std::vector<TransversalSet> members;
  members.reserve(family.size());
  for (const auto &m : family.members()) {
    Bitset bits(layout.universe_size());
    for (std::size_t e : m.elements())
      bits.set(e);
    for (int x : sorted)
      bits.set(layout.element(old.ell(), x));
    members.emplace_back(std::move(bits));
  }
  return Family(layout, std::move(members));
}

Family kneser_family(int n, int k, int ell) {
  const Layout layout(ell, n, k);
  std::vector<TransversalSet> members;
  for (int j = 0; j < n / k; ++j) {
    Bitset bits(layout.universe_size());
    for (int x = 0; x < k; ++x)
      bits.set(layout.element(0, j * k + x));
    for (int b = 1; b < ell; ++b)
      for (int x = 0; x < k; ++x)
        bits.set(layout.element(b, x));
    members.emplace_back(std::move(bits));
  }
  return Family(layout, std::move(members));
}

} // namespace xorkneser
