#pragma once

// Reference implementations used only by tests. Each one follows the
// definition directly and shares no code with the library routine it checks.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "xorkneser/rng.hpp"
#include "xorkneser/setsystem.hpp"
#include "xorkneser/solver.hpp"

namespace oracle {

using Sets = std::vector<std::vector<std::size_t>>;

// Count of blocks i with S ∩ T ∩ A_i = ∅, element by element.
inline int disjoint_blocks(const std::vector<std::size_t> &s, const std::vector<std::size_t> &t,
                           int ell, int n) {
  int count = 0;
  for (int i = 0; i < ell; ++i) {
    bool shared = false;
    for (std::size_t x : s)
      for (std::size_t y : t)
        if (x == y && static_cast<int>(x) / n == i)
          shared = true;
    count += shared ? 0 : 1;
  }
  return count;
}

inline bool family_valid(const Sets &members, int ell, int n, int k) {
  for (const auto &s : members)
    for (int i = 0; i < ell; ++i)
      if (std::count_if(s.begin(), s.end(), [&](std::size_t x) { return static_cast<int>(x) / n == i; }) != k)
        return false;
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if (disjoint_blocks(members[a], members[b], ell, n) % 2 == 0)
        return false;
  return true;
}

inline Sets as_sets(const xorkneser::Family &f) {
  Sets out;
  for (const auto &m : f.members())
    out.push_back(m.elements());
  return out;
}

// Clique number by enumerating every vertex subset (<= 30 vertices).
inline std::size_t clique_number_exhaustive(const xorkneser::CliqueGraph &g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> nbr(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (g.adjacent(u, v))
        nbr[u] |= std::uint32_t{1} << v;
  std::size_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size <= best)
      continue;
    bool clique = true;
    for (std::size_t u = 0; u < n && clique; ++u)
      if ((mask >> u) & 1)
        if (((mask & ~(std::uint64_t{1} << u)) & ~static_cast<std::uint64_t>(nbr[u])) != 0)
          clique = false;
    if (clique)
      best = size;
  }
  return best;
}

// Rank over GF(2) as log2 of the span size (<= 20 rows).
inline std::size_t rank_by_span(const std::vector<std::vector<int>> &rows) {
  std::set<std::vector<int>> span;
  const std::size_t r = rows.size();
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    std::vector<int> v(cols, 0);
    for (std::size_t i = 0; i < r; ++i)
      if ((mask >> i) & 1)
        for (std::size_t c = 0; c < cols; ++c)
          v[c] ^= rows[i][c];
    span.insert(v);
  }
  std::size_t rank = 0;
  while ((std::size_t{1} << rank) < span.size())
    ++rank;
  return rank;
}

// Random graph with edge probability num/den.
inline xorkneser::CliqueGraph random_graph(xorkneser::SplitMix64 &rng, std::size_t n,
                                           std::uint64_t num, std::uint64_t den) {
  xorkneser::CliqueGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.below(den) < num)
        g.add_edge(u, v);
  return g;
}

} // namespace oracle
