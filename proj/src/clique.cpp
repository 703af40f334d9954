#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "xorkneser/solver.hpp"

namespace xorkneser {

namespace {

// Root branches are searched in fixed-size batches. Every branch in a batch
// starts from the incumbent known when the batch began, so the search tree
// (and therefore the result and node count) is the same for any number of
// worker threads.
constexpr std::size_t kRootBatch = 16;

struct Search {
  // Adjacency in position space: position p holds vertex order[p].
  std::vector<Bitset> adj;
  std::uint64_t node_limit = 0;
  std::uint64_t nodes = 0;
  bool aborted = false;
  std::size_t best = 0;
  std::vector<std::size_t> best_clique; // positions
  std::vector<std::size_t> current;

  // Greedy sequential colouring of `p` in position order. Vertices come out
  // grouped by colour class, colours non-decreasing.
  void colour(const Bitset &p, std::vector<std::size_t> &order, std::vector<std::size_t> &col) const {
    order.clear();
    col.clear();
    Bitset uncoloured = p;
    std::size_t c = 0;
    while (uncoloured.any()) {
      ++c;
      Bitset avail = uncoloured;
      for (std::size_t v = avail.find_first(); v < avail.size(); v = avail.find_first()) {
        avail.reset(v);
        avail.subtract(adj[v]);
        uncoloured.reset(v);
        order.push_back(v);
        col.push_back(c);
      }
    }
  }

  void expand(Bitset p) {
    if (++nodes > node_limit) {
      aborted = true;
      return;
    }
    std::vector<std::size_t> order, col;
    colour(p, order, col);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + col[i] <= best)
        return;
      const std::size_t v = order[i];
      current.push_back(v);
      Bitset next = p & adj[v];
      if (next.none()) {
        if (current.size() > best) {
          best = current.size();
          best_clique = current;
        }
      } else {
        expand(std::move(next));
      }
      current.pop_back();
      if (aborted)
        return;
      p.reset(v);
    }
  }
};

std::vector<std::size_t> to_vertices(const std::vector<std::size_t> &positions,
                                     const std::vector<std::size_t> &order) {
  std::vector<std::size_t> out;
  for (std::size_t p : positions)
    out.push_back(order[p]);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

CliqueResult max_clique(const CliqueGraph &graph, const CliqueOptions &options) {
  const std::size_t count = graph.vertex_count();
  CliqueResult result;
  if (count == 0)
    return result;

  std::vector<std::size_t> degree(count);
  for (std::size_t v = 0; v < count; ++v)
    degree[v] = graph.degree(v);
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
  std::vector<std::size_t> position(count);
  for (std::size_t p = 0; p < count; ++p)
    position[order[p]] = p;

  std::vector<Bitset> adj(count, Bitset(count));
  for (std::size_t p = 0; p < count; ++p) {
    const Bitset &row = graph.neighbors(order[p]);
    for (std::size_t v = row.find_first(); v < count; v = row.find_next(v + 1))
      adj[p].set(position[v]);
  }

  // Greedy incumbent in position order.
  std::vector<std::size_t> incumbent;
  {
    Bitset cand(count);
    for (std::size_t p = 0; p < count; ++p)
      cand.set(p);
    for (std::size_t p = cand.find_first(); p < count; p = cand.find_next(p + 1)) {
      incumbent.push_back(p);
      cand &= adj[p];
    }
  }
  std::size_t best = incumbent.size();
  std::vector<std::size_t> best_vertices = to_vertices(incumbent, order);

  Search root;
  root.adj = adj;
  Bitset all(count);
  for (std::size_t p = 0; p < count; ++p)
    all.set(p);
  std::vector<std::size_t> root_order, root_col;
  root.colour(all, root_order, root_col);

  // Branch i takes root_order[i] with the candidates ranked before it.
  std::uint64_t nodes = 1;
  bool exhausted = false;
  std::size_t next = root_order.size();
  const unsigned threads = std::max(1u, options.threads);
  Bitset remaining = all;

  while (next > 0 && !exhausted) {
    const std::size_t hi = next;
    const std::size_t lo = hi > kRootBatch ? hi - kRootBatch : 0;
    const std::size_t best_at_start = best;
    const std::uint64_t budget_left =
        options.node_budget > nodes ? options.node_budget - nodes : 0;

    struct Branch {
      bool pruned = false;
      Search search;
    };
    std::vector<Branch> branches(hi - lo);
    std::vector<Bitset> candidates(hi - lo);
    Bitset live = remaining;
    for (std::size_t i = hi; i-- > lo;) {
      const std::size_t v = root_order[i];
      live.reset(v);
      candidates[i - lo] = live & adj[v];
    }

    auto run = [&](std::size_t i) {
      Branch &br = branches[i - lo];
      if (root_col[i] <= best_at_start) {
        br.pruned = true;
        return;
      }
      Search &s = br.search;
      s.adj = adj;
      s.node_limit = budget_left;
      s.best = best_at_start;
      s.current = {root_order[i]};
      const Bitset &cand = candidates[i - lo];
      if (cand.none()) {
        if (1 > s.best) {
          s.best = 1;
          s.best_clique = s.current;
        }
      } else {
        s.expand(cand);
      }
    };

    if (threads == 1) {
      for (std::size_t i = hi; i-- > lo;)
        run(i);
    } else {
      std::atomic<std::size_t> cursor{0};
      const std::size_t batch = hi - lo;
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < std::min<std::size_t>(threads, batch); ++t)
        pool.emplace_back([&] {
          for (std::size_t j = cursor.fetch_add(1); j < batch; j = cursor.fetch_add(1))
            run(hi - 1 - j);
        });
    }

    bool all_pruned_tail = false;
    for (std::size_t i = hi; i-- > lo;) {
      Branch &br = branches[i - lo];
      if (br.pruned) {
        all_pruned_tail = true;
        continue;
      }
      nodes += br.search.nodes;
      if (br.search.aborted)
        exhausted = true;
      if (br.search.best > best_at_start && !br.search.best_clique.empty()) {
        auto cand = to_vertices(br.search.best_clique, order);
        if (cand.size() > best || (cand.size() == best && cand < best_vertices)) {
          best = cand.size();
          best_vertices = std::move(cand);
        }
      }
    }
    if (nodes > options.node_budget)
      exhausted = true;
    // Colours are non-decreasing along root_order, so once a branch is
    // pruned every earlier one is too.
    if (all_pruned_tail)
      break;
    for (std::size_t i = lo; i < hi; ++i)
      remaining.reset(root_order[i]);
    next = lo;
  }

  for (std::size_t a = 0; a < best_vertices.size(); ++a)
    for (std::size_t b = a + 1; b < best_vertices.size(); ++b)
      if (!graph.adjacent(best_vertices[a], best_vertices[b]))
        throw std::logic_error("max_clique produced a non-clique witness");

  result.size = best;
  result.witness = std::move(best_vertices);
  result.status = exhausted ? CliqueStatus::LowerBoundOnly : CliqueStatus::Exact;
  result.nodes_explored = nodes;
  return result;
}

CliqueResult brute_force_f(int n, int k, int ell, const CliqueOptions &options,
                           std::uint64_t vertex_budget) {
  return max_clique(build_product_graph(n, k, ell, vertex_budget), options);
}

} // namespace xorkneser
