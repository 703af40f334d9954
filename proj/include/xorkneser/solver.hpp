#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "xorkneser/bitset.hpp"
#include "xorkneser/setsystem.hpp"

namespace xorkneser {

inline constexpr std::uint64_t kDefaultVertexBudget = 200'000;
inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

// Undirected simple graph with a dense bit-matrix adjacency.
class CliqueGraph {
public:
  explicit CliqueGraph(std::size_t vertex_count);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  const Bitset &neighbors(std::size_t v) const { return adjacency_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u].test(v); }
  std::size_t degree(std::size_t v) const { return adjacency_[v].count(); }
  std::size_t edge_count() const;

  // Self-loops are rejected.
  void add_edge(std::size_t u, std::size_t v);

  // Transversal sets behind each vertex, when built from a layout.
  const std::optional<Layout> &layout() const noexcept { return layout_; }
  const std::vector<TransversalSet> &labels() const noexcept { return labels_; }
  void set_labels(Layout layout, std::vector<TransversalSet> labels);

private:
  std::vector<Bitset> adjacency_;
  std::optional<Layout> layout_;
  std::vector<TransversalSet> labels_;
};

// The ell-th xor-power of KG(n, k). Vertices are tuples of per-block
// k-subsets, each coordinate in colex order, block 0 most significant.
// Throws BudgetError when C(n,k)^ell exceeds vertex_budget.
CliqueGraph build_product_graph(int n, int k, int ell,
                                std::uint64_t vertex_budget = kDefaultVertexBudget);

// Graph whose vertices are the members of `family`, adjacent when
// xor_adjacent.
CliqueGraph family_graph(const Family &family);

enum class CliqueStatus { Exact, LowerBoundOnly };

struct CliqueResult {
  std::size_t size = 0;
  std::vector<std::size_t> witness; // ascending vertex ids
  CliqueStatus status = CliqueStatus::Exact;
  std::uint64_t nodes_explored = 0;
};

struct CliqueOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  unsigned threads = 1;
};

// Exact maximum clique by branch and bound with a greedy sequential
// colouring bound. The outcome (including nodes_explored) does not depend
// on options.threads.
CliqueResult max_clique(const CliqueGraph &graph, const CliqueOptions &options = {});

// f_ell(n, k) by exhaustive search on the product graph.
CliqueResult brute_force_f(int n, int k, int ell, const CliqueOptions &options = {},
                           std::uint64_t vertex_budget = kDefaultVertexBudget);

// DIMACS clique format: "p edge V E" then "e u v" with 1-based vertices.
void write_dimacs(std::ostream &out, const CliqueGraph &graph);
CliqueGraph read_dimacs(std::istream &in);

// ---------------------------------------------------------------------------
// GF(2)
// ---------------------------------------------------------------------------

class GF2Matrix {
public:
  explicit GF2Matrix(std::size_t columns) : columns_(columns) {}

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t columns() const noexcept { return columns_; }
  const Bitset &row(std::size_t i) const { return rows_[i]; }

  // Throws UsageError on a length mismatch.
  void append_row(Bitset row);

private:
  std::size_t columns_;
  std::vector<Bitset> rows_;
};

std::size_t gf2_rank(const GF2Matrix &matrix);

struct RankCheck {
  bool holds = false;
  std::size_t rank = 0;
  std::size_t required = 0; // |S| + ell - 1
};

// Rank of the characteristic vectors of the members together with the
// blocks A_1..A_ell; the bound |S| <= |V| - ell + 1 follows once this rank
// is at least |S| + ell - 1. Requires k = 1.
RankCheck check_rank_bound(const Family &family);

} // namespace xorkneser
