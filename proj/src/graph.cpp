#include <istream>
#include <ostream>
#include <sstream>

#include "xorkneser/combinatorics.hpp"
#include "xorkneser/errors.hpp"
#include "xorkneser/solver.hpp"

namespace xorkneser {

CliqueGraph::CliqueGraph(std::size_t vertex_count)
    : adjacency_(vertex_count, Bitset(vertex_count)) {}

std::size_t CliqueGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto &row : adjacency_)
    twice += row.count();
  return twice / 2;
}

void CliqueGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= vertex_count() || v >= vertex_count())
    throw UsageError("edge endpoint out of range");
  if (u == v)
    throw UsageError("self-loop on vertex " + std::to_string(u));
  adjacency_[u].set(v);
  adjacency_[v].set(u);
}

void CliqueGraph::set_labels(Layout layout, std::vector<TransversalSet> labels) {
  if (labels.size() != vertex_count())
    throw UsageError("label count does not match vertex count");
  layout_ = layout;
  labels_ = std::move(labels);
}

CliqueGraph build_product_graph(int n, int k, int ell, std::uint64_t vertex_budget) {
  const Layout layout(ell, n, k);
  const auto subsets = k_subsets_colex(n, k);
  const std::uint64_t s = subsets.size();
  std::uint64_t total = 1;
  for (int i = 0; i < ell; ++i) {
    if (total > vertex_budget / s) {
      std::ostringstream msg;
      msg << "product graph KG(" << n << "," << k << ")^" << ell << " has " << binomial(n, k)
          << "^" << ell << " = " << pow(BigInt(binomial(n, k)), static_cast<unsigned>(ell))
          << " vertices; vertex budget is " << vertex_budget;
      throw BudgetError(msg.str());
    }
    total *= s;
  }
  const std::size_t count = static_cast<std::size_t>(total);

  std::vector<std::vector<char>> disjoint(s, std::vector<char>(s, 1));
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b)
      for (int x : subsets[a])
        for (int y : subsets[b])
          if (x == y)
            disjoint[a][b] = 0;

  // digit[v][i]: subset index of vertex v in block i (block 0 most significant).
  std::vector<std::vector<std::uint32_t>> digit(count, std::vector<std::uint32_t>(ell));
  for (std::size_t v = 0; v < count; ++v) {
    std::size_t rest = v;
    for (int i = ell - 1; i >= 0; --i) {
      digit[v][i] = static_cast<std::uint32_t>(rest % s);
      rest /= s;
    }
  }

  // Row of u is the xor over blocks i of {v : subset u_i disjoint from v_i}.
  std::vector<std::vector<Bitset>> disjoint_rows(ell, std::vector<Bitset>(s, Bitset(count)));
  for (int i = 0; i < ell; ++i)
    for (std::size_t v = 0; v < count; ++v)
      for (std::size_t a = 0; a < s; ++a)
        if (disjoint[a][digit[v][i]])
          disjoint_rows[i][a].set(v);

  CliqueGraph graph(count);
  std::vector<TransversalSet> labels;
  labels.reserve(count);
  for (std::size_t u = 0; u < count; ++u) {
    Bitset row(count);
    Bitset label(layout.universe_size());
    for (int i = 0; i < ell; ++i) {
      row ^= disjoint_rows[i][digit[u][i]];
      for (int x : subsets[digit[u][i]])
        label.set(layout.element(i, x));
    }
    for (std::size_t v = row.find_first(); v < count; v = row.find_next(v + 1))
      if (v > u)
        graph.add_edge(u, v);
    labels.emplace_back(std::move(label));
  }
  graph.set_labels(layout, std::move(labels));
  return graph;
}

CliqueGraph family_graph(const Family &family) {
  CliqueGraph graph(family.size());
  const auto &m = family.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (xor_adjacent(m[i], m[j], family.layout()))
        graph.add_edge(i, j);
  graph.set_labels(family.layout(), family.members());
  return graph;
}

void write_dimacs(std::ostream &out, const CliqueGraph &graph) {
  out << "p edge " << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
  for (std::size_t u = 0; u < graph.vertex_count(); ++u) {
    const Bitset &row = graph.neighbors(u);
    for (std::size_t v = row.find_next(u + 1); v < row.size(); v = row.find_next(v + 1))
      out << "e " << u + 1 << ' ' << v + 1 << '\n';
  }
}

CliqueGraph read_dimacs(std::istream &in) {
  std::optional<CliqueGraph> graph;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag == "c")
      continue;
    if (tag == "p") {
      std::string kind;
      long long v = 0, e = 0;
      if (!(fields >> kind >> v >> e) || v < 0)
        throw ParseError(line_no, 2, "expected 'p edge V E'");
      if (graph)
        throw ParseError(line_no, 1, "duplicate problem line");
      graph.emplace(static_cast<std::size_t>(v));
    } else if (tag == "e") {
      if (!graph)
        throw ParseError(line_no, 1, "edge before problem line");
      long long u = 0, v = 0;
      if (!(fields >> u))
        throw ParseError(line_no, 2, "expected vertex");
      if (!(fields >> v))
        throw ParseError(line_no, 3, "expected vertex");
      const auto count = static_cast<long long>(graph->vertex_count());
      if (u < 1 || u > count)
        throw ParseError(line_no, 2, "vertex out of range");
      if (v < 1 || v > count)
        throw ParseError(line_no, 3, "vertex out of range");
      if (u != v)
        graph->add_edge(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
    } else {
      throw ParseError(line_no, 1, "unknown line type '" + tag + "'");
    }
  }
  if (!graph)
    throw ParseError(line_no + 1, 1, "missing problem line");
  return std::move(*graph);
}

} // namespace xorkneser
