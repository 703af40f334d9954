#include <algorithm>

#include "xorkneser/analysis.hpp"
#include "xorkneser/errors.hpp"

namespace xorkneser {

namespace {

void require_two_blocks(const Family &family) {
  if (family.layout().ell() != 2)
    throw UsageError("operation needs a two-block family (got ell=" +
                     std::to_string(family.layout().ell()) + ")");
}

// Degrees of block `block` restricted to members flagged in `alive`.
std::vector<std::size_t> block_degrees(const Family &family, int block,
                                       const std::vector<char> &alive) {
  const Layout &layout = family.layout();
  std::vector<std::size_t> deg(layout.n(), 0);
  const std::size_t lo = layout.block_begin(block);
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!alive[i])
      continue;
    const Bitset &bits = family[i].bits();
    for (std::size_t e = bits.find_next(lo); e < lo + layout.n(); e = bits.find_next(e + 1))
      ++deg[e - lo];
  }
  return deg;
}

bool meet_in_block(const TransversalSet &a, const TransversalSet &b, const Layout &layout,
                   int block) {
  const std::size_t lo = layout.block_begin(block);
  const Bitset common = a.bits() & b.bits();
  return common.find_next(lo) < lo + layout.n();
}

} // namespace

CrossMatching PeelingTrace::matching(int k) const {
  CrossMatching m;
  m.k = k;
  m.groups = a_traces;
  return m;
}

PeelingTrace peel(const Family &family) {
  require_two_blocks(family);
  const Layout &layout = family.layout();
  const std::size_t k = static_cast<std::size_t>(layout.k());
  const std::size_t b_lo = layout.block_begin(1);
  PeelingTrace trace;

  std::vector<char> alive(family.size(), 1);
  {
    const auto deg = block_degrees(family, 1, alive);
    trace.degree_exceeds_k = std::any_of(deg.begin(), deg.end(), [&](std::size_t d) { return d > k; });
  }

  std::size_t removed = 0;
  while (true) {
    const auto deg = block_degrees(family, 1, alive);
    const auto top = std::max_element(deg.begin(), deg.end()); // first maximum
    if (top == deg.end() || *top <= 1)
      break;
    PeelRound round;
    round.pivot = b_lo + static_cast<std::size_t>(top - deg.begin());
    for (std::size_t i = 0; i < family.size(); ++i)
      if (alive[i] && family[i].contains(round.pivot))
        round.containing.push_back(i);
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (!alive[i] || family[i].contains(round.pivot))
        continue;
      for (std::size_t z : round.containing) {
        if (meet_in_block(family[i], family[z], layout, 1)) {
          round.touching.push_back(i);
          break;
        }
      }
    }
    round.d = round.containing.size();
    round.accounting_ok =
        round.containing.size() + round.touching.size() <= round.d + (k - 1) * round.d * (round.d - 1);

    auto &traces = trace.a_traces.emplace_back();
    for (std::size_t z : round.containing) {
      auto &a_part = traces.emplace_back();
      const Bitset &bits = family[z].bits();
      for (std::size_t e = bits.find_first(); e < static_cast<std::size_t>(layout.n());
           e = bits.find_next(e + 1))
        a_part.push_back(static_cast<int>(e));
    }
    for (std::size_t i : round.containing)
      alive[i] = 0;
    for (std::size_t i : round.touching)
      alive[i] = 0;
    removed += round.containing.size() + round.touching.size();
    trace.rounds.push_back(std::move(round));
  }

  for (std::size_t i = 0; i < family.size(); ++i)
    if (alive[i])
      trace.residual.push_back(i);

  trace.residual_b_disjoint = true;
  for (std::size_t a = 0; a < trace.residual.size() && trace.residual_b_disjoint; ++a)
    for (std::size_t b = a + 1; b < trace.residual.size(); ++b)
      if (meet_in_block(family[trace.residual[a]], family[trace.residual[b]], layout, 1)) {
        trace.residual_b_disjoint = false;
        break;
      }

  std::vector<int> hits(family.size(), 0);
  for (const auto &r : trace.rounds) {
    for (std::size_t i : r.containing)
      ++hits[i];
    for (std::size_t i : r.touching)
      ++hits[i];
  }
  for (std::size_t i : trace.residual)
    ++hits[i];
  trace.partition_ok = family.size() == trace.residual.size() + removed &&
                       std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
  return trace;
}

Dichotomy degree_dichotomy(const Family &family) {
  require_two_blocks(family);
  const std::uint64_t k = static_cast<std::uint64_t>(family.layout().k());
  if (family.size() <= 2 * k * k * k)
    return Dichotomy::Inapplicable;
  const std::vector<char> alive(family.size(), 1);
  const auto a = block_degrees(family, 0, alive);
  const auto b = block_degrees(family, 1, alive);
  const std::size_t max_a = a.empty() ? 0 : *std::max_element(a.begin(), a.end());
  const std::size_t max_b = b.empty() ? 0 : *std::max_element(b.begin(), b.end());
  return (max_a <= k || max_b <= k) ? Dichotomy::Holds : Dichotomy::Violated;
}

} // namespace xorkneser
