#include "xorkneser/setsystem.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "xorkneser/errors.hpp"

namespace xorkneser {

Layout::Layout(int ell, int n, int k) : ell_(ell), n_(n), k_(k) {
  if (ell < 1 || n < 1 || k < 1)
    throw UsageError("layout parameters must be positive (ell=" + std::to_string(ell) +
                     ", n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  if (k > n)
    throw UsageError("layout requires k <= n (k=" + std::to_string(k) +
                     ", n=" + std::to_string(n) + ")");
}

TransversalSet::TransversalSet(const Layout &layout, std::span<const std::size_t> elements)
    : bits_(layout.universe_size()) {
  for (std::size_t e : elements) {
    if (e >= layout.universe_size())
      throw UsageError("element " + std::to_string(e) + " outside universe of size " +
                       std::to_string(layout.universe_size()));
    if (bits_.test(e))
      throw UsageError("duplicate element " + std::to_string(e));
    bits_.set(e);
  }
}

bool TransversalSet::conforms(const Layout &layout) const {
  if (bits_.size() != layout.universe_size())
    return false;
  for (int b = 0; b < layout.ell(); ++b) {
    const std::size_t lo = layout.block_begin(b);
    if (bits_.count_range(lo, lo + layout.n()) != static_cast<std::size_t>(layout.k()))
      return false;
  }
  return true;
}

std::strong_ordering operator<=>(const TransversalSet &a, const TransversalSet &b) {
  const auto &wa = a.bits_.words();
  const auto &wb = b.bits_.words();
  const std::size_t common = std::min(wa.size(), wb.size());
  for (std::size_t w = 0; w < common; ++w) {
    const Bitset::word_type diff = wa[w] ^ wb[w];
    if (!diff)
      continue;
    const std::size_t i = w * Bitset::word_bits + static_cast<std::size_t>(std::countr_zero(diff));
    // Lists agree below i; the one holding i is smaller unless the other
    // list ends here (then it is a proper prefix).
    const bool a_has = a.bits_.test(i);
    const Bitset &other = a_has ? b.bits_ : a.bits_;
    const bool other_continues = other.find_next(i + 1) < other.size();
    const bool a_smaller = a_has == other_continues;
    return a_smaller ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.bits_.size() <=> b.bits_.size();
}

int disjoint_block_count(const TransversalSet &s, const TransversalSet &t, const Layout &layout) {
  if (s.bits().size() != layout.universe_size() || t.bits().size() != layout.universe_size())
    throw UsageError("transversal set length does not match layout universe size " +
                     std::to_string(layout.universe_size()));
  const auto &ws = s.bits().words();
  const auto &wt = t.bits().words();
  int hit = 0;
  int last_block = -1;
  for (std::size_t w = 0; w < ws.size(); ++w) {
    Bitset::word_type common = ws[w] & wt[w];
    while (common) {
      const std::size_t e = w * Bitset::word_bits + static_cast<std::size_t>(std::countr_zero(common));
      common &= common - 1;
      const int b = layout.block_of(e);
      if (b != last_block) {
        ++hit;
        last_block = b;
      }
    }
  }
  return layout.ell() - hit;
}

bool xor_adjacent(const TransversalSet &s, const TransversalSet &t, const Layout &layout) {
  return disjoint_block_count(s, t, layout) % 2 == 1;
}

Family::Family(Layout layout, std::vector<TransversalSet> members)
    : layout_(layout), members_(std::move(members)) {
  for (const auto &m : members_)
    if (m.bits().size() != layout_.universe_size())
      throw UsageError("member length " + std::to_string(m.bits().size()) +
                       " does not match layout universe size " +
                       std::to_string(layout_.universe_size()));
  std::sort(members_.begin(), members_.end());
  auto dup = std::adjacent_find(members_.begin(), members_.end());
  if (dup != members_.end())
    throw UsageError("family contains a duplicate member");
}

VerifyReport verify_family(const Family &family, unsigned threads) {
  const auto &members = family.members();
  const Layout &layout = family.layout();
  VerifyReport report;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!members[i].conforms(layout)) {
      int bad = 0;
      while (bad < layout.ell()) {
        const std::size_t lo = layout.block_begin(bad);
        if (members[i].bits().count_range(lo, lo + layout.n()) != static_cast<std::size_t>(layout.k()))
          break;
        ++bad;
      }
      report.valid = false;
      report.violation = Violation{Violation::Kind::NonUniform, i, i, bad};
      return report;
    }
  }

  // Each row i scans j > i; the smallest violating row wins, so the result
  // does not depend on the number of workers.
  const std::size_t count = members.size();
  std::atomic<std::size_t> next_row{0};
  std::atomic<std::size_t> best_row{count};
  std::vector<std::optional<Violation>> row_hit(count);
  auto worker = [&] {
    while (true) {
      const std::size_t i = next_row.fetch_add(1);
      if (i >= count || i > best_row.load())
        return;
      for (std::size_t j = i + 1; j < count; ++j) {
        const int d = disjoint_block_count(members[i], members[j], layout);
        if (d % 2 == 0) {
          row_hit[i] = Violation{Violation::Kind::EvenDisjoint, i, j, d};
          std::size_t cur = best_row.load();
          while (i < cur && !best_row.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1 || count < 64) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(worker);
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (row_hit[i]) {
      report.valid = false;
      report.violation = row_hit[i];
      break;
    }
  }
  return report;
}

std::size_t degree(const Family &family, std::size_t element) {
  if (element >= family.layout().universe_size())
    throw UsageError("element " + std::to_string(element) + " outside universe of size " +
                     std::to_string(family.layout().universe_size()));
  std::size_t d = 0;
  for (const auto &m : family.members())
    d += m.bits().test(element) ? 1 : 0;
  return d;
}

} // namespace xorkneser
