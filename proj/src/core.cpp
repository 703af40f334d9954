#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "xorkneser/constructions.hpp"
#include "xorkneser/errors.hpp"

namespace xorkneser {

std::vector<std::vector<int>> Core::classes() const {
  std::vector<std::vector<int>> out(ell);
  for (std::size_t u = 0; u < class_of.size(); ++u)
    out[class_of[u]].push_back(static_cast<int>(u));
  return out;
}

std::vector<int> Core::type() const {
  std::vector<int> sizes(ell, 0);
  for (int c : class_of)
    ++sizes[c];
  return sizes;
}

std::optional<std::string> core_violation(const Core &core) {
  const int ell = core.ell;
  if (ell < 3)
    return "core needs ell >= 3";
  if (static_cast<int>(core.sets.size()) != ell)
    return "expected " + std::to_string(ell) + " core sets";
  for (int c : core.class_of)
    if (c < 0 || c >= ell)
      return "class index out of range";
  const int usize = static_cast<int>(core.universe_size());
  std::vector<char> used(usize, 0);
  for (int i = 0; i < ell; ++i) {
    const auto &b = core.sets[i];
    if (static_cast<int>(b.size()) != ell - 1)
      return "|B_" + std::to_string(i) + "| != ell-1";
    std::vector<int> hits(ell, 0);
    for (int u : b) {
      if (u < 0 || u >= usize)
        return "element out of range in B_" + std::to_string(i);
      ++hits[core.class_of[u]];
      used[u] = 1;
    }
    for (int j = 0; j < ell; ++j) {
      const int want = i == j ? 0 : 1;
      if (hits[j] != want)
        return "B_" + std::to_string(i) + " meets class " + std::to_string(j) + " in " +
               std::to_string(hits[j]) + " elements";
    }
  }
  if (std::find(used.begin(), used.end(), 0) != used.end())
    return "universe contains an element outside every core set";
  for (int i = 0; i < ell; ++i) {
    for (int j = i; j < ell; ++j) {
      std::vector<int> common;
      std::set_intersection(core.sets[i].begin(), core.sets[i].end(), core.sets[j].begin(),
                            core.sets[j].end(), std::back_inserter(common));
      if ((static_cast<int>(common.size()) + ell) % 2 == 0)
        return "|B_" + std::to_string(i) + " ∩ B_" + std::to_string(j) + "| + ell is even";
    }
  }
  return std::nullopt;
}

namespace {

// Local ids shared by the explicit cores: a_{1,2}=0, a_{1,3}=1, a_{2,1}=2,
// a_{2,3}=3, a_{3,1}=4, a_{3,2}=5, a_4=6, a_5=7.
enum : int { a12 = 0, a13, a21, a23, a31, a32, a4, a5 };

Core finish(Core core) {
  for (auto &b : core.sets)
    std::sort(b.begin(), b.end());
  if (auto bad = core_violation(core))
    throw std::logic_error("core construction produced an invalid core: " + *bad);
  return core;
}

} // namespace

Core core3() {
  Core c;
  c.ell = 3;
  c.class_of = {0, 0, 1, 1, 2, 2};
  // B_α = {a_{α-1,α}, a_{α+1,α}}, indices mod 3
  c.sets = {{a31, a21}, {a12, a32}, {a23, a13}};
  return finish(std::move(c));
}

Core core4() {
  Core c;
  c.ell = 4;
  c.class_of = {0, 0, 1, 1, 2, 2, 3};
  c.sets = {{a21, a31, a4}, {a12, a32, a4}, {a13, a23, a4}, {a13, a21, a32}};
  return finish(std::move(c));
}

Core core5() {
  Core c;
  c.ell = 5;
  c.class_of = {0, 0, 1, 1, 2, 2, 3, 4};
  c.sets = {{a21, a31, a4, a5},
            {a12, a32, a4, a5},
            {a13, a23, a4, a5},
            {a13, a21, a32, a5},
            {a12, a23, a31, a4}};
  return finish(std::move(c));
}

Core permute_classes(const Core &core, std::span<const int> order) {
  const int ell = core.ell;
  if (static_cast<int>(order.size()) != ell)
    throw UsageError("class permutation has wrong length");
  std::vector<int> inverse(ell, -1);
  for (int i = 0; i < ell; ++i) {
    if (order[i] < 0 || order[i] >= ell || inverse[order[i]] != -1)
      throw UsageError("class order is not a permutation");
    inverse[order[i]] = i;
  }
  Core out;
  out.ell = ell;
  out.class_of.reserve(core.class_of.size());
  for (int c : core.class_of)
    out.class_of.push_back(inverse[c]);
  for (int i = 0; i < ell; ++i)
    out.sets.push_back(core.sets[order[i]]);
  return out;
}

Core rotate_classes_right(const Core &core) {
  std::vector<int> order(core.ell);
  order[0] = core.ell - 1;
  std::iota(order.begin() + 1, order.end(), 0);
  return permute_classes(core, order);
}

Core fuse(const Core &first, const Core &second) {
  const int p = first.ell;
  const int q = second.ell;
  if (p < 3 || q < 3)
    throw UsageError("fusion needs two cores with at least 3 classes each (got " +
                     std::to_string(p) + ", " + std::to_string(q) + ")");
  const int offset = static_cast<int>(first.universe_size());

  Core out;
  out.ell = p + q - 1;
  out.class_of = first.class_of;
  for (int c : second.class_of)
    out.class_of.push_back(c == 0 ? p - 1 : c + p - 1);

  auto join = [&](const std::vector<int> &lhs, const std::vector<int> &rhs) {
    std::vector<int> b = lhs;
    for (int u : rhs)
      b.push_back(u + offset);
    return b;
  };
  for (int i = 0; i < p; ++i)
    out.sets.push_back(join(first.sets[i], second.sets[0]));
  for (int j = 1; j < q; ++j)
    out.sets.push_back(join(first.sets[p - 1], second.sets[j]));
  return finish(std::move(out));
}

namespace {

// (4m+1)-core of type (1,2,...,2,1), m >= 1.
Core chain_of_fives(int m) {
  const Core piece = rotate_classes_right(core5());
  Core acc = piece;
  for (int i = 1; i < m; ++i)
    acc = fuse(acc, piece);
  return acc;
}

// (4m+4)-core of type (2,...,2,1), m >= 0.
Core four_mod_four(int m) {
  if (m == 0)
    return core4();
  return fuse(core4(), chain_of_fives(m));
}

} // namespace

Core build_core(int ell) {
  if (ell < 3)
    throw UsageError("cores exist only for ell >= 3 (got " + std::to_string(ell) + ")");
  Core out;
  if (ell == 3)
    out = core3();
  else if (ell == 4)
    out = core4();
  else if (ell == 5)
    out = core5();
  else if (ell % 4 == 1)
    out = chain_of_fives((ell - 1) / 4);
  else if (ell % 4 == 0)
    out = four_mod_four((ell - 4) / 4);
  else if (ell % 4 == 3)
    out = fuse(four_mod_four((ell - 7) / 4), rotate_classes_right(core4()));
  else
    out = fuse(core3(), rotate_classes_right(four_mod_four((ell - 6) / 4)));
  if (out.ell != ell || out.universe_size() > static_cast<std::size_t>(2 * ell + 1))
    throw std::logic_error("core schedule broke its size guarantee for ell=" + std::to_string(ell));
  return out;
}

Family core_to_family(const Core &core, std::span<const int> n_sizes) {
  const int ell = core.ell;
  if (static_cast<int>(n_sizes.size()) != ell)
    throw UsageError("expected " + std::to_string(ell) + " block sizes, got " +
                     std::to_string(n_sizes.size()));
  const auto type = core.type();
  for (int i = 0; i < ell; ++i)
    if (n_sizes[i] < type[i] || n_sizes[i] < 1)
      throw PreconditionError("block " + std::to_string(i) + " has size " +
                              std::to_string(n_sizes[i]) + " but the core uses " +
                              std::to_string(type[i]) + " of its elements");
  const int n = *std::max_element(n_sizes.begin(), n_sizes.end());
  const Layout layout(ell, n, 1);

  std::vector<std::size_t> global(core.universe_size());
  std::vector<int> fill(ell, 0);
  for (std::size_t u = 0; u < core.universe_size(); ++u) {
    const int c = core.class_of[u];
    global[u] = layout.element(c, fill[c]++);
  }

  std::vector<TransversalSet> members;
  for (int i = 0; i < ell; ++i) {
    for (int x = type[i]; x < n_sizes[i]; ++x) {
      Bitset bits(layout.universe_size());
      for (int u : core.sets[i])
        bits.set(global[u]);
      bits.set(layout.element(i, x));
      members.emplace_back(std::move(bits));
    }
  }
  return Family(layout, std::move(members));
}

} // namespace xorkneser
