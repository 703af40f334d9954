#include <algorithm>
#include <cmath>
#include <numeric>

#include "xorkneser/analysis.hpp"
#include "xorkneser/errors.hpp"
#include "xorkneser/rng.hpp"

namespace xorkneser {

namespace {

bool meets(const std::vector<int> &a, const std::vector<int> &b) {
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end())
      return true;
  return false;
}

std::string structure_problem(const CrossMatching &m) {
  if (m.k < 2)
    return "k must be at least 2";
  if (m.groups.size() < 2)
    return "need at least 2 groups";
  for (std::size_t i = 0; i < m.groups.size(); ++i) {
    const auto &g = m.groups[i];
    if (g.size() < 2)
      return "group " + std::to_string(i) + " has fewer than 2 sets";
    for (std::size_t a = 0; a < g.size(); ++a) {
      std::vector<int> sorted = g[a];
      std::sort(sorted.begin(), sorted.end());
      if (static_cast<int>(sorted.size()) != m.k ||
          std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return "set " + std::to_string(a) + " of group " + std::to_string(i) +
               " is not a k-set";
      for (std::size_t b = a + 1; b < g.size(); ++b)
        if (meets(g[a], g[b]))
          return "sets " + std::to_string(a) + " and " + std::to_string(b) + " of group " +
                 std::to_string(i) + " intersect";
    }
  }
  for (std::size_t i = 0; i < m.groups.size(); ++i)
    for (std::size_t j = i + 1; j < m.groups.size(); ++j)
      for (const auto &x : m.groups[i])
        for (const auto &y : m.groups[j])
          if (!meets(x, y))
            return "groups " + std::to_string(i) + " and " + std::to_string(j) +
                   " contain disjoint sets";
  return {};
}

} // namespace

MatchingReport verify_matching(const CrossMatching &matching) {
  MatchingReport report;
  report.reason = structure_problem(matching);
  report.valid = report.reason.empty();
  for (const auto &g : matching.groups)
    report.weight += static_cast<std::uint64_t>(g.size()) * (g.size() > 0 ? g.size() - 1 : 0);
  if (matching.k >= 2) {
    report.bound = (1 + gamma_raw(matching.k)) * BigRational(binomial(2 * matching.k, matching.k));
    report.within_bound = BigRational(report.weight) <= report.bound;
  }
  return report;
}

PermutationTypeEstimate permutation_type_mc(const CrossMatching &matching, std::uint64_t samples,
                                            std::uint64_t seed) {
  if (samples == 0)
    throw UsageError("permutation sampling needs at least one sample");
  const auto report = verify_matching(matching);
  if (!report.valid)
    throw UsageError("permutation sampling needs a valid matching: " + report.reason);

  std::vector<int> ground;
  for (const auto &g : matching.groups)
    for (const auto &s : g)
      ground.insert(ground.end(), s.begin(), s.end());
  std::sort(ground.begin(), ground.end());
  ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
  auto index_of = [&](int x) {
    return static_cast<std::size_t>(std::lower_bound(ground.begin(), ground.end(), x) -
                                    ground.begin());
  };
  std::vector<std::vector<std::vector<std::size_t>>> groups;
  for (const auto &g : matching.groups) {
    auto &out = groups.emplace_back();
    for (const auto &s : g) {
      auto &set = out.emplace_back();
      for (int x : s)
        set.push_back(index_of(x));
    }
  }

  const std::size_t t = groups.size();
  PermutationTypeEstimate est;
  est.samples = samples;
  est.type_counts.assign(t, 0);

  SplitMix64 rng(seed);
  std::vector<std::size_t> position(ground.size());
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::iota(position.begin(), position.end(), 0);
    for (std::size_t i = position.size(); i > 1; --i)
      std::swap(position[i - 1], position[rng.below(i)]);
    std::size_t types = 0;
    for (std::size_t i = 0; i < t; ++i) {
      // Type i iff the smallest set-maximum precedes the largest set-minimum.
      std::size_t lowest_max = SIZE_MAX, highest_min = 0;
      for (const auto &set : groups[i]) {
        std::size_t lo = SIZE_MAX, hi = 0;
        for (std::size_t x : set) {
          lo = std::min(lo, position[x]);
          hi = std::max(hi, position[x]);
        }
        lowest_max = std::min(lowest_max, hi);
        highest_min = std::max(highest_min, lo);
      }
      if (lowest_max < highest_min) {
        ++est.type_counts[i];
        ++types;
      }
    }
    if (types == 0)
      ++est.typeless;
    else if (types > 1)
      ++est.doubly_typed;
  }
  for (std::size_t i = 0; i < t; ++i) {
    const double p = static_cast<double>(est.type_counts[i]) / static_cast<double>(samples);
    est.probability.push_back(p);
    est.standard_error.push_back(std::sqrt(p * (1 - p) / static_cast<double>(samples)));
  }
  return est;
}

} // namespace xorkneser
