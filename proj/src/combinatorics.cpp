#include "xorkneser/combinatorics.hpp"

#include <limits>

#include "xorkneser/errors.hpp"

namespace xorkneser {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::uint64_t binomial_u64(unsigned n, unsigned k) {
  BigInt r = binomial(n, k);
  if (r > std::numeric_limits<std::uint64_t>::max())
    throw UsageError("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                     ") exceeds 64 bits");
  return static_cast<std::uint64_t>(r);
}

std::vector<std::vector<int>> k_subsets_colex(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n)
    return out;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i)
    c[i] = i;
  while (true) {
    out.push_back(c);
    // Colex successor: bump the lowest position that can move up, reset
    // everything below it to the minimal prefix.
    int i = 0;
    while (i < k && ((i + 1 < k && c[i] + 1 == c[i + 1]) || (i + 1 == k && c[i] + 1 == n)))
      ++i;
    if (i == k)
      break;
    ++c[i];
    for (int j = 0; j < i; ++j)
      c[j] = j;
  }
  return out;
}

std::vector<std::vector<int>> k_subsets_lex(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n)
    return out;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i)
    c[i] = i;
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i)
      --i;
    if (i < 0)
      break;
    ++c[i];
    for (int j = i + 1; j < k; ++j)
      c[j] = c[j - 1] + 1;
  }
  return out;
}

bool is_prime(std::uint64_t q) {
  if (q < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0)
      return false;
  return true;
}

} // namespace xorkneser
