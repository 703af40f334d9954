#include <bit>

#include "xorkneser/analysis.hpp"
#include "xorkneser/errors.hpp"

namespace xorkneser {

namespace {

void require_positive(int n, int k, int ell) {
  if (n < 1 || k < 1 || ell < 1)
    throw UsageError("bounds need n, k, ell >= 1 (got n=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + ", ell=" + std::to_string(ell) + ")");
}

} // namespace

int floor_log2(std::uint64_t x) {
  if (x == 0)
    throw UsageError("floor_log2 of zero");
  return 63 - std::countl_zero(x);
}

BigInt lower_c2(int k) {
  if (k < 1)
    throw UsageError("k must be positive");
  return binomial(2 * k, k) * k / 2 - k;
}

BigRational upper_c2(int n, int k) {
  require_positive(n, k, 2);
  if (k < 2)
    throw UsageError("two-block upper bound needs k >= 2 (got k=" + std::to_string(k) + ")");
  return BigRational(n / k) + (1 + gamma_upper(k)) * k * BigRational(binomial(2 * k, k));
}

std::pair<long long, long long> t1_bounds(int n, int ell) {
  require_positive(n, 1, ell);
  if (ell < 3)
    throw UsageError("k = 1 bounds need ell >= 3 (got ell=" + std::to_string(ell) + ")");
  const long long L = ell, N = n;
  return {L * N - 2 * L - 1, L * N - L + 1};
}

BigInt power_upper(int n, int k, int ell) {
  require_positive(n, k, ell);
  BigInt even_product = 1;
  for (int j = 2; j <= ell; j += 2)
    even_product *= j;
  if (ell % 2 == 0)
    return even_product * pow(BigInt(n), static_cast<unsigned>(ell / 2));
  return even_product * pow(BigInt(n), static_cast<unsigned>((ell + 1) / 2)) / k;
}

BigInt power_upper_summary(int n, int ell) {
  require_positive(n, 1, ell);
  const int half = ell / 2;
  BigInt factorial = 1;
  for (int j = 2; j <= half; ++j)
    factorial *= j;
  return pow(BigInt(2), static_cast<unsigned>(half)) * factorial *
         pow(BigInt(n), static_cast<unsigned>((ell + 1) / 2));
}

std::optional<BigInt> power_lower(int n, int k, int ell) {
  require_positive(n, k, ell);
  const int exponent = floor_log2(static_cast<std::uint64_t>(ell) + 1);
  if (k < exponent)
    return std::nullopt;
  return pow(BigInt(n / k), static_cast<unsigned>(exponent));
}

} // namespace xorkneser
