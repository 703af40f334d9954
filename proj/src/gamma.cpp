#include "xorkneser/analysis.hpp"
#include "xorkneser/errors.hpp"

namespace xorkneser {

BigRational gamma_raw(int k) {
  if (k < 2 || k > 1000)
    throw UsageError("gamma is defined for 2 <= k <= 1000 (got k=" + std::to_string(k) + ")");
  const BigInt c2 = binomial(2 * k, k);
  const BigInt c3_2 = binomial(3 * k, 2 * k);
  const BigInt c3_1 = binomial(3 * k, k);
  const BigInt km2 = k - 2;
  BigRational inv = 1;
  inv -= BigRational(km2 * (k - 3), 2 * c2);
  inv -= BigRational(km2, c3_2);
  inv -= BigRational(km2 * c2, c3_1);
  return 1 / inv - 1;
}

BigRational gamma_upper(int k) {
  if (k == 2)
    return BigRational(1, 3);
  return gamma_raw(k);
}

double to_double(const BigRational &r) { return r.convert_to<double>(); }

std::string to_string(const BigRational &r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

} // namespace xorkneser
