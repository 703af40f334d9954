#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace xorkneser {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt binomial(unsigned n, unsigned k);

// Exact binomial in 64 bits; throws UsageError on overflow.
std::uint64_t binomial_u64(unsigned n, unsigned k);

// All k-subsets of {0..n-1} in colexicographic order, each sorted ascending.
std::vector<std::vector<int>> k_subsets_colex(int n, int k);

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> k_subsets_lex(int n, int k);

bool is_prime(std::uint64_t q);

} // namespace xorkneser
