#include "ffsubsum/combinatorics.hpp"

#include <stdexcept>

namespace ffsubsum {

BigInt factorial(std::uint64_t k) {
  BigInt r = 1;
  for (std::uint64_t i = 2; i <= k; ++i) r *= static_cast<unsigned long>(i);
  return r;
}

BigInt falling_factorial(std::int64_t x, std::uint64_t k) {
  BigInt r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r *= static_cast<long>(x - static_cast<std::int64_t>(i));
  return r;
}

BigInt binom(std::int64_t x, std::uint64_t k) {
  if (x < 0) {
    // (x)_k = (-1)^k (k - x - 1)_k
    BigInt r = binom(static_cast<std::int64_t>(k) - x - 1, k);
    return (k % 2 == 0) ? r : BigInt(-r);
  }
  const auto n = static_cast<std::uint64_t>(x);
  if (k > n) return 0;
  const std::uint64_t kk = (k > n - k) ? n - k : k;
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= kk; ++i) {
    r *= static_cast<unsigned long>(n - kk + i);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return r;
}

BigInt alt_prefix_sum(std::int64_t r, std::uint64_t m) {
  return minus_one_pow(static_cast<std::int64_t>(m)) * binom(r - 1, m);
}

BigInt alt_prefix_sum_literal(std::int64_t r, std::uint64_t m) {
  BigInt s = 0;
  for (std::uint64_t j = 0; j <= m; ++j) s += minus_one_pow(static_cast<std::int64_t>(j)) * binom(r, j);
  return s;
}

BigInt block_alt_sum(std::int64_t a, std::uint64_t k, std::uint64_t p) {
  if (p == 0) throw std::invalid_argument("block length must be positive");
  const auto blocks = static_cast<std::int64_t>(k / p);
  const auto tail = static_cast<std::int64_t>(k % p);
  const auto ub = static_cast<std::uint64_t>(blocks);
  const int sign = minus_one_pow(blocks);
  const auto pp = static_cast<long>(p);
  return -pp * sign * binom(a - 1, ub) + (pp - 1 - tail) * sign * binom(a, ub);
}

BigInt block_alt_sum_literal(std::int64_t a, std::uint64_t k, std::uint64_t p) {
  if (p == 0) throw std::invalid_argument("block length must be positive");
  BigInt s = 0;
  for (std::uint64_t j = 0; j <= k; ++j) {
    const auto n = static_cast<std::int64_t>(j / p);
    s -= minus_one_pow(n) * binom(a, static_cast<std::uint64_t>(n));
  }
  return s;
}

}  // namespace ffsubsum
