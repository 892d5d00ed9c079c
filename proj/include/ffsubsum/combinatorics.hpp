#pragma once

// Exact integer combinatorics: falling factorials, binomial coefficients with
// an integer upper argument of either sign, and alternating binomial sums.

#include <cstdint>

#include <gmpxx.h>

namespace ffsubsum {

using BigInt = mpz_class;

/// (-1)^n as +1 or -1.
constexpr int minus_one_pow(std::int64_t n) { return (n % 2 == 0) ? 1 : -1; }

/// Least non-negative residue of k modulo m.
constexpr std::int64_t residue(std::int64_t k, std::int64_t m) { return ((k % m) + m) % m; }
/// floor(k / m) for m > 0.
constexpr std::int64_t floor_div(std::int64_t k, std::int64_t m) {
  return (k - residue(k, m)) / m;
}

BigInt factorial(std::uint64_t k);

/// x (x-1) ... (x-k+1); equals 1 for k = 0.
BigInt falling_factorial(std::int64_t x, std::uint64_t k);

/// (x)_k / k!, exact for every integer x.
BigInt binom(std::int64_t x, std::uint64_t k);

/// sum_{j=0}^{m} (-1)^j binom(r, j), evaluated as (-1)^m binom(r-1, m).
BigInt alt_prefix_sum(std::int64_t r, std::uint64_t m);
BigInt alt_prefix_sum_literal(std::int64_t r, std::uint64_t m);

/// sum_{j=0}^{k} -(-1)^{floor(j/p)} binom(a, floor(j/p)), evaluated in closed
/// form by grouping the summands into blocks of length p.
BigInt block_alt_sum(std::int64_t a, std::uint64_t k, std::uint64_t p);
BigInt block_alt_sum_literal(std::int64_t a, std::uint64_t k, std::uint64_t p);

}  // namespace ffsubsum
