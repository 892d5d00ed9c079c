#pragma once

// Ground-truth subset-sum counts by dynamic programming over (size, sum), and
// by literal enumeration for tiny inputs.

#include <cstdint>
#include <span>
#include <vector>

#include "ffsubsum/combinatorics.hpp"
#include "ffsubsum/counts.hpp"
#include "ffsubsum/gf.hpp"

namespace ffsubsum {

/// N(k, b, D) for all 0 <= k <= n and all b.
class CountTable {
 public:
  CountTable(ExclusionSet exclusions, std::vector<BigInt> cells);

  const ExclusionSet& exclusions() const { return exclusions_; }
  std::uint64_t max_k() const { return exclusions_.n(); }
  const BigInt& at(std::uint64_t k, Code b) const;
  const BigInt& at(std::uint64_t k, const Element& b) const { return at(k, b.code()); }
  /// sum over b of N(k, b, D)
  BigInt row_sum(std::uint64_t k) const;

  friend bool operator==(const CountTable& a, const CountTable& b) { return a.cells_ == b.cells_; }

 private:
  ExclusionSet exclusions_;
  std::vector<BigInt> cells_;  // (n+1) x q, row-major by k
};

/// Row-major (size+1) x q table of subset counts of the given elements,
/// processed in the given order. OpenMP-parallel over the (j, s) grid.
std::vector<BigInt> dp_subset_counts(const Field& f, std::span<const Code> elements);
/// In-place single-buffer reference of dp_subset_counts.
std::vector<BigInt> dp_subset_counts_serial(const Field& f, std::span<const Code> elements);

CountTable dp_count_table(const ExclusionSet& exclusions);
CountTable dp_count_table_serial(const ExclusionSet& exclusions);

inline constexpr std::uint64_t kNaiveGuard = 10'000'000;

/// Literal enumeration of all k-subsets; throws GuardExceeded when
/// C(n, k) > guard.
BigInt naive_count(const ExclusionSet& exclusions, std::uint64_t k, const Element& b,
                   std::uint64_t guard = kNaiveGuard);

}  // namespace ffsubsum
