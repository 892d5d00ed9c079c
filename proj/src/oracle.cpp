#include "ffsubsum/oracle.hpp"

#include <numeric>
#include <stdexcept>

#include "ffsubsum/errors.hpp"

namespace ffsubsum {

namespace {

// shift[s] = s - x, as codes
std::vector<Code> shift_table(const Field& f, Code x) {
  std::vector<Code> t(f.q());
  for (Code s = 0; s < f.q(); ++s) t[s] = f.sub(s, x);
  return t;
}

std::vector<Code> codes_of(const std::vector<Element>& xs) {
  std::vector<Code> out;
  out.reserve(xs.size());
  for (const Element& x : xs) out.push_back(x.code());
  return out;
}

}  // namespace

CountTable::CountTable(ExclusionSet exclusions, std::vector<BigInt> cells)
    : exclusions_(std::move(exclusions)), cells_(std::move(cells)) {
  if (cells_.size() != (exclusions_.n() + 1) * exclusions_.field().q()) {
    throw std::invalid_argument("count table has the wrong shape");
  }
}

const BigInt& CountTable::at(std::uint64_t k, Code b) const {
  const std::uint64_t q = exclusions_.field().q();
  if (k > max_k() || b >= q) throw std::out_of_range("count table index out of range");
  return cells_[k * q + b];
}

BigInt CountTable::row_sum(std::uint64_t k) const {
  BigInt s = 0;
  for (Code b = 0; b < exclusions_.field().q(); ++b) s += at(k, b);
  return s;
}

std::vector<BigInt> dp_subset_counts(const Field& f, std::span<const Code> elements) {
  const std::size_t q = f.q();
  const std::size_t rows = elements.size() + 1;
  std::vector<BigInt> cur(rows * q);
  std::vector<BigInt> next(rows * q);
  cur[0] = 1;
  next[0] = 1;
  for (std::size_t t = 0; t < elements.size(); ++t) {
    const std::vector<Code> shift = shift_table(f, elements[t]);
    // After t+1 elements only sizes up to t+1 are populated.
    const auto live = static_cast<std::ptrdiff_t>(t + 1);
    const auto cols = static_cast<std::ptrdiff_t>(q);
#pragma omp parallel for collapse(2) schedule(static) if (q * (t + 1) >= 4096)
    for (std::ptrdiff_t j = 1; j <= live; ++j) {
      for (std::ptrdiff_t s = 0; s < cols; ++s) {
        const std::size_t row = static_cast<std::size_t>(j) * q;
        const std::size_t prev = row - q;
        mpz_add(next[row + s].get_mpz_t(), cur[row + s].get_mpz_t(),
                cur[prev + shift[static_cast<std::size_t>(s)]].get_mpz_t());
      }
    }
    cur.swap(next);
  }
  return cur;
}

std::vector<BigInt> dp_subset_counts_serial(const Field& f, std::span<const Code> elements) {
  const std::size_t q = f.q();
  const std::size_t rows = elements.size() + 1;
  std::vector<BigInt> table(rows * q);
  table[0] = 1;
  for (std::size_t t = 0; t < elements.size(); ++t) {
    const Code x = elements[t];
    // Descending j so that row j-1 still holds subsets without x.
    for (std::size_t j = t + 1; j >= 1; --j) {
      for (Code s = 0; s < q; ++s) {
        table[j * q + s] += table[(j - 1) * q + f.sub(s, x)];
      }
    }
  }
  return table;
}

CountTable dp_count_table(const ExclusionSet& exclusions) {
  const auto d = codes_of(exclusions.domain());
  return CountTable(exclusions, dp_subset_counts(exclusions.field(), d));
}

CountTable dp_count_table_serial(const ExclusionSet& exclusions) {
  const auto d = codes_of(exclusions.domain());
  return CountTable(exclusions, dp_subset_counts_serial(exclusions.field(), d));
}

BigInt naive_count(const ExclusionSet& exclusions, std::uint64_t k, const Element& b,
                   std::uint64_t guard) {
  validate(CountQuery{exclusions, k, b});
  const std::uint64_t n = exclusions.n();
  if (binom(static_cast<std::int64_t>(n), k) > BigInt(std::to_string(guard))) {
    throw GuardExceeded("naive enumeration of C(" + std::to_string(n) + "," + std::to_string(k) +
                            ") subsets",
                        guard);
  }
  const Field& f = exclusions.field();
  const auto d = codes_of(exclusions.domain());
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::uint64_t hits = 0;
  while (true) {
    Code s = 0;
    for (std::size_t i : idx) s = f.add(s, d[i]);
    if (s == b.code()) ++hits;
    // next combination in lexicographic order
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return BigInt(std::to_string(hits));
}

}  // namespace ffsubsum
