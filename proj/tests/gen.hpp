#pragma once

// Small random generators for the property tests. Fixed seeds keep every
// run identical.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "ffsubsum/counts.hpp"
#include "ffsubsum/gf.hpp"

namespace ffsubsum::gen {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  /// One of the fields with q <= max_q.
  Field field(std::uint32_t max_q = 32) {
    static const std::vector<std::pair<std::uint32_t, std::uint32_t>> all{
        {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1},
        {2, 4}, {17, 1}, {19, 1}, {23, 1}, {5, 2}, {3, 3}, {29, 1}, {31, 1}, {2, 5}};
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ok;
    for (auto [p, e] : all) {
      std::uint32_t q = 1;
      for (std::uint32_t i = 0; i < e; ++i) q *= p;
      if (q <= max_q) ok.emplace_back(p, e);
    }
    auto [p, e] = ok[below(ok.size())];
    return Field::make(p, e);
  }

  Element element(const Field& f) { return f.from_code(static_cast<Code>(below(f.q()))); }
  Element nonzero(const Field& f) { return f.from_code(static_cast<Code>(1 + below(f.q() - 1))); }

  /// c distinct elements of f.
  std::vector<Element> distinct(const Field& f, std::size_t c) {
    std::vector<Code> codes(f.q());
    for (Code i = 0; i < f.q(); ++i) codes[i] = i;
    std::shuffle(codes.begin(), codes.end(), rng_);
    std::vector<Element> out;
    for (std::size_t i = 0; i < c; ++i) out.push_back(f.from_code(codes[i]));
    return out;
  }

  ExclusionSet exclusions(const Field& f, std::size_t c) { return ExclusionSet(f, distinct(f, c)); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ffsubsum::gen
