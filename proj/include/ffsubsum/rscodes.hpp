#pragma once

// Generalized Reed-Solomon codes over an evaluation set D of F_q, exact
// distance to the code, and deep-hole classification for words of degree
// k and k+1.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ffsubsum/combinatorics.hpp"
#include "ffsubsum/gf.hpp"

namespace ffsubsum {

/// Polynomial degree; std::nullopt stands for the degree of the zero
/// polynomial (-infinity) and compares below every integer degree.
using Degree = std::optional<std::size_t>;

class Poly {
 public:
  explicit Poly(Field f) : field_(std::move(f)) {}
  /// Coefficients low degree first; trailing zeros are trimmed.
  Poly(Field f, std::vector<Element> coeffs);

  const Field& field() const { return field_; }
  std::span<const Element> coeffs() const { return coeffs_; }
  Degree degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  Element coeff(std::size_t i) const;
  Element operator()(const Element& x) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  Field field_;
  std::vector<Element> coeffs_;
};

struct Word {
  std::vector<Element> values;
  friend bool operator==(const Word&, const Word&) = default;
};

enum class EvalMode { full, punctured };
enum class Verdict { deep_hole, ordinary };

std::string_view to_string(Verdict v);

struct DistanceBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool codeword = false;  ///< d(u) <= k-1; the bounds do not apply
};

inline constexpr std::uint64_t kDistanceGuard = 10'000'000;

class RSCode {
 public:
  /// Throws std::invalid_argument on repeated points or k outside [1, n].
  RSCode(Field f, std::vector<Element> eval_set, std::size_t k);
  static RSCode over(const Field& f, EvalMode mode, std::size_t k);

  const Field& field() const { return field_; }
  std::span<const Element> eval_set() const { return points_; }
  std::size_t n() const { return points_.size(); }
  std::size_t k() const { return k_; }

  /// Throws std::invalid_argument when deg f >= k.
  Word encode(const Poly& f) const;
  /// Evaluates f at every point; no degree restriction.
  Word evaluate(const Poly& f) const;
  Poly interpolate(const Word& u) const;
  Degree word_degree(const Word& u) const { return interpolate(u).degree(); }
  bool is_codeword(const Word& u) const;

  /// min over codewords v of the Hamming distance, by enumerating all q^k
  /// messages. OpenMP-parallel over messages; throws GuardExceeded when
  /// q^k > guard.
  std::size_t distance_to_code(const Word& u, std::uint64_t guard = kDistanceGuard) const;
  std::size_t distance_to_code_serial(const Word& u, std::uint64_t guard = kDistanceGuard) const;

  /// (n - d(u), n - k) for k <= d(u) <= n-1.
  DistanceBounds theorem_5_1_bounds(const Word& u) const;
  /// Verdict for d(u) in {k, k+1}; throws std::invalid_argument otherwise.
  Verdict classify_m1(const Word& u) const;
  /// Subset-sum target b_1 of a degree-(k+1) word: the sum of the roots of
  /// its monic interpolant.
  Element root_sum_target(const Word& u) const;

  /// Minimum pairwise Hamming distance over all codewords.
  std::size_t minimum_distance(std::uint64_t guard = 1'000'000) const;

  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& u) const;

 private:
  void check_word(const Word& u) const;
  std::uint64_t message_count(std::uint64_t guard) const;

  Field field_;
  std::vector<Element> points_;
  std::size_t k_;
};

struct ScanEntry {
  Element b1;
  BigInt solutions;  ///< N(k+1, b1, D)
  bool deep_hole = false;
  /// Deep-hole verdict of an explicit representative word by exhaustive
  /// distance, when requested.
  std::optional<bool> exhaustive_deep_hole;
};

struct ScanReport {
  std::uint32_t q = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<ScanEntry> entries;
  std::size_t deep_holes = 0;
};

struct ScanOptions {
  bool exhaustive_check = false;
  /// Limit on q^(k+2), the cost of the exhaustive cross-check.
  std::uint64_t guard = 1'000'000'000;
};

/// For each b1 in F_q, whether degree-(k+1) words with root-sum target b1 are
/// deep holes of the code over D = F_q or F_q*.
ScanReport deep_hole_scan(const Field& f, EvalMode mode, std::size_t k, const ScanOptions& opts = {});

}  // namespace ffsubsum
