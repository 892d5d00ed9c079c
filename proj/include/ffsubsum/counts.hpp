#pragma once

// Exact counts N(k, b, D) of k-subsets of D = F_q \ {a_1, ..., a_c} summing
// to b, together with the auxiliary sequences and error bounds they are
// built from.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ffsubsum/combinatorics.hpp"
#include "ffsubsum/gf.hpp"

namespace ffsubsum {

class CountTable;

/// The excluded points of D, kept sorted by code.
class ExclusionSet {
 public:
  /// Throws std::invalid_argument on duplicates, foreign elements, or c = q.
  ExclusionSet(Field f, std::vector<Element> excluded);
  explicit ExclusionSet(Field f) : ExclusionSet(std::move(f), {}) {}

  const Field& field() const { return field_; }
  std::span<const Element> excluded() const { return excluded_; }
  std::size_t c() const { return excluded_.size(); }
  std::uint64_t n() const { return field_.q() - excluded_.size(); }
  bool contains(const Element& x) const;
  /// sum of the excluded points
  Element excluded_sum() const;
  /// sum of the points of D
  Element domain_sum() const;
  /// D in canonical order.
  std::vector<Element> domain() const;

 private:
  Field field_;
  std::vector<Element> excluded_;
};

struct CountQuery {
  ExclusionSet exclusions;
  std::uint64_t k;
  Element b;
};

/// Throws std::invalid_argument unless k <= n and b lies in the field.
void validate(const CountQuery& query);

enum class BoundMode { general, independent, prime_field };
enum class CountMethod { closed_form, recursion, independent_fast_path, oracle };

std::string_view to_string(BoundMode m);
std::string_view to_string(CountMethod m);
std::optional<BoundMode> parse_bound_mode(std::string_view s);
std::optional<CountMethod> parse_count_method(std::string_view s);

/// N together with its main term C(n,k)/q, the exact scaled error q*N - C(n,k)
/// and the error bound that applies to the query (scaled by q).
struct CountReport {
  CountQuery query;
  BigInt n_count;
  BigInt m_count;
  BigInt main_term_num;
  BigInt main_term_den;
  BigInt error;
  std::optional<BigInt> bound;
  std::optional<BoundMode> bound_mode;
  CountMethod method = CountMethod::closed_form;
};

// ---------------------------------------------------------------------------
// Auxiliary sequences. All take q and its characteristic p (p | q).

/// d_k = M(k,1,F_q*) - M(k,0,F_q*), closed form; d_0 = -1. Requires k <= q-1.
BigInt d_seq(std::int64_t q, std::int64_t p, std::uint64_t k);
/// d_0..d_{k_max} by the first-order recursion in k.
std::vector<BigInt> d_seq_recursive(std::int64_t q, std::int64_t p, std::uint64_t k_max);

/// R^1_k = -(-1)^{floor(k/p)} C(q/p - 1, floor(k/p)).
BigInt r1(std::int64_t q, std::int64_t p, std::uint64_t k);
/// R^2_k via the block-sum closed form.
BigInt r2(std::int64_t q, std::int64_t p, std::uint64_t k);
/// R^c_k: R^1 for c = 1, the single weighted sum for c >= 2.
BigInt r_c(std::int64_t q, std::int64_t p, std::uint64_t c, std::uint64_t k);
/// R^c_k as c-1 iterated prefix sums of R^1.
BigInt r_c_prefix(std::int64_t q, std::int64_t p, std::uint64_t c, std::uint64_t k);
/// R^c_k for a prime field: -C(k+c-1, c-1).
BigInt r_c_prime(std::uint64_t c, std::uint64_t k);

/// S(k, b): 0 when b is outside F_p, otherwise the residue-class sum of R^1.
BigInt s_kb(const Field& f, std::uint64_t k, const Element& b);
/// Closed form of S(k, b) for b = residue * 1 in F_p.
BigInt s_kb_residue(std::int64_t q, std::int64_t p, std::uint64_t k, std::uint64_t residue);
/// S(k, b) as the literal sum of R^1_i over i <= k, i = residue (mod p).
BigInt s_kb_literal(std::int64_t q, std::int64_t p, std::uint64_t k, std::uint64_t residue);

// ---------------------------------------------------------------------------
// Closed forms for c <= 2.

BigInt count_full_field(const Field& f, std::uint64_t k, const Element& b);
BigInt count_punctured_field(const Field& f, std::uint64_t k, const Element& b);
/// N(k, b, F_q \ {0, 1}); requires q > 2.
BigInt count_two_removed(const Field& f, std::uint64_t k, const Element& b);

/// Maps a query with c in {1, 2} to the equivalent one with exclusions {0}
/// or {0, 1}.
CountQuery normalize_exclusions(const CountQuery& query);
/// For c >= 2: the substitution x -> (x - a_1)/(a_2 - a_1) applied to the
/// whole query, so that the image exclusion set starts with 0, 1.
CountQuery affine_normalize(const CountQuery& query);

struct CountOptions {
  /// Exclusion sets larger than this are counted by the DP table.
  std::size_t oracle_threshold = 8;
};

/// Evaluates N(k, b, D) for one exclusion set, reusing intermediate values
/// across queries. Not thread-safe; use one instance per thread.
class ExclusionCounter {
 public:
  explicit ExclusionCounter(ExclusionSet set, CountOptions opts = {});
  ~ExclusionCounter();
  ExclusionCounter(ExclusionCounter&&) noexcept;
  ExclusionCounter& operator=(ExclusionCounter&&) noexcept;

  struct Result {
    BigInt n;
    CountMethod method;
  };
  Result count(std::uint64_t k, const Element& b);
  /// Inclusion-exclusion only, never the fast path or the oracle.
  BigInt count_by_recursion(std::uint64_t k, const Element& b);

  const ExclusionSet& exclusions() const { return set_; }

 private:
  BigInt level_count(std::size_t level, std::uint64_t k, Code b);

  ExclusionSet set_;
  CountOptions opts_;
  std::unordered_map<std::uint64_t, BigInt> memo_;
  std::unique_ptr<CountTable> table_;
};

CountReport count_excluded(const CountQuery& query, const CountOptions& opts = {});
/// Assembles the report around an externally computed N.
CountReport make_report(const CountQuery& query, BigInt n_count, CountMethod method);

/// True iff, after translating a_1 to 0, {b, a_2, ..., a_c} is linearly
/// independent over F_p.
bool independence_holds(const ExclusionSet& set, std::uint64_t k, const Element& b);

/// N via the closed main term, R^c_k and the nested sum S^c_k of S-values;
/// an alternative to the recursion for c >= 2.
BigInt count_nested_sum(const CountQuery& query);
/// S^c_k for exclusions {0, 1, a_3, ..., a_c}; `rest` holds a_3..a_c.
BigInt s_c_sum(const Field& f, std::span<const Element> rest, std::uint64_t k, const Element& b);

// ---------------------------------------------------------------------------
// Error bounds for n <= q-2, scaled by q so they stay integral.

/// q * bound. general and independent need p < q; prime_field needs q = p.
BigInt bound_theorem_1_1(std::int64_t q, std::int64_t p, std::uint64_t n, std::uint64_t k,
                         BoundMode mode);
/// (-1)^k C(k+c-1, c-1) with c = q - n: the extra term inside the absolute
/// value of the prime-field inequality (times q).
BigInt prime_field_shift(std::int64_t q, std::uint64_t n, std::uint64_t k);
/// Whether the report's bound holds. Reports without a bound pass trivially.
bool bound_satisfied(const CountReport& report);

// ---------------------------------------------------------------------------

enum class DomainMode { full_field, one_removed };

struct Existence {
  bool all_b = false;      ///< every b in F_q has a k-subset summing to it
  bool guaranteed = false; ///< verdict comes from the existence guarantee, not evaluation
};

/// Whether every target b is reachable by a k-subset of D = F_q or F_q minus
/// one point.
Existence has_solution(const Field& f, DomainMode mode, std::uint64_t k);
/// The same question answered by exact evaluation of all q counts.
bool all_targets_reachable(const Field& f, DomainMode mode, std::uint64_t k);

}  // namespace ffsubsum
