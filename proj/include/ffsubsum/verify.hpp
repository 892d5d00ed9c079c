#pragma once

// Cross-checks between the counting formulas, their alternative evaluation
// routes and the DP oracle. Each check returns a Summary listing every
// violation; nothing throws on a failed check.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ffsubsum/counts.hpp"
#include "ffsubsum/gf.hpp"
#include "ffsubsum/rscodes.hpp"

namespace ffsubsum::verify {

struct Summary {
  std::uint64_t checks = 0;
  std::uint64_t failed = 0;
  /// Messages for the first kMaxMessages failures.
  std::vector<std::string> failures;
  static constexpr std::size_t kMaxMessages = 50;

  bool ok() const { return failed == 0; }
  void expect(bool cond, const std::string& what);
  void merge(const Summary& other);
};

/// How the grid checks obtain N; replaced in tests to exercise the harness.
using CountFn = std::function<BigInt(ExclusionCounter&, std::uint64_t, const Element&)>;
CountFn default_count_fn();

/// q in {4,5,7,8,9,11,13,16,25,27}
std::vector<std::uint32_t> grid_orders();
/// All prime powers in [lo, hi].
std::vector<std::uint32_t> prime_powers(std::uint32_t lo, std::uint32_t hi);
/// The field of order q; throws if q is not a prime power.
Field field_of_order(std::uint32_t q);

/// Exclusion sets of size c: all of them for c <= 1 or when there are at
/// most `limit`; otherwise `limit` sets evenly spaced in lexicographic order.
std::vector<ExclusionSet> canonical_exclusion_sets(const Field& f, std::size_t c, std::size_t limit = 20);

/// Closed form / recursion / nested-sum values against the DP oracle for
/// every k and b, plus row sums.
Summary check_oracle_grid(const Field& f, std::size_t max_c, std::size_t sets_per_c,
                          const CountFn& count = default_count_fn());
/// Error bounds on every grid query with n <= q-2 and k >= 1, in each
/// applicable mode.
Summary check_bounds(const Field& f, std::size_t max_c, std::size_t sets_per_c);
/// Permuting the processing order of D leaves the DP table unchanged; the
/// parallel and serial kernels agree.
Summary check_oracle_order(const Field& f, std::uint64_t seed, std::size_t permutations = 3);

/// Binomial identities and the two alternating-sum identities on fixed grids.
Summary check_binomial_identities();
/// d_k, R^c_k and S(k,b): closed forms against their alternative routes.
Summary check_sequences(const Field& f);
/// Relations between M on F_q and F_q*, evaluated on oracle counts.
Summary check_m_relations(const Field& f);
/// The S^c_k and R^c_k bounds for c <= max_c, k <= max_k.
Summary check_sr_bounds(const Field& f, std::size_t max_c = 4, std::uint64_t max_k = 12);
/// N(k,b,D) = N(|D|-k, -b, D) for D = F_q and F_q*.
Summary check_symmetry(const Field& f);
/// Literal unimodality of k -> N(k,b,F_q) (1 <= k <= q) and
/// k -> N(k,b,F_q*) (1 <= k <= q-1) for every b.
Summary check_unimodality(const Field& f);
/// Small-k closed values N(2,.,F_q*) (odd p) and N(3,.,F_q*) (p = 2).
Summary check_small_k_values(const Field& f);
/// Two-point exclusion values when k = p-1 (mod p) and b in F_p.
Summary check_sharpness(const Field& f);
/// Guaranteed existence verdicts agree with exact evaluation.
Summary check_existence(const Field& f);

/// Distance sandwich and m = 1 classification on every word of the code
/// (or on one word per coset of the code when q^n is large).
Summary check_rs_code(const Field& f, EvalMode mode, std::size_t k);
/// Zero deep holes of degree k+1 across the guaranteed existence range.
Summary check_deep_hole_scans(const Field& f);

/// Dimensions k of codes over F_q (or F_q*) for which k+1 lies in the
/// guaranteed subset-sum existence range and degree-(k+1) words exist.
std::vector<std::size_t> guaranteed_scan_dimensions(const Field& f, EvalMode mode);

struct Options {
  std::uint32_t max_q = 27;
  std::size_t max_c = 3;
  std::uint64_t seed = 0;
  /// Also run the claimed inequalities: error bounds, the S^c_k and R^c_k
  /// bounds, unimodality.
  bool inequalities = true;
  CountFn count = default_count_fn();
};

/// Runs every check on the grid fields with q <= max_q, logging one line
/// per check group.
Summary run_all(const Options& opts, std::ostream& log);

}  // namespace ffsubsum::verify
