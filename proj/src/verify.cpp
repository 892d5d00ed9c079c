#include "ffsubsum/verify.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ffsubsum/oracle.hpp"

namespace ffsubsum::verify {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

std::string str(const BigInt& x) { return x.get_str(); }

std::string where(const Field& f) { return "q=" + std::to_string(f.q()); }

std::string where(const ExclusionSet& s, u64 k, const Element& b) {
  return "q=" + std::to_string(s.field().q()) + " D=F_q\\{" + format_element_list(s.excluded()) + "} k=" +
         std::to_string(k) + " b=" + format_element(b);
}

// Unranks the r-th c-combination of {0..q-1} in lexicographic order.
std::vector<Code> unrank_combination(u64 q, u64 c, BigInt r) {
  std::vector<Code> out;
  Code next = 0;
  for (u64 left = c; left > 0; --left) {
    for (Code x = next;; ++x) {
      BigInt block = binom(static_cast<i64>(q - x - 1), left - 1);
      if (r < block) {
        out.push_back(x);
        next = x + 1;
        break;
      }
      r -= block;
    }
  }
  return out;
}

}  // namespace

void Summary::expect(bool cond, const std::string& what) {
  ++checks;
  if (cond) return;
  ++failed;
  if (failures.size() < kMaxMessages) failures.push_back(what);
}

void Summary::merge(const Summary& other) {
  checks += other.checks;
  failed += other.failed;
  for (const auto& m : other.failures) {
    if (failures.size() >= kMaxMessages) break;
    failures.push_back(m);
  }
}

CountFn default_count_fn() {
  return [](ExclusionCounter& c, u64 k, const Element& b) { return c.count(k, b).n; };
}

std::vector<std::uint32_t> grid_orders() { return {4, 5, 7, 8, 9, 11, 13, 16, 25, 27}; }

std::vector<std::uint32_t> prime_powers(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = std::max<std::uint32_t>(lo, 2); q <= hi; ++q) {
    if (prime_factors(q).size() == 1) out.push_back(q);
  }
  return out;
}

Field field_of_order(std::uint32_t q) {
  const auto ps = prime_factors(q);
  if (q < 2 || ps.size() != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  std::uint32_t e = 0;
  for (u64 x = q; x > 1; x /= ps[0]) ++e;
  return Field::make(static_cast<std::uint32_t>(ps[0]), e);
}

std::vector<ExclusionSet> canonical_exclusion_sets(const Field& f, std::size_t c, std::size_t limit) {
  const u64 q = f.q();
  std::vector<ExclusionSet> out;
  if (c >= q) return out;
  const BigInt total = binom(static_cast<i64>(q), c);
  const bool all = c <= 1 || total <= limit;
  const u64 count = all ? total.get_ui() : limit;
  for (u64 i = 0; i < count; ++i) {
    BigInt r = all ? BigInt(static_cast<unsigned long>(i)) : BigInt(total * static_cast<unsigned long>(i) / static_cast<unsigned long>(count));
    std::vector<Element> xs;
    for (Code x : unrank_combination(q, c, r)) xs.push_back(f.from_code(x));
    out.emplace_back(f, std::move(xs));
  }
  return out;
}

// ---------------------------------------------------------------------------

Summary check_oracle_grid(const Field& f, std::size_t max_c, std::size_t sets_per_c, const CountFn& count) {
  Summary s;
  for (std::size_t c = 0; c <= max_c && c < f.q(); ++c) {
    for (const ExclusionSet& set : canonical_exclusion_sets(f, c, sets_per_c)) {
      const CountTable table = dp_count_table(set);
      ExclusionCounter counter(set);
      ExclusionCounter recursion(set);
      for (u64 k = 0; k <= set.n(); ++k) {
        s.expect(table.row_sum(k) == binom(static_cast<i64>(set.n()), k),
                 "row sum != C(n,k) at " + where(set, k, f.zero()));
        for (const Element& b : f.elements()) {
          const BigInt& want = table.at(k, b);
          const BigInt got = count(counter, k, b);
          s.expect(got == want, "N = " + str(got) + ", oracle " + str(want) + " at " + where(set, k, b));
          if (c >= 2) {
            const BigInt nested = count_nested_sum(CountQuery{set, k, b});
            s.expect(nested == want, "nested-sum N = " + str(nested) + ", oracle " + str(want) + " at " +
                                         where(set, k, b));
          }
          if (c >= 3) {
            const BigInt rec = recursion.count_by_recursion(k, b);
            s.expect(rec == want,
                     "recursion N = " + str(rec) + ", oracle " + str(want) + " at " + where(set, k, b));
          }
        }
      }
    }
  }
  return s;
}

Summary check_bounds(const Field& f, std::size_t max_c, std::size_t sets_per_c) {
  Summary s;
  const i64 q = f.q();
  const i64 p = f.p();
  for (std::size_t c = 2; c <= max_c && c + 1 <= f.q(); ++c) {
    for (const ExclusionSet& set : canonical_exclusion_sets(f, c, sets_per_c)) {
      const CountTable table = dp_count_table(set);
      const u64 n = set.n();
      for (u64 k = 1; k <= n; ++k) {
        for (const Element& b : f.elements()) {
          const CountReport r = make_report(CountQuery{set, k, b}, table.at(k, b), CountMethod::oracle);
          if (q == p) {
            const BigInt dev = abs(r.error + prime_field_shift(q, n, k));
            const BigInt bound = bound_theorem_1_1(q, p, n, k, BoundMode::prime_field);
            s.expect(dev <= bound, "prime-field bound: |qN - C(n,k) + shift| = " + str(dev) + " > " +
                                       str(bound) + " at " + where(set, k, b));
            continue;
          }
          const BigInt dev = abs(r.error);
          const BigInt general = bound_theorem_1_1(q, p, n, k, BoundMode::general);
          s.expect(dev <= general, "general bound: |qN - C(n,k)| = " + str(dev) + " > " + str(general) +
                                       " at " + where(set, k, b));
          if (independence_holds(set, k, b)) {
            const BigInt ind = bound_theorem_1_1(q, p, n, k, BoundMode::independent);
            s.expect(dev <= ind, "independent bound: |qN - C(n,k)| = " + str(dev) + " > " + str(ind) +
                                     " at " + where(set, k, b));
          }
        }
      }
    }
  }
  return s;
}

Summary check_oracle_order(const Field& f, std::uint64_t seed, std::size_t permutations) {
  Summary s;
  std::mt19937_64 rng(seed);
  for (std::size_t c = 0; c <= 1; ++c) {
    const ExclusionSet set = canonical_exclusion_sets(f, c, 1).front();
    const CountTable base = dp_count_table(set);
    s.expect(base == dp_count_table_serial(set), "serial and parallel DP differ at " + where(f));
    std::vector<Code> order;
    for (const Element& x : set.domain()) order.push_back(x.code());
    for (std::size_t t = 0; t < permutations; ++t) {
      std::shuffle(order.begin(), order.end(), rng);
      const CountTable shuffled(set, dp_subset_counts(f, order));
      s.expect(shuffled == base, "DP depends on element order at " + where(f) + " c=" + std::to_string(c));
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

Summary check_binomial_identities() {
  Summary s;
  for (i64 x = -50; x <= 50; ++x) {
    for (u64 k = 0; k <= 50; ++k) {
      s.expect(binom(x, k) * factorial(k) == falling_factorial(x, k),
               "C(x,k) k! != (x)_k at x=" + std::to_string(x) + " k=" + std::to_string(k));
      if (k >= 1 && x >= -49) {
        s.expect(binom(x, k) == binom(x - 1, k) + binom(x - 1, k - 1),
                 "Pascal fails at x=" + std::to_string(x) + " k=" + std::to_string(k));
      }
    }
  }
  for (i64 r = -20; r <= 200; ++r) {
    for (u64 m = 0; m <= 60; ++m) {
      s.expect(alt_prefix_sum(r, m) == alt_prefix_sum_literal(r, m),
               "alternating prefix sum at r=" + std::to_string(r) + " m=" + std::to_string(m));
    }
  }
  for (u64 p : {2, 3, 5, 7}) {
    for (i64 a = -5; a <= 100; ++a) {
      // literal partial sums, extended one j at a time
      BigInt literal = 0;
      for (u64 k = 0; k <= 100; ++k) {
        const u64 n = k / p;
        literal -= minus_one_pow(static_cast<i64>(n)) * binom(a, n);
        const std::string at = "a=" + std::to_string(a) + " k=" + std::to_string(k) + " p=" + std::to_string(p);
        s.expect(block_alt_sum(a, k, p) == literal, "block alternating sum at " + at);
        if (a >= 0) {
          const BigInt cap = static_cast<unsigned long>(p) * binom(a, n);
          s.expect(literal <= cap, "block alternating sum exceeds p C(a, k/p) at " + at);
        }
      }
    }
  }
  return s;
}

Summary check_sequences(const Field& f) {
  Summary s;
  const i64 q = f.q();
  const i64 p = f.p();
  const u64 top = static_cast<u64>(q - 1);
  const std::vector<BigInt> rec = d_seq_recursive(q, p, top);
  const CountTable punct = dp_count_table(ExclusionSet(f, {f.zero()}));
  for (u64 k = 0; k <= top; ++k) {
    const std::string at = where(f) + " k=" + std::to_string(k);
    const BigInt d = d_seq(q, p, k);
    s.expect(d == rec[k], "d_k closed form " + str(d) + " != recursion " + str(rec[k]) + " at " + at);
    s.expect(r1(q, p, k) * factorial(k) == minus_one_pow(static_cast<i64>(k)) * d,
             "R^1_k k! != (-1)^k d_k at " + at);
    if (k >= 1) {
      const BigInt direct = factorial(k) * (punct.at(k, f.one()) - punct.at(k, f.zero()));
      s.expect(d == direct, "d_k != M(k,1,F_q*) - M(k,0,F_q*) at " + at);
    }
  }
  const u64 kmax = std::min<u64>(top, 40);
  for (u64 c = 1; c <= 5; ++c) {
    for (u64 k = 0; k <= kmax; ++k) {
      const std::string at = where(f) + " c=" + std::to_string(c) + " k=" + std::to_string(k);
      const BigInt r = r_c(q, p, c, k);
      s.expect(r == r_c_prefix(q, p, c, k), "R^c_k single sum != iterated prefix sums at " + at);
      if (c == 2) s.expect(r == r2(q, p, k), "R^2_k block closed form differs at " + at);
      if (q == p && k < static_cast<u64>(p)) {
        s.expect(r == r_c_prime(c, k), "prime-field R^c_k differs at " + at);
      }
    }
  }
  for (u64 k = 0; k <= top; ++k) {
    for (u64 res = 0; res < static_cast<u64>(p); ++res) {
      const BigInt v = s_kb_residue(q, p, k, res);
      s.expect(v == s_kb_literal(q, p, k, res),
               "S(k,b) closed form at " + where(f) + " k=" + std::to_string(k) + " b=" + std::to_string(res));
      if (q == p) s.expect(v == 0 || v == -1, "prime-field S(k,b) outside {0,-1} at k=" + std::to_string(k));
    }
    for (const Element& b : f.elements()) {
      if (!in_prime_subfield(b)) {
        s.expect(s_kb(f, k, b) == 0, "S(k,b) nonzero off F_p at " + where(f) + " b=" + format_element(b));
      }
    }
  }
  return s;
}

Summary check_m_relations(const Field& f) {
  Summary s;
  const u64 q = f.q();
  const auto full_t = dp_count_table(ExclusionSet(f));
  const auto punct_t = dp_count_table(ExclusionSet(f, {f.zero()}));
  auto MF = [&](u64 k, const Element& b) -> BigInt { return factorial(k) * full_t.at(k, b); };
  auto MP = [&](u64 k, const Element& b) -> BigInt { return factorial(k) * punct_t.at(k, b); };
  const Element one = f.one();
  const Element zero = f.zero();
  const auto elems = f.elements();
  for (u64 k = 0; k <= q; ++k) {
    const std::string at = where(f) + " k=" + std::to_string(k);
    s.expect(falling_factorial(static_cast<i64>(q), k) == static_cast<unsigned long>(q - 1) * MF(k, one) + MF(k, zero),
             "(q)_k != (q-1)M(k,1,F_q) + M(k,0,F_q) at " + at);
    for (const Element& b : elems) {
      if (!b.is_zero()) s.expect(MF(k, b) == MF(k, one), "M(k,b,F_q) != M(k,1,F_q) at " + at);
    }
    if (k < q) {
      s.expect(falling_factorial(static_cast<i64>(q - 1), k) ==
                   static_cast<unsigned long>(q - 1) * MP(k, one) + MP(k, zero),
               "(q-1)_k != (q-1)M(k,1,F_q*) + M(k,0,F_q*) at " + at);
      for (const Element& b : elems) {
        if (!b.is_zero()) s.expect(MP(k, b) == MP(k, one), "M(k,b,F_q*) != M(k,1,F_q*) at " + at);
      }
    }
    if (k < 1 || k > q - 1) continue;
    s.expect(MF(k, one) == MP(k, one) + k * MP(k - 1, one), "M(k,1) split over 0 fails at " + at);
    s.expect(MF(k, zero) == MP(k, zero) + k * MP(k - 1, zero), "M(k,0) split over 0 fails at " + at);
    for (const Element& c : elems) {
      for (const Element& b : elems) {
        const Element t = b - static_cast<i64>(k) * c;
        s.expect(MF(k, b) == MP(k, t) + k * MP(k - 1, t),
                 "shifted split fails at " + at + " b=" + format_element(b) + " c=" + format_element(c));
      }
    }
    const bool divisible = k % f.p() == 0;
    for (const Element& b : elems) {
      if (!divisible) {
        s.expect(q * MF(k, b) == falling_factorial(static_cast<i64>(q), k),
                 "M(k,b,F_q) != (q)_k/q for p not dividing k at " + at);
      } else {
        s.expect(MF(k, b) == static_cast<unsigned long>(q) * MP(k - 1, b),
                 "M(k,b,F_q) != q M(k-1,b,F_q*) for p | k at " + at);
      }
    }
  }
  return s;
}

Summary check_sr_bounds(const Field& f, std::size_t max_c, std::uint64_t max_k) {
  Summary s;
  const i64 q = f.q();
  const i64 p = f.p();
  for (u64 c = 2; c <= max_c; ++c) {
    for (u64 k = 0; k <= max_k; ++k) {
      BigInt best = 0;
      for (u64 j = 0; j <= k; ++j) {
        BigInt a = binom(static_cast<i64>(k + c - 2 - j), c - 2) * binom(q / p - 1, j / p);
        if (a > best) best = a;
      }
      const BigInt r = abs(r_c(q, p, c, k));
      s.expect(r <= p * best, "|R^c_k| = " + str(r) + " > " + str(p * best) + " at " + where(f) + " c=" +
                                  std::to_string(c) + " k=" + std::to_string(k));
    }
  }
  if (q == p) return s;
  for (u64 c = 2; c <= max_c && c + 1 <= f.q(); ++c) {
    // distinct images under the affine normalization
    std::vector<ExclusionSet> sets;
    for (const ExclusionSet& raw : canonical_exclusion_sets(f, c)) {
      ExclusionSet image = affine_normalize(CountQuery{raw, 0, f.zero()}).exclusions;
      const auto same = [&](const ExclusionSet& t) {
        return std::equal(t.excluded().begin(), t.excluded().end(), image.excluded().begin());
      };
      if (std::none_of(sets.begin(), sets.end(), same)) sets.push_back(std::move(image));
    }
    for (const ExclusionSet& set : sets) {
      const auto rest = set.excluded().subspan(2);
      for (u64 k = 0; k <= max_k && k <= set.n(); ++k) {
        const BigInt r = r_c(q, p, c, k);
        const BigInt cap = (q - p) * binom(static_cast<i64>(k + c - 2), c - 2) * binom(q / p - 1, k / p);
        for (const Element& b : f.elements()) {
          const BigInt lhs = q * s_c_sum(f, rest, k, b) - r;
          s.expect(lhs <= cap, "q S^c_k - R^c_k = " + str(lhs) + " > " + str(cap) + " at " + where(set, k, b));
        }
      }
    }
  }
  return s;
}

namespace {

template <class Seq>
bool is_unimodal(const Seq& a) {
  std::size_t i = 1;
  while (i < a.size() && a[i - 1] <= a[i]) ++i;
  while (i < a.size() && a[i - 1] >= a[i]) ++i;
  return i >= a.size();
}

std::string join(const std::vector<BigInt>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

}  // namespace

Summary check_symmetry(const Field& f) {
  Summary s;
  const u64 q = f.q();
  for (const Element& b : f.elements()) {
    for (u64 k = 0; k <= q; ++k) {
      s.expect(count_full_field(f, k, b) == count_full_field(f, q - k, -b),
               "N(k,b,F_q) != N(q-k,-b,F_q) at " + where(f) + " k=" + std::to_string(k) + " b=" + format_element(b));
    }
    for (u64 k = 0; k <= q - 1; ++k) {
      s.expect(count_punctured_field(f, k, b) == count_punctured_field(f, q - 1 - k, -b),
               "N(k,b,F_q*) != N(q-1-k,-b,F_q*) at " + where(f) + " k=" + std::to_string(k) +
                   " b=" + format_element(b));
    }
  }
  return s;
}

Summary check_unimodality(const Field& f) {
  Summary s;
  const u64 q = f.q();
  for (const Element& b : f.elements()) {
    std::vector<BigInt> full;
    std::vector<BigInt> punct;
    for (u64 k = 1; k <= q; ++k) full.push_back(count_full_field(f, k, b));
    for (u64 k = 1; k <= q - 1; ++k) punct.push_back(count_punctured_field(f, k, b));
    s.expect(is_unimodal(full), "k -> N(k,b,F_q), k=1..q, not unimodal at " + where(f) +
                                    " b=" + format_element(b) + ": " + join(full));
    s.expect(is_unimodal(punct), "k -> N(k,b,F_q*), k=1..q-1, not unimodal at " + where(f) +
                                     " b=" + format_element(b) + ": " + join(punct));
  }
  return s;
}

Summary check_small_k_values(const Field& f) {
  Summary s;
  const u64 q = f.q();
  const ExclusionSet punct(f, {f.zero()});
  const CountTable t = dp_count_table(punct);
  auto both = [&](u64 k, const Element& b, const BigInt& want, const std::string& label) {
    s.expect(count_punctured_field(f, k, b) == want, label + " closed form at " + where(f));
    s.expect(t.at(k, b) == want, label + " oracle at " + where(f));
  };
  if (f.p() != 2) {
    both(2, f.zero(), BigInt(static_cast<unsigned long>((q - 1) / 2)), "N(2,0,F_q*) = (q-1)/2");
    both(2, f.one(), BigInt(static_cast<unsigned long>((q - 3) / 2)), "N(2,1,F_q*) = (q-3)/2");
  } else if (q >= 4) {
    both(3, f.zero(), BigInt(static_cast<unsigned long>((q - 1) * (q - 2) / 6)), "N(3,0,F_q*) = (q-1)(q-2)/6");
    both(3, f.one(), BigInt(static_cast<unsigned long>((q - 2) * (q - 4) / 6)), "N(3,1,F_q*) = (q-2)(q-4)/6");
  }
  return s;
}

Summary check_sharpness(const Field& f) {
  Summary s;
  const i64 q = f.q();
  const i64 p = f.p();
  if (q <= 2) return s;
  const ExclusionSet set(f, {f.zero(), f.one()});
  const CountTable t = dp_count_table(set);
  for (u64 k = 0; k + 2 <= static_cast<u64>(q); ++k) {
    if (k % p != static_cast<u64>(p - 1)) continue;
    const u64 n = k / p;
    const BigInt want = binom(q - 2, k) + minus_one_pow(static_cast<i64>(k + n)) * (q - p) * binom(q / p - 2, n);
    for (Code c = 0; c < static_cast<Code>(p); ++c) {
      const Element b = f.from_code(c);
      s.expect(q * t.at(k, b) == want, "qN(k,b,F_q\\{0,1}) != C(q-2,k) + (-1)^(k+n)(q-p)C(q/p-2,n) at " +
                                           where(set, k, b));
    }
  }
  return s;
}

Summary check_existence(const Field& f) {
  Summary s;
  for (DomainMode mode : {DomainMode::full_field, DomainMode::one_removed}) {
    const u64 n = mode == DomainMode::full_field ? f.q() : f.q() - 1;
    for (u64 k = 0; k <= n; ++k) {
      const Existence e = has_solution(f, mode, k);
      const bool exact = all_targets_reachable(f, mode, k);
      s.expect(e.all_b == exact, std::string("existence verdict wrong at ") + where(f) + " k=" +
                                     std::to_string(k) + (mode == DomainMode::full_field ? " D=F_q" : " D=F_q*"));
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

void check_word(Summary& s, const RSCode& code, const Word& w, bool distance_of_codewords) {
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  const Degree d = code.word_degree(w);
  const std::string at = "q=" + std::to_string(code.field().q()) + " n=" + std::to_string(n) +
                         " k=" + std::to_string(k) + " u=" + code.format_word(w);
  if (!d || *d < k) {
    if (distance_of_codewords) s.expect(code.distance_to_code(w) == 0, "codeword at nonzero distance: " + at);
    return;
  }
  const std::size_t dist = code.distance_to_code(w);
  const DistanceBounds b = code.theorem_5_1_bounds(w);
  s.expect(b.lower <= dist && dist <= b.upper, "distance " + std::to_string(dist) + " outside [" +
                                                   std::to_string(b.lower) + "," + std::to_string(b.upper) +
                                                   "]: " + at);
  if (*d == k) s.expect(dist == n - k, "degree-k word not a deep hole: " + at);
  if (*d == k + 1) {
    const Verdict v = code.classify_m1(w);
    const bool deep = dist == n - k;
    s.expect((v == Verdict::deep_hole) == deep,
             "classification " + std::string(to_string(v)) + " but distance " + std::to_string(dist) + ": " + at);
    if (!deep) s.expect(dist == n - k - 1, "degree-(k+1) word at distance " + std::to_string(dist) + ": " + at);
  }
}

}  // namespace

Summary check_rs_code(const Field& f, EvalMode mode, std::size_t k) {
  Summary s;
  const RSCode code = RSCode::over(f, mode, k);
  const std::size_t n = code.n();
  const u64 q = f.q();
  double words = 1;
  for (std::size_t i = 0; i < n; ++i) words *= static_cast<double>(q);
  if (words <= 1e6) {
    // every word
    std::vector<Code> digits(n, 0);
    while (true) {
      Word w;
      for (Code c : digits) w.values.push_back(f.from_code(c));
      check_word(s, code, w, true);
      std::size_t i = 0;
      while (i < n && ++digits[i] == q) digits[i++] = 0;
      if (i == n) break;
    }
    return s;
  }
  // The distance is constant on cosets u + C, and every coset has a unique
  // representative whose interpolant has no terms of degree below k.
  std::vector<Code> high(n - k, 0);
  while (true) {
    std::vector<Element> coeffs(k, f.zero());
    for (Code c : high) coeffs.push_back(f.from_code(c));
    check_word(s, code, code.evaluate(Poly(f, std::move(coeffs))), false);
    std::size_t i = 0;
    while (i < high.size() && ++high[i] == q) high[i++] = 0;
    if (i == high.size()) break;
  }
  return s;
}

std::vector<std::size_t> guaranteed_scan_dimensions(const Field& f, EvalMode mode) {
  const DomainMode dm = mode == EvalMode::full ? DomainMode::full_field : DomainMode::one_removed;
  const std::size_t n = mode == EvalMode::full ? f.q() : f.q() - 1;
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k + 2 <= n; ++k) {
    if (has_solution(f, dm, k + 1).guaranteed) out.push_back(k);
  }
  return out;
}

Summary check_deep_hole_scans(const Field& f) {
  Summary s;
  for (EvalMode mode : {EvalMode::full, EvalMode::punctured}) {
    for (std::size_t k : guaranteed_scan_dimensions(f, mode)) {
      double work = 1;
      for (std::size_t i = 0; i < k + 2; ++i) work *= f.q();
      ScanOptions opts;
      opts.exhaustive_check = work <= 1e7;
      const ScanReport r = deep_hole_scan(f, mode, k, opts);
      const std::string at = "q=" + std::to_string(f.q()) + " n=" + std::to_string(r.n) + " k=" + std::to_string(k);
      s.expect(r.deep_holes == 0, std::to_string(r.deep_holes) + " deep holes of degree k+1 at " + at);
      for (const ScanEntry& e : r.entries) {
        if (e.exhaustive_deep_hole) {
          s.expect(*e.exhaustive_deep_hole == e.deep_hole,
                   "exhaustive distance disagrees with the count at " + at + " b1=" + format_element(e.b1));
        }
      }
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

Summary run_all(const Options& opts, std::ostream& log) {
  Summary total;
  auto report = [&](const std::string& name, const Summary& s) {
    log << (s.ok() ? "ok   " : "FAIL ") << name << ": " << s.checks << " checks, " << s.failed << " failed\n";
    total.merge(s);
  };
  report("binomial identities", check_binomial_identities());
  for (std::uint32_t q : grid_orders()) {
    if (q > opts.max_q) continue;
    const Field f = field_of_order(q);
    const std::string tag = " q=" + std::to_string(q);
    report("oracle grid" + tag, check_oracle_grid(f, opts.max_c, 20, opts.count));
    report("oracle order" + tag, check_oracle_order(f, opts.seed));
    report("sequences" + tag, check_sequences(f));
    report("M relations" + tag, check_m_relations(f));
    report("symmetry" + tag, check_symmetry(f));
    report("small k values" + tag, check_small_k_values(f));
    report("two-point exclusion values" + tag, check_sharpness(f));
    report("existence" + tag, check_existence(f));
    if (!opts.inequalities) continue;
    report("error bounds" + tag, check_bounds(f, opts.max_c, 20));
    if (q <= 32) report("S and R bounds" + tag, check_sr_bounds(f));
    report("unimodality" + tag, check_unimodality(f));
  }
  return total;
}

}  // namespace ffsubsum::verify
