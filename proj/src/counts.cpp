#include "ffsubsum/counts.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "ffsubsum/errors.hpp"
#include "ffsubsum/oracle.hpp"

namespace ffsubsum {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

void require_char(i64 q, i64 p) {
  if (p < 2 || q < p || q % p != 0) {
    throw std::invalid_argument("invalid field order " + std::to_string(q) + " for characteristic " +
                                std::to_string(p));
  }
}

// Every count formula has the shape (integer)/q; the remainder must vanish.
BigInt exact_div(const BigInt& num, i64 q, const char* what) {
  BigInt quot;
  BigInt rem;
  mpz_tdiv_qr_ui(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(q));
  if (rem != 0) {
    throw InternalError(std::string(what) + ": " + num.get_str() + " is not divisible by " +
                        std::to_string(q));
  }
  return quot;
}

i64 v_weight(const Element& b) { return b.is_zero() ? i64{b.field().q()} - 1 : -1; }

u64 block(u64 k, i64 p) { return k / static_cast<u64>(p); }

BigInt signed_binom(i64 sign_exp, i64 x, u64 k) { return minus_one_pow(sign_exp) * binom(x, k); }

}  // namespace

// ---------------------------------------------------------------------------

ExclusionSet::ExclusionSet(Field f, std::vector<Element> excluded)
    : field_(std::move(f)), excluded_(std::move(excluded)) {
  for (const Element& x : excluded_) {
    if (!(x.field() == field_)) throw std::invalid_argument("excluded element from a different field");
  }
  std::sort(excluded_.begin(), excluded_.end());
  if (std::adjacent_find(excluded_.begin(), excluded_.end()) != excluded_.end()) {
    throw std::invalid_argument("excluded elements must be distinct");
  }
  if (excluded_.size() >= field_.q()) throw std::invalid_argument("exclusion set leaves D empty");
}

bool ExclusionSet::contains(const Element& x) const {
  return std::binary_search(excluded_.begin(), excluded_.end(), x);
}

Element ExclusionSet::excluded_sum() const {
  Code s = 0;
  for (const Element& x : excluded_) s = field_.add(s, x.code());
  return field_.from_code(s);
}

Element ExclusionSet::domain_sum() const {
  // The elements of F_q sum to 0 except in F_2.
  const Element total = field_.q() == 2 ? field_.one() : field_.zero();
  return total - excluded_sum();
}

std::vector<Element> ExclusionSet::domain() const {
  std::vector<Element> out;
  out.reserve(n());
  auto it = excluded_.begin();
  for (Code c = 0; c < field_.q(); ++c) {
    if (it != excluded_.end() && it->code() == c) {
      ++it;
      continue;
    }
    out.push_back(field_.from_code(c));
  }
  return out;
}

void validate(const CountQuery& query) {
  if (!(query.b.field() == query.exclusions.field())) {
    throw std::invalid_argument("target b belongs to a different field");
  }
  if (query.k > query.exclusions.n()) {
    throw std::invalid_argument("subset size k = " + std::to_string(query.k) + " exceeds |D| = " +
                                std::to_string(query.exclusions.n()));
  }
}

std::string_view to_string(BoundMode m) {
  switch (m) {
    case BoundMode::general: return "general";
    case BoundMode::independent: return "independent";
    case BoundMode::prime_field: return "prime_field";
  }
  return "?";
}

std::string_view to_string(CountMethod m) {
  switch (m) {
    case CountMethod::closed_form: return "closed_form";
    case CountMethod::recursion: return "recursion";
    case CountMethod::independent_fast_path: return "independent_fast_path";
    case CountMethod::oracle: return "oracle";
  }
  return "?";
}

std::optional<BoundMode> parse_bound_mode(std::string_view s) {
  for (BoundMode m : {BoundMode::general, BoundMode::independent, BoundMode::prime_field}) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

std::optional<CountMethod> parse_count_method(std::string_view s) {
  for (CountMethod m : {CountMethod::closed_form, CountMethod::recursion,
                        CountMethod::independent_fast_path, CountMethod::oracle}) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

BigInt d_seq(i64 q, i64 p, u64 k) {
  require_char(q, p);
  if (k > static_cast<u64>(q - 1)) throw std::invalid_argument("d_k needs k <= q-1");
  const u64 n = block(k, p);
  return -(minus_one_pow(static_cast<i64>(k + n)) * factorial(k) * binom(q / p - 1, n));
}

std::vector<BigInt> d_seq_recursive(i64 q, i64 p, u64 k_max) {
  require_char(q, p);
  if (k_max > static_cast<u64>(q - 1)) throw std::invalid_argument("d_k needs k <= q-1");
  std::vector<BigInt> d;
  d.reserve(k_max + 1);
  d.emplace_back(-1);
  if (k_max >= 1) d.emplace_back(1);
  for (u64 k = 2; k <= k_max; ++k) {
    const i64 kk = static_cast<i64>(k);
    d.push_back(kk % p != 0 ? BigInt(-kk * d.back()) : BigInt((q - kk) * d.back()));
  }
  return d;
}

BigInt r1(i64 q, i64 p, u64 k) {
  require_char(q, p);
  const u64 n = block(k, p);
  return -signed_binom(static_cast<i64>(n), q / p - 1, n);
}

BigInt r2(i64 q, i64 p, u64 k) {
  require_char(q, p);
  return block_alt_sum(q / p - 1, k, static_cast<u64>(p));
}

BigInt r_c(i64 q, i64 p, u64 c, u64 k) {
  require_char(q, p);
  if (c == 0) throw std::invalid_argument("R^c_k needs c >= 1");
  if (c == 1) return r1(q, p, k);
  BigInt s = 0;
  for (u64 j = 0; j <= k; ++j) {
    const u64 n = block(j, p);
    s += minus_one_pow(static_cast<i64>(n)) * binom(static_cast<i64>(k + c - 2 - j), c - 2) *
         binom(q / p - 1, n);
  }
  return -s;
}

BigInt r_c_prefix(i64 q, i64 p, u64 c, u64 k) {
  require_char(q, p);
  if (c == 0) throw std::invalid_argument("R^c_k needs c >= 1");
  std::vector<BigInt> seq;
  seq.reserve(k + 1);
  for (u64 j = 0; j <= k; ++j) seq.push_back(r1(q, p, j));
  for (u64 level = 1; level < c; ++level) {
    for (u64 j = 1; j <= k; ++j) seq[j] += seq[j - 1];
  }
  return seq[k];
}

BigInt r_c_prime(u64 c, u64 k) {
  if (c == 0) throw std::invalid_argument("R^c_k needs c >= 1");
  return -binom(static_cast<i64>(k + c - 1), c - 1);
}

BigInt s_kb_residue(i64 q, i64 p, u64 k, u64 residue) {
  require_char(q, p);
  if (residue >= static_cast<u64>(p)) throw std::invalid_argument("residue out of range");
  const u64 n = block(k, p);
  const i64 sign = minus_one_pow(static_cast<i64>(n));
  BigInt s = -sign * binom(q / p - 2, n);
  if (residue > k % static_cast<u64>(p)) s += sign * binom(q / p - 1, n);
  return s;
}

BigInt s_kb_literal(i64 q, i64 p, u64 k, u64 residue) {
  require_char(q, p);
  BigInt s = 0;
  for (u64 i = residue; i <= k; i += static_cast<u64>(p)) s += r1(q, p, i);
  return s;
}

BigInt s_kb(const Field& f, u64 k, const Element& b) {
  if (!in_prime_subfield(b)) return 0;
  return s_kb_residue(f.q(), f.p(), k, prime_residue(b));
}

// ---------------------------------------------------------------------------

BigInt count_full_field(const Field& f, u64 k, const Element& b) {
  const i64 q = f.q();
  const i64 p = f.p();
  if (k > static_cast<u64>(q)) throw std::invalid_argument("k exceeds q");
  BigInt num = binom(q, k);
  if (k % static_cast<u64>(p) == 0) {
    const u64 n = k / static_cast<u64>(p);
    num += minus_one_pow(static_cast<i64>(k + n)) * v_weight(b) * binom(q / p, n);
  }
  return exact_div(num, q, "N(k,b,F_q)");
}

BigInt count_punctured_field(const Field& f, u64 k, const Element& b) {
  const i64 q = f.q();
  const i64 p = f.p();
  if (k > static_cast<u64>(q - 1)) throw std::invalid_argument("k exceeds q-1");
  const u64 n = block(k, p);
  BigInt num = binom(q - 1, k) + minus_one_pow(static_cast<i64>(k + n)) * v_weight(b) * binom(q / p - 1, n);
  return exact_div(num, q, "N(k,b,F_q*)");
}

BigInt count_two_removed(const Field& f, u64 k, const Element& b) {
  const i64 q = f.q();
  const i64 p = f.p();
  if (q <= 2) throw std::invalid_argument("two-point exclusion needs q > 2");
  if (k > static_cast<u64>(q - 2)) throw std::invalid_argument("k exceeds q-2");
  const int sign = minus_one_pow(static_cast<i64>(k));
  // k is read in F_q as k * 1.
  const Element target = f.from_int(static_cast<i64>(k)) - b;
  BigInt num = binom(q - 2, k) + sign * r2(q, p, k) - q * sign * s_kb(f, k, target);
  return exact_div(num, q, "N(k,b,F_q\\{0,1})");
}

CountQuery affine_normalize(const CountQuery& query) {
  const ExclusionSet& set = query.exclusions;
  if (set.c() < 2) throw std::invalid_argument("affine normalization needs at least two exclusions");
  const Element a1 = set.excluded()[0];
  const Element scale = (set.excluded()[1] - a1).inv();
  std::vector<Element> mapped;
  mapped.reserve(set.c());
  for (const Element& x : set.excluded()) mapped.push_back((x - a1) * scale);
  const i64 k = static_cast<i64>(query.k);
  return CountQuery{ExclusionSet(set.field(), std::move(mapped)), query.k, (query.b - k * a1) * scale};
}

CountQuery normalize_exclusions(const CountQuery& query) {
  const ExclusionSet& set = query.exclusions;
  if (set.c() == 1) {
    const Element a = set.excluded()[0];
    const Field& f = set.field();
    return CountQuery{ExclusionSet(f, {f.zero()}), query.k, query.b - static_cast<i64>(query.k) * a};
  }
  if (set.c() == 2) return affine_normalize(query);
  throw std::invalid_argument("normalization is defined for one or two exclusions, got " +
                              std::to_string(set.c()));
}

// ---------------------------------------------------------------------------

bool independence_holds(const ExclusionSet& set, u64 k, const Element& b) {
  if (set.c() == 0) return false;
  const auto ex = set.excluded();
  const Element a1 = ex[0];
  std::vector<Element> vecs;
  vecs.reserve(set.c());
  vecs.push_back(b - static_cast<i64>(k) * a1);
  for (std::size_t i = 1; i < ex.size(); ++i) vecs.push_back(ex[i] - a1);
  return fp_rank(vecs) == vecs.size();
}

ExclusionCounter::ExclusionCounter(ExclusionSet set, CountOptions opts)
    : set_(std::move(set)), opts_(opts) {}
ExclusionCounter::~ExclusionCounter() = default;
ExclusionCounter::ExclusionCounter(ExclusionCounter&&) noexcept = default;
ExclusionCounter& ExclusionCounter::operator=(ExclusionCounter&&) noexcept = default;

BigInt ExclusionCounter::level_count(std::size_t level, u64 k, Code b) {
  const Field& f = set_.field();
  if (k == 0) return b == 0 ? 1 : 0;
  const auto ex = set_.excluded();
  switch (level) {
    case 0:
      return count_full_field(f, k, f.from_code(b));
    case 1:
      return count_punctured_field(f, k, f.from_code(f.sub(b, f.scale(ex[0].code(), static_cast<i64>(k)))));
    default:
      break;
  }
  const u64 key = (u64{level} << 56) | (k << 32) | b;
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  BigInt result;
  if (level == 2) {
    const Code a1 = ex[0].code();
    const Code shifted = f.sub(b, f.scale(a1, static_cast<i64>(k)));
    const Code target = f.mul(shifted, f.inv(f.sub(ex[1].code(), a1)));
    result = count_two_removed(f, k, f.from_code(target));
  } else {
    // Split on whether a_level is used: N(k,b,D) = sum_i (-1)^i N(k-i, b - i a_level, D + a_level).
    const Code a = ex[level - 1].code();
    Code shifted = b;
    for (u64 i = 0; i <= k; ++i) {
      BigInt term = level_count(level - 1, k - i, shifted);
      if (i % 2 == 0) {
        result += term;
      } else {
        result -= term;
      }
      shifted = f.sub(shifted, a);
    }
  }
  memo_.emplace(key, result);
  return result;
}

BigInt ExclusionCounter::count_by_recursion(u64 k, const Element& b) {
  validate(CountQuery{set_, k, b});
  return level_count(set_.c(), k, b.code());
}

ExclusionCounter::Result ExclusionCounter::count(u64 k, const Element& b) {
  validate(CountQuery{set_, k, b});
  const Field& f = set_.field();
  const std::size_t c = set_.c();
  const u64 n = set_.n();
  Element target = b;
  if (2 * k > n) {
    // complement within D
    k = n - k;
    target = set_.domain_sum() - b;
  }
  if (k == 0) return {target.is_zero() ? 1 : 0, CountMethod::closed_form};

  if (c > opts_.oracle_threshold) {
    if (!table_) table_ = std::make_unique<CountTable>(dp_count_table(set_));
    return {table_->at(k, target), CountMethod::oracle};
  }
  if (c <= 2) return {level_count(c, k, target.code()), CountMethod::closed_form};
  if (independence_holds(set_, k, target)) {
    const i64 q = f.q();
    BigInt num = binom(q - static_cast<i64>(c), k) +
                 minus_one_pow(static_cast<i64>(k)) * r_c(q, f.p(), c, k);
    return {exact_div(num, q, "independent fast path"), CountMethod::independent_fast_path};
  }
  return {level_count(c, k, target.code()), CountMethod::recursion};
}

CountReport make_report(const CountQuery& query, BigInt n_count, CountMethod method) {
  validate(query);
  const Field& f = query.exclusions.field();
  const i64 q = f.q();
  const u64 n = query.exclusions.n();
  CountReport r{query, std::move(n_count), 0, binom(static_cast<i64>(n), query.k), q, 0,
                std::nullopt, std::nullopt, method};
  r.m_count = r.n_count * factorial(query.k);
  r.error = q * r.n_count - r.main_term_num;
  if (query.exclusions.c() >= 2 && query.k >= 1) {
    BoundMode mode = BoundMode::general;
    if (q == f.p()) {
      mode = BoundMode::prime_field;
    } else if (independence_holds(query.exclusions, query.k, query.b)) {
      mode = BoundMode::independent;
    }
    r.bound_mode = mode;
    r.bound = bound_theorem_1_1(q, f.p(), n, query.k, mode);
  }
  return r;
}

CountReport count_excluded(const CountQuery& query, const CountOptions& opts) {
  ExclusionCounter counter(query.exclusions, opts);
  auto [value, method] = counter.count(query.k, query.b);
  return make_report(query, std::move(value), method);
}

// ---------------------------------------------------------------------------

BigInt s_c_sum(const Field& f, std::span<const Element> rest, u64 k, const Element& b) {
  // Index i_j pairs with a_{c+1-j}; the sum is symmetric in a_3..a_c so
  // walking `rest` from the back is equivalent.
  const std::size_t m = rest.size();
  BigInt total = 0;
  auto walk = [&](auto&& self, std::size_t j, u64 used, Code offset) -> void {
    if (j == m) {
      const u64 kk = k - used;
      const Code arg = f.add(f.sub(f.from_int(static_cast<i64>(kk)).code(), b.code()), offset);
      total += s_kb(f, kk, f.from_code(arg));
      return;
    }
    const Code a = rest[m - 1 - j].code();
    Code off = offset;
    for (u64 i = 0; used + i <= k; ++i) {
      self(self, j + 1, used + i, off);
      off = f.add(off, a);
    }
  };
  walk(walk, 0, 0, 0);
  return total;
}

BigInt count_nested_sum(const CountQuery& query) {
  validate(query);
  const std::size_t c = query.exclusions.c();
  if (c < 2) throw std::invalid_argument("nested-sum form needs at least two exclusions");
  const CountQuery norm = affine_normalize(query);
  const Field& f = norm.exclusions.field();
  const i64 q = f.q();
  const u64 k = query.k;
  const int sign = minus_one_pow(static_cast<i64>(k));
  const auto rest = norm.exclusions.excluded().subspan(2);
  BigInt num = binom(q - static_cast<i64>(c), k) + sign * r_c(q, f.p(), c, k) -
               q * sign * s_c_sum(f, rest, k, norm.b);
  return exact_div(num, q, "nested-sum form");
}

// ---------------------------------------------------------------------------

BigInt bound_theorem_1_1(i64 q, i64 p, u64 n, u64 k, BoundMode mode) {
  require_char(q, p);
  if (n + 2 > static_cast<u64>(q)) throw std::invalid_argument("bound needs n <= q-2");
  const u64 c = static_cast<u64>(q) - n;
  switch (mode) {
    case BoundMode::general:
      if (p == q) throw std::invalid_argument("general bound needs a non-prime field");
      return (q - p) * binom(static_cast<i64>(k + c - 2), c - 2) * binom(q / p - 1, block(k, p));
    case BoundMode::independent: {
      if (p == q) throw std::invalid_argument("independent bound needs a non-prime field");
      BigInt best = 0;
      for (u64 j = 0; j <= k; ++j) {
        BigInt a = binom(static_cast<i64>(k + c - 2 - j), c - 2) * binom(q / p - 1, block(j, p));
        if (a > best) best = a;
      }
      return p * best;
    }
    case BoundMode::prime_field:
      if (p != q) throw std::invalid_argument("prime-field bound needs q = p");
      return q * binom(static_cast<i64>(k + c - 2), c - 2);
  }
  throw std::invalid_argument("unknown bound mode");
}

BigInt prime_field_shift(i64 q, u64 n, u64 k) {
  if (n + 1 > static_cast<u64>(q)) throw std::invalid_argument("shift needs n <= q-1");
  const u64 c = static_cast<u64>(q) - n;
  return signed_binom(static_cast<i64>(k), static_cast<i64>(k + c - 1), c - 1);
}

bool bound_satisfied(const CountReport& r) {
  if (!r.bound || !r.bound_mode) return true;
  BigInt dev = r.error;
  if (*r.bound_mode == BoundMode::prime_field) {
    dev += prime_field_shift(r.main_term_den.get_si(), r.query.exclusions.n(), r.query.k);
  }
  return abs(dev) <= *r.bound;
}

// ---------------------------------------------------------------------------

bool all_targets_reachable(const Field& f, DomainMode mode, u64 k) {
  const u64 n = mode == DomainMode::full_field ? f.q() : f.q() - 1;
  if (k > n) return false;
  for (const Element& b : f.elements()) {
    const BigInt v = mode == DomainMode::full_field ? count_full_field(f, k, b) : count_punctured_field(f, k, b);
    if (v == 0) return false;
  }
  return true;
}

Existence has_solution(const Field& f, DomainMode mode, u64 k) {
  const u64 q = f.q();
  const bool odd = f.p() != 2;
  bool guaranteed = false;
  if (mode == DomainMode::full_field) {
    guaranteed = odd ? (0 < k && k < q) : (2 < k && k + 2 < q);
  } else if (q > 5) {
    guaranteed = odd ? (1 < k && k + 2 < q) : (2 < k && k + 3 < q);
  }
  if (guaranteed) return {true, true};
  return {all_targets_reachable(f, mode, k), false};
}

}  // namespace ffsubsum
