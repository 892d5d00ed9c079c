#include "ffsubsum/rscodes.hpp"

#include <algorithm>
#include <stdexcept>

#include "ffsubsum/counts.hpp"
#include "ffsubsum/errors.hpp"

namespace ffsubsum {

namespace {

std::vector<Code> trimmed_codes(std::vector<Code> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

}  // namespace

Poly::Poly(Field f, std::vector<Element> coeffs) : field_(std::move(f)), coeffs_(std::move(coeffs)) {
  for (const Element& c : coeffs_) {
    if (!(c.field() == field_)) throw std::invalid_argument("coefficient from a different field");
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Degree Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Element Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }

Element Poly::operator()(const Element& x) const {
  Code acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = field_.add(field_.mul(acc, x.code()), it->code());
  }
  return field_.from_code(acc);
}

std::string_view to_string(Verdict v) { return v == Verdict::deep_hole ? "deep_hole" : "ordinary"; }

RSCode::RSCode(Field f, std::vector<Element> eval_set, std::size_t k)
    : field_(std::move(f)), points_(std::move(eval_set)), k_(k) {
  if (points_.empty()) throw std::invalid_argument("evaluation set is empty");
  std::vector<Code> seen;
  for (const Element& x : points_) {
    if (!(x.field() == field_)) throw std::invalid_argument("evaluation point from a different field");
    seen.push_back(x.code());
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw std::invalid_argument("evaluation points must be distinct");
  }
  if (k_ < 1 || k_ > points_.size()) {
    throw std::invalid_argument("dimension k = " + std::to_string(k_) + " outside [1, " +
                                std::to_string(points_.size()) + "]");
  }
}

RSCode RSCode::over(const Field& f, EvalMode mode, std::size_t k) {
  std::vector<Element> pts = f.elements();
  if (mode == EvalMode::punctured) pts.erase(pts.begin());
  return RSCode(f, std::move(pts), k);
}

void RSCode::check_word(const Word& u) const {
  if (u.values.size() != n()) {
    throw std::invalid_argument("word length " + std::to_string(u.values.size()) + " does not match n = " +
                                std::to_string(n()));
  }
  for (const Element& x : u.values) {
    if (!(x.field() == field_)) throw std::invalid_argument("word symbol from a different field");
  }
}

Word RSCode::evaluate(const Poly& f) const {
  Word w;
  w.values.reserve(n());
  for (const Element& x : points_) w.values.push_back(f(x));
  return w;
}

Word RSCode::encode(const Poly& f) const {
  if (f.degree() && *f.degree() >= k_) {
    throw std::invalid_argument("message polynomial of degree " + std::to_string(*f.degree()) +
                                " does not fit dimension " + std::to_string(k_));
  }
  return evaluate(f);
}

Poly RSCode::interpolate(const Word& u) const {
  check_word(u);
  const Field& f = field_;
  const std::size_t nn = n();
  // P(x) = prod (x - x_j), degree n
  std::vector<Code> P{1};
  for (const Element& xj : points_) {
    std::vector<Code> next(P.size() + 1, 0);
    const Code neg = f.neg(xj.code());
    for (std::size_t i = 0; i < P.size(); ++i) {
      next[i + 1] = f.add(next[i + 1], P[i]);
      next[i] = f.add(next[i], f.mul(P[i], neg));
    }
    P = std::move(next);
  }
  std::vector<Code> acc(nn, 0);
  std::vector<Code> Q(nn);
  for (std::size_t i = 0; i < nn; ++i) {
    if (u.values[i].is_zero()) continue;
    const Code xi = points_[i].code();
    // Q = P / (x - x_i) by synthetic division
    Code carry = 0;
    for (std::size_t d = nn; d-- > 0;) {
      carry = f.add(P[d + 1], f.mul(carry, xi));
      Q[d] = carry;
    }
    Code denom = 0;
    for (std::size_t d = nn; d-- > 0;) denom = f.add(f.mul(denom, xi), Q[d]);
    const Code w = f.mul(u.values[i].code(), f.inv(denom));
    for (std::size_t d = 0; d < nn; ++d) acc[d] = f.add(acc[d], f.mul(w, Q[d]));
  }
  acc = trimmed_codes(std::move(acc));
  std::vector<Element> coeffs;
  coeffs.reserve(acc.size());
  for (Code c : acc) coeffs.push_back(f.from_code(c));
  return Poly(f, std::move(coeffs));
}

bool RSCode::is_codeword(const Word& u) const {
  const Degree d = word_degree(u);
  return !d || *d + 1 <= k_;
}

std::uint64_t RSCode::message_count(std::uint64_t guard) const {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k_; ++i) {
    total *= field_.q();
    if (total > guard) {
      throw GuardExceeded("exhaustive distance over " + std::to_string(field_.q()) + "^" + std::to_string(k_) +
                              " codewords",
                          guard);
    }
  }
  return total;
}

std::size_t RSCode::distance_to_code(const Word& u, std::uint64_t guard) const {
  check_word(u);
  const std::uint64_t messages = message_count(guard);
  const Field& f = field_;
  const std::size_t nn = n();
  const std::uint32_t q = f.q();
  // powers[j * n + i] = x_i^j
  std::vector<Code> powers(k_ * nn);
  for (std::size_t i = 0; i < nn; ++i) {
    Code x = 1;
    for (std::size_t j = 0; j < k_; ++j) {
      powers[j * nn + i] = x;
      x = f.mul(x, points_[i].code());
    }
  }
  std::vector<Code> target(nn);
  for (std::size_t i = 0; i < nn; ++i) target[i] = u.values[i].code();

  std::size_t best = 0;
  const auto total = static_cast<std::int64_t>(messages);
#pragma omp parallel
  {
    std::vector<Code> msg(k_);
#pragma omp for reduction(max : best) schedule(static)
    for (std::int64_t m = 0; m < total; ++m) {
      auto rest = static_cast<std::uint64_t>(m);
      for (std::size_t j = 0; j < k_; ++j) {
        msg[j] = static_cast<Code>(rest % q);
        rest /= q;
      }
      std::size_t agree = 0;
      for (std::size_t i = 0; i < nn; ++i) {
        Code v = 0;
        for (std::size_t j = 0; j < k_; ++j) v = f.add(v, f.mul(msg[j], powers[j * nn + i]));
        agree += (v == target[i]);
      }
      best = std::max(best, agree);
    }
  }
  return nn - best;
}

std::size_t RSCode::distance_to_code_serial(const Word& u, std::uint64_t guard) const {
  check_word(u);
  const std::uint64_t messages = message_count(guard);
  std::size_t best_distance = n();
  for (std::uint64_t m = 0; m < messages; ++m) {
    std::vector<Element> coeffs;
    std::uint64_t rest = m;
    for (std::size_t j = 0; j < k_; ++j) {
      coeffs.push_back(field_.from_code(static_cast<Code>(rest % field_.q())));
      rest /= field_.q();
    }
    const Word v = encode(Poly(field_, std::move(coeffs)));
    std::size_t dist = 0;
    for (std::size_t i = 0; i < n(); ++i) dist += !(v.values[i] == u.values[i]);
    best_distance = std::min(best_distance, dist);
  }
  return best_distance;
}

DistanceBounds RSCode::theorem_5_1_bounds(const Word& u) const {
  const Degree d = word_degree(u);
  if (!d || *d < k_) return {0, 0, true};
  return {n() - *d, n() - k_, false};
}

Element RSCode::root_sum_target(const Word& u) const {
  const Poly p = interpolate(u);
  if (p.degree() != Degree(k_ + 1)) throw std::invalid_argument("word degree is not k+1");
  // u = lead * (x^{k+1} - b1 x^k + ...)
  return -(p.coeff(k_) / p.coeff(k_ + 1));
}

Verdict RSCode::classify_m1(const Word& u) const {
  const Degree d = word_degree(u);
  if (d == Degree(k_)) return Verdict::deep_hole;
  if (d != Degree(k_ + 1)) {
    throw std::invalid_argument("classification needs d(u) in {k, k+1}, got " +
                                (d ? std::to_string(*d) : std::string("-inf")));
  }
  std::vector<Element> complement;
  std::vector<bool> in_d(field_.q(), false);
  for (const Element& x : points_) in_d[x.code()] = true;
  for (Code c = 0; c < field_.q(); ++c) {
    if (!in_d[c]) complement.push_back(field_.from_code(c));
  }
  ExclusionCounter counter(ExclusionSet(field_, std::move(complement)));
  const BigInt solutions = counter.count(k_ + 1, root_sum_target(u)).n;
  return solutions > 0 ? Verdict::ordinary : Verdict::deep_hole;
}

std::size_t RSCode::minimum_distance(std::uint64_t guard) const {
  const std::uint64_t messages = message_count(guard);
  std::vector<Word> words;
  words.reserve(messages);
  for (std::uint64_t m = 0; m < messages; ++m) {
    std::vector<Element> coeffs;
    std::uint64_t rest = m;
    for (std::size_t j = 0; j < k_; ++j) {
      coeffs.push_back(field_.from_code(static_cast<Code>(rest % field_.q())));
      rest /= field_.q();
    }
    words.push_back(encode(Poly(field_, std::move(coeffs))));
  }
  std::size_t best = n() + 1;
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      std::size_t dist = 0;
      for (std::size_t i = 0; i < n(); ++i) dist += words[a].values[i].code() != words[b].values[i].code();
      best = std::min(best, dist);
    }
  }
  return best;
}

Word RSCode::parse_word(std::string_view text) const {
  Word w{parse_element_list(text, field_)};
  check_word(w);
  return w;
}

std::string RSCode::format_word(const Word& u) const { return format_element_list(u.values); }

ScanReport deep_hole_scan(const Field& f, EvalMode mode, std::size_t k, const ScanOptions& opts) {
  const RSCode code = RSCode::over(f, mode, k);
  if (k + 2 > code.n()) {
    throw std::invalid_argument("no words of degree k+1 = " + std::to_string(k + 1) + " when n = " +
                                std::to_string(code.n()));
  }
  if (opts.exhaustive_check) {
    std::uint64_t work = 1;
    for (std::size_t i = 0; i < k + 2; ++i) {
      work *= f.q();
      if (work > opts.guard) throw GuardExceeded("exhaustive deep-hole cross-check", opts.guard);
    }
  }
  std::vector<Element> complement;
  if (mode == EvalMode::punctured) complement.push_back(f.zero());
  ExclusionCounter counter(ExclusionSet(f, std::move(complement)));

  ScanReport report;
  report.q = f.q();
  report.n = code.n();
  report.k = k;
  for (const Element& b1 : f.elements()) {
    ScanEntry e{b1, counter.count(k + 1, b1).n, false, std::nullopt};
    e.deep_hole = (e.solutions == 0);
    if (opts.exhaustive_check) {
      // x^{k+1} - b1 x^k
      std::vector<Element> coeffs(k + 2, f.zero());
      coeffs[k] = -b1;
      coeffs[k + 1] = f.one();
      const Word u = code.evaluate(Poly(f, std::move(coeffs)));
      e.exhaustive_deep_hole = code.distance_to_code(u, opts.guard) == code.n() - k;
    }
    report.deep_holes += e.deep_hole;
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace ffsubsum
