#include "ffsubsum/gf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace ffsubsum {

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint32_t q = 0;
  std::vector<Residue> modulus;   // e+1 coefficients, monic
  std::vector<std::uint32_t> pw;  // p^i, i < e
  Code generator = 0;
  std::vector<Code> exp_table;           // g^i, i < q-1
  std::vector<std::uint32_t> log_table;  // log_g(x), x != 0
};

}  // namespace detail

namespace {

constexpr std::uint64_t kDefaultMaxQ = std::uint64_t{1} << 20;
constexpr std::uint64_t kHardMaxQ = std::uint64_t{1} << 30;

using Poly = std::vector<Residue>;  // low degree first

std::uint32_t mulmod(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(a * b % p);
}

std::uint32_t powmod(std::uint64_t a, std::uint64_t k, std::uint32_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (k) {
    if (k & 1) r = r * a % p;
    a = a * a % p;
    k >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t invmod(std::uint32_t a, std::uint32_t p) { return powmod(a, p - 2, p); }

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo the monic polynomial g.
Poly poly_rem(Poly f, const Poly& g, std::uint32_t p) {
  const std::size_t dg = g.size() - 1;
  trim(f);
  while (f.size() > dg) {
    const std::uint64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = static_cast<Residue>((f[shift + i] + p - mulmod(lead, g[i], p)) % p);
    }
    trim(f);
  }
  return f;
}

Poly digits(std::uint64_t t, std::uint32_t p, std::uint32_t len) {
  Poly d(len);
  for (std::uint32_t i = 0; i < len; ++i) {
    d[i] = static_cast<Residue>(t % p);
    t /= p;
  }
  return d;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t e = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= e / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
      Poly g = digits(t, p, d);
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly find_modulus(std::uint32_t p, std::uint32_t e) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < e; ++i) count *= p;
  // Lexicographic order of (c0, c1, ..., c_{e-1}): c0 is the most significant digit.
  for (std::uint64_t t = 0; t < count; ++t) {
    Poly rev = digits(t, p, e);
    Poly f(rev.rbegin(), rev.rend());
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

std::uint64_t default_max_q() {
  if (const char* env = std::getenv("FFSUBSUM_MAX_Q")) {
    std::uint64_t v = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && v >= 2) return std::min(v, kHardMaxQ);
  }
  return kDefaultMaxQ;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Field Field::make(std::uint32_t p, std::uint32_t e, std::uint64_t max_q) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw std::invalid_argument("extension degree must be positive");
  const std::uint64_t limit = std::min(max_q, kHardMaxQ);
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > limit) {
      throw std::invalid_argument("field size " + std::to_string(p) + "^" + std::to_string(e) +
                                  " exceeds limit " + std::to_string(limit));
    }
  }

  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->e = e;
  d->q = static_cast<std::uint32_t>(q);
  d->pw.resize(e);
  for (std::uint32_t i = 0, v = 1; i < e; ++i, v *= p) d->pw[i] = v;
  d->modulus = find_modulus(p, e);

  // Tables are filled below; arithmetic up to that point goes through
  // mul_reference only.
  Field f(d);
  std::vector<std::uint64_t> ell = prime_factors(q - 1);
  auto ref_pow = [&](Code a, std::uint64_t k) {
    Code r = 1;
    while (k) {
      if (k & 1) r = f.mul_reference(r, a);
      a = f.mul_reference(a, a);
      k >>= 1;
    }
    return r;
  };
  Code g = 0;
  for (Code c = 1; c < q; ++c) {
    bool primitive = true;
    for (std::uint64_t l : ell) {
      if (ref_pow(c, (q - 1) / l) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = c;
      break;
    }
  }
  if (g == 0) throw std::logic_error("no primitive element found");
  d->generator = g;

  d->exp_table.resize(q - 1);
  d->log_table.assign(q, 0);
  Code x = 1;
  for (std::uint64_t i = 0; i + 1 < q; ++i) {
    d->exp_table[i] = x;
    d->log_table[x] = static_cast<std::uint32_t>(i);
    x = f.mul_reference(x, g);
  }
  if (x != 1) throw std::logic_error("generator order mismatch");
  return f;
}

std::uint32_t Field::p() const { return data_->p; }
std::uint32_t Field::e() const { return data_->e; }
std::uint32_t Field::q() const { return data_->q; }
std::span<const Residue> Field::modulus() const { return data_->modulus; }

Element Field::generator() const { return Element(*this, data_->generator); }
Element Field::zero() const { return Element(*this, 0); }
Element Field::one() const { return Element(*this, 1); }

Element Field::from_code(Code c) const {
  if (c >= q()) throw std::invalid_argument("element code " + std::to_string(c) + " out of range");
  return Element(*this, c);
}

Element Field::from_coords(std::span<const Residue> coords) const {
  if (coords.size() != e()) {
    throw std::invalid_argument("expected " + std::to_string(e()) + " coordinates, got " +
                                std::to_string(coords.size()));
  }
  for (Residue r : coords) {
    if (r >= p()) throw std::invalid_argument("coordinate " + std::to_string(r) + " out of range");
  }
  return Element(*this, encode(coords));
}

Element Field::from_int(std::int64_t n) const {
  const std::int64_t pp = p();
  return Element(*this, static_cast<Code>(((n % pp) + pp) % pp));
}

Element Field::gen_pow(std::uint64_t k) const {
  return Element(*this, data_->exp_table[k % (q() - 1)]);
}

std::vector<Element> Field::elements() const {
  std::vector<Element> out;
  out.reserve(q());
  for (Code c = 0; c < q(); ++c) out.emplace_back(*this, c);
  return out;
}

std::vector<Residue> Field::coords(Code c) const {
  std::vector<Residue> out(e());
  for (auto& r : out) {
    r = c % p();
    c /= p();
  }
  return out;
}

Code Field::encode(std::span<const Residue> coords) const {
  Code c = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) c += coords[i] * data_->pw[i];
  return c;
}

Code Field::add(Code a, Code b) const {
  const std::uint32_t pp = data_->p;
  if (data_->e == 1) return (a + b) % pp;
  if (pp == 2) return a ^ b;
  Code r = 0;
  for (std::uint32_t i = 0; i < data_->e; ++i) {
    r += ((a % pp + b % pp) % pp) * data_->pw[i];
    a /= pp;
    b /= pp;
  }
  return r;
}

Code Field::neg(Code a) const {
  const std::uint32_t pp = data_->p;
  if (pp == 2) return a;
  if (data_->e == 1) return (pp - a) % pp;
  Code r = 0;
  for (std::uint32_t i = 0; i < data_->e; ++i) {
    r += ((pp - a % pp) % pp) * data_->pw[i];
    a /= pp;
  }
  return r;
}

Code Field::sub(Code a, Code b) const { return add(a, neg(b)); }

Code Field::mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t s = std::uint64_t{data_->log_table[a]} + data_->log_table[b];
  return data_->exp_table[s % (q() - 1)];
}

Code Field::inv(Code a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  const std::uint32_t n = q() - 1;
  return data_->exp_table[(n - data_->log_table[a]) % n];
}

Code Field::pow(Code a, std::int64_t k) const {
  if (a == 0) {
    if (k < 0) throw std::domain_error("negative power of zero");
    return k == 0 ? 1 : 0;
  }
  const std::int64_t n = q() - 1;
  const std::int64_t l = data_->log_table[a];
  const std::int64_t km = ((k % n) + n) % n;
  return data_->exp_table[static_cast<std::size_t>((l * km) % n)];
}

Code Field::scale(Code a, std::int64_t n) const { return mul(a, from_int(n).code()); }

Code Field::mul_reference(Code a, Code b) const {
  const std::uint32_t pp = p();
  const std::uint32_t ee = e();
  const Poly x = coords(a);
  const Poly y = coords(b);
  Poly prod(2 * ee - 1, 0);
  for (std::uint32_t i = 0; i < ee; ++i) {
    for (std::uint32_t j = 0; j < ee; ++j) {
      prod[i + j] = static_cast<Residue>((prod[i + j] + mulmod(x[i], y[j], pp)) % pp);
    }
  }
  Poly r = poly_rem(std::move(prod), data_->modulus, pp);
  r.resize(ee, 0);
  return encode(r);
}

bool operator==(const Field& a, const Field& b) {
  return a.data_ == b.data_ || (a.data_->p == b.data_->p && a.data_->e == b.data_->e);
}

namespace {

void require_same_field(const Element& a, const Element& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("operands belong to different fields");
}

}  // namespace

Element Element::inv() const { return Element(field_, field_.inv(code_)); }
Element Element::pow(std::int64_t k) const { return Element(field_, field_.pow(code_, k)); }

Element operator+(const Element& a, const Element& b) {
  require_same_field(a, b);
  return Element(a.field_, a.field_.add(a.code_, b.code_));
}

Element operator-(const Element& a, const Element& b) {
  require_same_field(a, b);
  return Element(a.field_, a.field_.sub(a.code_, b.code_));
}

Element operator*(const Element& a, const Element& b) {
  require_same_field(a, b);
  return Element(a.field_, a.field_.mul(a.code_, b.code_));
}

Element operator/(const Element& a, const Element& b) {
  require_same_field(a, b);
  return Element(a.field_, a.field_.mul(a.code_, a.field_.inv(b.code_)));
}

Element operator-(const Element& a) { return Element(a.field_, a.field_.neg(a.code_)); }

Element operator*(std::int64_t n, const Element& a) {
  return Element(a.field_, a.field_.scale(a.code_, n));
}

bool in_prime_subfield(const Element& x) { return x.code() < x.field().p(); }

Residue prime_residue(const Element& x) {
  if (!in_prime_subfield(x)) throw std::invalid_argument("element is not in the prime subfield");
  return x.code();
}

std::size_t fp_rank(std::span<const Element> elements) {
  if (elements.empty()) return 0;
  const Field& f = elements.front().field();
  const std::uint32_t p = f.p();
  std::vector<std::vector<Residue>> rows;
  rows.reserve(elements.size());
  for (const Element& x : elements) {
    if (!(x.field() == f)) throw std::invalid_argument("fp_rank: mixed fields");
    rows.push_back(x.coords());
  }
  std::size_t rank = 0;
  for (std::uint32_t col = 0; col < f.e() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint32_t s = invmod(rows[rank][col], p);
    for (auto& v : rows[rank]) v = mulmod(v, s, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const std::uint32_t factor = rows[r][col];
      for (std::uint32_t j = 0; j < f.e(); ++j) {
        rows[r][j] = (rows[r][j] + p - mulmod(factor, rows[rank][j], p)) % p;
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("malformed element '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Element parse_element(std::string_view text, const Field& f) {
  const std::string_view s = strip(text);
  if (s.starts_with("g^")) return f.gen_pow(parse_uint(s.substr(2), text));
  if (s.starts_with("[")) {
    if (!s.ends_with("]")) throw std::invalid_argument("malformed element '" + std::string(text) + "'");
    std::string_view body = s.substr(1, s.size() - 2);
    std::vector<Residue> coords;
    while (true) {
      const auto comma = body.find(',');
      const std::uint64_t v = parse_uint(strip(body.substr(0, comma)), text);
      if (v >= f.p()) {
        throw std::invalid_argument("coordinate out of range in '" + std::string(text) + "'");
      }
      coords.push_back(static_cast<Residue>(v));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    return f.from_coords(coords);
  }
  const std::uint64_t r = parse_uint(s, text);
  if (r >= f.p()) throw std::invalid_argument("residue out of range in '" + std::string(text) + "'");
  return f.from_code(static_cast<Code>(r));
}

std::string format_element(const Element& x) {
  if (x.field().is_prime_field()) return std::to_string(x.code());
  std::string out = "[";
  const auto c = x.coords();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  out += ']';
  return out;
}

std::vector<Element> parse_element_list(std::string_view text, const Field& f) {
  std::vector<Element> out;
  if (strip(text).empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back(parse_element(text.substr(start, i - start), f));
      start = i + 1;
    } else if (text[i] == '[') {
      ++depth;
    } else if (text[i] == ']') {
      --depth;
    }
  }
  return out;
}

std::string format_element_list(std::span<const Element> xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += format_element(xs[i]);
  }
  return out;
}

}  // namespace ffsubsum
