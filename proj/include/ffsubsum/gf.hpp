#pragma once

// Finite fields F_q, q = p^e, in the power basis of F_p[x]/(modulus).
//
// Elements are stored canonically as the integer encoding of their
// coordinate vector, code = c0 + c1*p + ... + c_{e-1}*p^{e-1}. Prime-subfield
// elements are exactly the codes below p.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ffsubsum {

using Residue = std::uint32_t;
using Code = std::uint32_t;

namespace detail {
struct FieldData;
}

class Element;

/// Upper bound on q used when none is given explicitly. Reads
/// FFSUBSUM_MAX_Q from the environment, defaulting to 2^20.
std::uint64_t default_max_q();

bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Immutable handle to a constructed field; cheap to copy.
class Field {
 public:
  /// Deterministic construction: the lexicographically smallest monic
  /// irreducible modulus (constant term most significant) and the least
  /// primitive element in code order.
  static Field make(std::uint32_t p, std::uint32_t e,
                    std::uint64_t max_q = default_max_q());

  std::uint32_t p() const;
  std::uint32_t e() const;
  std::uint32_t q() const;
  bool is_prime_field() const { return e() == 1; }

  /// Monic modulus, e+1 coefficients, constant term first. For e = 1 this is x.
  std::span<const Residue> modulus() const;

  Element generator() const;
  Element zero() const;
  Element one() const;
  Element from_code(Code c) const;
  Element from_coords(std::span<const Residue> coords) const;
  /// n * 1, i.e. the image of the integer n in the prime subfield.
  Element from_int(std::int64_t n) const;
  Element gen_pow(std::uint64_t k) const;
  /// All q elements in canonical (code) order.
  std::vector<Element> elements() const;

  std::vector<Residue> coords(Code c) const;
  Code encode(std::span<const Residue> coords) const;

  // Code-level kernels for hot loops. Inputs must be valid codes.
  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;
  Code pow(Code a, std::int64_t k) const;
  /// n * a for an integer n.
  Code scale(Code a, std::int64_t n) const;
  /// Multiplication by schoolbook polynomial product modulo the modulus,
  /// independent of the log tables.
  Code mul_reference(Code a, Code b) const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> data_;
};

/// Value-semantic field element. Arithmetic between elements of different
/// fields throws std::invalid_argument.
class Element {
 public:
  Element(Field f, Code c) : field_(std::move(f)), code_(c) {}

  const Field& field() const { return field_; }
  Code code() const { return code_; }
  std::vector<Residue> coords() const { return field_.coords(code_); }
  bool is_zero() const { return code_ == 0; }

  Element inv() const;
  Element pow(std::int64_t k) const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  friend Element operator-(const Element& a);
  /// n * a
  friend Element operator*(std::int64_t n, const Element& a);

  friend bool operator==(const Element& a, const Element& b) {
    return a.code_ == b.code_ && a.field_ == b.field_;
  }
  /// Canonical order by code; only meaningful within one field.
  friend auto operator<=>(const Element& a, const Element& b) { return a.code_ <=> b.code_; }

 private:
  Field field_;
  Code code_;
};

/// True iff x lies in F_p (all non-constant coordinates vanish).
bool in_prime_subfield(const Element& x);
/// The residue of x in [0, p); throws std::invalid_argument when x is not in F_p.
Residue prime_residue(const Element& x);

/// Rank over F_p of the coordinate matrix of the given elements.
std::size_t fp_rank(std::span<const Element> elements);

/// Parses "r" (decimal residue < p), "g^k", or "[c0,...,c_{e-1}]".
Element parse_element(std::string_view text, const Field& f);
/// Decimal for prime fields, coordinate form for extension fields.
std::string format_element(const Element& x);

/// Splits a comma-separated list of element texts, respecting brackets.
/// The empty string yields an empty list.
std::vector<Element> parse_element_list(std::string_view text, const Field& f);
std::string format_element_list(std::span<const Element> xs, std::string_view sep = ",");

}  // namespace ffsubsum
