/**
 * @file galois.hpp
 * @brief Table-driven arithmetic in GF(p^m) for odd p.
 *
 * Elements are stored as their polynomial-basis index: the residue
 * c_0 + c_1 T + ... + c_{m-1} T^{m-1} modulo the field's modulus is encoded as
 * c_0 + c_1 p + ... + c_{m-1} p^{m-1}. Multiplication, inversion, square roots
 * and the quadratic character run through discrete-log tables relative to the
 * smallest primitive element; addition uses a Zech-logarithm table. Tables are
 * built once per field and the field is immutable afterwards.
 *
 * Construction conventions are fixed so that every downstream artifact is
 * reproducible: the modulus defaults to the lexicographically smallest monic
 * irreducible polynomial (ordered by (c_{m-1}, ..., c_0)) and the generator is
 * the smallest index of multiplicative order q - 1.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mdssd {

/// Largest supported field order.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

/// A field element in polynomial-basis index form. Meaningful only together
/// with the Field it was produced by.
struct Element {
  std::uint32_t index = 0;

  constexpr Element() = default;
  constexpr explicit Element(std::uint32_t i) : index(i) {}

  friend constexpr auto operator<=>(Element, Element) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t n);

/// Returns (p, m) with q = p^m, or nothing when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// Distinct prime divisors of n in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

class Field {
  struct Token {};

 public:
  /// Builds GF(p^m). `modulus` is ascending coefficients over GF(p) (length m + 1, monic).
  static FieldPtr make(std::uint32_t p, std::uint32_t m,
                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);
  /// Builds the canonical field of order q.
  static FieldPtr of_order(std::uint64_t q);

  Field(Token, std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Element generator() const { return generator_; }

  Element zero() const { return Element{0}; }
  Element one() const { return Element{1}; }
  Element minus_one() const { return Element{p_ - 1}; }
  /// Image of an integer in the prime field.
  Element from_int(std::int64_t v) const;

  bool contains(Element a) const { return a.index < q_; }
  std::vector<std::uint32_t> digits(Element a) const;
  Element from_digits(const std::vector<std::uint32_t>& coeffs) const;

  Element add(Element a, Element b) const {
    if (a.index == 0) return b;
    if (b.index == 0) return a;
    std::uint32_t la = log_[a.index];
    std::uint32_t d = log_[b.index] + (q_ - 1) - la;
    if (d >= q_ - 1) d -= q_ - 1;
    std::uint32_t z = zech_[d];
    if (z == kNoLog) return Element{0};
    return Element{exp_[la + z]};
  }
  Element neg(Element a) const {
    if (a.index == 0) return a;
    return Element{exp_[log_[a.index] + half_]};
  }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const {
    if (a.index == 0 || b.index == 0) return Element{0};
    return Element{exp_[log_[a.index] + log_[b.index]]};
  }
  /// Throws InvalidArgument for a == 0.
  Element inv(Element a) const;
  Element div(Element a, Element b) const;
  /// Any integer exponent; negative exponents require a != 0. 0^0 = 1.
  Element pow(Element a, std::int64_t e) const;

  /// Discrete log base the generator, in [0, q - 1). Throws for 0.
  std::uint32_t log(Element a) const;
  Element exp(std::int64_t e) const;

  /// Quadratic character as +1 / -1. Throws InvalidArgument for 0.
  int character(Element a) const;
  bool is_square(Element a) const { return a.index == 0 || (log_[a.index] & 1u) == 0; }
  /// Smaller-index square root, or nothing for non-squares.
  std::optional<Element> sqrt(Element a) const;

  /// True when both descriptors describe the same field (same p, m and modulus).
  bool same_as(const Field& other) const;

  std::vector<Element> elements() const;
  /// Human-readable polynomial form such as "2T+1".
  std::string to_string(Element a) const;

 private:
  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::uint32_t half_;
  std::vector<std::uint32_t> modulus_;
  Element generator_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;  // length 2(q-1) so log sums need no reduction
  std::vector<std::uint32_t> zech_;
};

/// Checked element bound to its field, for call sites that mix fields.
class Value {
 public:
  Value(FieldPtr field, Element e);

  const FieldPtr& field() const { return field_; }
  Element element() const { return e_; }

  Value operator+(const Value& o) const;
  Value operator-(const Value& o) const;
  Value operator*(const Value& o) const;
  Value operator/(const Value& o) const;
  Value operator-() const;
  Value inv() const;
  Value pow(std::int64_t e) const;

  bool operator==(const Value& o) const;

 private:
  const Field& checked(const Value& o) const;

  FieldPtr field_;
  Element e_;
};

/// The subfield GF(p^s) of a field GF(p^m), s | m.
class Subfield {
 public:
  Subfield(FieldPtr field, std::uint32_t degree);

  const FieldPtr& field() const { return field_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t order() const { return r_; }

  bool contains(Element a) const;
  /// Sum of the conjugates a^{r^i}, i < m/s.
  Element trace(Element a) const;
  /// a^{(q-1)/(r-1)}; N(0) = 0.
  Element norm(Element a) const;
  /// Members sorted by index.
  const std::vector<Element>& elements() const { return members_; }

 private:
  FieldPtr field_;
  std::uint32_t degree_;
  std::uint32_t r_;
  std::vector<Element> members_;
};

/// Field homomorphism from a smaller field into a larger one of the same characteristic.
/// The generator of the small field's polynomial basis is sent to the smallest-index root
/// of the small field's modulus inside the large field.
class Embedding {
 public:
  Embedding(FieldPtr small, FieldPtr large);

  const FieldPtr& source() const { return small_; }
  const FieldPtr& target() const { return large_; }
  Element root() const { return root_; }
  Element operator()(Element a) const { return Element{map_.at(a.index)}; }

 private:
  FieldPtr small_;
  FieldPtr large_;
  Element root_;
  std::vector<std::uint32_t> map_;
};

}  // namespace mdssd
