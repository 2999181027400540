#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ehzkit/errors.hpp"

namespace ehzkit {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

enum class ElemFormat { Int, Power, Poly };

/// Exact arithmetic in F_q, q = p^m, on packed values.
///
/// An element sum c_j X^j is packed as the integer sum c_j p^j, which gives a
/// total order on the field and a compact wire encoding. For m = 1 arithmetic
/// is plain modular arithmetic; for m > 1 it is polynomial arithmetic modulo
/// an irreducible monic modulus of degree m. Fields are immutable and shared;
/// elements carry a pointer to their field.
class Field : public std::enable_shared_from_this<Field> {
 public:
  /// Validates p prime, m >= 1, q <= 2^32, modulus monic irreducible of
  /// degree m (modulus given iff m > 1). For m > 1, if X itself generates the
  /// multiplicative group it is designated as the field's generator so that
  /// "w^e" notation works out of the box; an explicit generator overrides.
  static FieldPtr make(u64 p, u32 m = 1, const std::vector<u64>& modulus = {},
                       std::optional<u64> generator = std::nullopt);

  u64 p() const { return p_; }
  u32 m() const { return m_; }
  u64 q() const { return q_; }
  u64 characteristic() const { return p_; }
  /// Ascending coefficients c_0..c_m of the modulus; empty for m == 1.
  const std::vector<u64>& modulus() const { return modulus_; }
  std::optional<u64> generator_value() const { return generator_; }

  bool same_as(const Field& other) const;

  // packed-value arithmetic
  u64 add(u64 a, u64 b) const;
  u64 sub(u64 a, u64 b) const;
  u64 neg(u64 a) const;
  u64 mul(u64 a, u64 b) const;
  u64 inv(u64 a) const;       // DivisionByZero on 0
  u64 pow(u64 a, i64 e) const;  // pow(0,0) = 1; negative e via inv

  std::vector<u64> to_coeffs(u64 packed) const;   // length m
  u64 from_coeffs(const std::vector<u64>& c) const;  // coeffs reduced mod p

  FieldElement element(u64 packed) const;
  FieldElement zero() const;
  FieldElement one() const;

  /// Multiplicative order of a nonzero element.
  u64 order(u64 a) const;

 private:
  Field() = default;
  u64 p_ = 0;
  u32 m_ = 0;
  u64 q_ = 0;
  std::vector<u64> modulus_;  // empty for m == 1
  std::optional<u64> generator_;
};

/// One element of a specific field. Copies are cheap; the referenced Field
/// must outlive the element (fields are shared_ptr-owned by the containers
/// that create them).
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Field& f, u64 v) : f_(&f), v_(v) {}

  u64 value() const { return v_; }
  const Field& field() const { return *f_; }
  bool is_zero() const { return v_ == 0; }

  friend FieldElement operator+(FieldElement a, FieldElement b);
  friend FieldElement operator-(FieldElement a, FieldElement b);
  friend FieldElement operator*(FieldElement a, FieldElement b);
  friend FieldElement operator/(FieldElement a, FieldElement b);
  FieldElement operator-() const { return FieldElement(*f_, f_->neg(v_)); }
  friend bool operator==(FieldElement a, FieldElement b);
  friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

 private:
  const Field* f_ = nullptr;
  u64 v_ = 0;
};

FieldElement inv(FieldElement a);
FieldElement pow(FieldElement a, i64 e);

/// All q elements in ascending packed order.
std::vector<FieldElement> enumerate_field(const Field& f);

/// Accepts "INT", "w^INT" / "w" (needs a designated generator), and
/// "poly:[c0,...,c_{m-1}]".
FieldElement parse_element(const std::string& text, const Field& f);
u64 parse_packed(const std::string& text, const Field& f);

/// Formats 0 and 1 as "0"/"1" in every mode; power mode otherwise emits "w"
/// or "w^e". parse_element(format_element(x, mode)) == x for every mode.
std::string format_element(const FieldElement& a, ElemFormat mode);
std::string format_packed(u64 v, const Field& f, ElemFormat mode);

bool is_prime_u64(u64 n);
std::vector<u64> prime_factors(u64 n);

}  // namespace ehzkit
