#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ffcount {

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

/// Arithmetic context for the finite field F_q, q = p^k.
///
/// Elements are addressed by a canonical index in [0, q): the element with
/// coefficient vector (c_0, ..., c_{k-1}) over F_p has index sum c_i p^i.
/// Index 0 is the additive identity and index 1 the multiplicative identity.
/// For k >= 2 the field is realised as F_p[u]/(m(u)) where m is the
/// lexicographically smallest monic irreducible of degree k (coefficient
/// vectors compared low degree first, equivalently ascending index).
///
/// Instances are immutable after construction and safe to share across
/// threads. Construct via Field::make; small fields precompute full
/// operation tables.
class Field : public std::enable_shared_from_this<Field> {
 public:
  /// Orders above this would make the modulus search and table layout
  /// unreasonable for a desk-scale tool.
  static constexpr int64_t kMaxOrder = int64_t{1} << 20;

  /// Builds F_{p^k}. Throws std::invalid_argument if p is not prime,
  /// k < 1, or p^k exceeds kMaxOrder.
  static FieldPtr make(int64_t p, int k = 1);

  int64_t p() const { return p_; }
  int k() const { return k_; }
  int64_t q() const { return q_; }

  /// Modulus coefficients m_0..m_k (monic, degree k). Size k+1 for k >= 2,
  /// empty for prime fields.
  const std::vector<int64_t>& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  /// The residue class of u, only defined for k >= 2.
  FieldElement generator() const;
  /// Element with the given canonical index in [0, q).
  FieldElement element(int64_t index) const;
  /// n mod p, embedded in the prime subfield.
  FieldElement from_integer(int64_t n) const;

  /// All q elements in canonical index order: 0 first, 1 second.
  std::vector<FieldElement> enumerate() const;

  // Index-level arithmetic. All arguments must lie in [0, q).
  int64_t add_idx(int64_t a, int64_t b) const;
  int64_t sub_idx(int64_t a, int64_t b) const;
  int64_t neg_idx(int64_t a) const;
  int64_t mul_idx(int64_t a, int64_t b) const;
  /// Throws std::domain_error for a = 0.
  int64_t inv_idx(int64_t a) const;
  /// Throws std::domain_error for b = 0.
  int64_t div_idx(int64_t a, int64_t b) const;
  /// Square-and-multiply; e may be negative (inverts first). 0^0 = 1.
  int64_t pow_idx(int64_t a, int64_t e) const;

  /// Coefficient vector (c_0, ..., c_{k-1}) of the element with this index.
  std::vector<int64_t> coeffs_of(int64_t index) const;

  bool same_field(const Field& other) const;

  /// Human-readable description, e.g. "GF(4) = F_2[u]/(u^2+u+1)".
  std::string describe() const;

 private:
  Field(int64_t p, int k);

  int64_t mul_slow(int64_t a, int64_t b) const;
  int64_t inv_slow(int64_t a) const;

  int64_t p_ = 0;
  int64_t q_ = 0;
  int k_ = 0;
  std::vector<int64_t> modulus_;

  // Full operation tables, built when q <= kTableLimit.
  static constexpr int64_t kTableLimit = 256;
  bool tabled_ = false;
  std::vector<int32_t> add_tab_;  // q*q
  std::vector<int32_t> mul_tab_;  // q*q
  std::vector<int32_t> neg_tab_;  // q
  std::vector<int32_t> inv_tab_;  // q, entry 0 unused
};

/// Splits a prime power q = p^k into (p, k); throws std::invalid_argument
/// when q is not a prime power >= 2.
std::pair<int64_t, int> factor_prime_power(int64_t q);

/// Convenience: F_q for a prime power q written multiplicatively, e.g. 9 -> F_{3^2}.
/// Throws std::invalid_argument if q is not a prime power in range.
FieldPtr field_for_order(int64_t q);

/// Immutable value type for an element of a Field.
class FieldElement {
 public:
  FieldElement(FieldPtr field, int64_t index);

  const FieldPtr& field() const { return field_; }
  int64_t index() const { return index_; }
  /// Coefficient vector over F_p, length k.
  std::vector<int64_t> coeffs() const { return field_->coeffs_of(index_); }

  bool is_zero() const { return index_ == 0; }
  bool is_one() const { return index_ == 1; }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /// Text form in u-notation: "0", "1", "2", "u", "u+1", "2*u^2+1", ...
  std::string to_string() const;

 private:
  FieldPtr field_;
  int64_t index_;
};

FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, int64_t e);

}  // namespace ffcount
