#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ffcount/poly.hpp"

namespace ffcount {

/// A place of the rational function field F_q(t): either the finite place of
/// a monic irreducible polynomial, or the place at infinity (degree 1).
class Place {
 public:
  static Place infinite(FieldPtr field);
  /// Throws std::invalid_argument unless pi is monic irreducible.
  static Place finite(Poly pi);

  bool is_infinite() const { return !pi_.has_value(); }
  int degree() const { return pi_ ? pi_->degree() : 1; }
  /// The monic irreducible defining a finite place; throws for the infinite one.
  const Poly& uniformizer() const;
  const FieldPtr& field() const { return field_; }

  /// Total order: finite places by (degree, canonical coefficient order),
  /// the infinite place last.
  friend bool operator<(const Place& a, const Place& b);
  friend bool operator==(const Place& a, const Place& b);
  friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }

  /// "(t^2+t+1)" for finite places, "inf" for the infinite one.
  std::string to_string() const;

 private:
  Place(FieldPtr field, std::optional<Poly> pi);
  FieldPtr field_;
  std::optional<Poly> pi_;  // empty for the infinite place
};

/// Formal Z-linear combination of places with deterministic term order.
/// Zero multiplicities are never stored.
class Divisor {
 public:
  Divisor() = default;

  /// Adds mult * place, erasing the term if the total cancels.
  void add(const Place& place, int64_t mult);
  int64_t multiplicity(const Place& place) const;
  const std::map<Place, int64_t>& terms() const { return terms_; }

  int64_t degree() const;
  bool is_zero() const { return terms_.empty(); }
  bool is_effective() const;
  /// True when no term sits over the infinite place.
  bool finite_support() const;

  Divisor operator-() const;
  Divisor& operator+=(const Divisor& o);
  Divisor& operator-=(const Divisor& o);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }

  /// Pointwise minimum, places absent from a divisor counting as 0.
  static Divisor inf(const Divisor& a, const Divisor& b);

  friend bool operator==(const Divisor& a, const Divisor& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Divisor& a, const Divisor& b) { return !(a == b); }

  /// "0", "(t) + 2*(t+1) - inf", ...
  std::string to_string() const;

 private:
  std::map<Place, int64_t> terms_;
};

/// Order of vanishing of a nonzero rational function at a place; at the
/// infinite place this is deg(den) - deg(num). Throws for the zero function.
int64_t valuation(const Place& place, const RationalFunction& f);
int64_t valuation(const Place& place, const Poly& f);

/// The divisor of zeros of a nonzero polynomial over the finite places.
Divisor finite_divisor(const Poly& f);

/// div(f) over all places, including infinity; degree is always 0.
Divisor principal_divisor(const RationalFunction& f);

/// Mobius function of an effective divisor with finite support: 0 when any
/// multiplicity exceeds 1, otherwise (-1)^(number of places in the support).
/// Throws std::invalid_argument for non-effective or infinite-supported input.
int mobius(const Divisor& d);

/// All effective divisors of degree d with finite support, i.e. the divisors
/// of monic polynomials of degree d, in canonical monic order.
std::vector<Divisor> enumerate_effective(const FieldPtr& field, int d);

}  // namespace ffcount
