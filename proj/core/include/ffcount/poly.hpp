#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ffcount/gf.hpp"

namespace ffcount {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense univariate polynomial over a Field, in the variable t.
/// Coefficients are stored as canonical element indices, ascending degree,
/// with no trailing zeros; the zero polynomial stores nothing.
class Poly {
 public:
  /// degree() of the zero polynomial.
  static constexpr int kDegNegInf = std::numeric_limits<int>::min();

  static Poly zero(FieldPtr field);
  static Poly one(FieldPtr field);
  static Poly variable(FieldPtr field);  // t
  static Poly constant(const FieldElement& c);
  static Poly from_coefficients(FieldPtr field, const std::vector<FieldElement>& coeffs);
  /// Coefficients given as canonical element indices; trailing zeros trimmed.
  static Poly from_indices(FieldPtr field, std::vector<int64_t> indices);

  const FieldPtr& field() const { return field_; }
  int degree() const {
    return idx_.empty() ? kDegNegInf : static_cast<int>(idx_.size()) - 1;
  }
  bool is_zero() const { return idx_.empty(); }
  bool is_constant() const { return idx_.size() <= 1; }
  bool is_monic() const { return !idx_.empty() && idx_.back() == 1; }

  /// Coefficient of t^i; zero beyond the degree.
  FieldElement coeff(int i) const;
  FieldElement leading_coeff() const;  // throws for the zero polynomial
  const std::vector<int64_t>& indices() const { return idx_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }

  /// Division with remainder; throws std::domain_error if divisor is zero.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  friend Poly operator/(const Poly& a, const Poly& b);
  friend Poly operator%(const Poly& a, const Poly& b);

  /// Unit-normalized copy; throws std::domain_error for the zero polynomial.
  Poly monic() const;

  FieldElement eval(const FieldElement& x) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Text form such as "t^2+t+1", "(u+1)*t+u", "2*t^3+1", "0".
  std::string to_string() const;

 private:
  Poly(FieldPtr field, std::vector<int64_t> idx)
      : field_(std::move(field)), idx_(std::move(idx)) {}
  void trim();

  FieldPtr field_;
  std::vector<int64_t> idx_;
};

/// Monic gcd; throws std::domain_error if both arguments are zero.
Poly gcd(const Poly& a, const Poly& b);
/// Monic lcm; throws std::domain_error if either argument is zero.
Poly lcm(const Poly& a, const Poly& b);
Poly pow(const Poly& a, int e);

/// Order of pi in f: the largest m with pi^m | f. f nonzero, pi of degree >= 1.
int multiplicity(const Poly& pi, const Poly& f);

bool is_irreducible(const Poly& f);

/// Irreducible factorization of a nonzero polynomial: pairwise distinct monic
/// irreducible factors with multiplicities, ordered by (degree, canonical
/// coefficient order). The leading unit is dropped. Throws for zero input.
std::vector<std::pair<Poly, int>> factor(const Poly& f);

/// Visits every monic polynomial of the exact degree d (d >= 0) in canonical
/// order: the constant coefficient varies fastest.
void for_each_monic(const FieldPtr& field, int d, const std::function<void(const Poly&)>& fn);
std::vector<Poly> monic_polys(const FieldPtr& field, int d);

/// Reduced fraction of polynomials with monic denominator.
class RationalFunction {
 public:
  explicit RationalFunction(Poly num);
  /// Throws std::domain_error if den is zero. Reduces to lowest terms.
  RationalFunction(Poly num, Poly den);

  static RationalFunction zero(FieldPtr field);
  static RationalFunction one(FieldPtr field);

  const FieldPtr& field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  /// "num" when the denominator is 1, otherwise "num/den" with compound
  /// sides parenthesized, e.g. "(t+1)/(t^2+t+1)".
  std::string to_string() const;

 private:
  void reduce();
  Poly num_;
  Poly den_;
};

/// Parses a polynomial expression in t (and u for extension fields): integer
/// literals, '+', '-', '*', '^', parentheses. Throws ParseError on bad input.
Poly parse_poly(const FieldPtr& field, std::string_view text);

/// Parses "num" or "num/den" where both sides are polynomial expressions;
/// '/' may appear once, at top level.
RationalFunction parse_rational(const FieldPtr& field, std::string_view text);

}  // namespace ffcount
