#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ffcount/gf.hpp"
#include "ffcount/poly.hpp"
#include "ffcount/rational.hpp"

namespace ffcount {

/// Input data for a smooth projective curve over F_q: the genus and the
/// rational point counts N_1, ..., N_g over the extensions F_{q^d}. The
/// degree of the distinguished place at infinity is carried along for the
/// adelic volume computations.
struct CurveData {
  int64_t q = 2;
  int genus = 0;
  std::vector<int64_t> counts;  // N_1..N_genus
  int d_inf = 1;

  /// Validates: q a prime power, genus >= 0, exactly genus counts, each
  /// count within the Weil bound |N_d - q^d - 1| <= 2g q^{d/2}, d_inf >= 1.
  static CurveData make(int64_t q, int genus, std::vector<int64_t> counts, int d_inf = 1);
};

/// Numerator P(t) of the zeta function: integer coefficients a_0..a_{2g}
/// with a_0 = 1 and the functional-equation symmetry a_{2g-i} = q^{g-i} a_i.
class ZetaNumerator {
 public:
  ZetaNumerator(int64_t q, std::vector<Int> coeffs);

  int64_t q() const { return q_; }
  int genus() const { return static_cast<int>(coeffs_.size() / 2); }
  const std::vector<Int>& coefficients() const { return coeffs_; }

  Rational eval(const Rational& t) const;

 private:
  int64_t q_;
  std::vector<Int> coeffs_;
};

/// Builds P(t) from the point counts by exponentiating the logarithmic
/// series sum (N_d - 1 - q^d) t^d / d and extending with the functional
/// equation. Throws std::invalid_argument on counts that do not come from a
/// consistent zeta function (non-integer coefficients, nonpositive P(1)).
ZetaNumerator numerator_from_counts(const CurveData& c);

/// The divisor class number h = P(1); always positive for consistent data.
Int class_number(const ZetaNumerator& num);

/// Exact value of the curve's zeta function at an integer s >= 2:
/// P(q^{-s}) / ((1 - q^{-s})(1 - q^{1-s})).
Rational zeta_eval(const CurveData& c, int s);

/// Leading coefficient of the point-count asymptotics on P^n:
/// h q^{(n+1)(1-g)} / (zeta(n+1) (q-1)), n >= 1.
Rational kappa(const CurveData& c, int n);

/// kappa * q^{(n+1)r}.
Rational main_term(const CurveData& c, int n, int64_t r);

/// N_1..N_dmax reconstructed from the numerator via Newton's identities on
/// the inverse roots.
std::vector<Int> predicted_counts(const CurveData& c, int dmax);

struct WeilCheck {
  bool converged = false;  // root solver met its step tolerance before the cap
  int iterations = 0;
  double max_deviation = 0.0;  // max | |alpha_i| - sqrt(q) |
  bool pass = false;           // converged and max_deviation <= tol
  double tol = 0.0;
  std::vector<double> root_moduli;
};

/// Checks that every inverse root of the numerator has modulus sqrt(q),
/// via a deterministic Durand-Kerner solve (at most 10^4 iterations).
WeilCheck weil_verify(const CurveData& c, double tol = 1e-9);

/// Key-value curve description:
///   q = 2
///   genus = 1
///   counts = [3]
///   d_inf = 1
/// '#' starts a comment; d_inf defaults to 1; counts may be omitted only
/// for genus 0. Unknown or duplicate keys are rejected.
CurveData parse_curve(std::string_view text);
CurveData load_curve_file(const std::string& path);
std::string format_curve(const CurveData& c);

}  // namespace ffcount
