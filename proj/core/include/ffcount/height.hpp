#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ffcount/divisor.hpp"
#include "ffcount/poly.hpp"

namespace ffcount {

/// A point of P^n(F_q(t)) given by homogeneous coordinates, n >= 1.
/// At least one coordinate must be nonzero.
class ProjPoint {
 public:
  explicit ProjPoint(std::vector<RationalFunction> coords);

  const std::vector<RationalFunction>& coords() const { return coords_; }
  int n() const { return static_cast<int>(coords_.size()) - 1; }
  const FieldPtr& field() const { return coords_.front().field(); }

  /// "[x0 : x1 : ...]"
  std::string to_string() const;

 private:
  std::vector<RationalFunction> coords_;
};

/// The canonical representative of a projective point: polynomial
/// coordinates, coprime across the nonzero ones, first nonzero coordinate
/// monic. Validated on construction.
class NormalizedPoint {
 public:
  explicit NormalizedPoint(std::vector<Poly> coords);

  const std::vector<Poly>& coords() const { return coords_; }
  int n() const { return static_cast<int>(coords_.size()) - 1; }
  const FieldPtr& field() const { return coords_.front().field(); }

  /// Height of a normalized point is the maximum coordinate degree.
  int64_t height() const;

  ProjPoint to_projective() const;

  friend bool operator==(const NormalizedPoint& a, const NormalizedPoint& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const NormalizedPoint& a, const NormalizedPoint& b) {
    return !(a == b);
  }

  std::string to_string() const;

 private:
  std::vector<Poly> coords_;
};

struct HeightParts {
  int64_t finite;    // -deg of the scaling divisor
  int64_t infinite;  // -min over coordinates of the valuation at infinity
  int64_t total;     // finite + infinite, always >= 0
};

/// Canonical representative: clear denominators, divide out the coordinate
/// content, make the first nonzero coordinate monic. Idempotent, and
/// invariant under scaling by any nonzero rational function.
NormalizedPoint normalize(const ProjPoint& x);

/// The scaling divisor over the finite places: at each finite place the
/// minimum coordinate valuation (zero coordinates are ignored, their
/// valuation being +infinity). Effective for polynomial coordinates; not
/// necessarily effective otherwise.
Divisor scaling_divisor(const ProjPoint& x);

/// Finite/infinite height decomposition. The total equals
/// -deg(inf over nonzero coordinates of the principal divisor).
HeightParts height_components(const ProjPoint& x);
int64_t height(const ProjPoint& x);

/// Parses "[x0 : x1 : ...]" with polynomial or num/den coordinates.
ProjPoint parse_point(const FieldPtr& field, std::string_view text);

}  // namespace ffcount
