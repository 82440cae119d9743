#include "ffcount/height.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ffcount {
namespace {

void check_coords(size_t count, bool any_nonzero) {
  if (count < 2)
    throw std::invalid_argument("projective point needs at least two coordinates");
  if (!any_nonzero)
    throw std::invalid_argument("projective point must have a nonzero coordinate");
}

/// Common denominator and cleared numerators: x_i = num_i / den_i turns into
/// y_i = num_i * (L / den_i) with L = lcm of the denominators.
std::vector<Poly> clear_denominators(const std::vector<RationalFunction>& coords) {
  FieldPtr field = coords.front().field();
  Poly L = Poly::one(field);
  for (const auto& c : coords)
    if (!c.is_zero()) L = lcm(L, c.den());
  std::vector<Poly> y;
  y.reserve(coords.size());
  for (const auto& c : coords) {
    if (c.is_zero())
      y.push_back(Poly::zero(field));
    else
      y.push_back(c.num() * (L / c.den()));
  }
  return y;
}

Poly content(const std::vector<Poly>& y) {
  Poly g = Poly::zero(y.front().field());
  for (const auto& c : y) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

}  // namespace

ProjPoint::ProjPoint(std::vector<RationalFunction> coords) : coords_(std::move(coords)) {
  bool any = false;
  for (const auto& c : coords_) {
    if (!c.field()->same_field(*coords_.front().field()))
      throw std::invalid_argument("projective point: coordinates from different fields");
    any = any || !c.is_zero();
  }
  check_coords(coords_.size(), any);
}

std::string ProjPoint::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += " : ";
    s += coords_[i].to_string();
  }
  return s + "]";
}

NormalizedPoint::NormalizedPoint(std::vector<Poly> coords) : coords_(std::move(coords)) {
  bool any = false;
  const Poly* first_nonzero = nullptr;
  for (const auto& c : coords_) {
    if (!c.field()->same_field(*coords_.front().field()))
      throw std::invalid_argument("normalized point: coordinates from different fields");
    if (!c.is_zero()) {
      any = true;
      if (!first_nonzero) first_nonzero = &c;
    }
  }
  check_coords(coords_.size(), any);
  if (!first_nonzero->is_monic())
    throw std::invalid_argument("normalized point: first nonzero coordinate must be monic");
  if (content(coords_).degree() != 0)
    throw std::invalid_argument("normalized point: coordinates must be coprime");
}

int64_t NormalizedPoint::height() const {
  int64_t h = 0;
  for (const auto& c : coords_)
    if (!c.is_zero()) h = std::max<int64_t>(h, c.degree());
  return h;
}

ProjPoint NormalizedPoint::to_projective() const {
  std::vector<RationalFunction> coords;
  coords.reserve(coords_.size());
  for (const auto& c : coords_) coords.emplace_back(c);
  return ProjPoint(std::move(coords));
}

std::string NormalizedPoint::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += " : ";
    s += coords_[i].to_string();
  }
  return s + "]";
}

NormalizedPoint normalize(const ProjPoint& x) {
  std::vector<Poly> y = clear_denominators(x.coords());
  Poly g = content(y);
  std::vector<Poly> z;
  z.reserve(y.size());
  const Poly* first_nonzero = nullptr;
  for (const auto& c : y) {
    z.push_back(c.is_zero() ? c : c / g);
    if (!first_nonzero && !z.back().is_zero()) first_nonzero = &z.back();
  }
  FieldElement lead = first_nonzero->leading_coeff();
  if (!lead.is_one()) {
    Poly scale = Poly::constant(inv(lead));
    for (auto& c : z) c *= scale;
  }
  return NormalizedPoint(std::move(z));
}

Divisor scaling_divisor(const ProjPoint& x) {
  std::vector<Poly> y = clear_denominators(x.coords());
  Poly L = Poly::one(x.field());
  for (const auto& c : x.coords())
    if (!c.is_zero()) L = lcm(L, c.den());
  Divisor d = finite_divisor(content(y));
  if (L.degree() > 0) d -= finite_divisor(L);
  return d;
}

HeightParts height_components(const ProjPoint& x) {
  int64_t min_vinf = 0;
  bool first = true;
  for (const auto& c : x.coords()) {
    if (c.is_zero()) continue;
    int64_t v = static_cast<int64_t>(c.den().degree()) - c.num().degree();
    min_vinf = first ? v : std::min(min_vinf, v);
    first = false;
  }
  HeightParts parts{};
  parts.infinite = -min_vinf;
  parts.finite = -scaling_divisor(x).degree();
  parts.total = parts.finite + parts.infinite;
  if (parts.total < 0)
    throw std::logic_error("height: negative total, decomposition is inconsistent");
  return parts;
}

int64_t height(const ProjPoint& x) { return height_components(x).total; }

ProjPoint parse_point(const FieldPtr& field, std::string_view text) {
  size_t open = text.find('[');
  size_t close = text.rfind(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open)
    throw ParseError("point must be bracketed: [x0 : x1 : ...]");
  for (size_t i = 0; i < text.size(); ++i) {
    if (i > open && i < close) continue;
    char c = text[i];
    if (c != '[' && c != ']' && !std::isspace(static_cast<unsigned char>(c)))
      throw ParseError("unexpected input outside point brackets");
  }
  std::string_view body = text.substr(open + 1, close - open - 1);
  std::vector<RationalFunction> coords;
  size_t pos = 0;
  while (true) {
    size_t sep = body.find(':', pos);
    std::string_view piece =
        sep == std::string_view::npos ? body.substr(pos) : body.substr(pos, sep - pos);
    coords.push_back(parse_rational(field, piece));
    if (sep == std::string_view::npos) break;
    pos = sep + 1;
  }
  return ProjPoint(std::move(coords));
}

}  // namespace ffcount
