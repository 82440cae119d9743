#include "ffcount/divisor.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffcount {

Place::Place(FieldPtr field, std::optional<Poly> pi)
    : field_(std::move(field)), pi_(std::move(pi)) {}

Place Place::infinite(FieldPtr field) {
  if (!field) throw std::invalid_argument("Place: null field");
  return Place(std::move(field), std::nullopt);
}

Place Place::finite(Poly pi) {
  if (!pi.is_monic()) throw std::invalid_argument("Place: uniformizer must be monic");
  if (!is_irreducible(pi)) throw std::invalid_argument("Place: uniformizer must be irreducible");
  FieldPtr f = pi.field();
  return Place(std::move(f), std::move(pi));
}

const Poly& Place::uniformizer() const {
  if (!pi_) throw std::domain_error("Place: the infinite place has no polynomial uniformizer");
  return *pi_;
}

bool operator<(const Place& a, const Place& b) {
  if (a.is_infinite() != b.is_infinite()) return b.is_infinite();  // finite first
  if (a.is_infinite()) return false;
  if (a.pi_->degree() != b.pi_->degree()) return a.pi_->degree() < b.pi_->degree();
  return a.pi_->indices() < b.pi_->indices();
}

bool operator==(const Place& a, const Place& b) {
  if (!a.field_->same_field(*b.field_)) return false;
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return *a.pi_ == *b.pi_;
}

std::string Place::to_string() const {
  if (is_infinite()) return "inf";
  return "(" + pi_->to_string() + ")";
}

void Divisor::add(const Place& place, int64_t mult) {
  if (mult == 0) return;
  auto it = terms_.find(place);
  if (it == terms_.end()) {
    terms_.emplace(place, mult);
    return;
  }
  it->second += mult;
  if (it->second == 0) terms_.erase(it);
}

int64_t Divisor::multiplicity(const Place& place) const {
  auto it = terms_.find(place);
  return it == terms_.end() ? 0 : it->second;
}

int64_t Divisor::degree() const {
  int64_t d = 0;
  for (const auto& [place, mult] : terms_) d += mult * place.degree();
  return d;
}

bool Divisor::is_effective() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second > 0; });
}

bool Divisor::finite_support() const {
  return std::none_of(terms_.begin(), terms_.end(),
                      [](const auto& t) { return t.first.is_infinite(); });
}

Divisor Divisor::operator-() const {
  Divisor d;
  for (const auto& [place, mult] : terms_) d.terms_.emplace(place, -mult);
  return d;
}

Divisor& Divisor::operator+=(const Divisor& o) {
  for (const auto& [place, mult] : o.terms_) add(place, mult);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
  for (const auto& [place, mult] : o.terms_) add(place, -mult);
  return *this;
}

Divisor Divisor::inf(const Divisor& a, const Divisor& b) {
  Divisor out;
  for (const auto& [place, mult] : a.terms_) {
    int64_t m = std::min(mult, b.multiplicity(place));
    if (m != 0) out.terms_.emplace(place, m);
  }
  for (const auto& [place, mult] : b.terms_) {
    if (a.terms_.count(place)) continue;  // handled above
    int64_t m = std::min(int64_t{0}, mult);
    if (m != 0) out.terms_.emplace(place, m);
  }
  return out;
}

std::string Divisor::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [place, mult] : terms_) {
    int64_t m = mult;
    if (s.empty()) {
      if (m < 0) {
        s += "-";
        m = -m;
      }
    } else {
      s += m < 0 ? " - " : " + ";
      m = std::abs(m);
    }
    if (m != 1) s += std::to_string(m) + "*";
    s += place.to_string();
  }
  return s;
}

int64_t valuation(const Place& place, const Poly& f) {
  if (f.is_zero()) throw std::domain_error("valuation: zero polynomial");
  if (place.is_infinite()) return -f.degree();
  if (f.is_constant()) return 0;
  return multiplicity(place.uniformizer(), f);
}

int64_t valuation(const Place& place, const RationalFunction& f) {
  if (f.is_zero()) throw std::domain_error("valuation: zero function");
  return valuation(place, f.num()) - valuation(place, f.den());
}

Divisor finite_divisor(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("finite_divisor: zero polynomial");
  Divisor d;
  for (const auto& [pi, mult] : factor(f)) d.add(Place::finite(pi), mult);
  return d;
}

Divisor principal_divisor(const RationalFunction& f) {
  if (f.is_zero()) throw std::domain_error("principal_divisor: zero function");
  Divisor d = finite_divisor(f.num());
  d -= finite_divisor(f.den());
  d.add(Place::infinite(f.field()), f.den().degree() - f.num().degree());
  return d;
}

int mobius(const Divisor& d) {
  if (!d.is_effective())
    throw std::invalid_argument("mobius: divisor must be effective");
  if (!d.finite_support())
    throw std::invalid_argument("mobius: divisor must avoid the infinite place");
  for (const auto& [place, mult] : d.terms())
    if (mult >= 2) return 0;
  return d.terms().size() % 2 == 0 ? 1 : -1;
}

std::vector<Divisor> enumerate_effective(const FieldPtr& field, int d) {
  if (d < 0) throw std::invalid_argument("enumerate_effective: negative degree");
  std::vector<Divisor> out;
  for_each_monic(field, d, [&](const Poly& f) { out.push_back(finite_divisor(f)); });
  return out;
}

}  // namespace ffcount
