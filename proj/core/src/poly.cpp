#include "ffcount/poly.hpp"

#include <algorithm>
#include <cctype>

namespace ffcount {
namespace {

const Field& common_field(const Poly& a, const Poly& b) {
  if (!a.field()->same_field(*b.field()))
    throw std::invalid_argument("Poly: operands from different fields");
  return *a.field();
}

// Visits monic polynomials of exact degree d in canonical order; stops early
// when fn returns false. Returns false iff stopped early.
bool scan_monic(const FieldPtr& field, int d,
                const std::function<bool(const Poly&)>& fn) {
  if (d < 0) throw std::invalid_argument("scan_monic: negative degree");
  const int64_t q = field->q();
  std::vector<int64_t> idx(static_cast<size_t>(d) + 1, 0);
  idx.back() = 1;
  while (true) {
    if (!fn(Poly::from_indices(field, idx))) return false;
    int pos = 0;
    while (pos < d && idx[static_cast<size_t>(pos)] == q - 1)
      idx[static_cast<size_t>(pos++)] = 0;
    if (pos == d) return true;
    ++idx[static_cast<size_t>(pos)];
  }
}

}  // namespace

void Poly::trim() {
  while (!idx_.empty() && idx_.back() == 0) idx_.pop_back();
}

Poly Poly::zero(FieldPtr field) { return Poly(std::move(field), {}); }

Poly Poly::one(FieldPtr field) { return Poly(std::move(field), {1}); }

Poly Poly::variable(FieldPtr field) { return Poly(std::move(field), {0, 1}); }

Poly Poly::constant(const FieldElement& c) {
  std::vector<int64_t> v;
  if (!c.is_zero()) v.push_back(c.index());
  return Poly(c.field(), std::move(v));
}

Poly Poly::from_coefficients(FieldPtr field, const std::vector<FieldElement>& coeffs) {
  std::vector<int64_t> idx;
  idx.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (!c.field()->same_field(*field))
      throw std::invalid_argument("Poly: coefficient from a different field");
    idx.push_back(c.index());
  }
  Poly p(std::move(field), std::move(idx));
  p.trim();
  return p;
}

Poly Poly::from_indices(FieldPtr field, std::vector<int64_t> indices) {
  const int64_t q = field->q();
  for (int64_t id : indices)
    if (id < 0 || id >= q) throw std::invalid_argument("Poly: coefficient index out of range");
  Poly p(std::move(field), std::move(indices));
  p.trim();
  return p;
}

FieldElement Poly::coeff(int i) const {
  if (i < 0) throw std::invalid_argument("Poly: negative coefficient position");
  int64_t id = i < static_cast<int>(idx_.size()) ? idx_[static_cast<size_t>(i)] : 0;
  return FieldElement(field_, id);
}

FieldElement Poly::leading_coeff() const {
  if (idx_.empty()) throw std::domain_error("Poly: leading coefficient of zero");
  return FieldElement(field_, idx_.back());
}

Poly Poly::operator-() const {
  std::vector<int64_t> idx(idx_.size());
  for (size_t i = 0; i < idx_.size(); ++i) idx[i] = field_->neg_idx(idx_[i]);
  return Poly(field_, std::move(idx));
}

Poly& Poly::operator+=(const Poly& o) {
  const Field& F = common_field(*this, o);
  if (idx_.size() < o.idx_.size()) idx_.resize(o.idx_.size(), 0);
  for (size_t i = 0; i < o.idx_.size(); ++i) idx_[i] = F.add_idx(idx_[i], o.idx_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  const Field& F = common_field(*this, o);
  if (idx_.size() < o.idx_.size()) idx_.resize(o.idx_.size(), 0);
  for (size_t i = 0; i < o.idx_.size(); ++i) idx_[i] = F.sub_idx(idx_[i], o.idx_[i]);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  const Field& F = common_field(*this, o);
  if (is_zero() || o.is_zero()) {
    idx_.clear();
    return *this;
  }
  std::vector<int64_t> out(idx_.size() + o.idx_.size() - 1, 0);
  for (size_t i = 0; i < idx_.size(); ++i) {
    if (idx_[i] == 0) continue;
    for (size_t j = 0; j < o.idx_.size(); ++j)
      out[i + j] = F.add_idx(out[i + j], F.mul_idx(idx_[i], o.idx_[j]));
  }
  idx_ = std::move(out);
  trim();
  return *this;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  const Field& F = common_field(a, b);
  if (b.is_zero()) throw std::domain_error("Poly: division by zero");
  if (a.degree() < b.degree()) return {Poly::zero(a.field_), a};
  const int db = b.degree();
  const int64_t lead_inv = F.inv_idx(b.idx_.back());
  std::vector<int64_t> rem = a.idx_;
  std::vector<int64_t> quot(rem.size() - static_cast<size_t>(db), 0);
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    int64_t c = rem[static_cast<size_t>(i)];
    if (c == 0) continue;
    int64_t f = F.mul_idx(c, lead_inv);
    quot[static_cast<size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) {
      size_t pos = static_cast<size_t>(i - db + j);
      rem[pos] = F.sub_idx(rem[pos], F.mul_idx(f, b.idx_[static_cast<size_t>(j)]));
    }
  }
  Poly qp(a.field_, std::move(quot));
  qp.trim();
  Poly rp(a.field_, std::move(rem));
  rp.trim();
  return {std::move(qp), std::move(rp)};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly Poly::monic() const {
  if (is_zero()) throw std::domain_error("Poly: monic of zero");
  if (idx_.back() == 1) return *this;
  const int64_t s = field_->inv_idx(idx_.back());
  std::vector<int64_t> idx(idx_.size());
  for (size_t i = 0; i < idx_.size(); ++i) idx[i] = field_->mul_idx(idx_[i], s);
  return Poly(field_, std::move(idx));
}

FieldElement Poly::eval(const FieldElement& x) const {
  if (!x.field()->same_field(*field_))
    throw std::invalid_argument("Poly: evaluation point from a different field");
  int64_t acc = 0;
  for (int i = static_cast<int>(idx_.size()) - 1; i >= 0; --i)
    acc = field_->add_idx(field_->mul_idx(acc, x.index()), idx_[static_cast<size_t>(i)]);
  return FieldElement(field_, acc);
}

bool operator==(const Poly& a, const Poly& b) {
  return a.field_->same_field(*b.field_) && a.idx_ == b.idx_;
}

Poly gcd(const Poly& a, const Poly& b) {
  common_field(a, b);
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  Poly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Poly rem = r0 % r1;
    r0 = std::exchange(r1, std::move(rem));
  }
  return r0.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("lcm with zero argument");
  return ((a * b) / gcd(a, b)).monic();
}

Poly pow(const Poly& a, int e) {
  if (e < 0) throw std::invalid_argument("pow: negative polynomial exponent");
  Poly r = Poly::one(a.field());
  Poly base = a;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

int multiplicity(const Poly& pi, const Poly& f) {
  if (pi.degree() < 1) throw std::invalid_argument("multiplicity: pi must have degree >= 1");
  if (f.is_zero()) throw std::domain_error("multiplicity: zero polynomial");
  Poly w = f;
  int m = 0;
  while (true) {
    auto [quot, rem] = divmod(w, pi);
    if (!rem.is_zero()) return m;
    w = std::move(quot);
    ++m;
  }
}

bool is_irreducible(const Poly& f) {
  const int d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  Poly m = f.monic();
  for (int dd = 1; 2 * dd <= d; ++dd) {
    bool clean = scan_monic(f.field(), dd,
                            [&](const Poly& c) { return !(m % c).is_zero(); });
    if (!clean) return false;
  }
  return true;
}

std::vector<std::pair<Poly, int>> factor(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("factor: zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  Poly w = f.monic();
  int d = 1;
  while (w.degree() > 0) {
    if (2 * d > w.degree()) {
      // no factor of degree < d remains, so w is irreducible
      out.emplace_back(w, 1);
      break;
    }
    scan_monic(f.field(), d, [&](const Poly& c) {
      if (w.degree() < c.degree()) return false;
      int m = 0;
      while (true) {
        auto [quot, rem] = divmod(w, c);
        if (!rem.is_zero()) break;
        w = std::move(quot);
        ++m;
      }
      if (m > 0) out.emplace_back(c, m);
      return w.degree() > 0;
    });
    ++d;
  }
  return out;
}

void for_each_monic(const FieldPtr& field, int d,
                    const std::function<void(const Poly&)>& fn) {
  scan_monic(field, d, [&](const Poly& p) {
    fn(p);
    return true;
  });
}

std::vector<Poly> monic_polys(const FieldPtr& field, int d) {
  std::vector<Poly> out;
  for_each_monic(field, d, [&](const Poly& p) { out.push_back(p); });
  return out;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (idx_[static_cast<size_t>(i)] == 0) continue;
    if (!s.empty()) s += "+";
    FieldElement c(field_, idx_[static_cast<size_t>(i)]);
    if (i == 0) {
      s += c.to_string();
      continue;
    }
    if (!c.is_one()) {
      std::string cs = c.to_string();
      if (cs.find('+') != std::string::npos || cs.find('-') != std::string::npos)
        cs = "(" + cs + ")";
      s += cs + "*";
    }
    s += "t";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

// --- RationalFunction ---------------------------------------------------

RationalFunction::RationalFunction(Poly num)
    : num_(std::move(num)), den_(Poly::one(num_.field())) {}

RationalFunction::RationalFunction(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
  common_field(num_, den_);
  if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  reduce();
}

RationalFunction RationalFunction::zero(FieldPtr field) {
  return RationalFunction(Poly::zero(std::move(field)));
}

RationalFunction RationalFunction::one(FieldPtr field) {
  return RationalFunction(Poly::one(std::move(field)));
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::one(num_.field());
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  FieldElement lead = den_.leading_coeff();
  if (!lead.is_one()) {
    Poly scale = Poly::constant(inv(lead));
    num_ *= scale;
    den_ *= scale;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  *this = RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  *this = RationalFunction(num_ * o.num_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("RationalFunction: division by zero");
  *this = RationalFunction(num_ * o.den_, den_ * o.num_);
  return *this;
}

std::string RationalFunction::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  auto wrap = [](std::string s) {
    if (s.find('+') != std::string::npos || s.find('-') != std::string::npos)
      return "(" + s + ")";
    return s;
  };
  return wrap(num_.to_string()) + "/" + wrap(den_.to_string());
}

// --- parsing --------------------------------------------------------------

namespace {

enum class Tok { kInt, kT, kU, kPlus, kMinus, kStar, kCaret, kLParen, kRParen, kSlash, kEnd };

struct Lexer {
  std::string_view s;
  size_t pos = 0;
  Tok tok = Tok::kEnd;
  int64_t value = 0;   // for kInt
  size_t tok_pos = 0;

  explicit Lexer(std::string_view text) : s(text) { advance(); }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("parse error at position " + std::to_string(tok_pos) + ": " + msg);
  }

  void advance() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    tok_pos = pos;
    if (pos == s.size()) {
      tok = Tok::kEnd;
      return;
    }
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int64_t v = 0;
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        if (pos - start > 17) fail("integer literal too large");
        v = v * 10 + (s[pos] - '0');
        ++pos;
      }
      tok = Tok::kInt;
      value = v;
      return;
    }
    ++pos;
    switch (c) {
      case 't': tok = Tok::kT; return;
      case 'u': tok = Tok::kU; return;
      case '+': tok = Tok::kPlus; return;
      case '-': tok = Tok::kMinus; return;
      case '*': tok = Tok::kStar; return;
      case '^': tok = Tok::kCaret; return;
      case '(': tok = Tok::kLParen; return;
      case ')': tok = Tok::kRParen; return;
      case '/': tok = Tok::kSlash; return;
      default: fail(std::string("unexpected character '") + c + "'");
    }
  }
};

constexpr int kMaxExponent = 4096;

class PolyParser {
 public:
  PolyParser(FieldPtr field, std::string_view text) : field_(std::move(field)), lex_(text) {}

  Poly parse_sum() {
    Poly acc = parse_term();
    while (lex_.tok == Tok::kPlus || lex_.tok == Tok::kMinus) {
      bool minus = lex_.tok == Tok::kMinus;
      lex_.advance();
      Poly t = parse_term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  void expect_end() const {
    if (lex_.tok != Tok::kEnd) lex_.fail("unexpected trailing input");
  }

  bool at_slash() const { return lex_.tok == Tok::kSlash; }
  void eat_slash() { lex_.advance(); }

 private:
  Poly parse_term() {
    Poly acc = parse_factor();
    while (lex_.tok == Tok::kStar) {
      lex_.advance();
      acc *= parse_factor();
    }
    return acc;
  }

  Poly parse_factor() {
    if (lex_.tok == Tok::kMinus) {
      lex_.advance();
      return -parse_factor();
    }
    Poly base = parse_atom();
    if (lex_.tok == Tok::kCaret) {
      lex_.advance();
      if (lex_.tok != Tok::kInt) lex_.fail("expected integer exponent after '^'");
      if (lex_.value > kMaxExponent) lex_.fail("exponent too large");
      int e = static_cast<int>(lex_.value);
      lex_.advance();
      return pow(base, e);
    }
    return base;
  }

  Poly parse_atom() {
    switch (lex_.tok) {
      case Tok::kInt: {
        Poly p = Poly::constant(field_->from_integer(lex_.value));
        lex_.advance();
        return p;
      }
      case Tok::kT:
        lex_.advance();
        return Poly::variable(field_);
      case Tok::kU: {
        if (field_->k() < 2) lex_.fail("'u' is not defined over a prime field");
        Poly p = Poly::constant(field_->generator());
        lex_.advance();
        return p;
      }
      case Tok::kLParen: {
        lex_.advance();
        Poly p = parse_sum();
        if (lex_.tok != Tok::kRParen) lex_.fail("expected ')'");
        lex_.advance();
        return p;
      }
      default:
        lex_.fail("expected a polynomial atom");
    }
  }

  FieldPtr field_;
  Lexer lex_;
};

}  // namespace

Poly parse_poly(const FieldPtr& field, std::string_view text) {
  PolyParser p(field, text);
  Poly result = p.parse_sum();
  if (p.at_slash()) throw ParseError("'/' is not allowed in a polynomial");
  p.expect_end();
  return result;
}

RationalFunction parse_rational(const FieldPtr& field, std::string_view text) {
  PolyParser p(field, text);
  Poly num = p.parse_sum();
  if (!p.at_slash()) {
    p.expect_end();
    return RationalFunction(std::move(num));
  }
  p.eat_slash();
  Poly den = p.parse_sum();
  p.expect_end();
  return RationalFunction(std::move(num), std::move(den));
}

}  // namespace ffcount
