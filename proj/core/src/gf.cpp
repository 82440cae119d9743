#include "ffcount/gf.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ffcount {
namespace {

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int64_t int_inv_mod(int64_t a, int64_t p) {
  // extended Euclid; a must be nonzero mod p
  int64_t t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
  while (new_r != 0) {
    int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (r != 1) throw std::domain_error("int_inv_mod: not invertible");
  return ((t % p) + p) % p;
}

// Dense coefficient vectors over F_p, ascending degree, trailing zeros allowed.
using PV = std::vector<int64_t>;

int pv_deg(const PV& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

PV pv_mul(const PV& a, const PV& b, int64_t p) {
  int da = pv_deg(a), db = pv_deg(b);
  if (da < 0 || db < 0) return {};
  PV c(static_cast<size_t>(da + db + 1), 0);
  for (int i = 0; i <= da; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j <= db; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  return c;
}

PV pv_sub(PV a, const PV& b, int64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
  return a;
}

// Division with remainder; b nonzero. Returns {quotient, remainder}.
std::pair<PV, PV> pv_divmod(PV a, const PV& b, int64_t p) {
  int db = pv_deg(b);
  int64_t lead_inv = int_inv_mod(b[db], p);
  PV q;
  int da = pv_deg(a);
  if (da >= db) q.assign(static_cast<size_t>(da - db + 1), 0);
  for (int i = da; i >= db; --i) {
    int64_t c = a[i] % p;
    if (c == 0) continue;
    int64_t f = (c * lead_inv) % p;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j)
      a[i - db + j] = ((a[i - db + j] - f * b[j]) % p + p) % p;
  }
  return {std::move(q), std::move(a)};
}

PV pv_mod(PV a, const PV& b, int64_t p) { return pv_divmod(std::move(a), b, p).second; }

// Monic m of degree >= 1; trial division by every monic polynomial of
// degree up to deg(m)/2.
bool pv_is_irreducible(const PV& m, int64_t p) {
  int dm = pv_deg(m);
  if (dm <= 0) return false;
  if (dm == 1) return true;
  for (int dd = 1; dd * 2 <= dm; ++dd) {
    PV div(static_cast<size_t>(dd + 1), 0);
    div[dd] = 1;
    while (true) {
      if (pv_deg(pv_mod(m, div, p)) < 0) return false;
      int pos = 0;
      while (pos < dd && div[pos] == p - 1) div[pos++] = 0;
      if (pos == dd) break;
      ++div[pos];
    }
  }
  return true;
}

std::string coeff_term(int64_t c, int deg) {
  std::string s;
  if (deg == 0) return std::to_string(c);
  if (c != 1) s = std::to_string(c) + "*";
  s += "u";
  if (deg > 1) s += "^" + std::to_string(deg);
  return s;
}

std::string pv_to_string_u(const PV& a) {
  int d = pv_deg(a);
  if (d < 0) return "0";
  std::string s;
  for (int i = d; i >= 0; --i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += "+";
    s += coeff_term(a[i], i);
  }
  return s;
}

}  // namespace

Field::Field(int64_t p, int k) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument("Field: p must be prime");
  if (k < 1) throw std::invalid_argument("Field: k must be >= 1");
  int64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw std::invalid_argument("Field: order p^k exceeds the 2^20 search guard");
  }
  q_ = q;

  if (k_ >= 2) {
    // Lexicographically smallest monic irreducible of degree k: candidates
    // ordered by ascending low-coefficient value, constant term fastest.
    int64_t span = q_;  // p^k choices for the k low coefficients
    for (int64_t v = 0; v < span; ++v) {
      PV m(static_cast<size_t>(k_) + 1, 0);
      int64_t rest = v;
      for (int i = 0; i < k_; ++i) {
        m[i] = rest % p_;
        rest /= p_;
      }
      m[k_] = 1;
      if (pv_is_irreducible(m, p_)) {
        modulus_ = std::move(m);
        break;
      }
    }
  }

  if (q_ <= kTableLimit) {
    tabled_ = true;
    add_tab_.resize(static_cast<size_t>(q_) * q_);
    mul_tab_.resize(static_cast<size_t>(q_) * q_);
    neg_tab_.resize(static_cast<size_t>(q_));
    inv_tab_.assign(static_cast<size_t>(q_), 0);
    for (int64_t a = 0; a < q_; ++a) {
      for (int64_t b = 0; b < q_; ++b) {
        // digitwise sum mod p
        int64_t s = 0, pw = 1, x = a, y = b;
        for (int i = 0; i < k_; ++i) {
          s += ((x % p_ + y % p_) % p_) * pw;
          x /= p_;
          y /= p_;
          pw *= p_;
        }
        add_tab_[static_cast<size_t>(a) * q_ + b] = static_cast<int32_t>(s);
        mul_tab_[static_cast<size_t>(a) * q_ + b] = static_cast<int32_t>(mul_slow(a, b));
      }
    }
    for (int64_t a = 0; a < q_; ++a) {
      // -a is the unique b with a + b = 0
      for (int64_t b = 0; b < q_; ++b) {
        if (add_tab_[static_cast<size_t>(a) * q_ + b] == 0) {
          neg_tab_[static_cast<size_t>(a)] = static_cast<int32_t>(b);
          break;
        }
      }
      if (a != 0) {
        for (int64_t b = 1; b < q_; ++b) {
          if (mul_tab_[static_cast<size_t>(a) * q_ + b] == 1) {
            inv_tab_[static_cast<size_t>(a)] = static_cast<int32_t>(b);
            break;
          }
        }
      }
    }
  }
}

FieldPtr Field::make(int64_t p, int k) {
  return FieldPtr(new Field(p, k));
}

std::pair<int64_t, int> factor_prime_power(int64_t q) {
  if (q < 2)
    throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power >= 2");
  int64_t p = q;
  for (int64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  int k = 0;
  int64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1)
    throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  return {p, k};
}

FieldPtr field_for_order(int64_t q) {
  auto [p, k] = factor_prime_power(q);
  return Field::make(p, k);
}

std::vector<int64_t> Field::coeffs_of(int64_t index) const {
  std::vector<int64_t> c(static_cast<size_t>(k_));
  for (int i = 0; i < k_; ++i) {
    c[static_cast<size_t>(i)] = index % p_;
    index /= p_;
  }
  return c;
}

int64_t Field::add_idx(int64_t a, int64_t b) const {
  if (tabled_) return add_tab_[static_cast<size_t>(a) * q_ + b];
  if (k_ == 1) return (a + b) % p_;
  int64_t s = 0, pw = 1;
  for (int i = 0; i < k_; ++i) {
    s += ((a % p_ + b % p_) % p_) * pw;
    a /= p_;
    b /= p_;
    pw *= p_;
  }
  return s;
}

int64_t Field::neg_idx(int64_t a) const {
  if (tabled_) return neg_tab_[static_cast<size_t>(a)];
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  int64_t s = 0, pw = 1;
  for (int i = 0; i < k_; ++i) {
    int64_t c = a % p_;
    s += (c == 0 ? 0 : p_ - c) * pw;
    a /= p_;
    pw *= p_;
  }
  return s;
}

int64_t Field::sub_idx(int64_t a, int64_t b) const { return add_idx(a, neg_idx(b)); }

int64_t Field::mul_slow(int64_t a, int64_t b) const {
  if (k_ == 1) return (a * b) % p_;
  PV va = coeffs_of(a), vb = coeffs_of(b);
  PV prod = pv_mul(va, vb, p_);
  if (pv_deg(prod) >= k_) prod = pv_mod(std::move(prod), modulus_, p_);
  int64_t s = 0, pw = 1;
  for (int i = 0; i < k_; ++i) {
    if (i < static_cast<int>(prod.size())) s += prod[static_cast<size_t>(i)] * pw;
    pw *= p_;
  }
  return s;
}

int64_t Field::mul_idx(int64_t a, int64_t b) const {
  if (tabled_) return mul_tab_[static_cast<size_t>(a) * q_ + b];
  return mul_slow(a, b);
}

int64_t Field::inv_slow(int64_t a) const {
  if (a == 0) throw std::domain_error("Field: inverse of zero");
  if (k_ == 1) return int_inv_mod(a, p_);
  // extended Euclid in F_p[u] against the modulus
  PV r0 = modulus_, r1 = coeffs_of(a);
  PV s0 = {}, s1 = {1};
  while (pv_deg(r1) >= 0) {
    auto [quot, rem] = pv_divmod(r0, r1, p_);
    r0 = std::exchange(r1, std::move(rem));
    PV t = pv_sub(s0, pv_mul(quot, s1, p_), p_);
    s0 = std::exchange(s1, std::move(t));
  }
  // r0 is a nonzero constant c; inverse is s0 / c reduced mod modulus
  int64_t c_inv = int_inv_mod(r0[0], p_);
  PV inv_vec = pv_mod(pv_mul(s0, PV{c_inv}, p_), modulus_, p_);
  int64_t s = 0, pw = 1;
  for (int i = 0; i < k_; ++i) {
    if (i < static_cast<int>(inv_vec.size())) s += inv_vec[static_cast<size_t>(i)] * pw;
    pw *= p_;
  }
  return s;
}

int64_t Field::inv_idx(int64_t a) const {
  if (a == 0) throw std::domain_error("Field: inverse of zero");
  if (tabled_) return inv_tab_[static_cast<size_t>(a)];
  return inv_slow(a);
}

int64_t Field::div_idx(int64_t a, int64_t b) const {
  if (b == 0) throw std::domain_error("Field: division by zero");
  return mul_idx(a, inv_idx(b));
}

int64_t Field::pow_idx(int64_t a, int64_t e) const {
  if (e < 0) {
    a = inv_idx(a);  // throws for a = 0
    e = -e;
  }
  int64_t r = 1;
  while (e > 0) {
    if (e & 1) r = mul_idx(r, a);
    a = mul_idx(a, a);
    e >>= 1;
  }
  return r;
}

FieldElement Field::zero() const { return FieldElement(shared_from_this(), 0); }
FieldElement Field::one() const { return FieldElement(shared_from_this(), 1); }

FieldElement Field::generator() const {
  if (k_ < 2) throw std::domain_error("Field: generator u requires an extension field");
  return FieldElement(shared_from_this(), p_);
}

FieldElement Field::element(int64_t index) const {
  if (index < 0 || index >= q_) throw std::invalid_argument("Field: element index out of range");
  return FieldElement(shared_from_this(), index);
}

FieldElement Field::from_integer(int64_t n) const {
  return FieldElement(shared_from_this(), ((n % p_) + p_) % p_);
}

std::vector<FieldElement> Field::enumerate() const {
  std::vector<FieldElement> all;
  all.reserve(static_cast<size_t>(q_));
  for (int64_t i = 0; i < q_; ++i) all.emplace_back(shared_from_this(), i);
  return all;
}

bool Field::same_field(const Field& other) const {
  return p_ == other.p_ && k_ == other.k_;
}

std::string Field::describe() const {
  std::string s = "GF(" + std::to_string(q_) + ")";
  if (k_ >= 2) s += " = F_" + std::to_string(p_) + "[u]/(" + pv_to_string_u(modulus_) + ")";
  return s;
}

FieldElement::FieldElement(FieldPtr field, int64_t index)
    : field_(std::move(field)), index_(index) {
  if (!field_) throw std::invalid_argument("FieldElement: null field");
  if (index_ < 0 || index_ >= field_->q())
    throw std::invalid_argument("FieldElement: index out of range");
}

namespace {
const Field& common_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field()->same_field(*b.field()))
    throw std::invalid_argument("FieldElement: operands from different fields");
  return *a.field();
}
}  // namespace

FieldElement FieldElement::operator-() const {
  return FieldElement(field_, field_->neg_idx(index_));
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  index_ = common_field(*this, o).add_idx(index_, o.index_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  index_ = common_field(*this, o).sub_idx(index_, o.index_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  index_ = common_field(*this, o).mul_idx(index_, o.index_);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  index_ = common_field(*this, o).div_idx(index_, o.index_);
  return *this;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_->same_field(*b.field_) && a.index_ == b.index_;
}

FieldElement inv(const FieldElement& a) {
  return FieldElement(a.field(), a.field()->inv_idx(a.index()));
}

FieldElement pow(const FieldElement& a, int64_t e) {
  return FieldElement(a.field(), a.field()->pow_idx(a.index(), e));
}

std::string FieldElement::to_string() const {
  return pv_to_string_u(coeffs());
}

}  // namespace ffcount
