#include "ffcount/zeta.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <complex>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "ffcount/poly.hpp"

namespace ffcount {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int64_t parse_int_strict(std::string_view s, const std::string& what) {
  s = trim(s);
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("expected an integer for " + what);
  return v;
}

}  // namespace

CurveData CurveData::make(int64_t q, int genus, std::vector<int64_t> counts, int d_inf) {
  factor_prime_power(q);  // throws unless q is a prime power
  if (genus < 0) throw std::invalid_argument("CurveData: genus must be >= 0");
  if (static_cast<int>(counts.size()) != genus)
    throw std::invalid_argument("CurveData: counts must list N_1..N_genus (" +
                                std::to_string(genus) + " values)");
  if (d_inf < 1) throw std::invalid_argument("CurveData: d_inf must be >= 1");
  for (int d = 1; d <= genus; ++d) {
    const int64_t n_d = counts[static_cast<size_t>(d - 1)];
    if (n_d < 0) throw std::invalid_argument("CurveData: point counts must be >= 0");
    // |N_d - q^d - 1| <= 2 g q^{d/2}, squared to stay in integers
    Int diff = Int(n_d) - int_pow(Int(q), d) - 1;
    if (diff * diff > Int(4) * genus * genus * int_pow(Int(q), d))
      throw std::invalid_argument("CurveData: N_" + std::to_string(d) +
                                  " violates the Weil bound");
  }
  CurveData c;
  c.q = q;
  c.genus = genus;
  c.counts = std::move(counts);
  c.d_inf = d_inf;
  return c;
}

ZetaNumerator::ZetaNumerator(int64_t q, std::vector<Int> coeffs)
    : q_(q), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_.size() % 2 == 0)
    throw std::invalid_argument("ZetaNumerator: needs coefficients a_0..a_{2g}");
  if (coeffs_[0] != 1) throw std::invalid_argument("ZetaNumerator: a_0 must be 1");
  const int g = genus();
  for (int i = 0; i <= g; ++i) {
    if (coeffs_[static_cast<size_t>(2 * g - i)] !=
        int_pow(Int(q_), g - i) * coeffs_[static_cast<size_t>(i)])
      throw std::invalid_argument(
          "ZetaNumerator: coefficients violate the functional equation");
  }
}

Rational ZetaNumerator::eval(const Rational& t) const {
  Rational acc{0};
  for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i)
    acc = acc * t + Rational(coeffs_[static_cast<size_t>(i)]);
  return acc;
}

ZetaNumerator numerator_from_counts(const CurveData& c) {
  const int g = c.genus;
  std::vector<Int> a(static_cast<size_t>(2 * g) + 1);
  a[0] = 1;
  if (g > 0) {
    // P(t) = exp(sum_{d>=1} (N_d - 1 - q^d) t^d / d), truncated at degree g,
    // then extended by a_{2g-i} = q^{g-i} a_i.
    std::vector<Rational> l(static_cast<size_t>(g) + 1);
    for (int d = 1; d <= g; ++d)
      l[static_cast<size_t>(d)] =
          Rational(Int(c.counts[static_cast<size_t>(d - 1)]) - 1 - int_pow(Int(c.q), d), Int(d));
    std::vector<Rational> p(static_cast<size_t>(g) + 1);
    p[0] = 1;
    for (int m = 1; m <= g; ++m) {
      Rational acc{0};
      for (int j = 1; j <= m; ++j)
        acc += Rational(j) * l[static_cast<size_t>(j)] * p[static_cast<size_t>(m - j)];
      p[static_cast<size_t>(m)] = acc / m;
      if (!is_integral(p[static_cast<size_t>(m)]))
        throw std::invalid_argument(
            "inconsistent point counts: zeta numerator coefficient a_" + std::to_string(m) +
            " is not an integer");
      a[static_cast<size_t>(m)] = integral_part(p[static_cast<size_t>(m)]);
    }
    for (int i = 0; i < g; ++i)
      a[static_cast<size_t>(2 * g - i)] = int_pow(Int(c.q), g - i) * a[static_cast<size_t>(i)];
  }
  ZetaNumerator num(c.q, std::move(a));
  Int h{0};
  for (const Int& v : num.coefficients()) h += v;
  if (h <= 0)
    throw std::invalid_argument("inconsistent point counts: class number P(1) <= 0");
  return num;
}

Int class_number(const ZetaNumerator& num) {
  Int h{0};
  for (const Int& v : num.coefficients()) h += v;
  if (h <= 0) throw std::invalid_argument("class_number: P(1) <= 0");
  return h;
}

Rational zeta_eval(const CurveData& c, int s) {
  if (s < 2)
    throw std::invalid_argument("zeta_eval: s must be an integer >= 2 (poles at s <= 1)");
  ZetaNumerator num = numerator_from_counts(c);
  Rational t = rational_pow(Int(c.q), -s);
  Rational denom = (Rational(1) - rational_pow(Int(c.q), -s)) *
                   (Rational(1) - rational_pow(Int(c.q), 1 - s));
  return num.eval(t) / denom;
}

Rational kappa(const CurveData& c, int n) {
  if (n < 1) throw std::invalid_argument("kappa: n must be >= 1");
  Int h = class_number(numerator_from_counts(c));
  Rational vol = rational_pow(Int(c.q), static_cast<int64_t>(n + 1) * (1 - c.genus));
  return Rational(h) * vol / (zeta_eval(c, n + 1) * Rational(c.q - 1));
}

Rational main_term(const CurveData& c, int n, int64_t r) {
  return kappa(c, n) * rational_pow(Int(c.q), static_cast<int64_t>(n + 1) * r);
}

std::vector<Int> predicted_counts(const CurveData& c, int dmax) {
  if (dmax < 1) throw std::invalid_argument("predicted_counts: dmax must be >= 1");
  ZetaNumerator num = numerator_from_counts(c);
  const int deg = 2 * c.genus;
  // power sums of the inverse roots via Newton's identities
  std::vector<Int> e(static_cast<size_t>(deg) + 1);
  for (int i = 0; i <= deg; ++i) {
    e[static_cast<size_t>(i)] = num.coefficients()[static_cast<size_t>(i)];
    if (i % 2 == 1) e[static_cast<size_t>(i)] = -e[static_cast<size_t>(i)];
  }
  std::vector<Int> S(static_cast<size_t>(dmax) + 1);
  for (int d = 1; d <= dmax; ++d) {
    Int acc{0};
    for (int i = 1; i < d && i <= deg; ++i) {
      Int term = e[static_cast<size_t>(i)] * S[static_cast<size_t>(d - i)];
      acc += (i % 2 == 1) ? term : -term;
    }
    if (d <= deg) {
      Int term = Int(d) * e[static_cast<size_t>(d)];
      acc += (d % 2 == 1) ? term : -term;
    }
    S[static_cast<size_t>(d)] = acc;
  }
  std::vector<Int> out(static_cast<size_t>(dmax));
  for (int d = 1; d <= dmax; ++d)
    out[static_cast<size_t>(d - 1)] = int_pow(Int(c.q), d) + 1 - S[static_cast<size_t>(d)];
  return out;
}

WeilCheck weil_verify(const CurveData& c, double tol) {
  WeilCheck check;
  check.tol = tol;
  ZetaNumerator num = numerator_from_counts(c);
  const int deg = 2 * c.genus;
  if (deg == 0) {
    check.converged = true;
    check.pass = true;
    return check;
  }
  using C = std::complex<double>;
  std::vector<C> m(static_cast<size_t>(deg) + 1);  // monic coefficients
  const double lead = num.coefficients().back().convert_to<double>();
  for (int i = 0; i <= deg; ++i)
    m[static_cast<size_t>(i)] = num.coefficients()[static_cast<size_t>(i)].convert_to<double>() / lead;
  auto eval = [&](C z) {
    C acc{0.0, 0.0};
    for (int i = deg; i >= 0; --i) acc = acc * z + m[static_cast<size_t>(i)];
    return acc;
  };

  // Durand-Kerner with the standard deterministic seeds (0.4 + 0.9i)^j
  std::vector<C> z(static_cast<size_t>(deg));
  const C seed{0.4, 0.9};
  C s = seed;
  for (int j = 0; j < deg; ++j) {
    z[static_cast<size_t>(j)] = s;
    s *= seed;
  }
  constexpr int kMaxIterations = 10000;
  constexpr double kStepTol = 1e-14;
  for (check.iterations = 0; check.iterations < kMaxIterations; ++check.iterations) {
    double step = 0.0;
    for (int j = 0; j < deg; ++j) {
      C denom{1.0, 0.0};
      for (int k = 0; k < deg; ++k)
        if (k != j) denom *= z[static_cast<size_t>(j)] - z[static_cast<size_t>(k)];
      C w = eval(z[static_cast<size_t>(j)]) / denom;
      z[static_cast<size_t>(j)] -= w;
      step = std::max(step, std::abs(w));
    }
    if (step < kStepTol) {
      check.converged = true;
      break;
    }
  }

  check.root_moduli.reserve(static_cast<size_t>(deg));
  for (const C& root : z) check.root_moduli.push_back(1.0 / std::abs(root));
  std::sort(check.root_moduli.begin(), check.root_moduli.end());
  const double target = std::sqrt(static_cast<double>(c.q));
  for (double modulus : check.root_moduli)
    check.max_deviation = std::max(check.max_deviation, std::abs(modulus - target));
  check.pass = check.converged && check.max_deviation <= tol;
  return check;
}

CurveData parse_curve(std::string_view text) {
  std::optional<int64_t> q, genus, d_inf;
  std::optional<std::vector<int64_t>> counts;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line =
        eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("curve line is not 'key = value': " + std::string(line));
    std::string key{trim(line.substr(0, eq))};
    std::string_view value = trim(line.substr(eq + 1));
    if (key == "q") {
      if (q) throw ParseError("duplicate key 'q'");
      q = parse_int_strict(value, "q");
    } else if (key == "genus") {
      if (genus) throw ParseError("duplicate key 'genus'");
      genus = parse_int_strict(value, "genus");
    } else if (key == "d_inf") {
      if (d_inf) throw ParseError("duplicate key 'd_inf'");
      d_inf = parse_int_strict(value, "d_inf");
    } else if (key == "counts") {
      if (counts) throw ParseError("duplicate key 'counts'");
      if (value.size() < 2 || value.front() != '[' || value.back() != ']')
        throw ParseError("counts must be a bracketed list, e.g. [3, 9]");
      std::string_view body = trim(value.substr(1, value.size() - 2));
      std::vector<int64_t> list;
      if (!body.empty()) {
        size_t p = 0;
        while (true) {
          size_t comma = body.find(',', p);
          std::string_view piece =
              comma == std::string_view::npos ? body.substr(p) : body.substr(p, comma - p);
          list.push_back(parse_int_strict(piece, "counts entry"));
          if (comma == std::string_view::npos) break;
          p = comma + 1;
        }
      }
      counts = std::move(list);
    } else {
      throw ParseError("unknown key '" + key + "' in curve description");
    }
  }
  if (!q) throw ParseError("curve description is missing 'q'");
  if (!genus) throw ParseError("curve description is missing 'genus'");
  if (*genus > 0 && !counts)
    throw ParseError("curve description is missing 'counts' for genus >= 1");
  return CurveData::make(*q, static_cast<int>(*genus),
                         counts.value_or(std::vector<int64_t>{}),
                         static_cast<int>(d_inf.value_or(1)));
}

CurveData load_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open curve file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_curve(buf.str());
}

std::string format_curve(const CurveData& c) {
  std::string s;
  s += "q = " + std::to_string(c.q) + "\n";
  s += "genus = " + std::to_string(c.genus) + "\n";
  s += "counts = [";
  for (size_t i = 0; i < c.counts.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(c.counts[i]);
  }
  s += "]\n";
  s += "d_inf = " + std::to_string(c.d_inf) + "\n";
  return s;
}

}  // namespace ffcount
