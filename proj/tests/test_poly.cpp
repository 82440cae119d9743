#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ffcount/gf.hpp"
#include "ffcount/poly.hpp"

using namespace ffcount;

namespace {

Poly P(const FieldPtr& F, const char* text) { return parse_poly(F, text); }

/// All polynomials with degree < len (including zero), by index odometer.
std::vector<Poly> all_polys(const FieldPtr& F, int len) {
  std::vector<Poly> out;
  std::vector<int64_t> idx(static_cast<size_t>(len), 0);
  while (true) {
    out.push_back(Poly::from_indices(F, idx));
    int i = 0;
    while (i < len && ++idx[static_cast<size_t>(i)] == F->q()) idx[static_cast<size_t>(i++)] = 0;
    if (i == len) break;
  }
  return out;
}

}  // namespace

TEST_CASE("construction and degree") {
  FieldPtr F2 = Field::make(2);
  CHECK(Poly::zero(F2).degree() == Poly::kDegNegInf);
  CHECK(Poly::one(F2).degree() == 0);
  CHECK(Poly::variable(F2).degree() == 1);
  CHECK(Poly::from_indices(F2, {1, 1, 0, 0}).degree() == 1);  // trailing zeros trimmed
  CHECK(Poly::from_indices(F2, {0, 0}).is_zero());
  CHECK(Poly::variable(F2).is_monic());
  CHECK_FALSE(Poly::zero(F2).is_monic());
}

TEST_CASE("ring arithmetic") {
  FieldPtr F2 = Field::make(2);
  CHECK(P(F2, "t+1") * P(F2, "t+1") == P(F2, "t^2+1"));
  CHECK(P(F2, "t^2+t") + P(F2, "t^2+1") == P(F2, "t+1"));

  FieldPtr F3 = Field::make(3);
  CHECK(P(F3, "t+1") * P(F3, "t+2") == P(F3, "t^2+2"));
  CHECK(-P(F3, "t") == P(F3, "2*t"));
}

TEST_CASE("division with remainder") {
  FieldPtr F2 = Field::make(2);
  auto [quot, rem] = divmod(P(F2, "t^3+t+1"), P(F2, "t^2+1"));
  CHECK(quot == P(F2, "t"));
  CHECK(rem == P(F2, "1"));
  CHECK_THROWS_AS(divmod(P(F2, "t"), Poly::zero(F2)), std::domain_error);

  FieldPtr F5 = Field::make(5);
  for (const Poly& a : all_polys(F5, 3))
    for (const Poly& b : all_polys(F5, 2)) {
      if (b.is_zero()) continue;
      auto [q, r] = divmod(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("gcd and lcm") {
  FieldPtr F5 = Field::make(5);
  CHECK(gcd(Poly::zero(F5), P(F5, "3*t^2")) == P(F5, "t^2"));

  FieldPtr F2 = Field::make(2);
  CHECK(gcd(P(F2, "t^2+t"), P(F2, "t^2+1")) == P(F2, "t+1"));
  CHECK(lcm(P(F2, "t"), P(F2, "t+1")) == P(F2, "t^2+t"));
  CHECK_THROWS_AS(gcd(Poly::zero(F2), Poly::zero(F2)), std::domain_error);

  for (const Poly& a : all_polys(F2, 4))
    for (const Poly& b : all_polys(F2, 4)) {
      if (a.is_zero() && b.is_zero()) continue;
      Poly g = gcd(a, b);
      CHECK(g.is_monic());
      if (!a.is_zero()) CHECK((a % g).is_zero());
      if (!b.is_zero()) CHECK((b % g).is_zero());
      if (!a.is_zero() && !b.is_zero()) CHECK(g * lcm(a, b) == (a * b).monic());
    }
}

TEST_CASE("multiplicity") {
  FieldPtr F2 = Field::make(2);
  CHECK(multiplicity(P(F2, "t"), P(F2, "t^3+t^2")) == 2);
  CHECK(multiplicity(P(F2, "t+1"), P(F2, "t^3+t^2")) == 1);
  CHECK(multiplicity(P(F2, "t^2+t+1"), P(F2, "t^3+t^2")) == 0);
  CHECK_THROWS_AS(multiplicity(P(F2, "1"), P(F2, "t")), std::invalid_argument);
}

TEST_CASE("irreducibility") {
  FieldPtr F2 = Field::make(2);
  CHECK(is_irreducible(P(F2, "t")));
  CHECK(is_irreducible(P(F2, "t+1")));
  CHECK(is_irreducible(P(F2, "t^2+t+1")));
  CHECK_FALSE(is_irreducible(P(F2, "t^2+1")));  // (t+1)^2
  CHECK_FALSE(is_irreducible(P(F2, "t^2")));
  CHECK_FALSE(is_irreducible(P(F2, "1")));
  CHECK_FALSE(is_irreducible(Poly::zero(F2)));

  FieldPtr F3 = Field::make(3);
  CHECK(is_irreducible(P(F3, "t^2+1")));
  CHECK_FALSE(is_irreducible(P(F3, "t^2+2")));  // (t+1)(t+2)
}

TEST_CASE("factorization example") {
  FieldPtr F2 = Field::make(2);
  auto factors = factor(P(F2, "t^4+t^2"));  // t^2 (t+1)^2
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].first == P(F2, "t"));
  CHECK(factors[0].second == 2);
  CHECK(factors[1].first == P(F2, "t+1"));
  CHECK(factors[1].second == 2);
  CHECK(factor(P(F2, "1")).empty());
  CHECK_THROWS_AS(factor(Poly::zero(F2)), std::domain_error);
}

TEST_CASE("factor then refactor, exhaustive") {
  for (int64_t q : {2, 3}) {
    FieldPtr F = field_for_order(q);
    int dmax = q == 2 ? 5 : 4;
    for (int d = 1; d <= dmax; ++d)
      for (const Poly& f : monic_polys(F, d)) {
        auto factors = factor(f);
        Poly product = Poly::one(F);
        int prev_deg = 0;
        for (const auto& [pi, m] : factors) {
          CHECK(pi.is_monic());
          CHECK(is_irreducible(pi));
          CHECK(m >= 1);
          CHECK(pi.degree() >= prev_deg);
          prev_deg = pi.degree();
          product *= pow(pi, m);
        }
        CHECK(product == f);
      }
  }
}

TEST_CASE("evaluation") {
  FieldPtr F4 = Field::make(2, 2);
  FieldElement u = F4->generator();
  CHECK(P(F4, "t^2+t+1").eval(u).is_zero());  // the field modulus at u
  CHECK(P(F4, "t^2").eval(u) == u + F4->one());

  FieldPtr F5 = Field::make(5);
  CHECK(P(F5, "t^3+2*t+1").eval(F5->from_integer(2)) == F5->from_integer(3));
}

TEST_CASE("text forms") {
  FieldPtr F2 = Field::make(2);
  CHECK(P(F2, "t^2 + t + 1").to_string() == "t^2+t+1");
  CHECK(Poly::zero(F2).to_string() == "0");

  FieldPtr F3 = Field::make(3);
  CHECK(P(F3, "2*t^3+1").to_string() == "2*t^3+1");

  FieldPtr F4 = Field::make(2, 2);
  FieldElement u = F4->generator();
  Poly mixed = Poly::from_coefficients(F4, {u, u + F4->one()});
  CHECK(mixed.to_string() == "(u+1)*t+u");
}

TEST_CASE("parse round-trip, exhaustive") {
  for (int64_t q : {2, 3, 4}) {
    FieldPtr F = field_for_order(q);
    for (const Poly& f : all_polys(F, 3)) CHECK(parse_poly(F, f.to_string()) == f);
  }
}

TEST_CASE("parse accepts expression forms") {
  FieldPtr F2 = Field::make(2);
  CHECK(P(F2, "t*(t+1)") == P(F2, "t^2+t"));
  CHECK(P(F2, "(t+1)^2") == P(F2, "t^2+1"));
  CHECK(P(F2, "3") == Poly::one(F2));  // integers reduce mod p

  FieldPtr F3 = Field::make(3);
  CHECK(P(F3, "-t") == P(F3, "2*t"));
  CHECK(P(F3, "t-1") == P(F3, "t+2"));

  FieldPtr F4 = Field::make(2, 2);
  CHECK(P(F4, "u*u") == Poly::constant(F4->generator() + F4->one()));
}

TEST_CASE("parse rejects malformed input") {
  FieldPtr F2 = Field::make(2);
  CHECK_THROWS_AS(parse_poly(F2, "t^"), ParseError);
  CHECK_THROWS_AS(parse_poly(F2, "(t"), ParseError);
  CHECK_THROWS_AS(parse_poly(F2, "t$1"), ParseError);
  CHECK_THROWS_AS(parse_poly(F2, ""), ParseError);
  CHECK_THROWS_AS(parse_poly(F2, "u"), ParseError);  // no u in a prime field
  CHECK_THROWS_AS(parse_poly(F2, "t^9999"), ParseError);  // exponent cap
  CHECK_THROWS_AS(parse_poly(F2, "t/t"), ParseError);  // '/' only in rationals
}

TEST_CASE("rational functions reduce") {
  FieldPtr F2 = Field::make(2);
  RationalFunction f = parse_rational(F2, "(t^2+t)/(t^2+1)");  // t(t+1)/(t+1)^2
  CHECK(f.num() == P(F2, "t"));
  CHECK(f.den() == P(F2, "t+1"));
  CHECK(f.to_string() == "t/(t+1)");

  CHECK(parse_rational(F2, "t^2/t").to_string() == "t");

  FieldPtr F5 = Field::make(5);
  CHECK(parse_rational(F5, "1/2").to_string() == "3");  // monic denominator

  CHECK_THROWS_AS(parse_rational(F2, "t/0"), std::domain_error);
  CHECK_THROWS_AS(parse_rational(F2, "t/t/t"), ParseError);
}

TEST_CASE("rational function field axioms, spot") {
  FieldPtr F3 = Field::make(3);
  RationalFunction a = parse_rational(F3, "t/(t+1)");
  RationalFunction b = parse_rational(F3, "(t+2)/t");
  RationalFunction c = parse_rational(F3, "2");
  CHECK(a + b == b + a);
  CHECK((a + b) * c == a * c + b * c);
  CHECK(a / a == RationalFunction::one(F3));
  CHECK(a - a == RationalFunction::zero(F3));
  CHECK((a / b) * b == a);
  CHECK_THROWS_AS(a / RationalFunction::zero(F3), std::domain_error);
}
