#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ffcount/counting.hpp"

using namespace ffcount;

namespace {

Poly P(const FieldPtr& F, const char* text) { return parse_poly(F, text); }

NormalizedPoint pt(const FieldPtr& F, const char* a, const char* b) {
  return NormalizedPoint({P(F, a), P(F, b)});
}

}  // namespace

TEST_CASE("candidate counts and the budget guard") {
  CHECK(candidate_count(2, 1, 1) == 16);
  CHECK(candidate_count(3, 1, 4) == 59049);
  CHECK(candidate_count(2, 1, -1) == 0);
  CHECK_NOTHROW(check_budget(2, 1, 4, kDefaultBudget));
  CHECK_THROWS_WITH_AS(check_budget(2, 1, 50, kDefaultBudget),
                       doctest::Contains("2^34"), BudgetError);
  CHECK_THROWS_WITH_AS(check_budget(2, 1, 3, 100), doctest::Contains("100"), BudgetError);

  FieldPtr F2 = Field::make(2);
  CHECK_THROWS_AS(count_points(F2, 1, 50), BudgetError);
  CHECK_THROWS_AS(enumerate_points(F2, 1, 50), BudgetError);
  CHECK_THROWS_AS(mobius_degree_sums(F2, 40), BudgetError);
}

TEST_CASE("report arithmetic") {
  CountReport report = make_report(Int(5), Rational(3, 2), "x");
  CHECK(report.residual == Rational(7, 2));
  CHECK(report.meta == "x");
}

TEST_CASE("enumeration order is pinned") {
  FieldPtr F2 = Field::make(2);

  std::vector<NormalizedPoint> h0 = enumerate_points(F2, 1, 0);
  REQUIRE(h0.size() == 3);
  CHECK(h0[0] == pt(F2, "0", "1"));
  CHECK(h0[1] == pt(F2, "1", "0"));
  CHECK(h0[2] == pt(F2, "1", "1"));

  std::vector<NormalizedPoint> h1 = enumerate_points(F2, 1, 1);
  REQUIRE(h1.size() == 6);
  CHECK(h1[0] == pt(F2, "1", "t"));
  CHECK(h1[1] == pt(F2, "1", "t+1"));
  CHECK(h1[2] == pt(F2, "t", "1"));
  CHECK(h1[3] == pt(F2, "t", "t+1"));
  CHECK(h1[4] == pt(F2, "t+1", "1"));
  CHECK(h1[5] == pt(F2, "t+1", "t"));
  for (const NormalizedPoint& x : h1) CHECK(x.height() == 1);

  CHECK(enumerate_points(F2, 1, -1).empty());
}

TEST_CASE("exact point counts") {
  FieldPtr F2 = Field::make(2);
  FieldPtr F3 = Field::make(3);

  struct Row {
    FieldPtr field;
    int n;
    int64_t r;
    int64_t exact;
  };
  for (const Row& row : {Row{F2, 1, 0, 3}, Row{F2, 1, 1, 6}, Row{F2, 1, 2, 24},
                         Row{F2, 1, 3, 96}, Row{F2, 1, 4, 384}, Row{F3, 1, 0, 4},
                         Row{F3, 1, 1, 24}, Row{F3, 1, 2, 216}, Row{F2, 2, 0, 7},
                         Row{F2, 2, 1, 42}, Row{F2, 2, 2, 336}}) {
    CountReport report = count_points(row.field, row.n, row.r);
    CHECK(report.exact == row.exact);
    if (row.r >= 1) CHECK(report.residual == 0);
  }

  CountReport r0 = count_points(F2, 1, 0);
  CHECK(r0.predicted == Rational(3, 2));
  CHECK(r0.residual == Rational(3, 2));
  CHECK(r0.meta == "points q=2 n=1 r=0");

  CountReport below = count_points(F2, 1, -1);
  CHECK(below.exact == 0);
  CHECK(below.predicted == Rational(3, 8));

  CHECK_THROWS_AS(count_points(F2, 0, 1), std::invalid_argument);
}

TEST_CASE("sphere orbit counts and the closed form") {
  FieldPtr F2 = Field::make(2);
  CountReport m = count_divisible_orbits(P(F2, "t"), 1, 1);
  CHECK(m.exact == 12);
  CHECK(m.predicted == Rational(12));
  CHECK(m.residual == 0);
  CHECK(count_divisible_orbits(P(F2, "t^2+t+1"), 1, 0).exact == 3);

  for (int64_t q : {2, 3}) {
    FieldPtr F = field_for_order(q);
    for (int d = 0; d <= 2; ++d)
      for (const Poly& f : monic_polys(F, d))
        for (int64_t r = 0; r <= 3; ++r) {
          CountReport scanned = count_divisible_orbits(f, 1, r, ScanMode::kEnumerate);
          CountReport closed = count_divisible_orbits(f, 1, r, ScanMode::kClosedForm);
          Int want = Int(q + 1) * int_pow(Int(q), 2 * r);  // independent of f
          CHECK(scanned.exact == want);
          CHECK(closed.exact == want);
          CHECK(scanned.residual == 0);
          CHECK(closed.residual == 0);
        }
  }

  FieldPtr F3 = Field::make(3);
  CHECK_THROWS_AS(count_divisible_orbits(P(F3, "2*t"), 1, 1), std::invalid_argument);
}

TEST_CASE("content orbit counts invert the content filtration") {
  FieldPtr F2 = Field::make(2);
  CHECK(count_content_orbits(P(F2, "t"), 1, 1).exact == 6);

  FieldPtr F3 = Field::make(3);
  CHECK(count_content_orbits(Poly::one(F3), 1, 2).exact == 216);

  for (int64_t q : {2, 3}) {
    FieldPtr F = field_for_order(q);
    for (int d = 0; d <= 2; ++d)
      for (const Poly& f : monic_polys(F, d))
        for (int64_t r = 0; r <= 2; ++r) {
          CountReport content = count_content_orbits(f, 1, r);
          CountReport direct = count_points(F, 1, r);
          CHECK(content.exact == direct.exact);
          CHECK(content.predicted == direct.predicted);
        }
  }
}

TEST_CASE("mobius degree sums") {
  for (int64_t q : {2, 3}) {
    std::vector<Int> sums = mobius_degree_sums(field_for_order(q), 5);
    REQUIRE(sums.size() == 6);
    CHECK(sums[0] == 1);
    CHECK(sums[1] == -q);
    for (size_t d = 2; d < sums.size(); ++d) CHECK(sums[d] == 0);
  }
  CHECK(mobius_degree_sums(Field::make(2), 0) == std::vector<Int>{Int(1)});
}

TEST_CASE("sphere measure") {
  CHECK(ball_measure(2, 1, 1) == Rational(3, 4));
  CHECK(ball_measure(2, 2, 1) == Rational(7, 8));
  CHECK(ball_measure(3, 1, 2) == Rational(80, 81));
  CHECK_THROWS_AS(ball_measure(6, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(ball_measure(2, 1, 0), std::invalid_argument);

  // The measure is the fraction of nonzero residue tuples, the residue field
  // of the infinite place having order q^{d_inf}.
  CHECK(Rational(residue_sphere_count(Field::make(2), 1), 4) == ball_measure(2, 1, 1));
  CHECK(Rational(residue_sphere_count(Field::make(3, 2), 1), 81) == ball_measure(3, 1, 2));
  CHECK(residue_sphere_count(Field::make(3), 2) == 26);
}

TEST_CASE("covolume and lattice index") {
  FieldPtr F2 = Field::make(2);
  CHECK(covolume(Poly::one(F2), 1) == Rational(1, 4));
  CHECK(covolume(P(F2, "t"), 1) == Rational(1));
  CHECK(lattice_index(P(F2, "t^2+t+1")) == 4);

  for (int64_t q : {2, 3}) {
    FieldPtr F = field_for_order(q);
    for (int d = 0; d <= 3; ++d)
      for (const Poly& f : monic_polys(F, d)) {
        CHECK(lattice_index(f) == int_pow(Int(q), d));
        CHECK(covolume(f, 2) == rational_pow(Int(q), 3 * (d - 1)));
      }
  }
}

TEST_CASE("lattice sphere counts match the scaled measure") {
  FieldPtr F2 = Field::make(2);
  CountReport big = lipschitz_check(Poly::one(F2), 1, 3);
  CHECK(big.exact == 192);
  CHECK(big.predicted == Rational(192));
  CHECK(big.residual == 0);

  CountReport shifted = lipschitz_check(P(F2, "t"), 1, 1);
  CHECK(shifted.exact == 12);
  CHECK(shifted.predicted == Rational(12));

  // Below the lattice minimum the sphere is empty but the prediction is not:
  // the discrepancy lives inside the error term.
  CountReport below = lipschitz_check(Poly::one(F2), 1, -1);
  CHECK(below.exact == 0);
  CHECK(below.predicted == Rational(3, 4));
  CHECK(below.residual == Rational(-3, 4));

  for (int64_t q : {2, 3}) {
    FieldPtr F = field_for_order(q);
    for (int d = 0; d <= 2; ++d)
      for (const Poly& f : monic_polys(F, d))
        for (int64_t r = 0; r <= 3; ++r) CHECK(lipschitz_check(f, 1, r).residual == 0);
  }
}

TEST_CASE("single-class assembly agrees with enumeration") {
  FieldPtr F2 = Field::make(2);
  CountReport a1 = assemble_count(F2, 1, 1);
  CHECK(a1.exact == 6);
  CHECK(a1.meta == "assembly q=2 n=1 r=1 classes=1");
  CHECK(assemble_count(F2, 1, 3).exact == 96);
  CHECK(assemble_count(Field::make(3), 1, 1).exact == 24);
  CHECK(assemble_count(F2, 2, 1).exact == 42);
}

TEST_CASE("content fibers over the height sphere") {
  FieldPtr F2 = Field::make(2);
  for (int64_t r = 0; r <= 2; ++r) {
    Int direct = count_points(F2, 1, r).exact;
    for (int d = 0; d <= 1; ++d)
      for (const Poly& f : monic_polys(F2, d)) CHECK(content_fiber_count(f, 1, r) == direct);
  }
  CHECK(content_fiber_count(Poly::one(F2), 1, -1) == 0);
}

TEST_CASE("unit orbits partition the sphere") {
  for (int64_t q : {2, 3, 4}) {
    FieldPtr F = field_for_order(q);
    for (int64_t r = 0; r <= 2; ++r) {
      OrbitCheck check = unit_orbit_check(F, 1, r);
      CHECK(check.pass);
      Int tuples = int_pow(Int(q), 2 * (r + 1)) - 1;
      CHECK(check.tuple_count == tuples);
      CHECK(check.orbit_count == tuples / Int(q - 1));
    }
  }
}

TEST_CASE("counts are independent of the partition") {
  FieldPtr F3 = Field::make(3);
  const int n = 1;
  const int64_t r = 2;
  const uint64_t space = 27;  // q^{r+1}

  std::vector<NormalizedPoint> serial =
      detail::enumerate_points_partitioned(F3, n, r, {0, space});
  CHECK(serial.size() == 216);

  for (const std::vector<uint64_t>& b :
       {std::vector<uint64_t>{0, 5, space}, std::vector<uint64_t>{0, 0, 13, 13, space},
        std::vector<uint64_t>{0, 1, 2, 3, space}}) {
    CHECK(detail::enumerate_points_partitioned(F3, n, r, b) == serial);
    CHECK(detail::count_points_partitioned(F3, n, r, b) == 216);
  }

  CHECK_THROWS_AS(detail::count_points_partitioned(F3, n, r, {1, space}),
                  std::invalid_argument);
  CHECK_THROWS_AS(detail::count_points_partitioned(F3, n, r, {0, 9, 5, space}),
                  std::invalid_argument);
  CHECK_THROWS_AS(detail::count_points_partitioned(F3, n, r, {0}), std::invalid_argument);
}

TEST_CASE("worker counts do not change results") {
  FieldPtr F2 = Field::make(2);
  std::vector<NormalizedPoint> serial = enumerate_points(F2, 1, 3, 1);
  for (int workers : {2, 4, 64}) {
    CHECK(enumerate_points(F2, 1, 3, workers) == serial);
    CHECK(count_points(F2, 1, 3, workers).exact == 96);
  }
}
