#include <string>
#include <vector>

#include "doctest.h"
#include "ffcount/report.hpp"

using namespace ffcount;

TEST_CASE("count table golden rows") {
  FieldPtr F2 = Field::make(2);
  std::vector<CountRow> rows = count_table(F2, 1, 2);
  CHECK(render_count_csv(rows) ==
        "r,exact,predicted,residual\n"
        "0,3,3/2,3/2\n"
        "1,6,6,0\n"
        "2,24,24,0\n");

  FieldPtr F3 = Field::make(3);
  CHECK(render_count_csv(count_table(F3, 1, 1)) ==
        "r,exact,predicted,residual\n"
        "0,4,8/3,4/3\n"
        "1,24,24,0\n");
}

TEST_CASE("count table json carries the same strings") {
  FieldPtr F2 = Field::make(2);
  std::string json = render_count_json(count_table(F2, 1, 1));
  CHECK(json.find("\"r\": 0") != std::string::npos);
  CHECK(json.find("\"exact\": \"3\"") != std::string::npos);
  CHECK(json.find("\"predicted\": \"3/2\"") != std::string::npos);
  CHECK(json.find("\"residual\": \"3/2\"") != std::string::npos);
  CHECK(json.find("\"exact\": \"6\"") != std::string::npos);
  CHECK(json.back() == '\n');
}

TEST_CASE("envelope column") {
  FieldPtr F2 = Field::make(2);
  std::string csv = render_table_csv(count_table(F2, 1, 2), 2);
  CHECK(csv == "r,exact,predicted,residual,envelope\n"
               "0,3,3/2,3/2,1.000000e+00\n"
               "1,6,6,0,1.414214e+00\n"
               "2,24,24,0,2.000000e+00\n");
  std::string json = render_table_json(count_table(F2, 1, 1), 2);
  CHECK(json.find("\"envelope\"") != std::string::npos);
}

TEST_CASE("tables are byte-identical across worker counts") {
  FieldPtr F3 = Field::make(3);
  std::string serial = render_count_csv(count_table(F3, 1, 3, 1));
  for (int workers : {2, 4}) CHECK(render_count_csv(count_table(F3, 1, 3, workers)) == serial);
}

TEST_CASE("formula report for an elliptic curve") {
  CurveData curve = CurveData::make(2, 1, {3});
  FormulaReport report = make_formula_report(curve, 1, 2);
  CHECK(report.numerator == std::vector<Int>{1, 0, 2});
  CHECK(report.class_number == 3);
  CHECK(report.zeta_value == Rational(3));
  CHECK(report.kappa_value == Rational(1));
  CHECK(report.weil.pass);
  REQUIRE(report.rows.size() == 3);
  CHECK(report.rows[0].main_term == Rational(1));
  CHECK(report.rows[1].main_term == Rational(4));
  CHECK(report.rows[2].main_term == Rational(16));

  std::string csv = render_formula_csv(report);
  CHECK(csv.find("# numerator=[1, 0, 2]") != std::string::npos);
  CHECK(csv.find("# class_number=3") != std::string::npos);
  CHECK(csv.find("# zeta(2)=3") != std::string::npos);
  CHECK(csv.find("# kappa=1") != std::string::npos);
  CHECK(csv.find("# weil=pass") != std::string::npos);
  CHECK(csv.find("r,main_term,envelope") != std::string::npos);
  CHECK(csv.find("2,16,2.000000e+00") != std::string::npos);

  std::string json = render_formula_json(report);
  CHECK(json.find("\"class_number\": \"3\"") != std::string::npos);
  CHECK(json.find("\"kappa\": \"1\"") != std::string::npos);
  CHECK(json.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("formula report for the projective line") {
  FormulaReport report = make_formula_report(CurveData::make(2, 0, {}), 1, 1);
  CHECK(report.class_number == 1);
  CHECK(report.zeta_value == Rational(8, 3));
  CHECK(report.kappa_value == Rational(3, 2));
  CHECK(report.rows[1].main_term == Rational(6));
  std::string csv = render_formula_csv(report);
  CHECK(csv.find("# weil=pass (no inverse roots)") != std::string::npos);
  CHECK(csv.find("0,3/2,1.000000e+00") != std::string::npos);
}

TEST_CASE("zeta report rendering") {
  ZetaReport report = make_zeta_report(CurveData::make(2, 1, {3}), 2);
  CHECK(render_zeta_text(report) ==
        "q = 2\n"
        "genus = 1\n"
        "d_inf = 1\n"
        "numerator = [1, 0, 2]\n"
        "class_number = 3\n"
        "s = 2\n"
        "zeta = 3\n");
  std::string json = render_zeta_json(report);
  CHECK(json.find("\"zeta\": \"3\"") != std::string::npos);
  CHECK(json.find("\"numerator\"") != std::string::npos);
}
