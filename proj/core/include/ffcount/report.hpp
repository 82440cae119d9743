#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffcount/counting.hpp"
#include "ffcount/zeta.hpp"

namespace ffcount {

/// One row of the exact-vs-predicted table for P^n(F_q(t)).
struct CountRow {
  int64_t r = 0;
  Int exact;
  Rational predicted;
  Rational residual;
};

/// Exhaustive counts for r = 0..rmax with their main-term predictions.
std::vector<CountRow> count_table(const FieldPtr& field, int n, int64_t rmax,
                                  int workers = 1, uint64_t budget = kDefaultBudget);

/// Header "r,exact,predicted,residual"; rationals rendered as "p/q".
std::string render_count_csv(const std::vector<CountRow>& rows);
std::string render_count_json(const std::vector<CountRow>& rows);

/// Same rows with the error envelope q^{r/2} appended as a last column.
std::string render_table_csv(const std::vector<CountRow>& rows, int64_t q);
std::string render_table_json(const std::vector<CountRow>& rows, int64_t q);

struct FormulaRow {
  int64_t r = 0;
  Rational main_term;
  double envelope = 0.0;  // q^{r/2}
};

/// The zeta-side summary: class number, zeta value, leading coefficient,
/// Weil modulus check, and the main term per height.
struct FormulaReport {
  CurveData curve;
  int n = 1;
  std::vector<Int> numerator;
  Int class_number;
  Rational zeta_value;  // at s = n+1
  Rational kappa_value;
  WeilCheck weil;
  std::vector<FormulaRow> rows;  // r = 0..rmax
};

FormulaReport make_formula_report(const CurveData& curve, int n, int64_t rmax);
std::string render_formula_csv(const FormulaReport& report);
std::string render_formula_json(const FormulaReport& report);

struct ZetaReport {
  CurveData curve;
  int s = 2;
  std::vector<Int> numerator;
  Int class_number;
  Rational value;
};

ZetaReport make_zeta_report(const CurveData& curve, int s);
std::string render_zeta_text(const ZetaReport& report);
std::string render_zeta_json(const ZetaReport& report);

}  // namespace ffcount
