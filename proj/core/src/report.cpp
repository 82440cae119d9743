#include "ffcount/report.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace ffcount {
namespace {

using json = nlohmann::ordered_json;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6e", v);
  return buf;
}

double envelope(int64_t q, int64_t r) {
  return std::pow(static_cast<double>(q), static_cast<double>(r) / 2.0);
}

json numerator_json(const std::vector<Int>& coeffs) {
  json arr = json::array();
  for (const Int& c : coeffs) arr.push_back(to_string(c));
  return arr;
}

json weil_json(const WeilCheck& weil) {
  json w;
  w["pass"] = weil.pass;
  w["converged"] = weil.converged;
  w["iterations"] = weil.iterations;
  w["max_deviation"] = weil.max_deviation;
  w["tol"] = weil.tol;
  w["root_moduli"] = weil.root_moduli;
  return w;
}

}  // namespace

std::vector<CountRow> count_table(const FieldPtr& field, int n, int64_t rmax,
                                  int workers, uint64_t budget) {
  if (rmax < 0) throw std::invalid_argument("count_table: rmax must be >= 0");
  check_budget(field->q(), n, rmax, budget);
  std::vector<CountRow> rows;
  rows.reserve(static_cast<size_t>(rmax) + 1);
  for (int64_t r = 0; r <= rmax; ++r) {
    CountReport report = count_points(field, n, r, workers, budget);
    rows.push_back({r, std::move(report.exact), std::move(report.predicted),
                    std::move(report.residual)});
  }
  return rows;
}

std::string render_count_csv(const std::vector<CountRow>& rows) {
  std::string out = "r,exact,predicted,residual\n";
  for (const CountRow& row : rows) {
    out += std::to_string(row.r) + "," + to_string(row.exact) + "," +
           to_string(row.predicted) + "," + to_string(row.residual) + "\n";
  }
  return out;
}

std::string render_count_json(const std::vector<CountRow>& rows) {
  json arr = json::array();
  for (const CountRow& row : rows) {
    json obj;
    obj["r"] = row.r;
    obj["exact"] = to_string(row.exact);
    obj["predicted"] = to_string(row.predicted);
    obj["residual"] = to_string(row.residual);
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::string render_table_csv(const std::vector<CountRow>& rows, int64_t q) {
  std::string out = "r,exact,predicted,residual,envelope\n";
  for (const CountRow& row : rows) {
    out += std::to_string(row.r) + "," + to_string(row.exact) + "," +
           to_string(row.predicted) + "," + to_string(row.residual) + "," +
           sci(envelope(q, row.r)) + "\n";
  }
  return out;
}

std::string render_table_json(const std::vector<CountRow>& rows, int64_t q) {
  json arr = json::array();
  for (const CountRow& row : rows) {
    json obj;
    obj["r"] = row.r;
    obj["exact"] = to_string(row.exact);
    obj["predicted"] = to_string(row.predicted);
    obj["residual"] = to_string(row.residual);
    obj["envelope"] = envelope(q, row.r);
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

FormulaReport make_formula_report(const CurveData& curve, int n, int64_t rmax) {
  if (rmax < 0) throw std::invalid_argument("formula report: rmax must be >= 0");
  FormulaReport report;
  report.curve = curve;
  report.n = n;
  ZetaNumerator num = numerator_from_counts(curve);
  report.numerator = num.coefficients();
  report.class_number = class_number(num);
  report.zeta_value = zeta_eval(curve, n + 1);
  report.kappa_value = kappa(curve, n);
  report.weil = weil_verify(curve);
  Rational base = rational_pow(Int(curve.q), n + 1);
  Rational term = report.kappa_value;
  for (int64_t r = 0; r <= rmax; ++r) {
    report.rows.push_back({r, term, envelope(curve.q, r)});
    term *= base;
  }
  return report;
}

std::string render_formula_csv(const FormulaReport& report) {
  std::string out;
  out += "# q=" + std::to_string(report.curve.q) + "\n";
  out += "# genus=" + std::to_string(report.curve.genus) + "\n";
  out += "# d_inf=" + std::to_string(report.curve.d_inf) + "\n";
  out += "# n=" + std::to_string(report.n) + "\n";
  out += "# numerator=[";
  for (size_t i = 0; i < report.numerator.size(); ++i) {
    if (i) out += ", ";
    out += to_string(report.numerator[i]);
  }
  out += "]\n";
  out += "# class_number=" + to_string(report.class_number) + "\n";
  out += "# zeta(" + std::to_string(report.n + 1) + ")=" + to_string(report.zeta_value) + "\n";
  out += "# kappa=" + to_string(report.kappa_value) + "\n";
  if (report.curve.genus == 0) {
    out += "# weil=pass (no inverse roots)\n";
  } else {
    out += std::string("# weil=") + (report.weil.pass ? "pass" : "fail") +
           " (max deviation " + sci(report.weil.max_deviation) + ", tol " +
           sci(report.weil.tol) + ")\n";
  }
  out += "r,main_term,envelope\n";
  for (const FormulaRow& row : report.rows)
    out += std::to_string(row.r) + "," + to_string(row.main_term) + "," +
           sci(row.envelope) + "\n";
  return out;
}

std::string render_formula_json(const FormulaReport& report) {
  json obj;
  obj["q"] = report.curve.q;
  obj["genus"] = report.curve.genus;
  obj["d_inf"] = report.curve.d_inf;
  obj["counts"] = report.curve.counts;
  obj["n"] = report.n;
  obj["numerator"] = numerator_json(report.numerator);
  obj["class_number"] = to_string(report.class_number);
  obj["zeta"] = to_string(report.zeta_value);
  obj["kappa"] = to_string(report.kappa_value);
  obj["weil"] = weil_json(report.weil);
  json rows = json::array();
  for (const FormulaRow& row : report.rows) {
    json r;
    r["r"] = row.r;
    r["main_term"] = to_string(row.main_term);
    r["envelope"] = row.envelope;
    rows.push_back(std::move(r));
  }
  obj["rows"] = std::move(rows);
  return obj.dump(2) + "\n";
}

ZetaReport make_zeta_report(const CurveData& curve, int s) {
  ZetaReport report;
  report.curve = curve;
  report.s = s;
  ZetaNumerator num = numerator_from_counts(curve);
  report.numerator = num.coefficients();
  report.class_number = class_number(num);
  report.value = zeta_eval(curve, s);
  return report;
}

std::string render_zeta_text(const ZetaReport& report) {
  std::string out;
  out += "q = " + std::to_string(report.curve.q) + "\n";
  out += "genus = " + std::to_string(report.curve.genus) + "\n";
  out += "d_inf = " + std::to_string(report.curve.d_inf) + "\n";
  out += "numerator = [";
  for (size_t i = 0; i < report.numerator.size(); ++i) {
    if (i) out += ", ";
    out += to_string(report.numerator[i]);
  }
  out += "]\n";
  out += "class_number = " + to_string(report.class_number) + "\n";
  out += "s = " + std::to_string(report.s) + "\n";
  out += "zeta = " + to_string(report.value) + "\n";
  return out;
}

std::string render_zeta_json(const ZetaReport& report) {
  json obj;
  obj["q"] = report.curve.q;
  obj["genus"] = report.curve.genus;
  obj["d_inf"] = report.curve.d_inf;
  obj["counts"] = report.curve.counts;
  obj["numerator"] = numerator_json(report.numerator);
  obj["class_number"] = to_string(report.class_number);
  obj["s"] = report.s;
  obj["zeta"] = to_string(report.value);
  return obj.dump(2) + "\n";
}

}  // namespace ffcount
