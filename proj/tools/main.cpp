// Command-line front end: exhaustive point counts, zeta-side formula
// reports, and the cross-check suite, with CSV/JSON output.

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "ffcount/counting.hpp"
#include "ffcount/height.hpp"
#include "ffcount/report.hpp"
#include "ffcount/verify.hpp"
#include "ffcount/zeta.hpp"

namespace {

struct RunConfig {
  int64_t q = 0;
  int n = 1;
  int64_t rmax = 3;
  int workers = 1;
  int s = 2;
  std::string curve_file;
  std::string format = "csv";
  std::string output;  // empty: stdout
  std::string point;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + cfg.output);
  out << text;
}

/// Curve selection: an explicit file wins; --q alone means the genus-0
/// curve P^1 with a degree-1 place at infinity.
ffcount::CurveData resolve_curve(const RunConfig& cfg, bool q_given) {
  if (!cfg.curve_file.empty()) {
    ffcount::CurveData curve = ffcount::load_curve_file(cfg.curve_file);
    if (q_given && curve.q != cfg.q)
      throw std::runtime_error("--q " + std::to_string(cfg.q) +
                               " disagrees with the curve file (q = " +
                               std::to_string(curve.q) + ")");
    return curve;
  }
  if (!q_given)
    throw std::runtime_error("either --curve or --q is required");
  return ffcount::CurveData::make(cfg.q, 0, {}, 1);
}

int cmd_count(const RunConfig& cfg, bool with_envelope) {
  ffcount::FieldPtr field = ffcount::field_for_order(cfg.q);
  std::vector<ffcount::CountRow> rows =
      ffcount::count_table(field, cfg.n, cfg.rmax, cfg.workers);
  std::string text;
  if (with_envelope)
    text = cfg.format == "json" ? ffcount::render_table_json(rows, cfg.q)
                                : ffcount::render_table_csv(rows, cfg.q);
  else
    text = cfg.format == "json" ? ffcount::render_count_json(rows)
                                : ffcount::render_count_csv(rows);
  emit(cfg, text);
  return 0;
}

int cmd_formula(const RunConfig& cfg, bool q_given) {
  ffcount::CurveData curve = resolve_curve(cfg, q_given);
  ffcount::FormulaReport report =
      ffcount::make_formula_report(curve, cfg.n, cfg.rmax);
  emit(cfg, cfg.format == "json" ? ffcount::render_formula_json(report)
                                 : ffcount::render_formula_csv(report));
  return report.curve.genus == 0 || report.weil.pass ? 0 : 1;
}

int cmd_zeta(const RunConfig& cfg, bool q_given) {
  ffcount::CurveData curve = resolve_curve(cfg, q_given);
  ffcount::ZetaReport report = ffcount::make_zeta_report(curve, cfg.s);
  emit(cfg, cfg.format == "json" ? ffcount::render_zeta_json(report)
                                 : ffcount::render_zeta_text(report));
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  ffcount::FieldPtr field = ffcount::field_for_order(cfg.q);
  std::vector<ffcount::CheckResult> checks =
      ffcount::run_verify_suite(field, cfg.n, cfg.rmax, cfg.workers);
  emit(cfg, ffcount::render_checks(checks));
  return ffcount::all_passed(checks) ? 0 : 1;
}

int cmd_height(const RunConfig& cfg) {
  ffcount::FieldPtr field = ffcount::field_for_order(cfg.q);
  ffcount::ProjPoint x = ffcount::parse_point(field, cfg.point);
  ffcount::HeightParts parts = ffcount::height_components(x);
  ffcount::NormalizedPoint norm = ffcount::normalize(x);
  std::string text;
  if (cfg.format == "json") {
    text = "{\n  \"point\": \"" + x.to_string() + "\",\n  \"normalized\": \"" +
           norm.to_string() + "\",\n  \"finite\": " + std::to_string(parts.finite) +
           ",\n  \"infinite\": " + std::to_string(parts.infinite) +
           ",\n  \"height\": " + std::to_string(parts.total) + "\n}\n";
  } else {
    text = "point = " + x.to_string() + "\n";
    text += "normalized = " + norm.to_string() + "\n";
    text += "finite = " + std::to_string(parts.finite) + "\n";
    text += "infinite = " + std::to_string(parts.infinite) + "\n";
    text += "height = " + std::to_string(parts.total) + "\n";
  }
  emit(cfg, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Points of bounded height on P^n over F_q(t): exact counts "
               "against the zeta-side prediction"};
  app.require_subcommand(1);

  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub, bool q_required) {
    CLI::Option* q = sub->add_option("--q", cfg.q, "field order (a prime power)");
    if (q_required) q->required();
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--output", cfg.output, "write to a file instead of stdout");
    return q;
  };

  CLI::App* count = app.add_subcommand(
      "count", "enumerate points of height 0..rmax and compare to the main term");
  add_common(count, true);
  count->add_option("--n", cfg.n, "projective dimension")->capture_default_str();
  count->add_option("--rmax", cfg.rmax, "largest height")->capture_default_str();
  count->add_option("--workers", cfg.workers, "parallel scan workers")
      ->capture_default_str();

  CLI::App* table = app.add_subcommand(
      "table", "count output with the error envelope q^{r/2} appended");
  add_common(table, true);
  table->add_option("--n", cfg.n, "projective dimension")->capture_default_str();
  table->add_option("--rmax", cfg.rmax, "largest height")->capture_default_str();
  table->add_option("--workers", cfg.workers, "parallel scan workers")
      ->capture_default_str();

  CLI::App* formula = app.add_subcommand(
      "formula", "class number, zeta value, leading constant, and main terms");
  CLI::Option* formula_q = add_common(formula, false);
  formula->add_option("--n", cfg.n, "projective dimension")->capture_default_str();
  formula->add_option("--rmax", cfg.rmax, "largest height")->capture_default_str();
  formula->add_option("--curve", cfg.curve_file, "curve description file");

  CLI::App* zeta = app.add_subcommand(
      "zeta", "zeta numerator, class number, and the value at integer s");
  CLI::Option* zeta_q = add_common(zeta, false);
  zeta->add_option("--s", cfg.s, "evaluation point, s >= 2")->capture_default_str();
  zeta->add_option("--curve", cfg.curve_file, "curve description file");

  CLI::App* verify = app.add_subcommand(
      "verify", "run the counting cross-check suite; exit 0 iff all pass");
  add_common(verify, true);
  verify->add_option("--n", cfg.n, "projective dimension")->capture_default_str();
  verify->add_option("--rmax", cfg.rmax, "largest height")->capture_default_str();
  verify->add_option("--workers", cfg.workers, "parallel scan workers")
      ->capture_default_str();

  CLI::App* height = app.add_subcommand(
      "height", "height decomposition and canonical form of one point");
  add_common(height, true);
  height->add_option("--point", cfg.point, "point as \"[x0 : x1 : ...]\"")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (count->parsed()) return cmd_count(cfg, false);
    if (table->parsed()) return cmd_count(cfg, true);
    if (formula->parsed()) return cmd_formula(cfg, formula_q->count() > 0);
    if (zeta->parsed()) return cmd_zeta(cfg, zeta_q->count() > 0);
    if (verify->parsed()) return cmd_verify(cfg);
    if (height->parsed()) return cmd_height(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
