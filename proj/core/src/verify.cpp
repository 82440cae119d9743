#include "ffcount/verify.hpp"

#include <algorithm>

#include "ffcount/divisor.hpp"
#include "ffcount/zeta.hpp"

namespace ffcount {
namespace {

CheckResult check_pipeline_equality(const FieldPtr& field, int n, int64_t rmax,
                                    int workers, uint64_t budget) {
  CheckResult res{"pipeline_equality",
                  "q=" + std::to_string(field->q()) + " n=" + std::to_string(n) +
                      " r=1.." + std::to_string(rmax),
                  true,
                  ""};
  for (int64_t r = 1; r <= rmax; ++r) {
    CountReport direct = count_points(field, n, r, workers, budget);
    CountReport assembled = assemble_count(field, n, r, workers, budget);
    if (direct.exact != assembled.exact || direct.residual != 0 ||
        assembled.residual != 0) {
      res.pass = false;
      res.detail = "r=" + std::to_string(r) + " direct=" + to_string(direct.exact) +
                   " assembled=" + to_string(assembled.exact) +
                   " main-term=" + to_string(direct.predicted);
      return res;
    }
  }
  return res;
}

CheckResult check_sphere_closed_form(const FieldPtr& field, int n, int64_t rmax,
                                     uint64_t budget) {
  const int64_t rcap = std::min<int64_t>(rmax, 3);
  CheckResult res{"sphere_closed_form",
                  "q=" + std::to_string(field->q()) + " n=" + std::to_string(n) +
                      " deg f<=2 r=0.." + std::to_string(rcap),
                  true,
                  ""};
  for (int d = 0; d <= 2; ++d) {
    for (const Poly& f : monic_polys(field, d)) {
      for (int64_t r = 0; r <= rcap; ++r) {
        CountReport scanned = count_divisible_orbits(f, n, r, ScanMode::kEnumerate, budget);
        CountReport closed = count_divisible_orbits(f, n, r, ScanMode::kClosedForm, budget);
        if (scanned.exact != closed.exact || scanned.residual != 0) {
          res.pass = false;
          res.detail = "f=" + f.to_string() + " r=" + std::to_string(r) +
                       " scanned=" + to_string(scanned.exact) +
                       " closed=" + to_string(closed.exact);
          return res;
        }
      }
    }
  }
  return res;
}

CheckResult check_mobius_degree_sums(const FieldPtr& field, int64_t rmax,
                                     uint64_t budget) {
  const int dmax = static_cast<int>(std::min<int64_t>(rmax + 1, 5));
  CheckResult res{"mobius_degree_sums",
                  "q=" + std::to_string(field->q()) + " d=0.." + std::to_string(dmax),
                  true,
                  ""};
  std::vector<Int> sums = mobius_degree_sums(field, dmax, budget);
  for (int d = 0; d <= dmax; ++d) {
    Int want = d == 0 ? Int(1) : (d == 1 ? Int(-field->q()) : Int(0));
    if (sums[static_cast<size_t>(d)] != want) {
      res.pass = false;
      res.detail = "d=" + std::to_string(d) + " sum=" + to_string(sums[static_cast<size_t>(d)]) +
                   " want=" + to_string(want);
      return res;
    }
  }
  return res;
}

CheckResult check_ball_measure(const FieldPtr& field, int n, uint64_t budget) {
  CheckResult res{"ball_measure",
                  "q=" + std::to_string(field->q()) + " n=" + std::to_string(n) + " d_inf=1",
                  true,
                  ""};
  Rational measure = ball_measure(field->q(), n, 1);
  Int nonzero = residue_sphere_count(field, n, budget);
  Rational ratio(nonzero, int_pow(Int(field->q()), n + 1));
  if (measure != ratio) {
    res.pass = false;
    res.detail = "formula=" + to_string(measure) + " residue-ratio=" + to_string(ratio);
  }
  return res;
}

CheckResult check_covolume(const FieldPtr& field, int n, uint64_t budget) {
  CheckResult res{"covolume",
                  "q=" + std::to_string(field->q()) + " n=" + std::to_string(n) + " deg f<=3",
                  true,
                  ""};
  const Int q{field->q()};
  for (int d = 0; d <= 3; ++d) {
    for (const Poly& f : monic_polys(field, d)) {
      Int index = lattice_index(f, budget);
      if (index != int_pow(q, d)) {
        res.pass = false;
        res.detail = "f=" + f.to_string() + " index=" + to_string(index) +
                     " want=" + to_string(int_pow(q, d));
        return res;
      }
      Rational vol = covolume(f, n);
      Rational want = rational_pow(q, static_cast<int64_t>(n + 1) * d) *
                      rational_pow(q, -static_cast<int64_t>(n + 1));
      if (vol != want) {
        res.pass = false;
        res.detail = "f=" + f.to_string() + " covolume=" + to_string(vol) +
                     " want=" + to_string(want);
        return res;
      }
    }
  }
  return res;
}

CheckResult check_unit_orbits(const FieldPtr& field, int n, int64_t rmax,
                              uint64_t budget) {
  const int64_t rcap = std::min<int64_t>(rmax, 2);
  CheckResult res{"unit_orbits",
                  "q=" + std::to_string(field->q()) + " n=" + std::to_string(n) +
                      " r=0.." + std::to_string(rcap),
                  true,
                  ""};
  for (int64_t r = 0; r <= rcap; ++r) {
    OrbitCheck check = unit_orbit_check(field, n, r, budget);
    if (!check.pass) {
      res.pass = false;
      res.detail = "r=" + std::to_string(r) + " orbits=" + to_string(check.orbit_count) +
                   " tuples=" + to_string(check.tuple_count);
      return res;
    }
  }
  return res;
}

}  // namespace

std::vector<CheckResult> run_verify_suite(const FieldPtr& field, int n, int64_t rmax,
                                          int workers, uint64_t budget) {
  if (n < 1) throw std::invalid_argument("verify: n must be >= 1");
  if (rmax < 1) throw std::invalid_argument("verify: rmax must be >= 1");
  check_budget(field->q(), n, rmax, budget);
  std::vector<CheckResult> checks;
  checks.push_back(check_pipeline_equality(field, n, rmax, workers, budget));
  checks.push_back(check_sphere_closed_form(field, n, rmax, budget));
  checks.push_back(check_mobius_degree_sums(field, rmax, budget));
  checks.push_back(check_ball_measure(field, n, budget));
  checks.push_back(check_covolume(field, n, budget));
  checks.push_back(check_unit_orbits(field, n, rmax, budget));
  return checks;
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

std::string render_checks(const std::vector<CheckResult>& checks) {
  std::string out;
  size_t passed = 0;
  for (const CheckResult& c : checks) {
    out += c.pass ? "[PASS] " : "[FAIL] ";
    out += c.name + " (" + c.params + ")";
    if (!c.pass && !c.detail.empty()) out += ": " + c.detail;
    out += "\n";
    if (c.pass) ++passed;
  }
  out += std::to_string(passed) + "/" + std::to_string(checks.size()) + " checks passed\n";
  return out;
}

}  // namespace ffcount
