#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffcount/counting.hpp"
#include "ffcount/gf.hpp"

namespace ffcount {

struct CheckResult {
  std::string name;
  std::string params;
  bool pass = false;
  std::string detail;  // empty on success, offending values on failure
};

/// Cross-checks for the counting pipeline at the given (q, n, rmax):
///   pipeline_equality   direct, Mobius-assembled, and main-term counts agree
///                       exactly for 1 <= r <= rmax
///   sphere_closed_form  scanned sphere-orbit counts match the closed form
///                       for monic f with deg f <= 2, 0 <= r <= min(rmax, 3)
///   mobius_degree_sums  degree sums equal [1, -q, 0, ...]
///   ball_measure        measure formula matches the residue-tuple count
///   covolume            lattice indices match q^{deg f} for deg f <= 3
///   unit_orbits         scalar orbits all have exactly q-1 tuples, r <= min(rmax, 2)
std::vector<CheckResult> run_verify_suite(const FieldPtr& field, int n, int64_t rmax,
                                          int workers = 1,
                                          uint64_t budget = kDefaultBudget);

bool all_passed(const std::vector<CheckResult>& checks);

/// One "[PASS] name (params)" line per check plus a summary line.
std::string render_checks(const std::vector<CheckResult>& checks);

}  // namespace ffcount
