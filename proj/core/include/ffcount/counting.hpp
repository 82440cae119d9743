#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffcount/gf.hpp"
#include "ffcount/height.hpp"
#include "ffcount/poly.hpp"
#include "ffcount/rational.hpp"

namespace ffcount {

/// Exhaustive scans refuse to start above this many candidate tuples. A
/// desk-scale boundary: runs below it finish in minutes, anything larger
/// deserves an explicit decision rather than a silent multi-hour loop.
inline constexpr uint64_t kDefaultBudget = uint64_t{1} << 34;

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Number of coordinate tuples an exhaustive height-r scan visits:
/// q^{(n+1)(r+1)}.
Int candidate_count(int64_t q, int n, int64_t r);

/// Throws BudgetError, naming the bound, when candidate_count exceeds budget.
void check_budget(int64_t q, int n, int64_t r, uint64_t budget);

/// One exact count against its main-term prediction.
struct CountReport {
  Int exact;
  Rational predicted;
  Rational residual;  // exact - predicted
  std::string meta;
};

CountReport make_report(Int exact, Rational predicted, std::string meta);

/// Parameters of a degree sphere: coordinate tuples over F_q of degree <= r
/// with the maximum exactly r.
struct BallSpec {
  int64_t q;
  int n;
  int64_t r;
  bool empty() const { return r < 0; }
};

/// The sublattice f * A^{n+1} of the coordinate module, A = F_q[t].
struct LatticeSpec {
  Poly generator;
  int n;
};

enum class ScanMode { kEnumerate, kClosedForm };

/// All points of P^n(F_q(t)) of height exactly r, as canonical normalized
/// representatives in a deterministic order (independent of workers).
std::vector<NormalizedPoint> enumerate_points(const FieldPtr& field, int n, int64_t r,
                                              int workers = 1,
                                              uint64_t budget = kDefaultBudget);

/// Exact |{x in P^n(F_q(t)) : ht(x) = r}| by exhaustive enumeration, with the
/// main-term prediction kappa * q^{(n+1)r}.
CountReport count_points(const FieldPtr& field, int n, int64_t r, int workers = 1,
                         uint64_t budget = kDefaultBudget);

/// Unit-group orbits of coordinate tuples with content divisible by f and
/// degree-sphere radius r + deg f (the image of the height-r sphere under
/// multiplication by f). Exact count is q^{(n+1)(r+1)} scans in kEnumerate
/// mode, the closed form (q^{n+1}-1) q^{(n+1)r} / (q-1) in kClosedForm mode.
CountReport count_divisible_orbits(const Poly& f, int n, int64_t r,
                                   ScanMode mode = ScanMode::kEnumerate,
                                   uint64_t budget = kDefaultBudget);

/// Unit-group orbits with content exactly f, by Mobius inversion over the
/// monic multiples of f. Equals count_points for every f (the class group of
/// F_q[t] is trivial).
CountReport count_content_orbits(const Poly& f, int n, int64_t r,
                                 ScanMode mode = ScanMode::kEnumerate,
                                 uint64_t budget = kDefaultBudget);

/// Sums of mobius() over the divisors of monic polynomials of each degree
/// 0..dmax: always [1, -q, 0, 0, ...].
std::vector<Int> mobius_degree_sums(const FieldPtr& field, int dmax,
                                    uint64_t budget = kDefaultBudget);

/// Haar measure of the unit sphere {ht_inf = 0} in K_inf^{n+1}:
/// 1 - q^{-d_inf (n+1)}.
Rational ball_measure(int64_t q, int n, int d_inf);

/// Counts the nonzero residue tuples (n+1 slots over the given residue
/// field) by literal enumeration; the measure check compares against it.
Int residue_sphere_count(const FieldPtr& residue_field, int n,
                         uint64_t budget = kDefaultBudget);

/// Covolume of the lattice f * A^{n+1} in K_inf^{n+1}:
/// N(f)^{n+1} q^{-(n+1)} with N(f) = q^{deg f}.
Rational covolume(const Poly& f, int n);

/// #(A/(f)) computed by reducing every polynomial of degree <= deg f and
/// counting distinct remainders; equals q^{deg f}.
Int lattice_index(const Poly& f, uint64_t budget = kDefaultBudget);

/// Raw lattice-point count of the sphere of radius r + deg f inside
/// f * A^{n+1} against the geometry-of-numbers prediction
/// measure * q^{(r + deg f)(n+1)} / covolume. Exact for every r >= 0 here;
/// the r < 0 sphere is empty while the prediction stays positive.
CountReport lipschitz_check(const Poly& f, int n, int64_t r,
                            uint64_t budget = kDefaultBudget);

/// Full assembly of the height-r count from the single ideal class of
/// F_q[t]: Mobius-inverted lattice counts, checked against the direct
/// enumeration. Throws std::logic_error if the two routes disagree.
CountReport assemble_count(const FieldPtr& field, int n, int64_t r, int workers = 1,
                           uint64_t budget = kDefaultBudget);

/// Size of the fiber of the sphere {max deg = r + deg f, content = f} over
/// the height-r points, in unit orbits; equals count_points for every monic f.
Int content_fiber_count(const Poly& f, int n, int64_t r,
                        uint64_t budget = kDefaultBudget);

struct OrbitCheck {
  bool pass = false;   // every orbit has exactly q-1 tuples
  Int orbit_count;
  Int tuple_count;
};

/// Partitions the height-r sphere of nonzero tuples into scalar orbits and
/// checks that each has exactly q-1 members.
OrbitCheck unit_orbit_check(const FieldPtr& field, int n, int64_t r,
                            uint64_t budget = kDefaultBudget);

namespace detail {

/// Partition of the first-coordinate index space [0, q^{r+1}) into chunks
/// [boundaries[i], boundaries[i+1]). Totals and sequence order are identical
/// for every partition; exposed so tests can pin that down.
std::vector<NormalizedPoint> enumerate_points_partitioned(
    const FieldPtr& field, int n, int64_t r, const std::vector<uint64_t>& boundaries,
    uint64_t budget = kDefaultBudget);
Int count_points_partitioned(const FieldPtr& field, int n, int64_t r,
                             const std::vector<uint64_t>& boundaries,
                             uint64_t budget = kDefaultBudget);

}  // namespace detail

}  // namespace ffcount
