#include "ffcount/counting.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>

#include "ffcount/divisor.hpp"
#include "ffcount/zeta.hpp"

namespace ffcount {
namespace {

CurveData genus0(int64_t q) { return CurveData::make(q, 0, {}, 1); }

void require_monic(const Poly& f, const char* who) {
  if (f.is_zero() || !f.is_monic())
    throw std::invalid_argument(std::string(who) + ": f must be monic");
}

void require_n(int n) {
  if (n < 1) throw std::invalid_argument("projective dimension n must be >= 1");
}

// --- digit-level scratch polynomials ---------------------------------------
//
// The scan kernels work on raw coefficient-index rows to keep the hot loop
// free of allocation: row[j] is the index of the t^j coefficient.

int row_deg(const int64_t* row, int rr) {
  for (int j = rr; j >= 0; --j)
    if (row[j] != 0) return j;
  return -1;
}

// gcd of (A, dA) and (B, dB) left in (A, dA); both buffers are clobbered.
void digit_gcd(std::vector<int64_t>& A, int& dA, std::vector<int64_t>& B, int& dB,
               const Field& F) {
  while (dB >= 0) {
    const int64_t lead_inv = F.inv_idx(B[static_cast<size_t>(dB)]);
    for (int i = dA; i >= dB; --i) {
      const int64_t c = A[static_cast<size_t>(i)];
      if (c == 0) continue;
      const int64_t f = F.mul_idx(c, lead_inv);
      for (int j = 0; j <= dB; ++j) {
        const size_t pos = static_cast<size_t>(i - dB + j);
        A[pos] = F.sub_idx(A[pos], F.mul_idx(f, B[static_cast<size_t>(j)]));
      }
    }
    int nd = -1;
    for (int i = dB - 1; i >= 0; --i) {
      if (A[static_cast<size_t>(i)] != 0) {
        nd = i;
        break;
      }
    }
    dA = nd;
    std::swap(A, B);
    std::swap(dA, dB);
  }
}

// Advances the inner coordinates (1..n) through their q^{n(rr+1)} states;
// coordinate n's constant term moves fastest. False once the space wraps.
bool inc_inner(int64_t* digits, int n, int rr, int64_t qm1) {
  for (int c = n; c >= 1; --c) {
    int64_t* row = digits + static_cast<size_t>(c) * (rr + 1);
    for (int j = 0; j <= rr; ++j) {
      if (row[j] < qm1) {
        ++row[j];
        return true;
      }
      row[j] = 0;
    }
  }
  return false;
}

// Runs body(digits) for every candidate tuple whose first coordinate index
// lies in [lo, hi); candidates appear in one global deterministic order.
template <typename Body>
void scan_chunk(const Field& F, int n, int rr, uint64_t lo, uint64_t hi, Body&& body) {
  const int64_t q = F.q();
  std::vector<int64_t> digits(static_cast<size_t>(n + 1) * (rr + 1), 0);
  for (uint64_t v0 = lo; v0 < hi; ++v0) {
    uint64_t rest = v0;
    for (int j = 0; j <= rr; ++j) {
      digits[static_cast<size_t>(j)] = static_cast<int64_t>(rest % static_cast<uint64_t>(q));
      rest /= static_cast<uint64_t>(q);
    }
    std::fill(digits.begin() + (rr + 1), digits.end(), 0);
    while (true) {
      body(digits.data());
      if (!inc_inner(digits.data(), n, rr, q - 1)) break;
    }
  }
}

uint64_t first_coord_space(int64_t q, int64_t r) {
  Int space = int_pow(Int(q), r + 1);
  return space.convert_to<uint64_t>();
}

std::vector<std::pair<uint64_t, uint64_t>> ranges_from_boundaries(
    const std::vector<uint64_t>& b, uint64_t space) {
  if (b.size() < 2 || b.front() != 0 || b.back() != space)
    throw std::invalid_argument(
        "partition boundaries must start at 0 and end at the index-space size");
  std::vector<std::pair<uint64_t, uint64_t>> ranges;
  for (size_t i = 0; i + 1 < b.size(); ++i) {
    if (b[i] > b[i + 1])
      throw std::invalid_argument("partition boundaries must be non-decreasing");
    ranges.emplace_back(b[i], b[i + 1]);
  }
  return ranges;
}

std::vector<uint64_t> boundaries_for_workers(int workers, uint64_t space) {
  uint64_t chunks = static_cast<uint64_t>(std::clamp(workers, 1, 64));
  chunks = std::max<uint64_t>(1, std::min(chunks, std::max<uint64_t>(space, 1)));
  std::vector<uint64_t> b;
  b.reserve(chunks + 1);
  for (uint64_t i = 0; i <= chunks; ++i)
    b.push_back(static_cast<uint64_t>((static_cast<__uint128_t>(space) * i) / chunks));
  return b;
}

template <typename T, typename Fn>
std::vector<T> run_partitioned(const std::vector<std::pair<uint64_t, uint64_t>>& ranges,
                               Fn fn) {
  std::vector<T> out;
  out.reserve(ranges.size());
  if (ranges.size() == 1) {
    out.push_back(fn(ranges[0].first, ranges[0].second));
    return out;
  }
  std::vector<std::future<T>> futures;
  futures.reserve(ranges.size());
  for (const auto& range : ranges)
    futures.push_back(std::async(std::launch::async, fn, range.first, range.second));
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

// Accepts the canonical height-r representatives: maximum coordinate degree
// exactly rr, first nonzero coordinate monic, coordinates coprime.
struct PointFilter {
  const Field& F;
  int n;
  int rr;
  std::vector<int64_t> A, B;

  PointFilter(const Field& field, int n_, int rr_)
      : F(field), n(n_), rr(rr_),
        A(static_cast<size_t>(rr_) + 1), B(static_cast<size_t>(rr_) + 1) {}

  bool accept(const int64_t* digits) {
    const int stride = rr + 1;
    bool top = false;
    for (int c = 0; c <= n && !top; ++c) top = digits[c * stride + rr] != 0;
    if (!top) return false;

    int first = -1, dFirst = -1;
    for (int c = 0; c <= n; ++c) {
      int d = row_deg(digits + c * stride, rr);
      if (d >= 0) {
        first = c;
        dFirst = d;
        break;
      }
    }
    if (digits[first * stride + dFirst] != 1) return false;  // monic representative

    int dA = dFirst;
    std::copy_n(digits + first * stride, stride, A.begin());
    for (int c = first + 1; c <= n && dA > 0; ++c) {
      int dB = row_deg(digits + c * stride, rr);
      if (dB < 0) continue;
      std::copy_n(digits + c * stride, stride, B.begin());
      digit_gcd(A, dA, B, dB, F);
    }
    return dA == 0;
  }
};

uint64_t count_points_range(const FieldPtr& field, int n, int rr, uint64_t lo, uint64_t hi) {
  PointFilter filter(*field, n, rr);
  uint64_t count = 0;
  scan_chunk(*field, n, rr, lo, hi, [&](const int64_t* digits) {
    if (filter.accept(digits)) ++count;
  });
  return count;
}

std::vector<NormalizedPoint> enumerate_points_range(const FieldPtr& field, int n, int rr,
                                                    uint64_t lo, uint64_t hi) {
  PointFilter filter(*field, n, rr);
  std::vector<NormalizedPoint> points;
  const int stride = rr + 1;
  scan_chunk(*field, n, rr, lo, hi, [&](const int64_t* digits) {
    if (!filter.accept(digits)) return;
    std::vector<Poly> coords;
    coords.reserve(static_cast<size_t>(n) + 1);
    for (int c = 0; c <= n; ++c)
      coords.push_back(Poly::from_indices(
          field, std::vector<int64_t>(digits + c * stride, digits + (c + 1) * stride)));
    points.emplace_back(std::move(coords));
  });
  return points;
}

// Raw count of tuples with maximum coordinate degree exactly rr.
uint64_t count_sphere_raw(const FieldPtr& field, int n, int rr) {
  uint64_t count = 0;
  const int stride = rr + 1;
  scan_chunk(*field, n, rr, 0, first_coord_space(field->q(), rr),
             [&](const int64_t* digits) {
               for (int c = 0; c <= n; ++c) {
                 if (digits[c * stride + rr] != 0) {
                   ++count;
                   return;
                 }
               }
             });
  return count;
}

Int orbits_from_raw(uint64_t raw, int64_t q, const char* who) {
  if (raw % static_cast<uint64_t>(q - 1) != 0)
    throw std::logic_error(std::string(who) + ": sphere count not divisible by q-1");
  return Int(raw / static_cast<uint64_t>(q - 1));
}

}  // namespace

Int candidate_count(int64_t q, int n, int64_t r) {
  if (r < 0) return Int(0);
  return int_pow(Int(q), static_cast<int64_t>(n + 1) * (r + 1));
}

void check_budget(int64_t q, int n, int64_t r, uint64_t budget) {
  Int need = candidate_count(q, n, r);
  if (need > Int(budget)) {
    std::string bound = to_string(Int(budget));
    if (budget == kDefaultBudget) bound += " (2^34)";
    throw BudgetError("refusing exhaustive scan: q^((n+1)(r+1)) = " + to_string(need) +
                      " candidate tuples exceeds the enumeration budget " + bound);
  }
}

CountReport make_report(Int exact, Rational predicted, std::string meta) {
  CountReport report;
  report.residual = Rational(exact) - predicted;
  report.exact = std::move(exact);
  report.predicted = std::move(predicted);
  report.meta = std::move(meta);
  return report;
}

std::vector<NormalizedPoint> enumerate_points(const FieldPtr& field, int n, int64_t r,
                                              int workers, uint64_t budget) {
  require_n(n);
  if (r < 0) return {};
  check_budget(field->q(), n, r, budget);
  uint64_t space = first_coord_space(field->q(), r);
  return detail::enumerate_points_partitioned(field, n, r,
                                              boundaries_for_workers(workers, space), budget);
}

CountReport count_points(const FieldPtr& field, int n, int64_t r, int workers,
                         uint64_t budget) {
  require_n(n);
  const int64_t q = field->q();
  Int exact{0};
  if (r >= 0) {
    check_budget(q, n, r, budget);
    uint64_t space = first_coord_space(q, r);
    exact = detail::count_points_partitioned(field, n, r,
                                             boundaries_for_workers(workers, space), budget);
  }
  return make_report(std::move(exact), main_term(genus0(q), n, r),
                     "points q=" + std::to_string(q) + " n=" + std::to_string(n) +
                         " r=" + std::to_string(r));
}

CountReport count_divisible_orbits(const Poly& f, int n, int64_t r, ScanMode mode,
                                   uint64_t budget) {
  require_monic(f, "count_divisible_orbits");
  require_n(n);
  const int64_t q = f.field()->q();
  Int exact{0};
  if (r >= 0) {
    if (mode == ScanMode::kEnumerate) {
      check_budget(q, n, r, budget);
      exact = orbits_from_raw(count_sphere_raw(f.field(), n, static_cast<int>(r)), q,
                              "count_divisible_orbits");
    } else {
      exact = (int_pow(Int(q), n + 1) - 1) / Int(q - 1) *
              int_pow(Int(q), static_cast<int64_t>(n + 1) * r);
    }
  }
  Rational predicted = ball_measure(q, n, 1) *
                       rational_pow(Int(q), static_cast<int64_t>(n + 1) * (r + f.degree())) /
                       (covolume(f, n) * Rational(q - 1));
  return make_report(std::move(exact), std::move(predicted),
                     "sphere-orbits f=" + f.to_string() + " n=" + std::to_string(n) +
                         " r=" + std::to_string(r) +
                         (mode == ScanMode::kEnumerate ? " mode=enumerate"
                                                       : " mode=closed-form"));
}

CountReport count_content_orbits(const Poly& f, int n, int64_t r, ScanMode mode,
                                 uint64_t budget) {
  require_monic(f, "count_content_orbits");
  require_n(n);
  const int64_t q = f.field()->q();
  Int exact{0};
  if (r >= 0) {
    if (int_pow(Int(q), r + 1) > Int(budget))
      throw BudgetError("refusing Mobius sum: q^(r+1) = " +
                        to_string(int_pow(Int(q), r + 1)) +
                        " monic multiples exceed the enumeration budget " +
                        to_string(Int(budget)));
    for (int64_t d = 0; d <= r; ++d) {
      for_each_monic(f.field(), static_cast<int>(d), [&](const Poly& g) {
        int mu = mobius(finite_divisor(g));
        if (mu == 0) return;
        CountReport inner = count_divisible_orbits(f * g, n, r - d, mode, budget);
        exact += mu > 0 ? inner.exact : -inner.exact;
      });
    }
  }
  return make_report(std::move(exact), main_term(genus0(q), n, r),
                     "content-orbits f=" + f.to_string() + " n=" + std::to_string(n) +
                         " r=" + std::to_string(r));
}

std::vector<Int> mobius_degree_sums(const FieldPtr& field, int dmax, uint64_t budget) {
  if (dmax < 0) throw std::invalid_argument("mobius_degree_sums: dmax must be >= 0");
  if (int_pow(Int(field->q()), dmax) > Int(budget))
    throw BudgetError("refusing monic enumeration: q^dmax = " +
                      to_string(int_pow(Int(field->q()), dmax)) +
                      " polynomials exceed the enumeration budget " + to_string(Int(budget)));
  std::vector<Int> sums(static_cast<size_t>(dmax) + 1, Int(0));
  for (int d = 0; d <= dmax; ++d) {
    for_each_monic(field, d, [&](const Poly& g) {
      sums[static_cast<size_t>(d)] += mobius(finite_divisor(g));
    });
  }
  return sums;
}

Rational ball_measure(int64_t q, int n, int d_inf) {
  factor_prime_power(q);
  require_n(n);
  if (d_inf < 1) throw std::invalid_argument("ball_measure: d_inf must be >= 1");
  return Rational(1) - rational_pow(Int(q), -static_cast<int64_t>(d_inf) * (n + 1));
}

Int residue_sphere_count(const FieldPtr& residue_field, int n, uint64_t budget) {
  require_n(n);
  const int64_t q = residue_field->q();
  if (int_pow(Int(q), n + 1) > Int(budget))
    throw BudgetError("refusing residue enumeration: q^(n+1) = " +
                      to_string(int_pow(Int(q), n + 1)) +
                      " tuples exceed the enumeration budget " + to_string(Int(budget)));
  std::vector<int64_t> tuple(static_cast<size_t>(n) + 1, 0);
  Int count{0};
  while (true) {
    bool nonzero = std::any_of(tuple.begin(), tuple.end(), [](int64_t v) { return v != 0; });
    if (nonzero) ++count;
    int pos = 0;
    while (pos <= n && tuple[static_cast<size_t>(pos)] == q - 1)
      tuple[static_cast<size_t>(pos++)] = 0;
    if (pos > n) break;
    ++tuple[static_cast<size_t>(pos)];
  }
  return count;
}

Rational covolume(const Poly& f, int n) {
  if (f.is_zero()) throw std::domain_error("covolume: f must be nonzero");
  require_n(n);
  return rational_pow(Int(f.field()->q()),
                      static_cast<int64_t>(n + 1) * (f.degree() - 1));
}

Int lattice_index(const Poly& f, uint64_t budget) {
  if (f.is_zero()) throw std::domain_error("lattice_index: f must be nonzero");
  const int64_t q = f.field()->q();
  const int m = f.degree();
  if (int_pow(Int(q), m + 1) > Int(budget))
    throw BudgetError("refusing residue enumeration: q^(deg f + 1) = " +
                      to_string(int_pow(Int(q), m + 1)) +
                      " polynomials exceed the enumeration budget " + to_string(Int(budget)));
  std::set<std::vector<int64_t>> residues;
  std::vector<int64_t> idx(static_cast<size_t>(m) + 1, 0);
  while (true) {
    Poly rem = Poly::from_indices(f.field(), idx) % f;
    std::vector<int64_t> key = rem.indices();
    key.resize(static_cast<size_t>(std::max(m, 1)), 0);
    residues.insert(std::move(key));
    int pos = 0;
    while (pos <= m && idx[static_cast<size_t>(pos)] == q - 1)
      idx[static_cast<size_t>(pos++)] = 0;
    if (pos > m) break;
    ++idx[static_cast<size_t>(pos)];
  }
  return Int(residues.size());
}

CountReport lipschitz_check(const Poly& f, int n, int64_t r, uint64_t budget) {
  require_monic(f, "lipschitz_check");
  require_n(n);
  const int64_t q = f.field()->q();
  Int exact{0};
  if (r >= 0) {
    check_budget(q, n, r, budget);
    exact = Int(count_sphere_raw(f.field(), n, static_cast<int>(r)));
  }
  Rational predicted = ball_measure(q, n, 1) *
                       rational_pow(Int(q), static_cast<int64_t>(n + 1) * (r + f.degree())) /
                       covolume(f, n);
  return make_report(std::move(exact), std::move(predicted),
                     "lattice-scan f=" + f.to_string() + " n=" + std::to_string(n) +
                         " r=" + std::to_string(r));
}

CountReport assemble_count(const FieldPtr& field, int n, int64_t r, int workers,
                           uint64_t budget) {
  require_n(n);
  const int64_t q = field->q();
  CountReport via_classes =
      count_content_orbits(Poly::one(field), n, r, ScanMode::kEnumerate, budget);
  CountReport direct = count_points(field, n, r, workers, budget);
  if (via_classes.exact != direct.exact)
    throw std::logic_error("assemble_count: Mobius route gives " +
                           to_string(via_classes.exact) + " but direct enumeration gives " +
                           to_string(direct.exact));
  return make_report(via_classes.exact, main_term(genus0(q), n, r),
                     "assembly q=" + std::to_string(q) + " n=" + std::to_string(n) +
                         " r=" + std::to_string(r) + " classes=1");
}

Int content_fiber_count(const Poly& f, int n, int64_t r, uint64_t budget) {
  require_monic(f, "content_fiber_count");
  require_n(n);
  const int64_t q = f.field()->q();
  if (r < 0) return Int(0);
  const int64_t s = r + f.degree();
  check_budget(q, n, s, budget);
  const int rr = static_cast<int>(s);
  const int stride = rr + 1;
  const std::vector<int64_t>& target = f.indices();
  const int df = f.degree();
  std::vector<int64_t> A(static_cast<size_t>(stride)), B(static_cast<size_t>(stride));
  uint64_t raw = 0;
  scan_chunk(*f.field(), n, rr, 0, first_coord_space(q, s), [&](const int64_t* digits) {
    bool top = false;
    for (int c = 0; c <= n && !top; ++c) top = digits[c * stride + rr] != 0;
    if (!top) return;
    int dA = -1;
    for (int c = 0; c <= n; ++c) {
      int dB = row_deg(digits + c * stride, rr);
      if (dB < 0) continue;
      if (dA < 0) {
        std::copy_n(digits + c * stride, stride, A.begin());
        dA = dB;
        continue;
      }
      std::copy_n(digits + c * stride, stride, B.begin());
      digit_gcd(A, dA, B, dB, *f.field());
      if (dA < df) return;  // content degree only shrinks
    }
    if (dA != df) return;
    const int64_t lead_inv = f.field()->inv_idx(A[static_cast<size_t>(dA)]);
    for (int j = 0; j <= dA; ++j) {
      int64_t coeff = f.field()->mul_idx(A[static_cast<size_t>(j)], lead_inv);
      if (coeff != target[static_cast<size_t>(j)]) return;
    }
    ++raw;
  });
  return orbits_from_raw(raw, q, "content_fiber_count");
}

OrbitCheck unit_orbit_check(const FieldPtr& field, int n, int64_t r, uint64_t budget) {
  require_n(n);
  OrbitCheck check;
  check.orbit_count = 0;
  check.tuple_count = 0;
  if (r < 0) {
    check.pass = true;
    return check;
  }
  const int64_t q = field->q();
  check_budget(q, n, r, budget);
  const int rr = static_cast<int>(r);
  const int stride = rr + 1;
  std::map<std::vector<int64_t>, int64_t> orbits;
  std::vector<int64_t> key(static_cast<size_t>(n + 1) * stride);
  scan_chunk(*field, n, rr, 0, first_coord_space(q, r), [&](const int64_t* digits) {
    int lead = -1;
    for (int c = 0; c <= n && lead < 0; ++c) {
      int d = row_deg(digits + c * stride, rr);
      if (d >= 0) lead = static_cast<int>(digits[c * stride + d]);
    }
    if (lead < 0) return;  // the zero tuple
    const int64_t scale = field->inv_idx(lead);
    for (size_t i = 0; i < key.size(); ++i) key[i] = field->mul_idx(digits[i], scale);
    ++orbits[key];
  });
  check.orbit_count = Int(orbits.size());
  bool all_full = true;
  Int total{0};
  for (const auto& [rep, size] : orbits) {
    total += size;
    all_full = all_full && size == q - 1;
  }
  check.tuple_count = total;
  check.pass = all_full && total == candidate_count(q, n, r) - 1;
  return check;
}

namespace detail {

std::vector<NormalizedPoint> enumerate_points_partitioned(
    const FieldPtr& field, int n, int64_t r, const std::vector<uint64_t>& boundaries,
    uint64_t budget) {
  require_n(n);
  if (r < 0) return {};
  check_budget(field->q(), n, r, budget);
  const int rr = static_cast<int>(r);
  auto ranges = ranges_from_boundaries(boundaries, first_coord_space(field->q(), r));
  auto chunks = run_partitioned<std::vector<NormalizedPoint>>(
      ranges, [field, n, rr](uint64_t lo, uint64_t hi) {
        return enumerate_points_range(field, n, rr, lo, hi);
      });
  std::vector<NormalizedPoint> points;
  for (auto& chunk : chunks)
    points.insert(points.end(), std::make_move_iterator(chunk.begin()),
                  std::make_move_iterator(chunk.end()));
  return points;
}

Int count_points_partitioned(const FieldPtr& field, int n, int64_t r,
                             const std::vector<uint64_t>& boundaries, uint64_t budget) {
  require_n(n);
  if (r < 0) return Int(0);
  check_budget(field->q(), n, r, budget);
  const int rr = static_cast<int>(r);
  auto ranges = ranges_from_boundaries(boundaries, first_coord_space(field->q(), r));
  auto counts = run_partitioned<uint64_t>(ranges, [field, n, rr](uint64_t lo, uint64_t hi) {
    return count_points_range(field, n, rr, lo, hi);
  });
  Int total{0};
  for (uint64_t c : counts) total += c;
  return total;
}

}  // namespace detail

}  // namespace ffcount
