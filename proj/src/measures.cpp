#include "lensharm/measures.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace lensharm {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

Rat beta_constant(int n) {
  if (n < 2) throw std::invalid_argument("dimension parameter must be >= 2");
  // B(n-1, n+1) = (n-2)! n! / (2n-1)!
  Rat beta(factorial(n - 2) * factorial(n), factorial(2 * n - 1));
  Int scale = factorial(n - 2) * (Int(1) << (n - 1));
  return beta / Rat(scale);
}

Rat transformed_section_volume(const SimplicialCone& cone,
                               const CongruenceLattice& lattice) {
  if (cone.n() != lattice.n())
    throw std::invalid_argument("cone and lattice dimensions differ");
  return section_volume(cone) / Rat(lattice.q());
}

Rat mu_closed_form(const CongruenceLattice& lattice, const SimplicialCone& cone) {
  return transformed_section_volume(cone, lattice);
}

Rat nu_closed_form(const CongruenceLattice& lattice, const SimplicialCone& cone) {
  return beta_constant(lattice.n()) * transformed_section_volume(cone, lattice);
}

// Unions: members overlap at most in boundary facets, which carry no volume,
// so the closed forms are finitely additive over the parts.
Rat mu_closed_form(const CongruenceLattice& lattice,
                   const std::vector<SimplicialCone>& cones) {
  Rat total = 0;
  for (const auto& c : cones) total += mu_closed_form(lattice, c);
  return total;
}

Rat nu_closed_form(const CongruenceLattice& lattice,
                   const std::vector<SimplicialCone>& cones) {
  return beta_constant(lattice.n()) * mu_closed_form(lattice, cones);
}

// ---------------------------------------------------------------------------
// Weyl constants. Every quantity is tracked as coeff * pi^(e/2) with an exact
// rational coeff; the assembled constants must come out with e = 0, which is
// asserted rather than assumed.
// ---------------------------------------------------------------------------

namespace {

struct PiPower {
  Rat coeff;
  int half_exp;  // value = coeff * pi^(half_exp / 2)

  PiPower operator*(const PiPower& o) const {
    return {coeff * o.coeff, half_exp + o.half_exp};
  }
  PiPower operator/(const PiPower& o) const {
    return {coeff / o.coeff, half_exp - o.half_exp};
  }
  Rat as_rational() const {
    if (half_exp != 0)
      throw std::logic_error("pi powers did not cancel");
    return coeff;
  }
};

// Gamma(n + 1/2) = (2n)! sqrt(pi) / (4^n n!)
PiPower gamma_half(int n) {
  return {Rat(factorial(2 * n), boost::multiprecision::pow(Int(4), n) * factorial(n)), 1};
}

}  // namespace

WeylConstants weyl_constants(int n, long long q) {
  if (n < 2) throw std::invalid_argument("dimension parameter must be >= 2");
  if (q < 1) throw std::invalid_argument("q must be positive");
  const int d = 2 * n - 1;  // manifold dimension
  PiPower omega = PiPower{Rat(1), d} / gamma_half(n);         // unit ball volume in R^d
  PiPower vol_sphere{Rat(2, factorial(n - 1)), 2 * n};        // Vol(S^{2n-1})
  PiPower two_pi_pow{Rat(1, Int(1) << d), -2 * d};            // (2 pi)^{1-2n}
  PiPower vol_quotient = vol_sphere / PiPower{Rat(q), 0};     // q-sheeted covering

  WeylConstants wc;
  wc.n = n;
  wc.q = q;
  wc.weyl_limit = (two_pi_pow * omega * vol_quotient).as_rational();
  // stated total: (1/q) 2^{1-n} pi^{1-2n} omega_{2n-1} Vol(S^{2n-1})
  PiPower pi_pow{Rat(1), 2 * (1 - 2 * n)};
  PiPower half_pow{Rat(1, Int(1) << (n - 1)), 0};
  wc.paper_total =
      (half_pow * pi_pow * omega * vol_quotient).as_rational();
  wc.orthant_limit = wc.weyl_limit / Rat(Int(1) << n);
  return wc;
}

TotalMeasureCheck total_measure_check(const CongruenceLattice& lattice) {
  const int n = lattice.n();
  TotalMeasureCheck chk;
  chk.constants = weyl_constants(n, lattice.q());
  chk.orthant_nu = nu_closed_form(lattice, positive_orthant_cone(n));
  // nu extends symmetrically: each of the 2^n orthant cones carries the
  // positive-orthant value, and boundary overlaps have measure zero.
  chk.total = chk.orthant_nu * Rat(Int(1) << n);
  chk.total_matches_weyl = chk.total == chk.constants.weyl_limit;
  chk.total_matches_paper_total = chk.total == chk.constants.paper_total;
  chk.nu_mu_ratio = beta_constant(n);
  SimplicialCone orthant = positive_orthant_cone(n);
  chk.ratio_is_beta = nu_closed_form(lattice, orthant) ==
                      chk.nu_mu_ratio * mu_closed_form(lattice, orthant);
  return chk;
}

// ---------------------------------------------------------------------------
// Empirical truncations
// ---------------------------------------------------------------------------

namespace {

ShellRegion region_for_cones(const std::vector<SimplicialCone>& cones) {
  // the whole positive orthant admits the DP counter
  if (cones.size() == 1 && cones.front().is_positive_orthant())
    return ShellRegion::closed_orthant();
  return ShellRegion::cone_union(cones);
}

void validate_schedule(const std::vector<long long>& ts) {
  if (ts.empty()) throw std::invalid_argument("empty sample schedule");
  long long prev = 0;
  for (long long t : ts) {
    if (t <= prev)
      throw std::invalid_argument("sample points must be ascending and positive");
    prev = t;
  }
}

// Split shells 0..s_max across workers, then merge; shell counts at distinct
// norms are independent, so the result never depends on the worker count.
void parallel_shell_counts(const CongruenceLattice& lattice,
                           const ShellRegion& region, long long s_max,
                           unsigned workers, std::vector<Int>& out) {
  out.assign(s_max + 1, 0);
  workers = std::max(1u, workers);
  if (region.orthant_dp_supported() || workers == 1) {
    // DP fills the whole table in one sweep; nothing to parallelize
    ShellCounter counter(lattice, region);
    counter.ensure(s_max);
    for (long long s = 0; s <= s_max; ++s) out[s] = counter.count(s);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (long long s = w; s <= s_max; s += workers)
        out[s] = shell_count_enumerated(lattice, region, s);
    });
  }
  for (auto& th : pool) th.join();
}

void fit_errors(MeasureReport& rep, double rel_tol) {
  const Rat& cf = rep.closed_form;
  const long double closed = rat_to_ld(cf);
  std::vector<long double> errs;
  errs.reserve(rep.samples.size());
  for (const auto& s : rep.samples)
    errs.push_back(fabsl(s.ratio - closed));

  // log-log slope (skip exact hits, which have no defined log error)
  long double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  long double inv_num = 0, inv_den = 0;
  for (std::size_t i = 0; i < errs.size(); ++i) {
    const long double t = rep.samples[i].t;
    inv_num += errs[i] / t;
    inv_den += 1.0L / (t * t);
    if (errs[i] <= 0) continue;
    long double x = logl(t), y = logl(errs[i]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++m;
  }
  if (m >= 2 && m * sxx - sx * sx != 0)
    rep.fitted_error_slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  rep.fitted_error_coeff = inv_den > 0 ? inv_num / inv_den : 0;

  rep.final_abs_error = errs.empty() ? 0 : errs.back();
  const long long t_final = rep.samples.empty() ? 1 : rep.samples.back().t;
  rep.tolerance = std::max(static_cast<long double>(rel_tol) * fabsl(closed),
                           2 * rep.fitted_error_coeff / t_final);
  rep.converged = !rep.budget_exceeded && !rep.samples.empty() &&
                  rep.final_abs_error <= rep.tolerance;
}

MeasureReport empirical_report(MeasureKind kind,
                               const CongruenceLattice& lattice,
                               const std::vector<SimplicialCone>& cones,
                               const std::vector<long long>& t_values,
                               const EmpiricalOptions& opts) {
  validate_schedule(t_values);
  const int n = lattice.n();
  const int power = kind == MeasureKind::nu ? 2 * n - 1 : n;
  ShellRegion region = region_for_cones(cones);

  MeasureReport rep{.kind = kind, .params = lattice.params(), .cones = cones};
  rep.closed_form = kind == MeasureKind::nu ? nu_closed_form(lattice, cones)
                                            : mu_closed_form(lattice, cones);

  // keep only the schedule prefix whose counting work fits the budget
  std::vector<long long> usable;
  {
    ShellCounter probe(lattice, region);
    for (long long t : t_values) {
      if (probe.work_estimate(t) > opts.op_budget) {
        rep.budget_exceeded = true;
        break;
      }
      usable.push_back(t);
    }
  }
  if (!usable.empty()) {
    const long long t_max = usable.back();
    std::vector<Int> counts;
    parallel_shell_counts(lattice, region, t_max, opts.workers, counts);
    std::vector<Int> prefix(counts.size());
    Int run = 0;
    for (std::size_t s = 0; s < counts.size(); ++s) {
      run += counts[s];
      prefix[s] = run;
    }
    auto prefix_at = [&](long long s) -> Int {
      return s < 0 ? Int(0) : prefix[s];
    };
    for (long long t : usable) {
      Int value;
      if (kind == MeasureKind::mu) {
        value = prefix_at(t);
      } else {
        // F(t) = sum_r C(r+n-2, n-2) * prefixN(t - 2r)
        value = 0;
        for (long long r = 0; 2 * r <= t; ++r)
          value += binomial(r + n - 2, n - 2) * prefix_at(t - 2 * r);
      }
      long double ratio =
          value.convert_to<long double>() / powl(static_cast<long double>(t), power);
      rep.samples.push_back({t, ratio});
    }
  }
  fit_errors(rep, opts.rel_tol);
  return rep;
}

}  // namespace

MeasureReport nu_empirical(const CongruenceLattice& lattice,
                           const SimplicialCone& cone,
                           const std::vector<long long>& t_values,
                           const EmpiricalOptions& opts) {
  return empirical_report(MeasureKind::nu, lattice, {cone}, t_values, opts);
}

MeasureReport mu_empirical(const CongruenceLattice& lattice,
                           const SimplicialCone& cone,
                           const std::vector<long long>& s_values,
                           const EmpiricalOptions& opts) {
  return empirical_report(MeasureKind::mu, lattice, {cone}, s_values, opts);
}

MeasureReport nu_empirical(const CongruenceLattice& lattice,
                           const std::vector<SimplicialCone>& cones,
                           const std::vector<long long>& t_values,
                           const EmpiricalOptions& opts) {
  return empirical_report(MeasureKind::nu, lattice, cones, t_values, opts);
}

MeasureReport mu_empirical(const CongruenceLattice& lattice,
                           const std::vector<SimplicialCone>& cones,
                           const std::vector<long long>& s_values,
                           const EmpiricalOptions& opts) {
  return empirical_report(MeasureKind::mu, lattice, cones, s_values, opts);
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace {

json rat_json(const Rat& r) {
  json j;
  const Int& num = numerator(r);
  const Int& den = denominator(r);
  // int64 range keeps plain JSON numbers; larger values degrade to strings
  if (num >= std::numeric_limits<long long>::min() &&
      num <= std::numeric_limits<long long>::max() &&
      den <= std::numeric_limits<long long>::max()) {
    j["num"] = num.convert_to<long long>();
    j["den"] = den.convert_to<long long>();
  } else {
    j["num"] = num.str();
    j["den"] = den.str();
  }
  return j;
}

std::string format_ratio(long double x) {
  std::ostringstream os;
  os << std::setprecision(17) << static_cast<double>(x);
  return os.str();
}

json cones_json(const std::vector<SimplicialCone>& cones) {
  json arr = json::array();
  for (const auto& cone : cones) {
    json rays = json::array();
    for (const auto& ray : cone.rays()) {
      json r = json::array();
      for (const auto& c : ray) r.push_back(c.convert_to<long long>());
      rays.push_back(std::move(r));
    }
    arr.push_back(std::move(rays));
  }
  return arr;
}

}  // namespace

std::string MeasureReport::to_json() const {
  json j;
  j["kind"] = kind == MeasureKind::nu ? "nu" : "mu";
  j["q"] = params.q();
  j["p"] = params.p();
  j["cones"] = cones_json(cones);
  j["closed_form"] = rat_json(closed_form);
  json s = json::array();
  for (const auto& smp : samples)
    s.push_back({{"t", smp.t}, {"ratio", format_ratio(smp.ratio)}});
  j["samples"] = std::move(s);
  j["fitted_error_slope"] = format_ratio(fitted_error_slope);
  j["fitted_error_coeff"] = format_ratio(fitted_error_coeff);
  j["final_abs_error"] = format_ratio(final_abs_error);
  j["tolerance"] = format_ratio(tolerance);
  j["converged"] = converged;
  j["budget_exceeded"] = budget_exceeded;
  return j.dump(2);
}

std::string MeasureReport::to_csv() const {
  std::ostringstream os;
  os << "t,ratio\n";
  for (const auto& s : samples) os << s.t << "," << format_ratio(s.ratio) << "\n";
  return os.str();
}

std::string TotalMeasureCheck::to_json() const {
  json j;
  j["n"] = constants.n;
  j["q"] = constants.q;
  j["weyl_limit"] = rat_json(constants.weyl_limit);
  j["paper_total"] = rat_json(constants.paper_total);
  j["orthant_limit"] = rat_json(constants.orthant_limit);
  j["orthant_nu"] = rat_json(orthant_nu);
  j["total"] = rat_json(total);
  j["total_matches_weyl"] = total_matches_weyl;
  j["total_matches_paper_total"] = total_matches_paper_total;
  j["nu_mu_ratio"] = rat_json(nu_mu_ratio);
  j["ratio_is_beta"] = ratio_is_beta;
  return j.dump(2);
}

}  // namespace lensharm
