#ifndef LENSHARM_MEASURES_HPP
#define LENSHARM_MEASURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "lensharm/spectral.hpp"

namespace lensharm {

// beta(n) = B(n-1, n+1) / ((n-2)! 2^{n-1}) with the Beta function evaluated
// exactly through factorials; simplifies to n! / ((2n-1)! 2^{n-1}).
Rat beta_constant(int n);

// Closed-form harmonic-counting measure of a cone:
//   nu(cone) = beta(n) * Vol(cone /\ B_l1(0,1)) / q.
Rat nu_closed_form(const CongruenceLattice& lattice, const SimplicialCone& cone);
Rat nu_closed_form(const CongruenceLattice& lattice,
                   const std::vector<SimplicialCone>& cones);

// Closed-form lattice-counting measure of a cone:
//   mu(cone) = Vol(cone /\ B_l1(0,1)) / q
// (the 1/q is |det A|^{-1} for the generating matrix A of the lattice).
Rat mu_closed_form(const CongruenceLattice& lattice, const SimplicialCone& cone);
Rat mu_closed_form(const CongruenceLattice& lattice,
                   const std::vector<SimplicialCone>& cones);

// Vol(A^{-1}(cone) /\ B_l1(0,1)) = section_volume(cone) / q. Same quantity as
// mu_closed_form, named for its geometric reading.
Rat transformed_section_volume(const SimplicialCone& cone,
                               const CongruenceLattice& lattice);

// Eigenvalue-counting constants of the lens space S^{2n-1}/Z_q. The pi powers
// in omega_{2n-1} = pi^{(2n-1)/2} / Gamma((2n+1)/2) and Vol(S^{2n-1}) =
// 2 pi^n / (n-1)! cancel exactly, so all three values are rational and the
// comparisons against measure totals are exact identities:
//   weyl_limit    = (2pi)^{1-2n} omega_{2n-1} Vol(S^{2n-1}) / q
//   paper_total   = 2^{1-n} pi^{1-2n} omega_{2n-1} Vol(S^{2n-1}) / q
//   orthant_limit = weyl_limit / 2^n
// paper_total = 2^n * weyl_limit always; the sphere-multiplicity identities
// single out weyl_limit as the actual total mass of nu, and paper_total is
// reported alongside as the documented discrepancy.
struct WeylConstants {
  int n = 0;
  long long q = 1;
  Rat weyl_limit;
  Rat paper_total;
  Rat orthant_limit;
};

WeylConstants weyl_constants(int n, long long q);

enum class MeasureKind { nu, mu };

struct MeasureSample {
  long long t = 0;
  long double ratio = 0;  // F(t)/t^{2n-1} for nu, card(T /\ tK)/t^n for mu
};

struct MeasureReport {
  MeasureKind kind = MeasureKind::nu;
  LensParams params;
  std::vector<SimplicialCone> cones;
  Rat closed_form;
  std::vector<MeasureSample> samples;
  // least-squares slope of log|error| against log t; an O(1/t) error term
  // shows up as a slope near -1
  long double fitted_error_slope = 0;
  // C in the model |error| ~ C/t, fitted through the origin against 1/t
  long double fitted_error_coeff = 0;
  long double final_abs_error = 0;
  long double tolerance = 0;  // absolute bound the final sample was held to
  bool converged = false;
  bool budget_exceeded = false;  // samples list is a prefix when set

  std::string to_json() const;
  std::string to_csv() const;  // two columns: t, ratio
};

struct EmpiricalOptions {
  double rel_tol = 0.02;
  unsigned workers = 1;
  // cap on estimated elementary counting operations; exceeding it truncates
  // the sample list and flags the report instead of computing forever
  long double op_budget = 5e9;
};

// Empirical truncations F(t)/t^{2n-1} of the harmonic-counting measure over a
// cone, checked against the closed form. t_values must be ascending and
// positive. The positive orthant is recognized and counted by DP.
MeasureReport nu_empirical(const CongruenceLattice& lattice,
                           const SimplicialCone& cone,
                           const std::vector<long long>& t_values,
                           const EmpiricalOptions& opts = {});

// Empirical truncations card(T /\ sK)/s^n of the lattice-counting measure.
MeasureReport mu_empirical(const CongruenceLattice& lattice,
                           const SimplicialCone& cone,
                           const std::vector<long long>& s_values,
                           const EmpiricalOptions& opts = {});

// Union variants: closed forms add over the parts (boundary overlaps carry no
// volume) while the empirical counts deduplicate shared boundary points, so
// both sides stay consistent.
MeasureReport nu_empirical(const CongruenceLattice& lattice,
                           const std::vector<SimplicialCone>& cones,
                           const std::vector<long long>& t_values,
                           const EmpiricalOptions& opts = {});
MeasureReport mu_empirical(const CongruenceLattice& lattice,
                           const std::vector<SimplicialCone>& cones,
                           const std::vector<long long>& s_values,
                           const EmpiricalOptions& opts = {});

// Exact bookkeeping of the measure totals:
//   total      = sum of nu over all 2^n orthant cones = 2^n * nu(orthant)
//   weyl_limit / paper_total from weyl_constants
//   nu/mu proportionality with ratio beta_constant(n)
struct TotalMeasureCheck {
  WeylConstants constants;
  Rat orthant_nu;
  Rat total;                    // 2^n * orthant_nu
  bool total_matches_weyl = false;
  bool total_matches_paper_total = false;
  Rat nu_mu_ratio;              // nu(cone)/mu(cone), cone-independent
  bool ratio_is_beta = false;
  std::string to_json() const;
};

TotalMeasureCheck total_measure_check(const CongruenceLattice& lattice);

}  // namespace lensharm

#endif
