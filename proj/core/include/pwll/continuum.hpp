#pragma once

#include <functional>
#include <vector>

#include "pwll/types.hpp"

namespace pwll {

// Opposite: u0 runs 1 -> 0 and u1 runs 0 -> 1, A = sqrt(u0^2 + u1^2).
// Same: v0 runs 1 -> 1, A = v0.
enum class BoundaryKind { kOpposite, kSame };

const char* to_string(BoundaryKind kind);

// -rho^{-1} (rho^2 u')' + tau u = 0 on [0, length] sampled on m + 1 points.
struct IntervalProblem {
  double length = 1.0;
  std::vector<double> rho;  // m + 1 grid samples
  double tau = 0.0;
  BoundaryKind kind = BoundaryKind::kSame;

  Index m() const { return rho.empty() ? 0 : rho.size() - 1; }
  double h() const { return length / static_cast<double>(m()); }
  double x(Index i) const { return static_cast<double>(i) * h(); }
  // Throws InvalidArgument (length, tau, m >= 64) or NonPositiveDensity.
  void validate() const;
};

IntervalProblem make_problem(double length,
                             const std::function<double(double)>& density,
                             double tau, BoundaryKind kind, Index m = 1024);

struct IntervalSolution {
  std::vector<double> u0;  // v0 for Same
  std::vector<double> u1;  // empty for Same
  std::vector<double> acquisition;
  Index argmin = 0;  // lowest grid index attaining the minimum
  double min_value = 0.0;
  double argmin_x = 0.0;
};

// Conservative centred differences with rho_{i+1/2} = (rho_i + rho_{i+1})/2,
// solved with the Thomas algorithm.
IntervalSolution solve_bvp(const IntervalProblem& problem);

// Solves a tridiagonal system; lower[0] and upper[n-1] are ignored.
std::vector<double> solve_tridiagonal(std::vector<double> lower,
                                      std::vector<double> diag,
                                      std::vector<double> upper,
                                      std::vector<double> rhs);

// Constant-density midpoint values: 1/(sqrt2 cosh(a R/2)) for Opposite and
// 1/cosh(a R/2) for Same, a = sqrt(tau / rho).
double midpoint_acquisition_constant(double rho, double tau, double length,
                                     BoundaryKind kind);

// Constant-density closed forms of the boundary functions.
double closed_form_u0(double rho, double tau, double length, double x);
double closed_form_v0(double rho, double tau, double length, double x);

// Root t* of cosh t = sqrt2 cosh(beta t), by bisection to 1e-12.
// Throws BetaOutOfRange unless 0 <= beta <= 1/sqrt2.
double exploration_threshold(double beta);

struct ExplorationCheck {
  bool explorative = false;  // sqrt(tau) R_s > 2 sqrt(rho) t*
  double t_star = 0.0;
};
ExplorationCheck check_exploration_condition(double rho, double r_s,
                                             double beta, double tau);

// tau <= 2 rho / R_s^2.
bool exploitation_default(double rho, double r_s, double tau);

// Symmetric piecewise-linear density on [0, length]: rho_max at both ends,
// linear ramps down to delta, plateau at delta covering the middle
// plateau_fraction of the interval.
struct TrapezoidDensity {
  double length = 1.0;
  double delta = 0.1;
  double plateau_fraction = 0.75;
  double rho_max = 1.0;

  double operator()(double x) const;
};

// Symmetry and monotone-ends checks on sampled densities.
// Throw AssumptionViolated.
void check_symmetric(const std::vector<double>& rho, double tol = 1e-12);
void check_monotone_ends(const std::vector<double>& rho);

// Same problem on R_s with a trapezoid density paired with an Opposite
// problem on R_o = beta R_s with constant density rho_o.
struct GeneralBoundsInput {
  double r_s = 2.0;
  double beta = 0.2;
  double delta = 1.0 / 32.0;
  double alpha = 0.75;  // plateau fraction
  double rho_s_max = 1.0;
  double rho_o = 1.0;
  double tau = 1.0;
  Index m = 1024;
};

struct GeneralBoundsReport {
  double as_mid = 0.0;    // measured A_s(R_s/2)
  double ao_min = 0.0;    // measured min A_o
  double as_upper = 0.0;  // exp(-sqrt(tau/delta) alpha^2 R_s^2 / 16)
  double ao_lower = 0.0;  // exp(-tau R_o^2 / (4 rho_o)) / sqrt2
  bool hypotheses = false;
  bool as_bound_holds = false;
  bool ao_bound_holds = false;
  bool explorative = false;  // as_mid < ao_min
};

// Whether the input satisfies alpha = 3/4, rho_o/2 <= 16 delta <= rho_o,
// beta <= 1/4, R_s^2 >= 4 ln 2 and 16 delta < tau < rho_o^2 / (16 delta).
bool general_bounds_feasible(const GeneralBoundsInput& in);

GeneralBoundsReport check_general_1d_bounds(const GeneralBoundsInput& in);

// Same problem on [0, length] whose middle 2s has density delta (ramping to
// rho_max at the ends). Compares v0(length/2) with exp(-(s/4) sqrt(tau/delta))
// when sqrt(tau/delta) >= 3/s.
struct MoatReport {
  double midpoint = 0.0;
  double bound = 0.0;
  bool condition = false;
  bool holds = false;
};
MoatReport check_moat_bound(double length, double s, double delta,
                            double rho_max, double tau, Index m = 1024);

}  // namespace pwll
