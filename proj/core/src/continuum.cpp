#include "pwll/continuum.hpp"

#include <algorithm>
#include <cmath>

#include "pwll/errors.hpp"

namespace pwll {

const char* to_string(BoundaryKind kind) {
  return kind == BoundaryKind::kOpposite ? "opposite" : "same";
}

void IntervalProblem::validate() const {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw InvalidArgument("interval length must be positive");
  }
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw InvalidArgument("tau must be nonnegative");
  }
  if (m() < 64) throw InvalidArgument("grid needs m >= 64");
  for (double r : rho) {
    if (!(r > 0.0) || !std::isfinite(r)) {
      throw NonPositiveDensity("density must be finite and positive");
    }
  }
}

IntervalProblem make_problem(double length,
                             const std::function<double(double)>& density,
                             double tau, BoundaryKind kind, Index m) {
  IntervalProblem p;
  p.length = length;
  p.tau = tau;
  p.kind = kind;
  p.rho.resize(m + 1);
  for (Index i = 0; i <= m; ++i) {
    p.rho[i] = density(length * static_cast<double>(i) / static_cast<double>(m));
  }
  p.validate();
  return p;
}

std::vector<double> solve_tridiagonal(std::vector<double> lower,
                                      std::vector<double> diag,
                                      std::vector<double> upper,
                                      std::vector<double> rhs) {
  const Index n = diag.size();
  if (lower.size() != n || upper.size() != n || rhs.size() != n) {
    throw InvalidArgument("tridiagonal bands must have equal length");
  }
  for (Index i = 1; i < n; ++i) {
    const double w = lower[i] / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  std::vector<double> x(n);
  if (n == 0) return x;
  x[n - 1] = rhs[n - 1] / diag[n - 1];
  for (Index i = n - 1; i-- > 0;) {
    x[i] = (rhs[i] - upper[i] * x[i + 1]) / diag[i];
  }
  return x;
}

namespace {

std::vector<double> SolveDirichlet(const IntervalProblem& p, double left,
                                   double right) {
  const Index m = p.m();
  const double h2 = p.h() * p.h();
  const Index n = m - 1;  // interior unknowns
  std::vector<double> lo(n), di(n), up(n), rhs(n, 0.0);
  for (Index k = 0; k < n; ++k) {
    const Index i = k + 1;
    const double rl = 0.5 * (p.rho[i - 1] + p.rho[i]);
    const double rr = 0.5 * (p.rho[i] + p.rho[i + 1]);
    lo[k] = -rl * rl;
    up[k] = -rr * rr;
    di[k] = p.tau * p.rho[i] * h2 + rl * rl + rr * rr;
  }
  rhs[0] -= lo[0] * left;
  rhs[n - 1] -= up[n - 1] * right;
  const std::vector<double> inner = solve_tridiagonal(lo, di, up, rhs);
  std::vector<double> u(m + 1);
  u[0] = left;
  u[m] = right;
  std::copy(inner.begin(), inner.end(), u.begin() + 1);
  return u;
}

}  // namespace

IntervalSolution solve_bvp(const IntervalProblem& problem) {
  problem.validate();
  IntervalSolution s;
  const Index m = problem.m();
  if (problem.kind == BoundaryKind::kOpposite) {
    s.u0 = SolveDirichlet(problem, 1.0, 0.0);
    s.u1 = SolveDirichlet(problem, 0.0, 1.0);
    s.acquisition.resize(m + 1);
    for (Index i = 0; i <= m; ++i) {
      s.acquisition[i] = std::hypot(s.u0[i], s.u1[i]);
    }
  } else {
    s.u0 = SolveDirichlet(problem, 1.0, 1.0);
    s.acquisition = s.u0;
  }
  s.argmin = static_cast<Index>(
      std::min_element(s.acquisition.begin(), s.acquisition.end()) -
      s.acquisition.begin());
  s.min_value = s.acquisition[s.argmin];
  s.argmin_x = problem.x(s.argmin);
  return s;
}

double midpoint_acquisition_constant(double rho, double tau, double length,
                                     BoundaryKind kind) {
  if (!(rho > 0.0)) throw NonPositiveDensity("rho must be positive");
  const double c = std::cosh(std::sqrt(tau / rho) * length / 2.0);
  return kind == BoundaryKind::kOpposite ? 1.0 / (std::sqrt(2.0) * c) : 1.0 / c;
}

double closed_form_u0(double rho, double tau, double length, double x) {
  if (tau == 0.0) return 1.0 - x / length;
  const double a = std::sqrt(tau / rho);
  return std::sinh(a * (length - x)) / std::sinh(a * length);
}

double closed_form_v0(double rho, double tau, double length, double x) {
  const double a = std::sqrt(tau / rho);
  return std::cosh(a * (x - length / 2.0)) / std::cosh(a * length / 2.0);
}

double exploration_threshold(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0 / std::sqrt(2.0))) throw BetaOutOfRange(beta);
  // g(t) = cosh t - sqrt2 cosh(beta t) is negative at 0 and eventually
  // positive with a single sign change.
  auto g = [beta](double t) {
    return std::cosh(t) - std::sqrt(2.0) * std::cosh(beta * t);
  };
  double lo = 0.0, hi = 1.0;
  while (g(hi) <= 0.0) hi *= 2.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

ExplorationCheck check_exploration_condition(double rho, double r_s,
                                             double beta, double tau) {
  if (!(rho > 0.0)) throw NonPositiveDensity("rho must be positive");
  if (!(tau >= 0.0)) throw InvalidArgument("tau must be nonnegative");
  ExplorationCheck c;
  c.t_star = exploration_threshold(beta);
  c.explorative = std::sqrt(tau) * r_s > 2.0 * std::sqrt(rho) * c.t_star;
  return c;
}

bool exploitation_default(double rho, double r_s, double tau) {
  return tau <= 2.0 * rho / (r_s * r_s);
}

double TrapezoidDensity::operator()(double x) const {
  const double ramp = 0.5 * (1.0 - plateau_fraction) * length;
  const double d = std::min(x, length - x);  // distance to nearest end
  if (d >= ramp) return delta;
  return rho_max + (delta - rho_max) * d / ramp;
}

void check_symmetric(const std::vector<double>& rho, double tol) {
  const Index n = rho.size();
  for (Index i = 0; i < n / 2; ++i) {
    const double a = rho[i], b = rho[n - 1 - i];
    if (std::abs(a - b) > tol * std::max({1.0, std::abs(a), std::abs(b)})) {
      throw AssumptionViolated("density is not symmetric about the midpoint");
    }
  }
}

void check_monotone_ends(const std::vector<double>& rho) {
  // Nonincreasing from the left end to the midpoint (and, by symmetry or a
  // separate scan, nondecreasing from the midpoint to the right end).
  const Index n = rho.size();
  for (Index i = 1; i <= n / 2; ++i) {
    if (rho[i] > rho[i - 1]) {
      throw AssumptionViolated("density increases away from the left end");
    }
  }
  for (Index i = n / 2 + 1; i < n; ++i) {
    if (rho[i] < rho[i - 1]) {
      throw AssumptionViolated("density decreases toward the right end");
    }
  }
}

bool general_bounds_feasible(const GeneralBoundsInput& in) {
  const double d16 = 16.0 * in.delta;
  return in.alpha == 0.75 && in.delta < in.rho_s_max &&
         0.5 * in.rho_o <= d16 && d16 <= in.rho_o && in.beta > 0.0 &&
         in.beta <= 0.25 && in.r_s * in.r_s >= 4.0 * std::log(2.0) &&
         in.tau > d16 && in.tau < in.rho_o * in.rho_o / d16;
}

GeneralBoundsReport check_general_1d_bounds(const GeneralBoundsInput& in) {
  if (!(in.alpha > 0.0 && in.alpha < 1.0)) {
    throw InvalidArgument("plateau fraction must lie in (0, 1)");
  }
  if (!(in.delta > 0.0 && in.rho_o > 0.0 && in.rho_s_max > 0.0)) {
    throw NonPositiveDensity("densities must be positive");
  }
  if (!(in.delta < in.rho_s_max)) {
    throw AssumptionViolated("plateau level must lie below rho_max");
  }
  if (!(in.beta > 0.0)) throw BetaOutOfRange(in.beta);

  const TrapezoidDensity rho_s{in.r_s, in.delta, in.alpha, in.rho_s_max};
  IntervalProblem same =
      make_problem(in.r_s, rho_s, in.tau, BoundaryKind::kSame, in.m);
  check_symmetric(same.rho);
  check_monotone_ends(same.rho);
  const double r_o = in.beta * in.r_s;
  IntervalProblem opp = make_problem(
      r_o, [&](double) { return in.rho_o; }, in.tau, BoundaryKind::kOpposite,
      in.m);

  const IntervalSolution ss = solve_bvp(same);
  const IntervalSolution so = solve_bvp(opp);

  GeneralBoundsReport r;
  r.as_mid = ss.u0[in.m / 2];
  r.ao_min = so.min_value;
  r.as_upper = std::exp(-std::sqrt(in.tau / in.delta) * in.alpha * in.alpha *
                        in.r_s * in.r_s / 16.0);
  r.ao_lower = std::exp(-in.tau * r_o * r_o / (4.0 * in.rho_o)) / std::sqrt(2.0);
  r.hypotheses = general_bounds_feasible(in);
  r.as_bound_holds = r.as_mid <= r.as_upper;
  r.ao_bound_holds = r.ao_min >= r.ao_lower;
  r.explorative = r.as_mid < r.ao_min;
  return r;
}

MoatReport check_moat_bound(double length, double s, double delta,
                            double rho_max, double tau, Index m) {
  if (!(s > 0.0 && 2.0 * s < length)) {
    throw InvalidArgument("moat half-width must satisfy 0 < 2s < length");
  }
  if (!(delta > 0.0 && delta < rho_max)) {
    throw AssumptionViolated("moat level must lie in (0, rho_max)");
  }
  const TrapezoidDensity rho{length, delta, 2.0 * s / length, rho_max};
  const IntervalSolution sol =
      solve_bvp(make_problem(length, rho, tau, BoundaryKind::kSame, m));
  MoatReport r;
  r.midpoint = sol.u0[m / 2];
  r.bound = std::exp(-(s / 4.0) * std::sqrt(tau / delta));
  r.condition = std::sqrt(tau / delta) >= 3.0 / s;
  r.holds = r.midpoint <= r.bound;
  return r;
}

}  // namespace pwll
