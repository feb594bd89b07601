#include "dustsim/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dustsim {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

// The break-even curve g(beta) = h*beta^4/(beta-1) on beta > 1.
double g_curve(double h, double beta) {
  const double b2 = beta * beta;
  return h * b2 * b2 / (beta - 1.0);
}

constexpr double kMinimizerBeta = 4.0 / 3.0;

// Bisect g(beta) = alpha on a bracket where g is monotone. `decreasing`
// selects the branch orientation: g(lo) > alpha > g(hi) when true.
double bisect_branch(double h, double alpha, double lo, double hi,
                     bool decreasing) {
  while (hi - lo > 1e-12 * std::max(1.0, 0.5 * (lo + hi))) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      break;  // interval is at floating-point resolution
    }
    const double gm = g_curve(h, mid);
    if (gm == alpha) {
      return mid;
    }
    if ((gm > alpha) == decreasing) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // Return whichever bracket point has the smallest residual.
  const double mid = 0.5 * (lo + hi);
  double best = mid;
  double best_res = std::fabs(g_curve(h, mid) - alpha);
  for (double cand : {lo, hi}) {
    const double res = std::fabs(g_curve(h, cand) - alpha);
    if (res < best_res) {
      best = cand;
      best_res = res;
    }
  }
  return best;
}

}  // namespace

DustParams::DustParams(double alpha) : alpha_(alpha) {
  require_finite(alpha, "alpha");
  if (alpha < 0.0) {
    throw std::invalid_argument("alpha must be >= 0");
  }
}

ActiveRobotParams::ActiveRobotParams(double beta, double h)
    : beta_(beta), h_(h) {
  require_finite(beta, "beta");
  require_finite(h, "h");
  if (beta <= 0.0) {
    throw std::invalid_argument("beta must be > 0");
  }
  if (h < 0.0) {
    throw std::invalid_argument("h must be >= 0");
  }
}

const char* to_string(Winner w) noexcept {
  switch (w) {
    case Winner::PassiveWins:
      return "PassiveWins";
    case Winner::ActiveWins:
      return "ActiveWins";
    case Winner::Tie:
      return "Tie";
  }
  return "Tie";
}

Rate passive_rate(const DustParams& dust) { return {dust.alpha()}; }

Rate active_rate(const DustParams& dust, const ActiveRobotParams& robot) {
  const double beta = robot.beta();
  return {robot.h() * beta * beta * beta + dust.alpha() / beta};
}

double threshold_alpha(const ActiveRobotParams& robot) {
  const double beta = robot.beta();
  if (beta <= 1.0) {
    throw DomainError("threshold_alpha requires beta > 1");
  }
  return g_curve(robot.h(), beta);
}

Verdict compare(const DustParams& dust, const ActiveRobotParams& robot,
                double epsilon) {
  require_finite(epsilon, "epsilon");
  if (epsilon < 0.0) {
    throw std::invalid_argument("epsilon must be >= 0");
  }
  const double d_passive = passive_rate(dust).value;
  const double d_active = active_rate(dust, robot).value;
  const double margin = d_passive - d_active;
  const double band =
      epsilon * std::max({1.0, std::fabs(d_passive), std::fabs(d_active)});
  Winner winner = Winner::Tie;
  if (margin > band) {
    winner = Winner::PassiveWins;
  } else if (margin < -band) {
    winner = Winner::ActiveWins;
  }
  return {winner, margin, epsilon};
}

BreakEven break_even_speeds(const DustParams& dust, double h) {
  require_finite(h, "h");
  const double alpha = dust.alpha();
  if (h <= 0.0) {
    throw DomainError("break_even_speeds requires h > 0");
  }
  if (alpha <= 0.0) {
    throw DomainError("break_even_speeds requires alpha > 0");
  }

  BreakEven out;
  const double crit = critical_alpha(h);

  // Tangency: a double root at the minimizer is numerically unstable under
  // bisection, so detect it explicitly.
  if (std::fabs(alpha - crit) <= 1e-9 * std::max(1.0, alpha)) {
    out.roots.push_back(kMinimizerBeta);
    out.residuals.push_back(std::fabs(g_curve(h, kMinimizerBeta) - alpha));
    return out;
  }
  if (alpha < crit) {
    return out;  // g never comes down to alpha
  }

  // Lower root on the decreasing branch (1, 4/3). g(1+d) > h/d, so any
  // d <= h/(2*alpha) guarantees g > alpha at the left end of the bracket.
  const double delta = std::min(1.0 / 6.0, h / (2.0 * alpha));
  const double lower =
      bisect_branch(h, alpha, 1.0 + delta, kMinimizerBeta, true);

  // Upper root on the increasing branch (4/3, inf); expand the bracket
  // upward until g exceeds alpha.
  double hi = 2.0;
  while (g_curve(h, hi) <= alpha) {
    hi *= 2.0;
    if (!std::isfinite(hi)) {
      throw DomainError("break_even_speeds bracket expansion overflowed");
    }
  }
  const double upper = bisect_branch(h, alpha, kMinimizerBeta, hi, false);

  out.roots = {lower, upper};
  out.residuals = {std::fabs(g_curve(h, lower) - alpha),
                   std::fabs(g_curve(h, upper) - alpha)};
  return out;
}

double critical_alpha(double h) {
  require_finite(h, "h");
  if (h <= 0.0) {
    throw DomainError("critical_alpha requires h > 0");
  }
  return 256.0 * h / 27.0;
}

double active_min_speed(const DustParams& dust, double h) {
  require_finite(h, "h");
  if (h <= 0.0) {
    throw DomainError("active_min_speed requires h > 0");
  }
  if (dust.alpha() <= 0.0) {
    throw DomainError("active_min_speed requires alpha > 0");
  }
  return std::pow(dust.alpha() / (3.0 * h), 0.25);
}

Verdict rain_verdict(double rain_rate, double run_speed, double body_h,
                     double epsilon) {
  return compare(DustParams(rain_rate), ActiveRobotParams(run_speed, body_h),
                 epsilon);
}

}  // namespace dustsim
