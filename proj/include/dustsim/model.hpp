#pragma once

#include <vector>

#include "dustsim/errors.hpp"

namespace dustsim {

// Default relative tolerance for tie detection in rate comparisons.
inline constexpr double kDefaultEpsilon = 1e-9;

// Dust deposition intensity: mass per unit area per unit time.
class DustParams {
 public:
  explicit DustParams(double alpha);

  double alpha() const noexcept { return alpha_; }

 private:
  double alpha_;
};

// A moving robot: translation speed beta (> 0) and the maximum standing-dust
// height h it can pick up while driving.
class ActiveRobotParams {
 public:
  ActiveRobotParams(double beta, double h);

  double beta() const noexcept { return beta_; }
  double h() const noexcept { return h_; }

 private:
  double beta_;
  double h_;
};

// Dust mass collected per unit model time. All quantities are dimensionless
// model units; no unit conversion is applied anywhere.
struct Rate {
  double value;
};

enum class Winner { PassiveWins, ActiveWins, Tie };

const char* to_string(Winner w) noexcept;

// Outcome of a stationary-vs-moving comparison. Tie holds exactly when
// |margin| <= epsilon * max(1, |d_passive|, |d_active|).
struct Verdict {
  Winner winner;
  double margin;   // d_passive - d_active
  double epsilon;  // relative tie tolerance used
};

// Speeds beta > 1 at which the two collection rates coincide, i.e. the
// solutions of h*beta^4/(beta-1) = alpha. Zero, one (tangent) or two roots,
// sorted ascending, each with residual |g(root) - alpha|.
struct BreakEven {
  std::vector<double> roots;
  std::vector<double> residuals;
};

// Collection rate of a stationary unit-footprint robot: exactly alpha.
Rate passive_rate(const DustParams& dust);

// Collection rate of a moving robot: h*beta^3 + alpha/beta.
Rate active_rate(const DustParams& dust, const ActiveRobotParams& robot);

// The deposition rate above which the stationary robot out-collects the
// moving one: h*beta^4/(beta-1). Only defined for beta > 1; throws
// DomainError otherwise (use compare() directly for beta <= 1).
double threshold_alpha(const ActiveRobotParams& robot);

// Direct rate comparison with a relative tie band. Valid for all beta > 0,
// including the beta <= 1 region where the closed-form threshold does not
// apply.
Verdict compare(const DustParams& dust, const ActiveRobotParams& robot,
                double epsilon = kDefaultEpsilon);

// All break-even speeds for the given deposition rate and sweep height.
// Requires alpha > 0 and h > 0 (DomainError otherwise). Roots are found by
// bisection on the two monotone branches of g(beta) = h*beta^4/(beta-1),
// split at the minimizer beta = 4/3; residuals satisfy
// |g(root) - alpha| <= 1e-9 * max(1, alpha) for well-conditioned inputs.
BreakEven break_even_speeds(const DustParams& dust, double h);

// Smallest deposition rate admitting any stationary-wins speed interval:
// 256*h/27, the minimum of h*beta^4/(beta-1) over beta > 1, attained at
// beta = 4/3. Requires h > 0.
double critical_alpha(double h);

// The speed minimizing the moving robot's collection rate:
// beta* = (alpha/(3h))^(1/4), the unique stationary point of
// h*beta^3 + alpha/beta on beta > 0. Requires alpha > 0 and h > 0.
double active_min_speed(const DustParams& dust, double h);

// Rain reading of the same model: does standing still (PassiveWins) or
// running (ActiveWins) get you less wet? Pure relabeling of compare() with
// alpha = rain_rate, beta = run_speed, h = body_h.
Verdict rain_verdict(double rain_rate, double run_speed, double body_h,
                     double epsilon = kDefaultEpsilon);

}  // namespace dustsim
