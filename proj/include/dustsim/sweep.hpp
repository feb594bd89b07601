#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "dustsim/model.hpp"

namespace dustsim {

// Grid specification for the efficiency-curve sweep. The defaults anchor a
// clean rational break-even: alpha = 16 with h = 1 crosses exactly at
// beta = 2.
struct SweepSpec {
  std::vector<double> beta_grid;  // strictly increasing, all > 0
  std::vector<double> h_values;   // distinct, all >= 0
  double alpha = 0.0;

  static SweepSpec defaults(double alpha = 16.0);

  void validate() const;  // throws std::invalid_argument
};

struct CurvePoint {
  double h;
  double beta;
  double d_active;
  double d_passive;
  bool passive_wins;  // compare() verdict at default epsilon
};

// One CurvePoint per (h, beta) pair, sorted by h then beta.
std::vector<CurvePoint> run_sweep(const SweepSpec& spec);

// Crossover annotation for the points of a single h. Analytic fields are
// absent when the closed forms do not apply (alpha <= 0 or h <= 0); the grid
// fields are always filled from the points themselves.
struct CrossoverSummary {
  double alpha = 0.0;
  double h = 0.0;
  bool analytic_available = false;
  std::vector<double> break_even_roots;  // 0, 1 (tangent) or 2 entries
  std::optional<double> min_speed;       // argmin of d_active over beta > 0
  std::optional<double> critical;        // smallest alpha with a win interval
  // True only for a genuine two-root interval; a tangency has no interval of
  // strict wins.
  bool passive_interval_exists = false;
  std::optional<double> grid_first_win;  // smallest beta with passive_wins
  std::optional<double> grid_last_win;   // largest beta with passive_wins
  // Grid booleans agree with the analytic roots to within one grid step.
  bool grid_consistent = true;
};

CrossoverSummary annotate_crossover(const std::vector<CurvePoint>& points,
                                    double alpha, double h);

// CSV emission: header `h,beta,d_active,d_passive,passive_wins`, floats with
// 9 significant digits, booleans as true/false, LF line endings.
void write_csv(const std::vector<CurvePoint>& points, std::ostream& out);

}  // namespace dustsim
