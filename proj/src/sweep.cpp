#include "dustsim/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>
#include <stdexcept>

namespace dustsim {

namespace {

std::string format_g9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace

SweepSpec SweepSpec::defaults(double alpha) {
  SweepSpec spec;
  spec.alpha = alpha;
  spec.beta_grid.reserve(241);
  for (int i = 0; i <= 240; ++i) {
    spec.beta_grid.push_back(0.2 + i * 0.02);
  }
  spec.h_values = {0.1, 0.5, 1.0};
  return spec;
}

void SweepSpec::validate() const {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw std::invalid_argument("sweep alpha must be finite and >= 0");
  }
  if (beta_grid.empty()) {
    throw std::invalid_argument("beta grid must not be empty");
  }
  double prev = 0.0;
  for (double beta : beta_grid) {
    if (!std::isfinite(beta) || beta <= 0.0) {
      throw std::invalid_argument("beta grid values must be finite and > 0");
    }
    if (beta <= prev) {
      throw std::invalid_argument("beta grid must be strictly increasing");
    }
    prev = beta;
  }
  if (h_values.empty()) {
    throw std::invalid_argument("h values must not be empty");
  }
  std::set<double> seen;
  for (double h : h_values) {
    if (!std::isfinite(h) || h < 0.0) {
      throw std::invalid_argument("h values must be finite and >= 0");
    }
    if (!seen.insert(h).second) {
      throw std::invalid_argument("h values must be distinct");
    }
  }
}

std::vector<CurvePoint> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const DustParams dust(spec.alpha);
  const double d_passive = passive_rate(dust).value;

  std::vector<double> hs = spec.h_values;
  std::sort(hs.begin(), hs.end());

  std::vector<CurvePoint> points;
  points.reserve(hs.size() * spec.beta_grid.size());
  for (double h : hs) {
    for (double beta : spec.beta_grid) {
      const ActiveRobotParams robot(beta, h);
      CurvePoint pt;
      pt.h = h;
      pt.beta = beta;
      pt.d_active = active_rate(dust, robot).value;
      pt.d_passive = d_passive;
      pt.passive_wins = compare(dust, robot).winner == Winner::PassiveWins;
      points.push_back(pt);
    }
  }
  return points;
}

CrossoverSummary annotate_crossover(const std::vector<CurvePoint>& points,
                                    double alpha, double h) {
  if (points.empty()) {
    throw std::invalid_argument("annotate_crossover needs at least one point");
  }
  for (const CurvePoint& pt : points) {
    if (pt.h != h) {
      throw std::invalid_argument(
          "annotate_crossover expects points from a single h");
    }
  }

  CrossoverSummary summary;
  summary.alpha = alpha;
  summary.h = h;

  // Grid view.
  double step = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i > 0) {
      step = std::max(step, points[i].beta - points[i - 1].beta);
    }
    if (points[i].passive_wins) {
      if (!summary.grid_first_win) {
        summary.grid_first_win = points[i].beta;
      }
      summary.grid_last_win = points[i].beta;
    }
  }

  // Analytic view; unavailable outside the closed forms' domain.
  try {
    const DustParams dust(alpha);
    summary.critical = critical_alpha(h);
    summary.min_speed = active_min_speed(dust, h);
    const BreakEven be = break_even_speeds(dust, h);
    summary.break_even_roots = be.roots;
    summary.analytic_available = true;
    summary.passive_interval_exists = be.roots.size() == 2;
  } catch (const DomainError&) {
    summary.analytic_available = false;
    summary.passive_interval_exists = summary.grid_first_win.has_value();
    return summary;
  } catch (const std::invalid_argument&) {
    summary.analytic_available = false;
    summary.passive_interval_exists = summary.grid_first_win.has_value();
    return summary;
  }

  // Cross-check the grid booleans against the roots, one grid step slack.
  if (summary.passive_interval_exists) {
    const double lo = summary.break_even_roots[0];
    const double hi = summary.break_even_roots[1];
    if (summary.grid_first_win) {
      summary.grid_consistent =
          std::fabs(*summary.grid_first_win - lo) <= step &&
          std::fabs(*summary.grid_last_win - hi) <= step;
    } else {
      // No grid point fell inside the interval; only believable when the
      // interval is narrower than one step.
      summary.grid_consistent = (hi - lo) <= step;
    }
  } else {
    summary.grid_consistent = !summary.grid_first_win.has_value();
  }
  return summary;
}

void write_csv(const std::vector<CurvePoint>& points, std::ostream& out) {
  out << "h,beta,d_active,d_passive,passive_wins\n";
  for (const CurvePoint& pt : points) {
    out << format_g9(pt.h) << ',' << format_g9(pt.beta) << ','
        << format_g9(pt.d_active) << ',' << format_g9(pt.d_passive) << ','
        << (pt.passive_wins ? "true" : "false") << '\n';
  }
}

}  // namespace dustsim
