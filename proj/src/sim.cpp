#include "dustsim/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "dustsim/rng.hpp"

namespace dustsim {

namespace {

constexpr double kFootprintArea = 1.0;  // 1x1 robot
constexpr double kLineLength = 1.0;     // transverse reference segment
constexpr long kMinCrossings = 10;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

// Runs one trial function per index, optionally across threads. out[i]
// depends only on i, so the schedule cannot affect results.
std::vector<double> run_trials(int trials, int threads,
                               const std::function<double(int)>& trial_fn) {
  std::vector<double> out(static_cast<std::size_t>(trials));
  threads = std::clamp(threads, 1, trials);
  if (threads == 1) {
    for (int i = 0; i < trials; ++i) {
      out[static_cast<std::size_t>(i)] = trial_fn(i);
    }
    return out;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < trials; i = next.fetch_add(1)) {
        out[static_cast<std::size_t>(i)] = trial_fn(i);
      }
    });
  }
  for (auto& worker : pool) {
    worker.join();
  }
  return out;
}

void finalize_stats(SimResult& result) {
  const auto n = result.per_trial_mass.size();
  double sum = 0.0;
  for (double x : result.per_trial_mass) {
    sum += x;
  }
  result.mean = sum / static_cast<double>(n);
  if (n >= 2) {
    double ss = 0.0;
    for (double x : result.per_trial_mass) {
      ss += (x - result.mean) * (x - result.mean);
    }
    result.std_error =
        std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n));
  }
  result.ci95_low = result.mean - 1.96 * result.std_error;
  result.ci95_high = result.mean + 1.96 * result.std_error;
}

// Complete crossings of the reference line within the duration, with one
// crossing per `crossing_distance` traveled. Crossing k occupies
// [k*d/beta, (k*d + 1)/beta], so with d >= 1 every counted window ends
// inside the duration.
long crossing_count(double duration, double beta, double crossing_distance) {
  return static_cast<long>(std::floor(duration * beta / crossing_distance));
}

// Mean occlusion time of a line point, from the closed-form entry/exit times
// of each crossing window. No time discretization is involved.
double measured_occlusion_time(double beta, double crossing_distance,
                               long crossings) {
  double sum = 0.0;
  for (long k = 0; k < crossings; ++k) {
    const double entry = static_cast<double>(k) * crossing_distance / beta;
    const double exit =
        (static_cast<double>(k) * crossing_distance + 1.0) / beta;
    sum += exit - entry;
  }
  return sum / static_cast<double>(crossings);
}

// Total mass deposited on the robot over `crossings` occlusion windows of
// length 1/beta each, drawn from the trial's own stream.
double crossing_pickup_total(const DepositionProcess& dep, double beta,
                             long crossings, int trial) {
  Xoshiro256StarStar rng(dep.seed(), static_cast<std::uint64_t>(trial));
  const double mean_per_crossing =
      dep.alpha() / dep.particle_mass() * kLineLength / beta;
  std::int64_t count = 0;
  for (long k = 0; k < crossings; ++k) {
    count += poisson(rng, mean_per_crossing);
  }
  return dep.particle_mass() * static_cast<double>(count);
}

void require_mode(const SimConfig& cfg, SimMode expected) {
  if (cfg.mode() != expected) {
    throw std::invalid_argument(std::string("config mode must be ") +
                                to_string(expected));
  }
}

}  // namespace

const char* to_string(SimMode mode) noexcept {
  switch (mode) {
    case SimMode::PassiveFootprint:
      return "passive_footprint";
    case SimMode::OcclusionCrossing:
      return "occlusion_crossing";
    case SimMode::ActiveModelFaithful:
      return "active_model_faithful";
  }
  return "passive_footprint";
}

Arena::Arena(double width, double height) : width_(width), height_(height) {
  require_finite(width, "arena width");
  require_finite(height, "arena height");
  if (width < 1.0 || height < 1.0) {
    throw std::invalid_argument(
        "arena dimensions must be at least the robot footprint side (1)");
  }
}

DepositionProcess::DepositionProcess(double alpha, double particle_mass,
                                     std::uint64_t seed)
    : alpha_(alpha), particle_mass_(particle_mass), seed_(seed) {
  require_finite(alpha, "alpha");
  require_finite(particle_mass, "particle_mass");
  if (alpha < 0.0) {
    throw std::invalid_argument("alpha must be >= 0");
  }
  if (particle_mass <= 0.0) {
    throw std::invalid_argument("particle_mass must be > 0");
  }
}

SimConfig::SimConfig(double duration, int trials, SimMode mode,
                     ActiveRobotParams robot, Arena arena, int threads)
    : duration_(duration),
      trials_(trials),
      mode_(mode),
      robot_(robot),
      arena_(arena),
      threads_(threads) {
  require_finite(duration, "duration");
  if (duration <= 0.0) {
    throw std::invalid_argument("duration must be > 0");
  }
  if (trials < 1) {
    throw std::invalid_argument("trials must be >= 1");
  }
  if (threads < 1) {
    throw std::invalid_argument("threads must be >= 1");
  }
}

SimResult run_passive(const DepositionProcess& dep, const SimConfig& cfg) {
  require_mode(cfg, SimMode::PassiveFootprint);

  const double mean_arrivals =
      dep.alpha() / dep.particle_mass() * kFootprintArea * cfg.duration();
  SimResult result;
  result.mode = SimMode::PassiveFootprint;
  result.seed = dep.seed();
  result.analytic_prediction = dep.alpha() * cfg.duration();
  result.per_trial_mass =
      run_trials(cfg.trials(), cfg.threads(), [&](int trial) {
        Xoshiro256StarStar rng(dep.seed(), static_cast<std::uint64_t>(trial));
        return dep.particle_mass() *
               static_cast<double>(poisson(rng, mean_arrivals));
      });
  finalize_stats(result);
  return result;
}

SimResult run_occlusion(const DepositionProcess& dep,
                        const ActiveRobotParams& robot, const SimConfig& cfg) {
  require_mode(cfg, SimMode::OcclusionCrossing);

  const double beta = robot.beta();
  const double circumference = cfg.arena().width();
  const long crossings = crossing_count(cfg.duration(), beta, circumference);
  if (crossings < kMinCrossings) {
    throw ConfigError("fewer than 10 line crossings fit in the duration; "
                      "increase duration or beta");
  }

  SimResult result;
  result.mode = SimMode::OcclusionCrossing;
  result.seed = dep.seed();
  result.crossing_convention = "one_per_circumference";
  result.crossings_per_trial = crossings;
  result.occlusion_time_per_crossing =
      measured_occlusion_time(beta, circumference, crossings);
  result.analytic_prediction = dep.alpha() / beta;  // per crossing
  result.per_trial_mass =
      run_trials(cfg.trials(), cfg.threads(), [&](int trial) {
        return crossing_pickup_total(dep, beta, crossings, trial) /
               static_cast<double>(crossings);
      });
  finalize_stats(result);
  return result;
}

SimResult run_active_model_faithful(const DepositionProcess& dep,
                                    const ActiveRobotParams& robot,
                                    const SimConfig& cfg) {
  require_mode(cfg, SimMode::ActiveModelFaithful);

  const double beta = robot.beta();
  const double crossing_distance = 1.0;  // one crossing per unit distance
  const long crossings =
      crossing_count(cfg.duration(), beta, crossing_distance);
  if (crossings < kMinCrossings) {
    throw ConfigError("fewer than 10 line crossings fit in the duration; "
                      "increase duration or beta");
  }

  // The standing-dust term is an axiom of the model, not swept geometry.
  const double sweep_mass =
      robot.h() * beta * beta * beta * cfg.duration();

  SimResult result;
  result.mode = SimMode::ActiveModelFaithful;
  result.seed = dep.seed();
  result.crossing_convention = "one_per_unit_distance";
  result.crossings_per_trial = crossings;
  result.analytic_prediction =
      (robot.h() * beta * beta * beta + dep.alpha()) * cfg.duration();
  result.per_trial_mass =
      run_trials(cfg.trials(), cfg.threads(), [&](int trial) {
        return sweep_mass + crossing_pickup_total(dep, beta, crossings, trial);
      });
  finalize_stats(result);
  return result;
}

SimResult run(const DepositionProcess& dep, const SimConfig& cfg) {
  switch (cfg.mode()) {
    case SimMode::PassiveFootprint:
      return run_passive(dep, cfg);
    case SimMode::OcclusionCrossing:
      return run_occlusion(dep, cfg.robot(), cfg);
    case SimMode::ActiveModelFaithful:
      return run_active_model_faithful(dep, cfg.robot(), cfg);
  }
  throw std::invalid_argument("unknown simulation mode");
}

}  // namespace dustsim
