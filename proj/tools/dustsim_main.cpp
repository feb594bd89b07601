// dustsim — command-line front end for the dust-collection modeling toolkit.
//
// Subcommands: model (compare, breakeven), sim, sweep, census, rain.
// json/csv outputs are stable, machine-readable interfaces; plain output is
// for humans. Exit codes: 0 success, 2 argument errors, 3 domain errors,
// 4 parse errors.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dustsim/census.hpp"
#include "dustsim/model.hpp"
#include "dustsim/sim.hpp"
#include "dustsim/sweep.hpp"

using json = nlohmann::ordered_json;

namespace {

std::string g9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string single_line(std::string text) {
  for (char& c : text) {
    if (c == '\n' || c == '\r') {
      c = ' ';
    }
  }
  return text;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

// DUSTSIM_SEED overrides the built-in default; an explicit --seed flag
// overrides both.
std::uint64_t default_seed() {
  const char* env = std::getenv("DUSTSIM_SEED");
  if (env == nullptr || *env == '\0') {
    return 42;
  }
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0') {
    throw std::invalid_argument(
        "DUSTSIM_SEED must be an unsigned integer, got \"" +
        std::string(env) + "\"");
  }
  return value;
}

struct ModelCompareOpts {
  double alpha = 0.0;
  double h = 0.0;
  double beta = 0.0;
  double epsilon = dustsim::kDefaultEpsilon;
  std::string format = "json";
};

void run_model_compare(const ModelCompareOpts& opt) {
  const dustsim::DustParams dust(opt.alpha);
  const dustsim::ActiveRobotParams robot(opt.beta, opt.h);
  const dustsim::Verdict verdict = dustsim::compare(dust, robot, opt.epsilon);
  const double d_passive = dustsim::passive_rate(dust).value;
  const double d_active = dustsim::active_rate(dust, robot).value;

  if (opt.format == "plain") {
    std::cout << "verdict=" << dustsim::to_string(verdict.winner)
              << " margin=" << g9(verdict.margin) << " d_passive="
              << g9(d_passive) << " d_active=" << g9(d_active) << "\n";
    return;
  }
  json doc;
  doc["params"] = {{"alpha", opt.alpha},
                   {"h", opt.h},
                   {"beta", opt.beta},
                   {"epsilon", opt.epsilon}};
  doc["d_passive"] = d_passive;
  doc["d_active"] = d_active;
  doc["verdict"] = dustsim::to_string(verdict.winner);
  doc["margin"] = verdict.margin;
  emit(doc);
}

struct ModelBreakevenOpts {
  double alpha = 0.0;
  double h = 0.0;
  std::string format = "json";
};

void run_model_breakeven(const ModelBreakevenOpts& opt) {
  const dustsim::BreakEven be =
      dustsim::break_even_speeds(dustsim::DustParams(opt.alpha), opt.h);
  const double critical = dustsim::critical_alpha(opt.h);

  if (opt.format == "plain") {
    std::cout << "critical_alpha=" << g9(critical) << " roots=[";
    for (std::size_t i = 0; i < be.roots.size(); ++i) {
      std::cout << (i ? "," : "") << g9(be.roots[i]);
    }
    std::cout << "]\n";
    return;
  }
  json doc;
  doc["params"] = {{"alpha", opt.alpha}, {"h", opt.h}};
  doc["critical_alpha"] = critical;
  doc["roots"] = be.roots;
  doc["residuals"] = be.residuals;
  emit(doc);
}

struct SimOpts {
  std::string mode = "passive";
  double alpha = 0.0;
  double beta = 1.0;
  double h = 0.0;
  double duration = 1000.0;
  int trials = 30;
  std::uint64_t seed = 42;
  double particle_mass = 1.0;
  double arena_width = 10.0;
  double arena_height = 10.0;
  int threads = 1;
};

void run_sim(const SimOpts& opt) {
  dustsim::SimMode mode = dustsim::SimMode::PassiveFootprint;
  if (opt.mode == "occlusion") {
    mode = dustsim::SimMode::OcclusionCrossing;
  } else if (opt.mode == "active") {
    mode = dustsim::SimMode::ActiveModelFaithful;
  }

  const dustsim::DepositionProcess dep(opt.alpha, opt.particle_mass, opt.seed);
  const dustsim::SimConfig cfg(opt.duration, opt.trials, mode,
                               dustsim::ActiveRobotParams(opt.beta, opt.h),
                               dustsim::Arena(opt.arena_width,
                                              opt.arena_height),
                               opt.threads);
  const dustsim::SimResult result = dustsim::run(dep, cfg);

  json doc;
  doc["mode"] = dustsim::to_string(result.mode);
  // threads is an execution knob, not an experiment parameter, and is
  // deliberately not echoed: output must not depend on it.
  doc["params"] = {{"alpha", opt.alpha},
                   {"particle_mass", opt.particle_mass},
                   {"beta", opt.beta},
                   {"h", opt.h},
                   {"duration", opt.duration},
                   {"trials", opt.trials},
                   {"seed", opt.seed},
                   {"arena_width", opt.arena_width},
                   {"arena_height", opt.arena_height}};
  doc["per_trial_mass"] = result.per_trial_mass;
  doc["mean"] = result.mean;
  doc["std_error"] = result.std_error;
  doc["ci95"] = json::array({result.ci95_low, result.ci95_high});
  doc["analytic_prediction"] = result.analytic_prediction;
  doc["seed"] = result.seed;
  doc["crossing_convention"] = result.crossing_convention;
  if (result.mode != dustsim::SimMode::PassiveFootprint) {
    doc["crossings_per_trial"] = result.crossings_per_trial;
  }
  if (result.mode == dustsim::SimMode::OcclusionCrossing) {
    doc["occlusion_time_per_crossing"] = result.occlusion_time_per_crossing;
  }
  emit(doc);
}

struct SweepOpts {
  double alpha = 16.0;
  std::vector<double> h_values = {0.1, 0.5, 1.0};
  double beta_min = 0.2;
  double beta_max = 5.0;
  double beta_step = 0.02;
};

void run_sweep_cmd(const SweepOpts& opt) {
  if (!(opt.beta_step > 0.0)) {
    throw std::invalid_argument("--beta-step must be > 0");
  }
  if (opt.beta_max < opt.beta_min) {
    throw std::invalid_argument("--beta-max must be >= --beta-min");
  }
  dustsim::SweepSpec spec;
  spec.alpha = opt.alpha;
  spec.h_values = opt.h_values;
  for (int i = 0;; ++i) {
    const double beta = opt.beta_min + i * opt.beta_step;
    if (beta > opt.beta_max + 0.5 * opt.beta_step) {
      break;
    }
    spec.beta_grid.push_back(beta);
  }
  dustsim::write_csv(dustsim::run_sweep(spec), std::cout);
}

struct CensusOpts {
  std::string input;
  std::string format = "json";
};

void run_census(const CensusOpts& opt) {
  const dustsim::CensusData data = dustsim::load_census(opt.input);
  const dustsim::CensusSummary summary = dustsim::summarize(data.records);

  const dustsim::Mobility continuum_classes[] = {
      dustsim::Mobility::Legged, dustsim::Mobility::Winged,
      dustsim::Mobility::Tracked, dustsim::Mobility::Other,
      dustsim::Mobility::Unknown};

  if (opt.format == "plain") {
    std::cout << "total_complete=" << summary.total_complete << "\n"
              << "official_passive=" << summary.official_passive << "\n"
              << "wheeled=" << summary.wheeled << "\n"
              << "active_dust=" << summary.active_dust << "\n";
    for (dustsim::Mobility m : continuum_classes) {
      const auto it = summary.continuum_note.find(m);
      std::cout << "continuum." << dustsim::to_string(m) << "="
                << (it == summary.continuum_note.end() ? 0L : it->second)
                << "\n";
    }
    return;
  }
  json continuum;
  for (dustsim::Mobility m : continuum_classes) {
    const auto it = summary.continuum_note.find(m);
    continuum[dustsim::to_string(m)] =
        it == summary.continuum_note.end() ? 0L : it->second;
  }
  json doc;
  doc["params"] = {{"input", opt.input}};
  doc["total_complete"] = summary.total_complete;
  doc["official_passive"] = summary.official_passive;
  doc["wheeled"] = summary.wheeled;
  doc["active_dust"] = summary.active_dust;
  doc["continuum_note"] = continuum;
  doc["unknown_mobility_warnings"] = data.unknown_mobility_warnings;
  emit(doc);
}

struct RainOpts {
  double rain_rate = 0.0;
  double run_speed = 0.0;
  double body_h = 0.0;
  double epsilon = dustsim::kDefaultEpsilon;
  std::string format = "json";
};

void run_rain(const RainOpts& opt) {
  const dustsim::Verdict verdict = dustsim::rain_verdict(
      opt.rain_rate, opt.run_speed, opt.body_h, opt.epsilon);
  const char* advice = "either";
  if (verdict.winner == dustsim::Winner::PassiveWins) {
    advice = "stand";
  } else if (verdict.winner == dustsim::Winner::ActiveWins) {
    advice = "run";
  }
  const double standing = opt.rain_rate;
  const double running =
      dustsim::active_rate(dustsim::DustParams(opt.rain_rate),
                           dustsim::ActiveRobotParams(opt.run_speed,
                                                      opt.body_h))
          .value;

  if (opt.format == "plain") {
    std::cout << "advice=" << advice << " verdict="
              << dustsim::to_string(verdict.winner)
              << " margin=" << g9(verdict.margin) << "\n";
    return;
  }
  json doc;
  doc["params"] = {{"rain_rate", opt.rain_rate},
                   {"run_speed", opt.run_speed},
                   {"body_h", opt.body_h},
                   {"epsilon", opt.epsilon}};
  doc["verdict"] = dustsim::to_string(verdict.winner);
  doc["advice"] = advice;
  doc["margin"] = verdict.margin;
  doc["wetness_standing"] = standing;
  doc["wetness_running"] = running;
  emit(doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dust-collection modeling toolkit"};
  // The model's height parameter is spelled --h, so the help flag keeps only
  // its long form. Must run before add_subcommand: children copy this flag.
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);

  const auto format_check = CLI::IsMember({"json", "plain"});

  // model
  auto* model_cmd = app.add_subcommand("model", "closed-form model queries");
  model_cmd->require_subcommand(1);

  ModelCompareOpts cmp;
  auto* cmp_cmd = model_cmd->add_subcommand(
      "compare", "stationary vs moving collection verdict");
  cmp_cmd->add_option("--alpha", cmp.alpha, "dust deposition rate")
      ->required();
  cmp_cmd->add_option("--h", cmp.h, "collectible dust height")->required();
  cmp_cmd->add_option("--beta", cmp.beta, "robot speed")->required();
  cmp_cmd->add_option("--epsilon", cmp.epsilon, "relative tie tolerance")->capture_default_str();
  cmp_cmd->add_option("--format", cmp.format, "json or plain")->capture_default_str()
      ->check(format_check);
  cmp_cmd->callback([&] { run_model_compare(cmp); });

  ModelBreakevenOpts bev;
  auto* bev_cmd = model_cmd->add_subcommand(
      "breakeven", "speeds at which the two rates coincide");
  bev_cmd->add_option("--alpha", bev.alpha, "dust deposition rate")
      ->required();
  bev_cmd->add_option("--h", bev.h, "collectible dust height")->required();
  bev_cmd->add_option("--format", bev.format, "json or plain")->capture_default_str()
      ->check(format_check);
  bev_cmd->callback([&] { run_model_breakeven(bev); });

  // sim
  SimOpts sim;
  auto* sim_cmd =
      app.add_subcommand("sim", "seeded Monte Carlo deposition simulator");
  sim_cmd->add_option("--mode", sim.mode, "passive, occlusion or active")->capture_default_str()
      ->check(CLI::IsMember({"passive", "occlusion", "active"}));
  sim_cmd->add_option("--alpha", sim.alpha, "dust deposition rate")
      ->required();
  sim_cmd->add_option("--beta", sim.beta, "robot speed")->capture_default_str();
  sim_cmd->add_option("--h", sim.h, "collectible dust height")->capture_default_str();
  sim_cmd->add_option("--duration", sim.duration, "model time per trial")->capture_default_str();
  sim_cmd->add_option("--trials", sim.trials, "number of trials")->capture_default_str();
  auto* seed_opt = sim_cmd->add_option("--seed", sim.seed, "RNG master seed");
  sim_cmd->add_option("--particle-mass", sim.particle_mass,
                      "mass of one dust particle")->capture_default_str();
  sim_cmd->add_option("--arena-width", sim.arena_width, "torus width")->capture_default_str();
  sim_cmd->add_option("--arena-height", sim.arena_height, "torus height")->capture_default_str();
  sim_cmd->add_option("--threads", sim.threads,
                      "max worker threads (does not affect results)")->capture_default_str();
  sim_cmd->callback([&] {
    if (seed_opt->count() == 0) {
      sim.seed = default_seed();
    }
    run_sim(sim);
  });

  // sweep
  SweepOpts sweep;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "efficiency-curve sweep, CSV output");
  sweep_cmd->add_option("--alpha", sweep.alpha, "dust deposition rate")->capture_default_str();
  sweep_cmd
      ->add_option("--h", sweep.h_values, "sweep heights (comma separated)")
      ->delimiter(',')
      ->expected(-1);
  sweep_cmd->add_option("--beta-min", sweep.beta_min, "grid start")->capture_default_str();
  sweep_cmd->add_option("--beta-max", sweep.beta_max, "grid end")->capture_default_str();
  sweep_cmd->add_option("--beta-step", sweep.beta_step, "grid step")->capture_default_str();
  sweep_cmd->callback([&] { run_sweep_cmd(sweep); });

  // census
  CensusOpts census;
  auto* census_cmd =
      app.add_subcommand("census", "robot census classification counts");
  census_cmd->add_option("--input", census.input, "census CSV path")
      ->required();
  census_cmd->add_option("--format", census.format, "json or plain")->capture_default_str()
      ->check(format_check);
  census_cmd->callback([&] { run_census(census); });

  // rain
  RainOpts rain;
  auto* rain_cmd = app.add_subcommand(
      "rain", "stand still or run through the rain?");
  rain_cmd->add_option("--rain-rate", rain.rain_rate, "rain intensity")
      ->required();
  rain_cmd->add_option("--run-speed", rain.run_speed, "running speed")
      ->required();
  rain_cmd->add_option("--body-h", rain.body_h, "frontal body profile")
      ->required();
  rain_cmd->add_option("--epsilon", rain.epsilon, "relative tie tolerance")->capture_default_str();
  rain_cmd->add_option("--format", rain.format, "json or plain")->capture_default_str()
      ->check(format_check);
  rain_cmd->callback([&] { run_rain(rain); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: argument: " << single_line(e.what()) << "\n";
    return 2;
  } catch (const dustsim::DomainError& e) {
    std::cerr << "error: domain: " << single_line(e.what()) << "\n";
    return 3;
  } catch (const dustsim::ConfigError& e) {
    std::cerr << "error: domain: " << single_line(e.what()) << "\n";
    return 3;
  } catch (const dustsim::ParseError& e) {
    std::cerr << "error: parse: " << single_line(e.what()) << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: argument: " << single_line(e.what()) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << single_line(e.what()) << "\n";
    return 1;
  }
  return 0;
}
