#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>
#include <thread>

#include "hejc/hejc.hpp"

namespace hejc::app {

namespace {

using std::int64_t;

TrapConfig make_trap(const RunConfig& c) {
  if (c.charge && c.e_perp) {
    return TrapConfig::from_field_and_charge(*c.e_perp, *c.charge, c.depth, c.temperature);
  }
  if (c.charge) return TrapConfig::from_charge(*c.charge, c.depth, c.temperature);
  return TrapConfig::from_field(c.e_perp.value_or(1e4), c.depth, c.temperature);
}

/// E_perp for the vertical problem alone; zero is allowed here.
double pressing_field(const RunConfig& c) {
  if (c.charge) return make_trap(c).e_perp;
  return c.e_perp.value_or(1e4);
}

HydrogenSolution solve(const RunConfig& c, double e_perp) {
  if (c.n_levels < 3) throw ConfigError("config: solver.n_levels must be >= 3");
  const auto& k = constants();
  const Grid grid = Grid::with_spacing(c.z_max_bohr * k.r_B, c.spacing_bohr * k.r_B);
  StarkOptions options;
  options.check_refinement = c.refinement_check;
  return stark_solve(e_perp, c.n_levels, grid, options);
}

StepPolicy policy_from(const RunConfig& c) {
  if (!(c.tolerance > 0.0)) throw ConfigError("config: solver.tolerance must be > 0");
  StepPolicy p;
  p.tolerance = c.tolerance;
  return p;
}

Level parse_level(const std::string& s) { return s == "e" ? Level::e : Level::g; }

std::string shortest(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, ptr) : "?";
}

std::string integrator_name(Integrator i) {
  switch (i) {
    case Integrator::direct: return "direct";
    case Integrator::periodic: return "periodic";
    default: return "automatic";
  }
}

void add_drive(Document& doc, const DriveSpec& d) {
  doc.add("sideband", std::string(to_string(d.sideband)));
  doc.add("omega_0_rad_per_s", d.omega_0);
  doc.add("nu_rad_per_s", d.nu);
  doc.add("omega_l_rad_per_s", d.omega_l);
  doc.add("eta", d.eta);
  doc.add("ld_valid", d.ld_valid);
  doc.add("omega_rad_per_s", d.omega);
  doc.add("omega_tilde_rad_per_s", d.omega_tilde);
  doc.add("phase_rad", d.phase);
}

void summary_as_table(Document& doc) {
  doc.table.columns = {"quantity", "value"};
  for (const auto& [k, v] : doc.summary) doc.table.rows.push_back({k, v});
}

/// Initial Fock index for the sideband's textbook transfer.
int transfer_start(Sideband s) { return s == Sideband::red ? 1 : 0; }

RwaScenario build_scenario(const RunConfig& c) {
  RwaScenario s;
  if (c.scenario_name == "scaled-red-sideband") {
    s = scaled_red_sideband(c.omega_scale, c.scaled_eta, c.scenario_n_max.value_or(10));
  } else if (c.scenario_name == "literal-carrier") {
    s = literal_carrier(c.scenario_n_max.value_or(4));
  } else {
    const auto trap = make_trap(c);
    const auto sol = solve(c, trap.e_perp);
    s.name = "physical";
    s.drive = DriveSpec::physical(sol, trap, c.sideband, c.e_z, c.phase);
    const int n_max = c.scenario_n_max.value_or(c.initial_m + 6);
    if (c.initial_m < 0 || c.initial_m > n_max - 2) {
      throw ConfigError("config: scenario.initial_m must lie in [0, scenario.n_max - 2]");
    }
    const Level level = parse_level(c.initial_level);
    s.initial = HybridState::fock(n_max, c.initial_m, level);
    s.duration = transfer_duration(c.initial_m, level, c.sideband, s.drive.omega, s.drive.eta);
  }
  if (c.duration) {
    if (!(*c.duration >= 0.0)) throw ConfigError("config: scenario.duration_s must be >= 0");
    s.duration = *c.duration;
  }
  return s;
}

Document spectrum(const RunConfig& c, int) {
  const auto sol = solve(c, pressing_field(c));
  Document doc;
  doc.add("e_perp_v_per_m", sol.e_perp);
  doc.add("n_points", static_cast<int64_t>(sol.grid.n_points));
  doc.add("z_max_m", sol.grid.z_max);
  doc.add("spacing_m", sol.grid.spacing());
  doc.add("refinement_change", sol.refinement_change);
  const auto ge = transition(sol, 1, 2);
  const auto ea = transition(sol, 2, 3);
  doc.add("omega_0_rad_per_s", ge.omega);
  doc.add("omega_ea_rad_per_s", ea.omega);
  doc.add("omega_ratio_ea_ge", ea.omega / ge.omega);
  doc.add("r_b_m", constants().r_B);
  doc.add("z_ge_r_b", ge.z_ij / constants().r_B);
  doc.warnings = sol.warnings;

  doc.table.columns = {"quantity", "i", "j", "value", "unit"};
  const int n = sol.level_count();
  for (int i = 1; i <= n; ++i) {
    doc.table.rows.push_back({"energy", int64_t{i}, int64_t{i}, sol.energy(i), "J"});
    doc.table.rows.push_back(
        {"energy", int64_t{i}, int64_t{i}, to_electronvolt(sol.energy(i)), "eV"});
    doc.table.rows.push_back(
        {"energy_ratio", int64_t{i}, int64_t{1}, sol.energy(i) / sol.energy(1), "1"});
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      doc.table.rows.push_back(
          {"omega", int64_t{i}, int64_t{j}, transition(sol, i, j).omega, "rad/s"});
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      doc.table.rows.push_back(
          {"z", int64_t{i}, int64_t{j}, sol.z_element(i, j) / constants().r_B, "r_B"});
    }
  }
  if (!c.eigenfunctions_path.empty()) {
    if (c.eigenfunctions_stride < 1) throw ConfigError("config: output.eigenfunctions_stride must be >= 1");
    std::ostringstream os;
    write_eigenfunctions_csv(os, sol, static_cast<std::size_t>(c.eigenfunctions_stride));
    write_atomic(c.eigenfunctions_path, os.str());
  }
  return doc;
}

Document trap(const RunConfig& c, int) {
  const auto cfg = make_trap(c);
  const double nu = trap_frequency(cfg);
  const auto sol = solve(c, cfg.e_perp);
  const double omega_0 = transition(sol, 1, 2).omega;
  Document doc;
  doc.add("e_perp_v_per_m", cfg.e_perp);
  if (cfg.charge) doc.add("charge_c", *cfg.charge);
  doc.add("depth_m", cfg.depth);
  doc.add("temperature_k", cfg.temperature);
  doc.add("nu_rad_per_s", nu);
  doc.add("vibrational_temperature_k", vibrational_temperature(nu));
  if (cfg.temperature > 0.0) {
    doc.add("mean_occupation", thermal_distribution(nu, cfg.temperature, 0).mean_m);
  }
  doc.add("omega_0_rad_per_s", omega_0);
  for (Sideband s : {Sideband::red, Sideband::carrier, Sideband::blue}) {
    const auto ld = lamb_dicke(omega_0, nu, index_of(s));
    doc.add("eta_" + std::string(to_string(s)), ld.eta);
    doc.add("ld_valid_" + std::string(to_string(s)), ld.ld_valid);
  }
  doc.warnings = sol.warnings;
  summary_as_table(doc);
  return doc;
}

Document drive(const RunConfig& c, int) {
  const auto cfg = make_trap(c);
  const auto sol = solve(c, cfg.e_perp);
  const auto d = DriveSpec::physical(sol, cfg, c.sideband, c.e_z, c.phase);
  Document doc;
  add_drive(doc, d);
  const int m0 = transfer_start(c.sideband);
  const double transfer = transfer_duration(m0, Level::g, c.sideband, d.omega, d.eta);
  doc.add("pi_pulse_s", pi_pulse_duration(d.omega, d.eta, 0, c.sideband));
  doc.add("transfer_initial_m", int64_t{m0});
  doc.add("transfer_s", transfer);
  PulseSequence seq;
  seq.add_pulse(c.sideband, transfer, c.phase, d.omega, d.eta);
  const auto budget = coherence_budget(seq, c.coherence_budget);
  doc.add("coherence_budget_s", budget.budget);
  doc.add("budget_fraction", budget.total / budget.budget);
  doc.add("feasible", budget.feasible);
  doc.warnings = sol.warnings;

  const int k = std::abs(index_of(c.sideband));
  doc.table.columns = {"m", "omega_m_rad_per_s", "pi_pulse_s"};
  for (int m = 0; m <= std::min(c.n_max, 10); ++m) {
    doc.table.rows.push_back({int64_t{m}, rabi_mk(m, k, d.omega, d.eta),
                              pi_pulse_duration(d.omega, d.eta, m, c.sideband)});
  }
  return doc;
}

Document thermal(const RunConfig& c, int workers) {
  const double nu = c.thermal_nu ? *c.thermal_nu : trap_frequency(make_trap(c));
  const int n = static_cast<int>(c.temperatures.size());
  std::vector<ThermalDistribution> dists(static_cast<std::size_t>(n));
  for (double t : c.temperatures) {
    if (!(t > 0.0)) throw ConfigError("config: thermal.temperatures_k must be > 0");
  }
  parallel_for(n, workers, [&](int i) {
    dists[static_cast<std::size_t>(i)] =
        thermal_distribution(nu, c.temperatures[static_cast<std::size_t>(i)], c.thermal_n_max);
  });

  Document doc;
  doc.add("nu_rad_per_s", nu);
  doc.add("vibrational_temperature_k", vibrational_temperature(nu));
  doc.table.columns = {"m"};
  for (int i = 0; i < n; ++i) {
    const auto& d = dists[static_cast<std::size_t>(i)];
    const std::string p = "t" + std::to_string(i + 1) + ".";
    doc.add(p + "temperature_k", d.temperature);
    doc.add(p + "mean_m", d.mean_m);
    doc.add(p + "ground_population", d.probs[0]);
    doc.add(p + "ground_deficit", d.ground_deficit);
    doc.add(p + "tail_mass", d.tail_mass);
    doc.table.columns.push_back("p_" + shortest(d.temperature) + "k");
  }
  for (int m = 0; m <= c.thermal_n_max; ++m) {
    std::vector<Cell> row{int64_t{m}};
    for (const auto& d : dists) row.emplace_back(d.probs[static_cast<std::size_t>(m)]);
    doc.table.rows.push_back(std::move(row));
  }
  return doc;
}

Document evolve(const RunConfig& c, int workers) {
  const RwaScenario s = build_scenario(c);
  if (c.samples < 2) throw ConfigError("config: scenario.samples must be >= 2");
  Document doc;
  doc.add("scenario", s.name);
  doc.add("model", c.model);
  add_drive(doc, s.drive);
  doc.add("duration_s", s.duration);
  doc.add("n_max", int64_t{s.initial.n_max()});

  std::vector<TraceRow> rows;
  if (c.model == "analytic") {
    rows = analytic_trace(s.initial, s.drive, s.duration, c.samples);
  } else {
    const auto model = c.model == "full" ? CouplingModel::full : CouplingModel::lamb_dicke;
    const StepPolicy policy = policy_from(c);
    rows.resize(static_cast<std::size_t>(c.samples));
    std::vector<Propagation> props(rows.size(), Propagation{s.initial});
    parallel_for(c.samples, workers, [&](int i) {
      const double t = s.duration * i / (c.samples - 1);
      props[static_cast<std::size_t>(i)] = numeric_evolve(s.initial, s.drive, t, model, policy);
      rows[static_cast<std::size_t>(i)] = observe(t, props[static_cast<std::size_t>(i)].state);
    });
    const auto& last = props.back();
    doc.add("steps", static_cast<int64_t>(last.steps));
    doc.add("refinements", int64_t{last.refinements});
    doc.add("integrator", integrator_name(last.integrator));
    doc.add("norm_drift", last.norm_drift);
  }
  doc.add("final_p_e", rows.back().p_e);
  doc.add("final_mean_m", rows.back().mean_m);

  doc.table.columns = {"t_s", "p_g", "p_e", "mean_m", "norm"};
  for (const auto& r : rows) doc.table.rows.push_back({r.t, r.p_g, r.p_e, r.mean_m, r.norm});
  return doc;
}

Document validate(const RunConfig& c, int workers) {
  const RwaScenario s = build_scenario(c);
  const StepPolicy policy = policy_from(c);
  const HybridState exact = analytic_evolve(s.initial, s.drive, s.duration);
  std::vector<Propagation> runs(2, Propagation{s.initial});
  parallel_for(2, workers, [&](int i) {
    const auto model = i == 0 ? CouplingModel::full : CouplingModel::lamb_dicke;
    runs[static_cast<std::size_t>(i)] = numeric_evolve(s.initial, s.drive, s.duration, model, policy);
  });
  const HybridState& full = runs[0].state;
  const HybridState& ld = runs[1].state;

  Document doc;
  doc.add("scenario", s.name);
  add_drive(doc, s.drive);
  doc.add("duration_s", s.duration);
  doc.add("n_max", int64_t{s.initial.n_max()});
  const double f = fidelity(exact, full);
  doc.add("fidelity", f);
  doc.add("infidelity", 1.0 - f);
  doc.add("ld_overlap", fidelity(ld, full));
  doc.add("p_e_analytic", exact.population(Level::e));
  doc.add("p_e_full", full.population(Level::e));
  doc.add("p_e_lamb_dicke", ld.population(Level::e));
  doc.add("norm_drift", runs[0].norm_drift);
  doc.add("guard_population", full.guard_population());
  doc.add("steps", static_cast<int64_t>(runs[0].steps));
  doc.add("refinements", int64_t{runs[0].refinements});
  doc.add("integrator", integrator_name(runs[0].integrator));
  doc.add("fidelity_ok", f >= 0.99);

  doc.table.columns = {"m", "level", "p_analytic", "p_full", "p_lamb_dicke"};
  for (int m = 0; m <= s.initial.n_max(); ++m) {
    for (Level l : {Level::g, Level::e}) {
      doc.table.rows.push_back({int64_t{m}, std::string(l == Level::g ? "g" : "e"),
                                exact.population(m, l), full.population(m, l),
                                ld.population(m, l)});
    }
  }
  return doc;
}

Document cool(const RunConfig& c, int) {
  const auto cfg = make_trap(c);
  const auto sol = solve(c, cfg.e_perp);
  const auto d = DriveSpec::physical(sol, cfg, Sideband::red, c.e_z, c.phase);
  if (c.n_max < 2) throw ConfigError("config: solver.n_max must be >= 2");
  if (!(c.initial_mean_m >= 0.0)) throw ConfigError("config: cool.initial_mean_m must be >= 0");
  const MixedState initial = thermal_mixture(thermal_from_mean(c.initial_mean_m, c.n_max));

  CoolingPlan plan;
  plan.schedule = c.cool_schedule == "idealized" ? CoolingSchedule::idealized
                  : c.cool_schedule == "fixed"   ? CoolingSchedule::fixed
                                                 : CoolingSchedule::sweep;
  plan.target_m = c.target_m;
  plan.sweep_top = c.sweep_top;
  plan.max_cycles = c.max_cycles;
  plan.target_ground = c.target_ground;
  const CoolingRun run = run_cooling(initial, plan, d);

  Document doc;
  doc.add("schedule", c.cool_schedule);
  doc.add("eta", d.eta);
  doc.add("omega_rad_per_s", d.omega);
  doc.add("cycles", int64_t{run.cycles()});
  doc.add("reached", run.reached);
  doc.add("monotone", run.monotone);
  doc.add("final_ground_population", run.history.back().ground_population);
  doc.add("final_mean_m", run.history.back().mean_m);
  doc.add("total_duration_s", run.sequence.total_duration());
  if (!run.sequence.empty()) {
    const auto budget = coherence_budget(run.sequence, c.coherence_budget);
    doc.add("coherence_budget_s", budget.budget);
    doc.add("budget_fraction", budget.total / budget.budget);
    doc.add("feasible", budget.feasible);
  }
  doc.table.columns = {"cycle", "target_m", "elapsed_s", "ground_population", "mean_m"};
  for (const auto& r : run.history) {
    doc.table.rows.push_back(
        {int64_t{r.cycle}, int64_t{r.target_m}, r.elapsed, r.ground_population, r.mean_m});
  }
  return doc;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"spectrum", "trap",     "drive",   "thermal",
                                                 "evolve",   "cool",     "validate"};
  return names;
}

void parallel_for(int n, int workers, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  const int threads = std::clamp(workers, 1, n);
  if (threads == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += threads) {
        try {
          fn(i);
        } catch (...) {
          errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

Document run_command(std::string_view name, const RunConfig& cfg, int workers) {
  Document doc;
  if (name == "spectrum") doc = spectrum(cfg, workers);
  else if (name == "trap") doc = trap(cfg, workers);
  else if (name == "drive") doc = drive(cfg, workers);
  else if (name == "thermal") doc = thermal(cfg, workers);
  else if (name == "evolve") doc = evolve(cfg, workers);
  else if (name == "cool") doc = cool(cfg, workers);
  else if (name == "validate") doc = validate(cfg, workers);
  else throw ConfigError("unknown command '" + std::string(name) + "'");
  doc.command = std::string(name);
  doc.config = cfg.resolved();
  return doc;
}

}  // namespace hejc::app
