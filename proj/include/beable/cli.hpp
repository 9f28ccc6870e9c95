#pragma once

// Batch front end: named experiments over the library modules, emitting
// reproducible CSV/JSON tables. One command per process, exit 0 on success,
// 1 on validation errors, 2 on numeric failures.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "beable/fock.hpp"
#include "beable/kernel.hpp"
#include "beable/measurement.hpp"
#include "beable/path_oracle.hpp"
#include "beable/spectral.hpp"
#include "beable/superop.hpp"
#include "beable/table.hpp"

namespace beable {

namespace cli_detail {

// compact round-trip-exact number for metadata
inline std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct CommonOptions {
  std::string output;  // empty: stdout
  std::string format = "csv";
  long long seed = 1;
};

inline void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->fallthrough();  // lets --config reach the parent app
  cmd->add_option("--output", common.output, "output file path (default stdout)");
  cmd->add_option("--format", common.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--seed", common.seed, "random seed (default env BEABLE_SEED)");
}

inline void finish(ResultTable& table, const std::string& command,
                   const CommonOptions& common,
                   const std::vector<std::pair<std::string, std::string>>& params) {
  std::vector<std::pair<std::string, std::string>> meta;
  meta.emplace_back("command", command);
  meta.emplace_back("seed", std::to_string(common.seed));
  for (const auto& kv : params) meta.push_back(kv);
  table.metadata = std::move(meta);
  if (common.output.empty()) {
    if (common.format == "csv")
      emit_csv(table, std::cout);
    else
      emit_json(table, std::cout);
  } else {
    write_table(table, common.output, common.format);
  }
}

// energy audit of the position-coupled dissipator
inline void run_drift(double alpha, double omega, int nmax, double t_final,
                      int steps, double coherent, const CommonOptions& common) {
  CanonicalPair c = build_canonical(nmax, omega);
  Mat H = build_hamiltonian(c.Q, c.P, omega);
  StateOperator rho0 = coherent_state(coherent, nmax);
  Superoperator L = hamiltonian_flow(H) + lindblad_original(c.Q, alpha);
  EvolutionResult ev = propagate(L, rho0, t_final, steps, &H);
  const double slope = fit_slope(ev.times, ev.energy_series);
  ResultTable table;
  table.columns = {{"time", "1/omega"},
                   {"mean_energy", "hbar*omega"},
                   {"fitted_slope", "hbar*omega^2"}};
  for (size_t i = 0; i < ev.times.size(); ++i)
    add_row(table, {ev.times[i], ev.energy_series[i], slope});
  finish(table, "drift", common,
         {{"alpha", num(alpha)},
          {"omega", num(omega)},
          {"nmax", std::to_string(nmax)},
          {"t", num(t_final)},
          {"steps", std::to_string(steps)},
          {"coherent", num(coherent)}});
}

// integer determinant identities and the positivity threshold of the grid
inline void run_kernel(int N, double omega, double T, const CommonOptions& common) {
  GridSpec grid = make_grid(N, T, omega);
  ResultTable table;
  table.columns = {{"n", "1"}, {"D", "1"}, {"Dbar", "1"}, {"Dbarbar", "1"}};
  for (int n = 1; n <= N; ++n) {
    DeterminantTriple d = recurrence_determinants(n);
    add_row(table, {double(n), double(d.D), double(d.Dbar), double(d.Dbarbar)});
  }
  const bool positive = double(N) > 2 * omega * omega * T * T;
  finish(table, "kernel", common,
         {{"N", std::to_string(N)},
          {"omega", num(omega)},
          {"T", num(T)},
          {"lambda", num(grid.lambda())},
          {"kernel_positive", positive ? "true" : "false"}});
}

// discrete-vs-closed propagator convergence at doubling resolutions
inline void run_oracle(int N, double omega, double tau, double q0, double qf,
                       bool imag_mass, const CommonOptions& common) {
  require(N >= 2, "oracle: N must be >= 2");
  const cplx mass = imag_mass ? cplx(0, 1) : cplx(1, 0);
  Amplitude exact = feynman_exact(q0, qf, tau, omega, mass);
  ResultTable table;
  table.columns = {{"N", "1"},
                   {"discrete_re", "1"},
                   {"discrete_im", "1"},
                   {"exact_re", "1"},
                   {"exact_im", "1"},
                   {"rel_error", "1"}};
  for (int n = N; n <= 4 * N; n *= 2) {
    Amplitude d = feynman_discrete(q0, qf, make_grid(n, tau, omega), mass);
    const double rel = std::abs(d.value - exact.value) / std::abs(exact.value);
    add_row(table, {double(n), d.value.real(), d.value.imag(), exact.value.real(),
                    exact.value.imag(), rel});
  }
  finish(table, "oracle", common,
         {{"N", std::to_string(N)},
          {"omega", num(omega)},
          {"tau", num(tau)},
          {"q0", num(q0)},
          {"qf", num(qf)},
          {"mass", imag_mass ? "imaginary" : "real"}});
}

// admissibility sweep of the transverse 4d spectra over the carrier
inline void run_weights(double tau, double a, double kbar_min, double kbar_max,
                        int points, const CommonOptions& common) {
  require(points >= 1, "weights: points must be >= 1");
  require(kbar_max >= kbar_min && kbar_min >= 0,
          "weights: need 0 <= kbar-min <= kbar-max");
  ResultTable table;
  table.columns = {{"kbar", "1/tau"}, {"kernel_value", "1"}, {"admissible", "1"}};
  for (int i = 0; i < points; ++i) {
    const double kb =
        points == 1 ? kbar_min
                    : kbar_min + i * (kbar_max - kbar_min) / (points - 1);
    AdmissibilityReport rep =
        em_admissibility(modulated_weight_4d(tau, std::max(kb, 1e-12), a));
    add_row(table, {kb, rep.value, rep.admissible ? 1.0 : 0.0});
  }
  finish(table, "weights", common,
         {{"tau", num(tau)},
          {"a", num(a)},
          {"kbar_min", num(kbar_min)},
          {"kbar_max", num(kbar_max)},
          {"points", std::to_string(points)}});
}

// laboratory bound chain: monitoring strength floor and blackbody density
inline void run_bounds(double e2, double tau, double a, double temperature,
                       const CommonOptions& common) {
  const double gamma = gamma_lower_bound(e2, tau, a);
  SBDensity sb = stefan_boltzmann_density(temperature);
  ResultTable table;
  table.columns = {{"gamma_bound", "natural"},
                   {"sb_erg_cm3", "erg/cm^3"},
                   {"sb_natural_cm4", "1/cm^4"}};
  add_row(table, {gamma, sb.erg_cm3, sb.natural_cm4});
  finish(table, "bounds", common,
         {{"E_typ_sq", num(e2)},
          {"tau", num(tau)},
          {"a", num(a)},
          {"temperature", num(temperature)},
          {"branch_note",
           "the two density branches are alternative unit systems related by "
           "hbar*c = 3.1615e-17 erg*cm; they are not interchangeable numbers"}});
}

// counter-readout demonstration report
inline void run_demo_measurement(int dim_object, int dim_apparatus, int trials,
                                 const CommonOptions& common) {
  BornRuleReport rep =
      born_rule_report(dim_object, dim_apparatus, trials, uint64_t(common.seed));
  ResultTable table;
  table.columns = {{"max_deviation", "1"},
                   {"max_form_deviation", "1"},
                   {"max_sum_error", "1"},
                   {"min_probability", "1"},
                   {"trials", "1"}};
  add_row(table, {rep.max_deviation, rep.max_form_deviation, rep.max_sum_error,
                  rep.min_probability, double(rep.trials)});
  finish(table, "demo-measurement", common,
         {{"dim_object", std::to_string(dim_object)},
          {"dim_apparatus", std::to_string(dim_apparatus)},
          {"trials", std::to_string(trials)}});
}

}  // namespace cli_detail

inline int cli_main(int argc, const char* const* argv) {
  CLI::App app{"beable: filtered-monitoring numerics workbench"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key-value configuration file; flags override");

  cli_detail::CommonOptions common;
  if (const char* env = std::getenv("BEABLE_SEED")) common.seed = std::atoll(env);

  // drift
  double alpha = 0.8, omega = 1.0, t_final = 5.0, coherent = 1.0;
  int nmax = 40, steps = 100;
  CLI::App* drift = app.add_subcommand("drift", "energy audit of the dissipator");
  drift->add_option("--alpha", alpha, "coupling strength");
  drift->add_option("--omega", omega, "oscillator frequency");
  drift->add_option("--nmax", nmax, "basis levels");
  drift->add_option("--t", t_final, "final time");
  drift->add_option("--steps", steps, "output steps");
  drift->add_option("--coherent", coherent, "initial coherent amplitude");
  cli_detail::add_common(drift, common);
  drift->callback([&] {
    cli_detail::run_drift(alpha, omega, nmax, t_final, steps, coherent, common);
  });

  // kernel
  int kN = 3;
  double komega = 1.0, kT = 1.0;
  CLI::App* kernel = app.add_subcommand("kernel", "discrete kernel determinants");
  kernel->add_option("--N", kN, "grid intervals");
  kernel->add_option("--omega", komega, "frequency");
  kernel->add_option("--T", kT, "total time");
  cli_detail::add_common(kernel, common);
  kernel->callback([&] { cli_detail::run_kernel(kN, komega, kT, common); });

  // oracle
  int oN = 32;
  double oomega = 1.0, otau = 1.0, oq0 = 0.3, oqf = 0.7;
  bool imag_mass = false;
  CLI::App* oracle = app.add_subcommand("oracle", "propagator convergence checks");
  oracle->add_option("--N", oN, "coarsest step count");
  oracle->add_option("--omega", oomega, "frequency");
  oracle->add_option("--tau", otau, "total time");
  oracle->add_option("--q0", oq0, "initial endpoint");
  oracle->add_option("--qf", oqf, "final endpoint");
  oracle->add_flag("--imag-mass", imag_mass, "use the imaginary-mass mode");
  cli_detail::add_common(oracle, common);
  oracle->callback([&] {
    cli_detail::run_oracle(oN, oomega, otau, oq0, oqf, imag_mass, common);
  });

  // weights
  double wtau = 1.0, wa = 2.0, wkmin = 0.0, wkmax = 3.0;
  int wpoints = 7;
  CLI::App* weights = app.add_subcommand("weights", "admissibility sweep");
  weights->add_option("--tau", wtau, "time width");
  weights->add_option("--a", wa, "spatial width");
  weights->add_option("--kbar-min", wkmin, "sweep start");
  weights->add_option("--kbar-max", wkmax, "sweep end");
  weights->add_option("--points", wpoints, "sweep points");
  cli_detail::add_common(weights, common);
  weights->callback(
      [&] { cli_detail::run_weights(wtau, wa, wkmin, wkmax, wpoints, common); });

  // bounds
  double be2 = 1.44e18, btau = 3e7, ba = 1e-4, btemp = 300.0;
  CLI::App* bounds = app.add_subcommand("bounds", "laboratory bound chain");
  bounds->add_option("--e2", be2, "typical squared field");
  bounds->add_option("--tau", btau, "averaging time");
  bounds->add_option("--a", ba, "averaging radius");
  bounds->add_option("--temperature", btemp, "blackbody temperature in kelvin");
  cli_detail::add_common(bounds, common);
  bounds->callback(
      [&] { cli_detail::run_bounds(be2, btau, ba, btemp, common); });

  // demo-measurement
  int mdo = 3, mda = 3, mtrials = 20;
  CLI::App* demo =
      app.add_subcommand("demo-measurement", "counter readout demonstration");
  demo->add_option("--dim-object", mdo, "object dimension");
  demo->add_option("--dim-apparatus", mda, "apparatus dimension");
  demo->add_option("--trials", mtrials, "random trials");
  cli_detail::add_common(demo, common);
  demo->preparse_callback([&](size_t) { common.format = "json"; });
  demo->callback(
      [&] { cli_detail::run_demo_measurement(mdo, mda, mtrials, common); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << "run with --help for usage\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace beable
