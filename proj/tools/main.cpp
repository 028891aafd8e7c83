// circlespec: spectral analysis of Gaussian perturbations of circle maps.
//
// Subcommands map onto the library pipelines and emit machine-readable CSV
// for external plotting. Every run with the same flags (and seed) produces
// byte-identical output.

#include <CLI11.hpp>
#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "circlespec/analysis.hpp"
#include "circlespec/asymptotics.hpp"
#include "circlespec/csv.hpp"
#include "circlespec/errors.hpp"
#include "circlespec/simulate.hpp"
#include "circlespec/spectrum.hpp"

namespace {

using namespace circlespec;

std::ofstream open_out(const std::filesystem::path& dir, const std::string& name) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto path = dir / name;
  std::ofstream os(path);
  if (!os) throw io_error("cannot open output file " + path.string());
  return os;
}

NoiseSpec make_noise(const std::string& profile, double sigma, double amp) {
  if (profile == "constant") return NoiseSpec::constant(sigma);
  if (profile == "cosine") return NoiseSpec::cosine(sigma, amp);
  throw config_error("unknown noise profile '" + profile + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical spectral analysis of noisy circle maps"};
  app.fallthrough();
  app.set_config("--config", "", "flat key=value config file; flags win on conflict");

  std::string out_dir = ".";
  std::string family = "sine-circle";
  double b = 2.2;
  std::string sigma_profile = "constant";
  double sigma = 1.0, sigma_amp = 0.0;
  double eps = 0.05;
  int grid_n = 512, top_k = 8, p_max = 2, j_max = 3, scan_n = 2048, bins = 256;
  double b_lo = 2.0, b_hi = 2.5, step = 0.001;
  std::uint64_t seed = 1, steps = 1000000, burn_in = 10000;
  double x0 = 0.0;
  double ar_c = 0.5, ar_L = 13.1;
  bool with_predicted = false;

  app.add_option("--out", out_dir, "output directory");
  app.add_option("--family", family, "map family identifier");
  app.add_option("--b", b, "sine-circle parameter b");
  app.add_option("--sigma-profile", sigma_profile, "noise profile: constant|cosine");
  app.add_option("--sigma", sigma, "noise amplitude (constant value or cosine base)")
      ->check(CLI::PositiveNumber);
  app.add_option("--sigma-amp", sigma_amp, "cosine profile amplitude");
  app.add_option("--eps", eps, "noise scale epsilon")->check(CLI::PositiveNumber);
  app.add_option("--grid-n", grid_n, "quadrature grid size")->check(CLI::Range(64, 1 << 16));
  app.add_option("--top-k", top_k, "number of eigenvalues to report")
      ->check(CLI::PositiveNumber);
  app.add_option("--pmax", p_max, "maximal orbit period searched")
      ->check(CLI::PositiveNumber);
  app.add_option("--jmax", j_max, "maximal eigenvalue index j")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--scan-n", scan_n, "samples for the orbit root scan")
      ->check(CLI::Range(256, 1 << 22));
  app.add_option("--b-lo", b_lo, "sweep lower bound");
  app.add_option("--b-hi", b_hi, "sweep upper bound");
  app.add_option("--step", step, "sweep step")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "RNG seed (one stream per run)");
  app.add_option("--steps", steps, "simulation steps");
  app.add_option("--burn-in", burn_in, "discarded initial steps");
  app.add_option("--bins", bins, "histogram bins")->check(CLI::Range(16, 1 << 22));
  app.add_option("--x0", x0, "simulation start point");
  app.add_option("--c", ar_c, "AR oracle contraction/expansion factor");
  app.add_option("--L", ar_L, "AR oracle domain half-width")->check(CLI::PositiveNumber);
  app.add_flag("--predicted", with_predicted, "also emit the predicted density column");

  auto* cmd_orbits = app.add_subcommand("orbits", "locate periodic orbits");
  auto* cmd_spectrum = app.add_subcommand("spectrum", "discretize and eigensolve");
  auto* cmd_predict = app.add_subcommand("predict", "zero-noise limiting eigenvalues");
  auto* cmd_density = app.add_subcommand("density", "stationary density");
  auto* cmd_sweep = app.add_subcommand("sweep", "parameter sweep + bifurcation detection");
  auto* cmd_simulate = app.add_subcommand("simulate", "Monte Carlo histogram");
  auto* cmd_oracle = app.add_subcommand("oracle-ar", "AR(1) line-operator oracle");
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;  // validation rejections exit with status 1
  }

  try {
    CircleMapSpec map{family, {{"b", b}}};
    const NoiseSpec noise = make_noise(sigma_profile, sigma, sigma_amp);
    const std::filesystem::path out{out_dir};

    if (app.got_subcommand(cmd_orbits)) {
      auto orbits = find_periodic_orbits(map, p_max, scan_n);
      auto os = open_out(out, "orbits.csv");
      csv::write_orbits(os, orbits);
      std::cout << "found " << orbits.size() << " orbit(s) up to period " << p_max
                << " -> orbits.csv\n";
    } else if (app.got_subcommand(cmd_spectrum)) {
      auto op = assemble(map, noise, eps, grid_n);
      if (op.under_resolved)
        std::cerr << "warning: grid under-resolves the kernel (h > eps*sigma_lb/4)\n";
      auto spec = spectrum(op, top_k, /*with_vectors=*/true);
      auto os = open_out(out, "spectrum.csv");
      csv::write_spectrum(os, spec);
      std::cout << "top |lambda|: " << std::abs(spec.eigenvalues.front()) << " ... "
                << std::abs(spec.eigenvalues.back()) << " (" << spec.eigenvalues.size()
                << " rows) -> spectrum.csv\n";
    } else if (app.got_subcommand(cmd_predict)) {
      auto orbits = find_periodic_orbits(map, p_max, scan_n);
      auto predicted = predicted_spectrum(orbits, j_max);
      auto os = open_out(out, "predicted.csv");
      csv::write_predicted(os, predicted, orbits);
      std::cout << predicted.size() << " predicted eigenvalue(s) -> predicted.csv\n";
    } else if (app.got_subcommand(cmd_density)) {
      auto op = assemble(map, noise, eps, grid_n);
      if (op.under_resolved)
        std::cerr << "warning: grid under-resolves the kernel (h > eps*sigma_lb/4)\n";
      auto rho = invariant_density(op);
      std::optional<std::vector<double>> rho_pred;
      if (with_predicted) {
        auto orbits = find_periodic_orbits(map, p_max, scan_n);
        const PeriodicOrbit* stable = nullptr;
        for (const auto& o : orbits)
          if (o.stability == Stability::stable) {
            stable = &o;
            break;
          }
        if (!stable) throw config_error("density --predicted: no stable orbit found");
        auto mode = predicted_mode(*stable, noise, 0, 0, eps, op.grid.nodes);
        rho_pred.emplace(op.grid.n);
        for (int i = 0; i < op.grid.n; ++i) (*rho_pred)[i] = mode.samples[i].real();
      }
      auto os = open_out(out, "density.csv");
      csv::write_density(os, op.grid.nodes, rho, rho_pred);
      std::cout << "stationary density on " << grid_n << " nodes -> density.csv\n";
    } else if (app.got_subcommand(cmd_sweep)) {
      SweepConfig cfg;
      cfg.lo = b_lo;
      cfg.hi = b_hi;
      cfg.step = step;
      cfg.p_max = p_max;
      cfg.j_max = j_max;
      cfg.scan_n = scan_n;
      cfg.top_k = top_k;
      cfg.grid_n = grid_n;
      if (app.count("--eps") > 0) cfg.epsilon = eps;
      auto records = sweep(map, "b", noise, cfg);
      auto events = detect_lambda_bifurcations(records);
      auto os = open_out(out, "sweep.csv");
      csv::write_sweep(os, records);
      auto es = open_out(out, "events.csv");
      csv::write_events(es, events);
      std::cout << records.size() << " sweep rows, " << events.size()
                << " bifurcation event(s) -> sweep.csv, events.csv\n";
    } else if (app.got_subcommand(cmd_simulate)) {
      auto stats = simulate_chain(map, noise, eps, x0, steps, burn_in, bins, seed);
      auto os = open_out(out, "histogram.csv");
      csv::write_histogram(os, stats);
      std::cout << (steps - burn_in) << " recorded steps over " << bins
                << " bins -> histogram.csv\n";
    } else if (app.got_subcommand(cmd_oracle)) {
      auto op = build_local_ar_operator(ar_c, sigma, ar_L, grid_n);
      auto spec = spectrum(op, top_k, /*with_vectors=*/true);
      auto os = open_out(out, "spectrum.csv");
      csv::write_spectrum(os, spec);
      std::cout << "AR oracle c=" << ar_c << ": top |lambda| "
                << std::abs(spec.eigenvalues.front()) << " -> spectrum.csv\n";
    }
  } catch (const numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const io_error& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
