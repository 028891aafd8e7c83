#include "circlespec/csv.hpp"

#include <cmath>
#include <iomanip>

namespace circlespec {
namespace csv {

namespace {

std::ostream& prep(std::ostream& os) {
  os << std::setprecision(17);
  return os;
}

const char* stability_name(Stability s) {
  switch (s) {
    case Stability::stable: return "stable";
    case Stability::unstable: return "unstable";
    default: return "neutral";
  }
}

}  // namespace

void write_spectrum(std::ostream& os, const SpectrumResult& spec) {
  prep(os) << "index,re,im,modulus,residual\n";
  for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
    const auto lam = spec.eigenvalues[i];
    os << i << ',' << lam.real() << ',' << lam.imag() << ',' << std::abs(lam) << ',';
    if (i < spec.residuals.size()) os << spec.residuals[i];
    os << '\n';
  }
}

void write_predicted(std::ostream& os, const std::vector<PredictedEigenvalue>& predicted,
                     const std::vector<PeriodicOrbit>& orbits) {
  prep(os) << "orbit_period,multiplier,j,branch,re,im,modulus,kind\n";
  for (const auto& pe : predicted) {
    const auto& o = orbits.at(pe.orbit_id);
    os << o.period << ',' << o.multiplier << ',' << pe.j << ',' << pe.branch << ','
       << pe.value.real() << ',' << pe.value.imag() << ',' << std::abs(pe.value) << ','
       << (pe.kind == OrbitClass::stable ? "stable" : "unstable") << '\n';
  }
}

void write_density(std::ostream& os, std::span<const double> nodes,
                   std::span<const double> numeric,
                   const std::optional<std::vector<double>>& predicted) {
  prep(os) << "x,rho_numeric,rho_predicted\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    os << nodes[i] << ',' << numeric[i] << ',';
    if (predicted) os << (*predicted)[i];
    os << '\n';
  }
}

void write_sweep(std::ostream& os, const std::vector<SweepRecord>& records) {
  prep(os) << "b,n_stable_orbits,n_unstable_orbits,mod1_count,neutral_flag,top_moduli\n";
  for (const auto& rec : records) {
    os << rec.param << ',' << rec.n_stable << ',' << rec.n_unstable << ','
       << rec.mod1_count << ',' << (rec.neutral || !rec.error.empty() ? 1 : 0) << ',';
    for (std::size_t i = 0; i < rec.predicted.size(); ++i) {
      if (i) os << ';';
      os << std::abs(rec.predicted[i].value);
    }
    os << '\n';
  }
}

void write_events(std::ostream& os, const std::vector<LambdaBifurcationEvent>& events) {
  prep(os) << "b_lo,b_hi,count_before,count_after\n";
  for (const auto& e : events)
    os << e.param_lo << ',' << e.param_hi << ',' << e.count_before << ','
       << e.count_after << '\n';
}

void write_histogram(std::ostream& os, const TrajectoryStats& stats) {
  prep(os) << "bin_left,bin_right,count,density_estimate\n";
  std::uint64_t total = 0;
  for (auto c : stats.counts) total += c;
  for (std::size_t i = 0; i < stats.counts.size(); ++i) {
    const double width = stats.bin_edges[i + 1] - stats.bin_edges[i];
    const double dens =
        total ? static_cast<double>(stats.counts[i]) / (static_cast<double>(total) * width)
              : 0.0;
    os << stats.bin_edges[i] << ',' << stats.bin_edges[i + 1] << ',' << stats.counts[i]
       << ',' << dens << '\n';
  }
}

void write_orbits(std::ostream& os, const std::vector<PeriodicOrbit>& orbits) {
  prep(os) << "period,multiplier,stability,residual,points\n";
  for (const auto& o : orbits) {
    os << o.period << ',' << o.multiplier << ',' << stability_name(o.stability) << ','
       << o.residual << ',';
    for (std::size_t i = 0; i < o.points.size(); ++i) {
      if (i) os << ';';
      os << o.points[i];
    }
    os << '\n';
  }
}

}  // namespace csv
}  // namespace circlespec
