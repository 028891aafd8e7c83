#ifndef CIRCLESPEC_CSV_HPP
#define CIRCLESPEC_CSV_HPP

#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "circlespec/analysis.hpp"
#include "circlespec/orbits.hpp"
#include "circlespec/simulate.hpp"
#include "circlespec/spectrum.hpp"

namespace circlespec {
namespace csv {

// All floating-point fields are written with 17 significant digits so that
// identical runs produce byte-identical files.

/// header: index,re,im,modulus,residual (rows sorted by descending modulus)
void write_spectrum(std::ostream& os, const SpectrumResult& spec);

/// header: orbit_period,multiplier,j,branch,re,im,modulus,kind
void write_predicted(std::ostream& os, const std::vector<PredictedEigenvalue>& predicted,
                     const std::vector<PeriodicOrbit>& orbits);

/// header: x,rho_numeric,rho_predicted (predicted column blank when absent)
void write_density(std::ostream& os, std::span<const double> nodes,
                   std::span<const double> numeric,
                   const std::optional<std::vector<double>>& predicted);

/// header: b,n_stable_orbits,n_unstable_orbits,mod1_count,neutral_flag,top_moduli
void write_sweep(std::ostream& os, const std::vector<SweepRecord>& records);

/// header: b_lo,b_hi,count_before,count_after
void write_events(std::ostream& os, const std::vector<LambdaBifurcationEvent>& events);

/// header: bin_left,bin_right,count,density_estimate
void write_histogram(std::ostream& os, const TrajectoryStats& stats);

/// header: period,multiplier,stability,residual,points (points semicolon-joined)
void write_orbits(std::ostream& os, const std::vector<PeriodicOrbit>& orbits);

}  // namespace csv
}  // namespace circlespec

#endif
