#ifndef CIRCLESPEC_ANALYSIS_HPP
#define CIRCLESPEC_ANALYSIS_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "circlespec/asymptotics.hpp"
#include "circlespec/spectrum.hpp"

namespace circlespec {

struct MatchedPair {
  std::complex<double> numeric;
  std::complex<double> predicted;
  std::size_t predicted_index = 0;  // into the predicted list handed in
  double error = 0.0;               // |numeric - predicted|
};

struct MatchReport {
  std::vector<MatchedPair> pairs;
  std::vector<std::complex<double>> unmatched_numeric;
  std::vector<std::size_t> unmatched_predicted;
  double max_error() const;
};

/// Greedy nearest-neighbor matching in the complex plane, walking the
/// numeric eigenvalues in descending modulus; each predicted value is used
/// at most once.
MatchReport match_spectra(const SpectrumResult& numeric,
                          const std::vector<PredictedEigenvalue>& predicted);

/// Per-parameter record of a sweep. Neutral points are flagged and
/// excluded from bifurcation counting.
struct SweepRecord {
  double param = 0.0;
  int n_stable = 0;
  int n_unstable = 0;
  std::vector<std::pair<int, double>> orbit_summary;  // (period, multiplier)
  std::vector<PredictedEigenvalue> predicted;         // top-K by modulus
  int mod1_count = 0;  // = sum of stable-orbit periods (exact)
  bool neutral = false;
  std::string error;  // per-point failure, recorded rather than thrown
  std::vector<std::complex<double>> numeric;  // filled when epsilon given
  std::vector<double> match_errors;
  std::optional<double> epsilon;
};

struct SweepConfig {
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;
  int p_max = 2;
  int j_max = 3;
  int scan_n = 2048;
  int top_k = 8;
  std::optional<double> epsilon;  // when set, also run the discretized operator
  int grid_n = 512;
};

/// Sweep one named parameter of the map family across [lo, hi].
std::vector<SweepRecord> sweep(const CircleMapSpec& prototype,
                               const std::string& param_name,
                               const NoiseSpec& noise, const SweepConfig& cfg);

/// A detected change in the number of modulus-1 limiting eigenvalues.
struct LambdaBifurcationEvent {
  double param_lo = 0.0;
  double param_hi = 0.0;
  int count_before = 0;
  int count_after = 0;
};

/// One event per adjacent pair of non-neutral records whose modulus-1
/// counts differ; the interval spans any skipped neutral points.
std::vector<LambdaBifurcationEvent> detect_lambda_bifurcations(
    const std::vector<SweepRecord>& records);

}  // namespace circlespec

#endif
