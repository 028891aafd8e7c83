#include "circlespec/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "circlespec/errors.hpp"

namespace circlespec {

double MatchReport::max_error() const {
  double m = 0.0;
  for (const auto& p : pairs) m = std::max(m, p.error);
  return m;
}

MatchReport match_spectra(const SpectrumResult& numeric,
                          const std::vector<PredictedEigenvalue>& predicted) {
  MatchReport report;
  std::vector<bool> used(predicted.size(), false);
  for (const auto& lam : numeric.eigenvalues) {
    std::size_t best = predicted.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t q = 0; q < predicted.size(); ++q) {
      if (used[q]) continue;
      const double d = std::abs(lam - predicted[q].value);
      if (d < best_d) {
        best_d = d;
        best = q;
      }
    }
    if (best == predicted.size()) {
      report.unmatched_numeric.push_back(lam);
      continue;
    }
    used[best] = true;
    report.pairs.push_back({lam, predicted[best].value, best, best_d});
  }
  for (std::size_t q = 0; q < predicted.size(); ++q)
    if (!used[q]) report.unmatched_predicted.push_back(q);
  return report;
}

std::vector<SweepRecord> sweep(const CircleMapSpec& prototype,
                               const std::string& param_name,
                               const NoiseSpec& noise, const SweepConfig& cfg) {
  if (!(cfg.lo < cfg.hi)) throw config_error("sweep: lo must be < hi");
  if (!(cfg.step > 0.0)) throw config_error("sweep: step must be positive");

  std::vector<SweepRecord> records;
  const int count = static_cast<int>(std::floor((cfg.hi - cfg.lo) / cfg.step + 1e-9)) + 1;
  for (int k = 0; k < count; ++k) {
    SweepRecord rec;
    rec.param = cfg.lo + k * cfg.step;
    rec.epsilon = cfg.epsilon;
    try {
      CircleMapSpec map = prototype;
      map.params[param_name] = rec.param;
      auto orbits = find_periodic_orbits(map, cfg.p_max, cfg.scan_n);

      for (const auto& o : orbits) {
        rec.orbit_summary.emplace_back(o.period, o.multiplier);
        if (o.stability == Stability::stable) ++rec.n_stable;
        if (o.stability == Stability::unstable) ++rec.n_unstable;
        if (o.stability == Stability::neutral) rec.neutral = true;
      }
      if (!rec.neutral) {
        auto predicted = predicted_spectrum(orbits, cfg.j_max);
        for (const auto& o : orbits)
          if (o.stability == Stability::stable) rec.mod1_count += o.period;
        if (static_cast<int>(predicted.size()) > cfg.top_k)
          predicted.resize(cfg.top_k);
        rec.predicted = std::move(predicted);

        if (cfg.epsilon) {
          auto op = assemble(map, noise, *cfg.epsilon, cfg.grid_n);
          auto spec = spectrum(op, cfg.top_k);
          rec.numeric = spec.eigenvalues;
          auto full = predicted_spectrum(orbits, cfg.j_max);
          auto match = match_spectra(spec, full);
          for (const auto& pr : match.pairs) rec.match_errors.push_back(pr.error);
        }
      }
    } catch (const std::exception& e) {
      rec.error = e.what();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<LambdaBifurcationEvent> detect_lambda_bifurcations(
    const std::vector<SweepRecord>& records) {
  for (std::size_t i = 1; i < records.size(); ++i)
    if (!(records[i - 1].param < records[i].param))
      throw contract_error("detect_lambda_bifurcations: records must be sorted by param");

  std::vector<LambdaBifurcationEvent> events;
  const SweepRecord* prev = nullptr;
  for (const auto& rec : records) {
    if (rec.neutral || !rec.error.empty()) continue;  // skipped; events span the gap
    if (prev && prev->mod1_count != rec.mod1_count)
      events.push_back({prev->param, rec.param, prev->mod1_count, rec.mod1_count});
    prev = &rec;
  }
  return events;
}

}  // namespace circlespec
