#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>

#include "cubedist/pmf.hpp"
#include "cubedist/samples.hpp"

namespace cubedist {

// Tolerant identity test: distinguish ||D - P||_1 <= alpha from >= alpha+eps
// with failure probability delta. The estimator is the plain L1 distance
// between the empirical mass function and the reference; its concentration is
// what buys the additive (not multiplicative) log(1/delta) sample cost.
struct TesterConfig {
  double alpha = 0.0;
  double eps = 0.25;             // gap between the two promises
  double delta = 0.05;
  double sample_constant = 1.0;  // C in m = ceil(C * eps^-2 * (s + ln(1/delta)))

  void validate() const {
    if (alpha < 0.0 || eps <= 0.0 || alpha + eps > 2.0)
      throw std::invalid_argument("TesterConfig: need 0 <= alpha, 0 < eps, alpha+eps <= 2");
    if (delta <= 0.0 || delta >= 1.0) throw std::invalid_argument("TesterConfig: delta in (0,1)");
    if (sample_constant <= 0.0) throw std::invalid_argument("TesterConfig: C > 0");
  }
};

struct TestVerdict {
  bool close = false;
  double statistic = 0.0;
  double threshold = 0.0;
};

inline std::size_t required_samples(const TesterConfig& cfg, std::size_t support) {
  cfg.validate();
  if (support < 1) throw std::invalid_argument("required_samples: empty support");
  const double m = cfg.sample_constant / (cfg.eps * cfg.eps) *
                   (static_cast<double>(support) + std::log(1.0 / cfg.delta));
  return static_cast<std::size_t>(std::ceil(m));
}

// Histogram-level core. Verdict is Close iff the statistic is at most
// alpha + eps/2; ties resolve to Close.
inline TestVerdict tolerant_identity_test_counts(std::span<const double> reference,
                                                 std::span<const std::uint32_t> counts,
                                                 std::size_t m, const TesterConfig& cfg) {
  if (reference.size() != counts.size())
    throw std::invalid_argument("tolerant_identity_test: support mismatch");
  if (m < required_samples(cfg, reference.size()))
    throw std::invalid_argument("tolerant_identity_test: batch smaller than the sample bound");
  const double inv_m = 1.0 / static_cast<double>(m);
  double stat = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i)
    stat += std::abs(static_cast<double>(counts[i]) * inv_m - reference[i]);
  TestVerdict v;
  v.statistic = stat;
  v.threshold = cfg.alpha + cfg.eps / 2.0;
  v.close = stat <= v.threshold;
  return v;
}

inline TestVerdict tolerant_identity_test(const DensePmf& reference, const SampleBatch& batch,
                                          const TesterConfig& cfg) {
  if (batch.n != reference.dim)
    throw std::invalid_argument("tolerant_identity_test: dimension mismatch");
  const auto counts = histogram(batch);
  return tolerant_identity_test_counts(reference.probs, counts, batch.size(), cfg);
}

}  // namespace cubedist
