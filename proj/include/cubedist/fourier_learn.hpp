#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "cubedist/bitvec.hpp"
#include "cubedist/pmf.hpp"
#include "cubedist/rng.hpp"
#include "cubedist/samples.hpp"

namespace cubedist {

// Resampleable stream: each call draws that many fresh i.i.d. points.
using SampleSource = std::function<SampleBatch(std::size_t)>;

struct CoefficientEstimate {
  BitVec subset;
  double c_hat = 0.0;      // normalized bias estimate, in [-1, 1] up to noise
  double half_width = 0.0; // guaranteed additive accuracy (normalized)
};

// Full-spectrum learner over a small domain. The empirical Fourier estimates
// are exactly the transform of the empirical histogram, which is already a
// valid pmf, so the histogram itself attains the sup-norm guarantee
// |c_Q(J) - c_D(J)| <= eps for all J with probability 1 - delta.
inline DensePmf learn_fourier_coefficients(const SampleBatch& batch, double eps, double delta,
                                           double sample_constant) {
  if (batch.n > kMaxDenseDim)
    throw std::invalid_argument("learn_fourier_coefficients: dimension outside dense range");
  if (eps <= 0.0 || delta <= 0.0 || delta > 1.0)
    throw std::invalid_argument("learn_fourier_coefficients: bad parameters");
  const double k = static_cast<double>(batch.n);
  const double need = sample_constant / (eps * eps) * std::ldexp(1.0, batch.n) *
                      (k + std::log(1.0 / delta));
  if (static_cast<double>(batch.size()) < std::ceil(need))
    throw std::invalid_argument("learn_fourier_coefficients: batch smaller than the sample bound");
  return empirical_pmf(batch);
}

// Single normalized coefficient: c_hat = (1/m) * sum_i chi_J(x_i), accurate to
// +-eps with probability 1 - delta.
inline CoefficientEstimate estimate_single_coefficient(const SampleBatch& batch,
                                                       const BitVec& subset, double eps,
                                                       double delta, double sample_constant) {
  if (eps <= 0.0 || delta <= 0.0 || delta > 1.0)
    throw std::invalid_argument("estimate_single_coefficient: bad parameters");
  const double need = sample_constant / (eps * eps) * std::log(1.0 / delta);
  if (static_cast<double>(batch.size()) < std::ceil(need))
    throw std::invalid_argument("estimate_single_coefficient: batch smaller than the sample bound");
  CoefficientEstimate est;
  est.subset = subset;
  est.c_hat = empirical_bias(batch, subset);
  est.half_width = eps;
  return est;
}

struct CandidateSearchResult {
  BitVec chosen;
  std::vector<CoefficientEstimate> estimates;
  int rounds = 0;
  double final_gap = 0.0;  // 1 - 2*eta_bar at the halting round
};

// Multi-candidate coefficient estimation without knowledge of the noise rate.
// Halving schedule on the gap guess g = 1 - 2*eta_bar; per round a fresh batch
// estimates every candidate bias at accuracy eps*g, and the search halts once
// some |y_i| clears (1+eps)*g, which certifies the guess is at or below the
// true gap. Returns the candidate with the largest |y| among those above
// eps*g. NoCandidate (nullopt) once the gap guess falls under gap_floor.
inline std::optional<CandidateSearchResult> estimate_candidates_unknown_noise(
    const SampleSource& source, std::span<const BitVec> candidates, double eps, double delta,
    double sample_constant, double gap_floor = 0x1.0p-40) {
  if (candidates.empty()) return std::nullopt;
  if (eps <= 0.0 || eps >= 1.0) throw std::invalid_argument("candidate search: eps in (0,1)");
  const double s = static_cast<double>(candidates.size());
  for (int round = 1;; ++round) {
    const double gap = std::ldexp(1.0, -round);
    if (gap < gap_floor) return std::nullopt;
    const double m_real =
        std::ceil(sample_constant * s / (eps * eps * gap * gap) * std::log(s / delta));
    const auto batch = source(static_cast<std::size_t>(m_real));
    std::vector<double> y(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i)
      y[i] = empirical_bias(batch, candidates[i]);

    bool halt = false;
    for (double yi : y)
      if (std::abs(std::abs(yi) - eps * gap) >= gap) halt = true;
    if (!halt) continue;

    CandidateSearchResult res;
    res.rounds = round;
    res.final_gap = gap;
    double best = 0.0;
    std::size_t best_i = 0;
    bool found = false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      res.estimates.push_back({candidates[i], y[i], eps * gap});
      if (std::abs(y[i]) > eps * gap && std::abs(y[i]) >= best) {
        best = std::abs(y[i]);
        best_i = i;
        found = true;
      }
    }
    if (!found) return std::nullopt;  // halted yet nothing above threshold
    res.chosen = candidates[best_i];
    return res;
  }
}

}  // namespace cubedist
