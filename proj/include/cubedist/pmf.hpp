#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cubedist/bitvec.hpp"
#include "cubedist/wht.hpp"

namespace cubedist {

// Validation policy for probability vectors: entries below -kNegativeFloor are
// hard errors, tiny float negatives (WHT round-trip noise) are clamped to zero
// and the vector renormalized; the sum must be 1 within kSumTolerance.
inline constexpr double kSumTolerance = 1e-9;
inline constexpr double kNegativeFloor = 1e-12;

// Explicit probability mass function over {±1}^d, cells indexed by bitmask.
struct DensePmf {
  int dim = 0;
  std::vector<double> probs;

  std::size_t size() const { return probs.size(); }
  double operator[](std::uint32_t cell) const { return probs[cell]; }

  static DensePmf uniform(int d) {
    check_dense_dim(d);
    DensePmf p;
    p.dim = d;
    p.probs.assign(std::size_t{1} << d, 1.0 / static_cast<double>(std::size_t{1} << d));
    return p;
  }

  static DensePmf point_mass(int d, std::uint32_t cell) {
    check_dense_dim(d);
    DensePmf p;
    p.dim = d;
    p.probs.assign(std::size_t{1} << d, 0.0);
    p.probs.at(cell) = 1.0;
    return p;
  }

  static DensePmf validated(int d, std::vector<double> probs) {
    check_dense_dim(d);
    if (probs.size() != (std::size_t{1} << d))
      throw std::invalid_argument("DensePmf: need exactly 2^d entries");
    double sum = 0.0;
    for (double& v : probs) {
      if (v < -kNegativeFloor) throw std::invalid_argument("DensePmf: negative probability");
      if (v < 0.0) v = 0.0;
      sum += v;
    }
    if (std::abs(sum - 1.0) > kSumTolerance)
      throw std::invalid_argument("DensePmf: probabilities do not sum to 1");
    for (double& v : probs) v /= sum;
    DensePmf p;
    p.dim = d;
    p.probs = std::move(probs);
    return p;
  }

  static void check_dense_dim(int d) {
    if (d < 0 || d > kMaxDenseDim)
      throw std::invalid_argument("DensePmf: dimension outside dense range");
  }
};

inline double l1_distance(const DensePmf& p, const DensePmf& q) {
  if (p.dim != q.dim) throw std::invalid_argument("l1_distance: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < p.probs.size(); ++i) s += std::abs(p.probs[i] - q.probs[i]);
  return s;
}

inline double tv_distance(const DensePmf& p, const DensePmf& q) { return 0.5 * l1_distance(p, q); }

// Pointwise convex combination w*p + (1-w)*q.
inline DensePmf mix(const DensePmf& p, const DensePmf& q, double w) {
  if (p.dim != q.dim) throw std::invalid_argument("mix: dimension mismatch");
  if (w < 0.0 || w > 1.0) throw std::invalid_argument("mix: weight outside [0,1]");
  DensePmf out;
  out.dim = p.dim;
  out.probs.resize(p.probs.size());
  for (std::size_t i = 0; i < p.probs.size(); ++i)
    out.probs[i] = w * p.probs[i] + (1.0 - w) * q.probs[i];
  return out;
}

// Exact marginal onto the coordinates of subset_mask (a mask over the d
// coordinates). Output cell bit t corresponds to the t-th lowest set bit.
inline DensePmf marginal(const DensePmf& p, std::uint32_t subset_mask) {
  if (p.dim < 32 && (subset_mask >> p.dim) != 0)
    throw std::invalid_argument("marginal: subset outside dimension");
  const int s = std::popcount(subset_mask);
  DensePmf out;
  out.dim = s;
  out.probs.assign(std::size_t{1} << s, 0.0);
  for (std::uint32_t cell = 0; cell < p.probs.size(); ++cell) {
    // Compress the bits of cell selected by subset_mask (pext by loop).
    std::uint32_t idx = 0;
    std::uint32_t m = subset_mask;
    int t = 0;
    while (m) {
      const int b = std::countr_zero(m);
      idx |= ((cell >> b) & 1u) << t;
      ++t;
      m &= m - 1;
    }
    out.probs[idx] += p.probs[cell];
  }
  return out;
}

}  // namespace cubedist
