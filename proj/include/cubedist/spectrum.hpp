#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "cubedist/pmf.hpp"
#include "cubedist/wht.hpp"

namespace cubedist {

// Normalized Fourier coefficients of a distribution: c(A) = E_{x~D}[chi_A(x)],
// i.e. 2^d times the transform of the mass function. Scale-free in the
// dimension: c(empty) = 1 and |c(A)| <= 1 for every pmf, so thresholds stated
// on c carry no 2^{-d} factors.
struct BiasSpectrum {
  int dim = 0;
  std::vector<double> c;

  double operator[](std::uint32_t subset) const { return c[subset]; }
  std::size_t size() const { return c.size(); }
};

inline BiasSpectrum bias_spectrum(const DensePmf& p) {
  BiasSpectrum s;
  s.dim = p.dim;
  s.c = p.probs;
  hadamard_inplace(s.c);  // c(A) = sum_x p(x) chi_A(x)
  return s;
}

// Inverse direction: p(x) = 2^{-d} sum_A c(A) chi_A(x), validated as a pmf.
inline DensePmf pmf_from_bias(const BiasSpectrum& s) {
  std::vector<double> v = s.c;
  hadamard_inplace(v);
  const double scale = 1.0 / static_cast<double>(v.size());
  for (double& x : v) x *= scale;
  return DensePmf::validated(s.dim, std::move(v));
}

}  // namespace cubedist
