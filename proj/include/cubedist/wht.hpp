#pragma once

#include <bit>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace cubedist {

// In-place Walsh-Hadamard butterfly, unscaled: v'[A] = sum_x v[x]*chi_A(x).
// Self-inverse up to a factor 2^d. Length must be a power of two.
inline void hadamard_inplace(std::vector<double>& v) {
  const std::size_t n = v.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("hadamard_inplace: length must be a power of two");
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double a = v[j];
        const double b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

// f_hat(A) = 2^{-d} * sum_x f(x) chi_A(x), the averaged transform.
inline std::vector<double> wht_forward(std::vector<double> f) {
  hadamard_inplace(f);
  const double scale = 1.0 / static_cast<double>(f.size());
  for (double& x : f) x *= scale;
  return f;
}

// f(x) = sum_A f_hat(A) chi_A(x); inverse of wht_forward (no scaling factor).
inline std::vector<double> wht_inverse(std::vector<double> spec) {
  hadamard_inplace(spec);
  return spec;
}

inline int log2_exact(std::size_t n) {
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("log2_exact: not a power of two");
  return std::countr_zero(n);
}

}  // namespace cubedist
