#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cubedist/bitvec.hpp"
#include "cubedist/rng.hpp"

namespace cubedist {

// m x n bit matrix over GF(2), rows stored as n-bit masks.
class F2Matrix {
 public:
  F2Matrix(int m, int n) : n_(n), rows_(static_cast<std::size_t>(m), BitVec(n)) {
    if (m < 0) throw std::invalid_argument("F2Matrix: negative row count");
  }

  static F2Matrix random(int m, int n, Rng& rng) {
    F2Matrix a(m, n);
    for (auto& row : a.rows_) row = rng.uniform_bits(n);
    return a;
  }

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return n_; }
  const BitVec& row(int i) const { return rows_.at(static_cast<std::size_t>(i)); }
  BitVec& row(int i) { return rows_.at(static_cast<std::size_t>(i)); }

  // (Av)_i = <row_i, v> mod 2.
  BitVec matvec(const BitVec& v) const {
    if (v.dim() != n_) throw std::invalid_argument("F2Matrix::matvec: width mismatch");
    BitVec out(rows());
    for (int i = 0; i < rows(); ++i)
      if (parity_and(rows_[static_cast<std::size_t>(i)].words(), v.words())) out.set(i, true);
    return out;
  }

  // A^T p = XOR of the rows selected by the set bits of p.
  BitVec transpose_matvec(const BitVec& p) const {
    if (p.dim() != rows()) throw std::invalid_argument("F2Matrix::transpose_matvec: width mismatch");
    BitVec out(n_);
    for (int i : p.indices()) out ^= rows_[static_cast<std::size_t>(i)];
    return out;
  }

  // In-place variant of x ^= A^T p for flat word storage (hot path).
  void xor_transpose_matvec(std::span<std::uint64_t> x, const BitVec& p) const {
    for (int i : p.indices()) {
      auto rw = rows_[static_cast<std::size_t>(i)].words();
      for (std::size_t w = 0; w < rw.size(); ++w) x[w] ^= rw[w];
    }
  }

 private:
  int n_;
  std::vector<BitVec> rows_;
};

}  // namespace cubedist
