#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cubedist/bitvec.hpp"
#include "cubedist/pmf.hpp"
#include "cubedist/spectrum.hpp"

namespace cubedist {

// Extracts the coordinates of subset (ascending) from x as a small cell mask;
// bit t of the result is coordinate number t within the subset.
inline std::uint32_t restrict_to(const BitVec& x, const BitVec& subset) {
  x.require_same_dim(subset);
  std::uint32_t out = 0;
  int t = 0;
  for (int i : subset.indices()) {
    if (x.get(i)) out |= std::uint32_t{1} << t;
    ++t;
  }
  return out;
}

// Distribution on {±1}^n whose mass function depends only on the coordinates
// in `relevant`; the remaining coordinates are uniform and independent. The
// full mass at x is core(x restricted to relevant) * 2^{-(n-|relevant|)}.
// 2^n values are never materialized: evaluators and marginals factor through
// the core, so n may be far larger than the dense limit.
struct JuntaDistribution {
  int n = 0;
  BitVec relevant;
  DensePmf core;

  JuntaDistribution() = default;
  JuntaDistribution(int n_, BitVec relevant_, DensePmf core_)
      : n(n_), relevant(std::move(relevant_)), core(std::move(core_)) {
    if (relevant.dim() != n) throw std::invalid_argument("JuntaDistribution: mask dimension");
    if (core.dim != relevant.popcount())
      throw std::invalid_argument("JuntaDistribution: core dimension must match |relevant|");
  }

  static JuntaDistribution uniform_dist(int n) {
    return JuntaDistribution(n, BitVec(n), DensePmf::uniform(0));
  }

  int junta_arity() const { return core.dim; }

  // Probability mass at x. Underflows for very large n; prefer
  // normalized_mass when only ratios against uniform matter.
  double evaluate(const BitVec& x) const {
    return core[restrict_to(x, relevant)] * std::ldexp(1.0, -(n - core.dim));
  }

  // 2^n times the mass at x = core(x|_J) * 2^{|J|}; stable for any n.
  double normalized_mass(const BitVec& x) const {
    return core[restrict_to(x, relevant)] * static_cast<double>(std::uint64_t{1} << core.dim);
  }

  DensePmf dense_expand() const {
    DensePmf::check_dense_dim(n);
    DensePmf out;
    out.dim = n;
    out.probs.resize(std::size_t{1} << n);
    for (std::uint32_t cell = 0; cell < out.probs.size(); ++cell) {
      std::uint32_t idx = 0;
      int t = 0;
      for (int i : relevant.indices()) {
        if ((cell >> i) & 1u) idx |= std::uint32_t{1} << t;
        ++t;
      }
      out.probs[cell] = core[idx] * std::ldexp(1.0, -(n - core.dim));
    }
    return out;
  }
};

// Mixture (1-2*eta)*ParityDistribution(J, sign) + 2*eta*Uniform. Its
// normalized spectrum is c(empty)=1, c(J)=sign*(1-2*eta), zero elsewhere.
struct NoisyParityDistribution {
  int n = 0;
  BitVec relevant;
  int sign = +1;
  double eta = 0.0;

  NoisyParityDistribution(int n_, BitVec relevant_, int sign_, double eta_)
      : n(n_), relevant(std::move(relevant_)), sign(sign_), eta(eta_) {
    if (relevant.dim() != n) throw std::invalid_argument("NoisyParityDistribution: mask dimension");
    if (relevant.none()) throw std::invalid_argument("NoisyParityDistribution: empty parity set");
    if (sign != +1 && sign != -1) throw std::invalid_argument("NoisyParityDistribution: sign");
    if (eta < 0.0 || eta >= 0.5) throw std::invalid_argument("NoisyParityDistribution: eta in [0, 1/2)");
  }

  double gap() const { return 1.0 - 2.0 * eta; }

  JuntaDistribution to_junta() const {
    const int d = relevant.popcount();
    std::vector<double> probs(std::size_t{1} << d);
    const double denom = static_cast<double>(std::size_t{1} << d);
    const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << d) - 1);
    for (std::uint32_t cell = 0; cell < probs.size(); ++cell)
      probs[cell] = (1.0 + sign * gap() * chi_mask(full, cell)) / denom;
    return JuntaDistribution(n, relevant, DensePmf::validated(d, std::move(probs)));
  }
};

// Marginal of a junta onto the coordinates of S: the core is summed over
// relevant coordinates outside S and padded with uniform factors for the
// coordinates of S that are irrelevant.
inline DensePmf marginal(const JuntaDistribution& p, const BitVec& s) {
  if (s.dim() != p.n) throw std::invalid_argument("marginal: dimension mismatch");
  const auto s_idx = s.indices();
  const auto j_idx = p.relevant.indices();
  // Positions of the kept core coordinates and their slot inside S.
  std::uint32_t keep_mask = 0;  // over core coordinates
  std::vector<int> slot;        // slot[t] = bit position within S of kept coord t
  for (std::size_t t = 0; t < j_idx.size(); ++t) {
    if (s.get(j_idx[t])) {
      keep_mask |= std::uint32_t{1} << t;
      int pos = 0;
      while (s_idx[static_cast<std::size_t>(pos)] != j_idx[t]) ++pos;
      slot.push_back(pos);
    }
  }
  const DensePmf core_marg = marginal(p.core, keep_mask);
  const int out_dim = static_cast<int>(s_idx.size());
  const int pad = out_dim - core_marg.dim;
  DensePmf out;
  out.dim = out_dim;
  out.probs.assign(std::size_t{1} << out_dim, 0.0);
  const double pad_mass = std::ldexp(1.0, -pad);
  for (std::uint32_t cell = 0; cell < out.probs.size(); ++cell) {
    std::uint32_t idx = 0;
    for (std::size_t t = 0; t < slot.size(); ++t)
      if ((cell >> slot[t]) & 1u) idx |= std::uint32_t{1} << t;
    out.probs[cell] = core_marg[idx] * pad_mass;
  }
  return out;
}

// Exact L1 distance between two juntas via their joint marginal: both are
// juntas with respect to the union of the relevant sets, and projection onto
// a common relevant set preserves L1.
inline double l1_distance(const JuntaDistribution& p, const JuntaDistribution& q) {
  if (p.n != q.n) throw std::invalid_argument("l1_distance: dimension mismatch");
  const BitVec joint = p.relevant | q.relevant;
  return l1_distance(marginal(p, joint), marginal(q, joint));
}

}  // namespace cubedist
