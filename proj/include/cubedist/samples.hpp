#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cubedist/bitvec.hpp"
#include "cubedist/junta.hpp"
#include "cubedist/pmf.hpp"
#include "cubedist/rng.hpp"

namespace cubedist {

// Batch of points from {±1}^n in flat word storage (stride words per point);
// avoids per-point allocation on sampling-heavy paths.
struct SampleBatch {
  int n = 0;
  std::size_t stride = 0;
  std::vector<std::uint64_t> words;

  SampleBatch() = default;
  // Even 0-dimensional points occupy one (zero) word so counts stay intact.
  SampleBatch(int n_, std::size_t m)
      : n(n_),
        stride(n_ == 0 ? 1 : (static_cast<std::size_t>(n_) + 63) / 64),
        words(stride * m, 0) {}

  std::size_t size() const { return stride == 0 ? 0 : words.size() / stride; }

  std::span<const std::uint64_t> point(std::size_t i) const {
    return {words.data() + i * stride, stride};
  }
  std::span<std::uint64_t> point(std::size_t i) { return {words.data() + i * stride, stride}; }

  bool get_bit(std::size_t i, int coord) const {
    return (words[i * stride + (static_cast<std::size_t>(coord) >> 6)] >> (coord & 63)) & 1u;
  }

  BitVec get(std::size_t i) const {
    BitVec v(n);
    auto src = point(i);
    std::copy(src.begin(), src.end(), v.words().begin());
    return v;
  }

  void set(std::size_t i, const BitVec& v) {
    if (v.dim() != n) throw std::invalid_argument("SampleBatch::set: dimension mismatch");
    auto dst = point(i);
    std::copy(v.words().begin(), v.words().end(), dst.begin());
  }
};

struct LabeledSampleBatch {
  SampleBatch points;
  std::vector<std::int8_t> labels;  // ±1

  std::size_t size() const { return points.size(); }
};

// ---- Samplers (inverse-CDF over the core cells; free coordinates uniform) --

namespace detail {
// Cumulative array with the final entry pinned to 1 so a [0,1) draw always
// lands inside the table.
inline std::vector<double> cumulative(const DensePmf& p) {
  std::vector<double> cum(p.probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < p.probs.size(); ++i) {
    acc += p.probs[i];
    cum[i] = acc;
  }
  cum.back() = 1.0;
  return cum;
}
inline std::uint32_t draw_cell(const std::vector<double>& cum, Rng& rng) {
  const double u = rng.uniform();
  return static_cast<std::uint32_t>(
      std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
}
}  // namespace detail

inline SampleBatch sample(const DensePmf& p, std::size_t m, Rng& rng) {
  const auto cum = detail::cumulative(p);
  SampleBatch out(p.dim, m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint32_t cell = detail::draw_cell(cum, rng);
    out.point(i)[0] = cell;
  }
  return out;
}

inline SampleBatch sample(const JuntaDistribution& d, std::size_t m, Rng& rng) {
  const auto cum = detail::cumulative(d.core);
  const auto rel = d.relevant.indices();
  SampleBatch out(d.n, m);
  for (std::size_t i = 0; i < m; ++i) {
    auto pt = out.point(i);
    rng.fill_uniform_words(pt, d.n);
    const std::uint32_t cell = detail::draw_cell(cum, rng);
    for (std::size_t t = 0; t < rel.size(); ++t) {
      const std::size_t w = static_cast<std::size_t>(rel[t]) >> 6;
      const std::uint64_t bit = std::uint64_t{1} << (rel[t] & 63);
      if ((cell >> t) & 1u)
        pt[w] |= bit;
      else
        pt[w] &= ~bit;
    }
  }
  return out;
}

// Branches uniform-vs-parity with probability 2*eta; the parity half is drawn
// uniformly and its parity fixed by flipping the lowest relevant coordinate.
inline SampleBatch sample(const NoisyParityDistribution& d, std::size_t m, Rng& rng) {
  SampleBatch out(d.n, m);
  const int lowest = d.relevant.indices().front();
  const std::size_t lw = static_cast<std::size_t>(lowest) >> 6;
  const std::uint64_t lbit = std::uint64_t{1} << (lowest & 63);
  const auto jw = d.relevant.words();
  for (std::size_t i = 0; i < m; ++i) {
    auto pt = out.point(i);
    rng.fill_uniform_words(pt, d.n);
    if (rng.bernoulli(2.0 * d.eta)) continue;  // uniform branch
    const int want = (d.sign == +1) ? 0 : 1;   // chi_J = sign <=> |J∩x| parity
    if (parity_and(jw, pt) != want) pt[lw] ^= lbit;
  }
  return out;
}

// ---- Projection and histograms ---------------------------------------------

// Coordinate extraction in the sorted order of s; output dimension |s|.
inline SampleBatch project_samples(const SampleBatch& batch, const BitVec& s) {
  if (s.dim() != batch.n) throw std::invalid_argument("project_samples: dimension mismatch");
  const auto idx = s.indices();
  SampleBatch out(static_cast<int>(idx.size()), batch.size());
  for (std::size_t i = 0; i < batch.size(); ++i) {
    std::uint64_t v = 0;
    for (std::size_t t = 0; t < idx.size(); ++t)
      if (batch.get_bit(i, idx[t])) v |= std::uint64_t{1} << t;
    if (!idx.empty()) out.point(i)[0] = v;
  }
  return out;
}

inline std::vector<std::uint32_t> histogram(const SampleBatch& batch) {
  if (batch.n > kMaxDenseDim) throw std::invalid_argument("histogram: dimension outside dense range");
  std::vector<std::uint32_t> counts(std::size_t{1} << batch.n, 0);
  for (std::size_t i = 0; i < batch.size(); ++i) ++counts[batch.point(i)[0]];
  return counts;
}

inline DensePmf empirical_pmf(const SampleBatch& batch) {
  if (batch.size() == 0) throw std::invalid_argument("empirical_pmf: empty batch");
  const auto counts = histogram(batch);
  DensePmf p;
  p.dim = batch.n;
  p.probs.resize(counts.size());
  const double inv = 1.0 / static_cast<double>(batch.size());
  for (std::size_t i = 0; i < counts.size(); ++i) p.probs[i] = counts[i] * inv;
  return p;
}

// Empirical bias of one character: (1/m) * sum_i chi_A(x_i).
inline double empirical_bias(const SampleBatch& batch, const BitVec& subset) {
  if (subset.dim() != batch.n) throw std::invalid_argument("empirical_bias: dimension mismatch");
  std::int64_t acc = 0;
  const auto sw = subset.words();
  for (std::size_t i = 0; i < batch.size(); ++i)
    acc += parity_and(sw, batch.point(i)) ? -1 : +1;
  return static_cast<double>(acc) / static_cast<double>(batch.size());
}

// Column-major view: one m-bit row per coordinate. Subset histograms then
// reduce to popcounts over word blocks, which is what makes the learner's
// scan over many k-subsets affordable at large n.
struct SampleColumns {
  std::size_t m = 0;
  int n = 0;
  std::size_t wpc = 0;  // words per column
  std::vector<std::uint64_t> bits;

  static SampleColumns build(const SampleBatch& batch) {
    SampleColumns c;
    c.m = batch.size();
    c.n = batch.n;
    c.wpc = (c.m + 63) / 64;
    c.bits.assign(static_cast<std::size_t>(c.n) * c.wpc, 0);
    for (std::size_t i = 0; i < c.m; ++i) {
      const auto pt = batch.point(i);
      for (std::size_t w = 0; w < pt.size(); ++w) {
        std::uint64_t word = pt[w];
        while (word) {
          const int b = std::countr_zero(word);
          const int coord = static_cast<int>(w * 64) + b;
          c.bits[static_cast<std::size_t>(coord) * c.wpc + (i >> 6)] |=
              std::uint64_t{1} << (i & 63);
          word &= word - 1;
        }
      }
    }
    return c;
  }

  std::span<const std::uint64_t> column(int coord) const {
    return {bits.data() + static_cast<std::size_t>(coord) * wpc, wpc};
  }

  // Counts of the 2^k cells of the projection onto coords (ascending);
  // cell bit t is the value of coords[t]. scratch must hold (k+1)*wpc words.
  void subset_histogram(std::span<const int> coords, std::span<std::uint32_t> out,
                        std::vector<std::uint64_t>& scratch) const {
    const int k = static_cast<int>(coords.size());
    scratch.resize(static_cast<std::size_t>(k + 1) * wpc);
    std::uint64_t* level0 = scratch.data();
    std::fill(level0, level0 + wpc, ~std::uint64_t{0});
    if (m & 63) level0[wpc - 1] = (std::uint64_t{1} << (m & 63)) - 1;
    descend(coords, 0, 0, scratch, out);
  }

 private:
  void descend(std::span<const int> coords, int level, std::uint32_t cell,
               std::vector<std::uint64_t>& scratch, std::span<std::uint32_t> out) const {
    const std::uint64_t* acc = scratch.data() + static_cast<std::size_t>(level) * wpc;
    if (level == static_cast<int>(coords.size())) {
      std::uint32_t cnt = 0;
      for (std::size_t w = 0; w < wpc; ++w) cnt += static_cast<std::uint32_t>(std::popcount(acc[w]));
      out[cell] = cnt;
      return;
    }
    const auto col = column(coords[static_cast<std::size_t>(level)]);
    std::uint64_t* next = scratch.data() + static_cast<std::size_t>(level + 1) * wpc;
    // bit = 0 branch
    for (std::size_t w = 0; w < wpc; ++w) next[w] = acc[w] & ~col[w];
    descend(coords, level + 1, cell, scratch, out);
    // bit = 1 branch
    const std::uint64_t* acc2 = scratch.data() + static_cast<std::size_t>(level) * wpc;
    for (std::size_t w = 0; w < wpc; ++w) next[w] = acc2[w] & col[w];
    descend(coords, level + 1, cell | (std::uint32_t{1} << level), scratch, out);
  }
};

}  // namespace cubedist
