#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubedist {

// Dense arrays over {±1}^d are capped at 2^kMaxDenseDim cells. Ambient
// dimensions can be far larger; only masks and small cores are materialized.
inline constexpr int kMaxDenseDim = 24;

inline int parity64(std::uint64_t x) { return std::popcount(x) & 1; }

// n-bit vector backed by 64-bit words. Encodes both points of {±1}^n and
// subsets of [n]: bit i = 1 means x_i = -1 (resp. i in the subset), so XOR of
// point masks is the coordinate-wise product of the ±1 vectors.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int n) : n_(check_dim(n)), w_(word_count(n), 0) {}

  static BitVec from_u64(int n, std::uint64_t bits) {
    BitVec v(n);
    if (n < 64 && (bits >> n) != 0) throw std::invalid_argument("BitVec: bits exceed dimension");
    if (n > 0) v.w_[0] = bits;
    return v;
  }

  // 0-based coordinate indices.
  static BitVec from_indices(int n, std::span<const int> idx) {
    BitVec v(n);
    for (int i : idx) v.set(i, true);
    return v;
  }
  static BitVec from_indices(int n, std::initializer_list<int> idx) {
    return from_indices(n, std::span<const int>(idx.begin(), idx.size()));
  }

  int dim() const { return n_; }
  std::size_t word_size() const { return w_.size(); }
  std::span<const std::uint64_t> words() const { return w_; }
  std::span<std::uint64_t> words() { return w_; }

  bool get(int i) const {
    check_index(i);
    return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(int i, bool v) {
    check_index(i);
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (v)
      w_[static_cast<std::size_t>(i) >> 6] |= bit;
    else
      w_[static_cast<std::size_t>(i) >> 6] &= ~bit;
  }
  void flip(int i) {
    check_index(i);
    w_[static_cast<std::size_t>(i) >> 6] ^= std::uint64_t{1} << (i & 63);
  }

  int popcount() const {
    int c = 0;
    for (std::uint64_t w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (std::uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  BitVec& operator^=(const BitVec& o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
  }
  BitVec& operator&=(const BitVec& o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  friend BitVec operator&(BitVec a, const BitVec& b) {
    a &= b;
    return a;
  }
  BitVec& operator|=(const BitVec& o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  friend BitVec operator|(BitVec a, const BitVec& b) {
    a |= b;
    return a;
  }

  friend bool operator==(const BitVec& a, const BitVec& b) = default;

  // True if every set bit of *this is also set in o.
  bool subset_of(const BitVec& o) const {
    require_same_dim(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount()));
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        out.push_back(static_cast<int>(wi * 64) + std::countr_zero(w));
        w &= w - 1;
      }
    }
    return out;
  }

  // "0101..." with character i giving coordinate i (1 encodes -1).
  std::string to_string01() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i)
      if (get(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
  }

  void require_same_dim(const BitVec& o) const {
    if (n_ != o.n_) throw std::invalid_argument("BitVec: dimension mismatch");
  }

 private:
  static int check_dim(int n) {
    if (n < 0) throw std::invalid_argument("BitVec: negative dimension");
    return n;
  }
  void check_index(int i) const {
    if (i < 0 || i >= n_) throw std::invalid_argument("BitVec: index out of range");
  }
  static std::size_t word_count(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Parity of |a AND x| over raw word spans (no dimension check; hot paths).
inline int parity_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> x) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc ^= a[i] & x[i];
  return parity64(acc);
}

// chi_A(x) = (-1)^{|A ∩ x|} in the 0 <-> +1 encoding.
inline int chi(const BitVec& a, const BitVec& x) {
  a.require_same_dim(x);
  return parity_and(a.words(), x.words()) ? -1 : +1;
}

// Dense-core variant where masks fit a machine word (d <= kMaxDenseDim).
inline int chi_mask(std::uint32_t a, std::uint32_t x) {
  return (std::popcount(a & x) & 1) ? -1 : +1;
}

}  // namespace cubedist
