#pragma once

#include <cstdint>
#include <stdexcept>

#include "cubedist/bitvec.hpp"

namespace cubedist {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace detail

// Deterministic 64-bit-seeded stream (xoshiro256++ core, splitmix64 seeding).
// Identical seed gives an identical stream on every platform; no libc or
// standard-library distributions are involved anywhere, so emitted values are
// reproducible byte-for-byte. fork()/child(i) derive independent streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : base_(seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = detail::splitmix64(sm);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = detail::rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = detail::rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, 1), 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  // Unbiased integer in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below: empty range");
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  BitVec uniform_bits(int n) {
    BitVec v(n);
    auto w = v.words();
    for (auto& word : w) word = next_u64();
    if (n & 63) w[w.size() - 1] &= (std::uint64_t{1} << (n & 63)) - 1;
    return v;
  }

  void fill_uniform_words(std::span<std::uint64_t> w, int n_bits) {
    if (n_bits == 0) {
      for (auto& word : w) word = 0;
      return;
    }
    for (auto& word : w) word = next_u64();
    if (n_bits & 63) w[w.size() - 1] &= (std::uint64_t{1} << (n_bits & 63)) - 1;
  }

  // Sequential child stream; successive calls yield distinct children.
  Rng fork() { return Rng(mix(base_, 0x636C6F6E65ull + ++forks_)); }

  // Child stream addressed by index (trial forking); independent of fork().
  Rng child(std::uint64_t index) const { return Rng(mix(base_, index)); }

 private:
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a ^ detail::rotl(b, 32) ^ 0xA0761D6478BD642Full;
    std::uint64_t x = detail::splitmix64(s);
    s ^= x + b;
    return detail::splitmix64(s);
  }

  std::uint64_t s_[4];
  std::uint64_t base_;
  std::uint64_t forks_ = 0;
};

}  // namespace cubedist
