#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cubedist/bitvec.hpp"

namespace cubedist {

// Enumerates every size-k superset of must_contain exactly once, in
// lexicographic order of the chosen free coordinates. Deterministic, so
// experiment transcripts that depend on scan order are reproducible.
class KSubsetEnumerator {
 public:
  KSubsetEnumerator(int n, int k, const BitVec& must_contain)
      : base_(must_contain), pick_(0), done_(false) {
    if (must_contain.dim() != n)
      throw std::invalid_argument("KSubsetEnumerator: mask dimension mismatch");
    if (k > n || k < 0) throw std::invalid_argument("KSubsetEnumerator: k out of range");
    const int fixed = must_contain.popcount();
    if (fixed > k) throw std::invalid_argument("KSubsetEnumerator: must_contain larger than k");
    pick_ = k - fixed;
    free_.reserve(static_cast<std::size_t>(n - fixed));
    for (int i = 0; i < n; ++i)
      if (!must_contain.get(i)) free_.push_back(i);
    if (pick_ > static_cast<int>(free_.size())) {
      done_ = true;
      return;
    }
    comb_.resize(static_cast<std::size_t>(pick_));
    for (int i = 0; i < pick_; ++i) comb_[static_cast<std::size_t>(i)] = i;
  }

  std::optional<BitVec> next() {
    if (done_) return std::nullopt;
    BitVec out = base_;
    for (int c : comb_) out.set(free_[static_cast<std::size_t>(c)], true);
    advance();
    return out;
  }

 private:
  void advance() {
    if (pick_ == 0) {
      done_ = true;
      return;
    }
    const int f = static_cast<int>(free_.size());
    int i = pick_ - 1;
    while (i >= 0 && comb_[static_cast<std::size_t>(i)] == f - pick_ + i) --i;
    if (i < 0) {
      done_ = true;
      return;
    }
    ++comb_[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < pick_; ++j)
      comb_[static_cast<std::size_t>(j)] = comb_[static_cast<std::size_t>(j - 1)] + 1;
  }

  BitVec base_;
  std::vector<int> free_;
  std::vector<int> comb_;
  int pick_;
  bool done_;
};

}  // namespace cubedist
