#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

#include "cubedist/constants.hpp"
#include "cubedist/pmf.hpp"
#include "cubedist/rng.hpp"
#include "cubedist/samples.hpp"
#include "cubedist/tester.hpp"

using namespace cubedist;

namespace {

SampleBatch batch_from_cells(int d, const std::vector<std::uint32_t>& cells) {
  SampleBatch b(d, cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) b.point(i)[0] = cells[i];
  return b;
}

// A pmf over 2^d cells at L1 distance exactly `dist` from uniform.
DensePmf shifted_from_uniform(int d, double dist) {
  const std::size_t cells = std::size_t{1} << d;
  std::vector<double> p(cells, 1.0 / static_cast<double>(cells));
  const double bump = dist / static_cast<double>(cells);
  for (std::size_t i = 0; i < cells; ++i) p[i] += (i < cells / 2) ? bump : -bump;
  return DensePmf::validated(d, std::move(p));
}

}  // namespace

TEST_CASE("required_samples arithmetic") {
  TesterConfig cfg;
  cfg.alpha = 0.0;
  cfg.eps = 1.0;
  cfg.delta = 1.0 / std::exp(1.0);
  cfg.sample_constant = 1.0;
  CHECK(required_samples(cfg, 1) == 2);

  SECTION("affine in the support size") {
    cfg.eps = 0.25;
    cfg.delta = 0.05;
    const auto m1 = required_samples(cfg, 16);
    const auto m2 = required_samples(cfg, 32);
    CHECK(m2 <= 2 * m1);
    CHECK(m2 > m1);
  }

  SECTION("halving delta adds, not multiplies") {
    cfg.eps = 0.25;
    cfg.delta = 0.05;
    const auto m1 = required_samples(cfg, 16);
    cfg.delta = 0.025;
    const auto m2 = required_samples(cfg, 16);
    const double expect = cfg.sample_constant / (0.25 * 0.25) * std::log(2.0);
    CHECK(std::abs(static_cast<double>(m2 - m1) - expect) <= 1.0);
  }
}

TEST_CASE("statistic on constructed batches") {
  TesterConfig cfg;
  cfg.alpha = 0.1;
  cfg.eps = 0.2;
  cfg.delta = 0.5;
  cfg.sample_constant = 0.05;  // tiny so the examples' m=100 clears the bound

  const DensePmf ref = DensePmf::uniform(2);

  SECTION("balanced batch has statistic zero and verdict Close") {
    std::vector<std::uint32_t> cells;
    for (std::uint32_t c = 0; c < 4; ++c)
      for (int i = 0; i < 25; ++i) cells.push_back(c);
    const auto v = tolerant_identity_test(ref, batch_from_cells(2, cells), cfg);
    CHECK(v.statistic == 0.0);
    CHECK(v.close);
  }

  SECTION("all-one-point batch has statistic 1.5 and verdict Far") {
    const auto v =
        tolerant_identity_test(ref, batch_from_cells(2, std::vector<std::uint32_t>(100, 3)), cfg);
    CHECK(v.statistic == Catch::Approx(1.5));
    CHECK_FALSE(v.close);
    CHECK(v.threshold == Catch::Approx(0.2));
  }
}

TEST_CASE("decision is a threshold rule with ties resolving to Close") {
  TesterConfig cfg;
  cfg.alpha = 0.25;
  cfg.eps = 0.5;
  cfg.delta = 0.5;
  cfg.sample_constant = 0.2;
  // m=4 over support 4: statistic of (2,1,1,0) is exactly 0.5 = alpha + eps/2
  const auto v = tolerant_identity_test(DensePmf::uniform(2),
                                        batch_from_cells(2, {0, 0, 1, 2}), cfg);
  CHECK(v.statistic == 0.5);
  CHECK(v.threshold == 0.5);
  CHECK(v.close);
}

TEST_CASE("undersized batches are a hard error") {
  TesterConfig cfg;
  cfg.alpha = 0.0;
  cfg.eps = 0.25;
  cfg.delta = 0.05;
  cfg.sample_constant = 1.0;
  const auto need = required_samples(cfg, 4);
  std::vector<std::uint32_t> cells(need - 1, 0);
  CHECK_THROWS_AS(tolerant_identity_test(DensePmf::uniform(2), batch_from_cells(2, cells), cfg),
                  std::invalid_argument);
}

TEST_CASE("per-sample sensitivity of the statistic is at most 2/m") {
  const DensePmf ref = shifted_from_uniform(3, 0.3);
  std::vector<std::uint32_t> cells = {0, 1, 2, 2, 5, 7, 7, 7, 4, 3};
  TesterConfig cfg;
  cfg.alpha = 0.2;
  cfg.eps = 0.4;
  cfg.delta = 0.5;
  cfg.sample_constant = 0.05;
  const double base =
      tolerant_identity_test(ref, batch_from_cells(3, cells), cfg).statistic;
  const double m = static_cast<double>(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::uint32_t repl = 0; repl < 8; ++repl) {
      auto mod = cells;
      mod[i] = repl;
      const double stat = tolerant_identity_test(ref, batch_from_cells(3, mod), cfg).statistic;
      REQUIRE(std::abs(stat - base) <= 2.0 / m + 1e-12);
    }
  }
}

TEST_CASE("triangle sandwich |S_P - ||D-P||_1| <= S_D on every realization") {
  const int d = 1;
  const DensePmf p = DensePmf::validated(d, {0.75, 0.25});
  const DensePmf q = DensePmf::validated(d, {0.5, 0.5});
  const double dist = l1_distance(p, q);
  TesterConfig cfg;
  cfg.alpha = 0.1;
  cfg.eps = 0.2;
  cfg.delta = 0.5;
  cfg.sample_constant = 0.02;
  // enumerate all batches of size 3 over 2 cells
  for (std::uint32_t a = 0; a < 2; ++a)
    for (std::uint32_t b = 0; b < 2; ++b)
      for (std::uint32_t c = 0; c < 2; ++c) {
        const auto batch = batch_from_cells(d, {a, b, c});
        const double s_p = tolerant_identity_test(p, batch, cfg).statistic;
        const double s_q = tolerant_identity_test(q, batch, cfg).statistic;
        REQUIRE(std::abs(s_p - dist) <= s_q + 1e-12);
      }
}

TEST_CASE("expectation of the self-statistic stays under sqrt(s/m)") {
  Rng master(2024);
  for (const auto& [s, m] : std::vector<std::pair<std::size_t, std::size_t>>{
           {4, 40}, {16, 160}, {64, 640}}) {
    const int d = log2_exact(s);
    const DensePmf u = DensePmf::uniform(d);
    double total = 0.0;
    const int trials = 1000;
    for (int t = 0; t < trials; ++t) {
      Rng rng = master.child(static_cast<std::uint64_t>(s * 10000 + t));
      const auto batch = sample(u, m, rng);
      const auto counts = histogram(batch);
      double stat = 0.0;
      for (std::size_t i = 0; i < counts.size(); ++i)
        stat += std::abs(static_cast<double>(counts[i]) / static_cast<double>(m) - u.probs[i]);
      total += stat;
    }
    const double mean = total / trials;
    REQUIRE(mean <= 1.05 * std::sqrt(static_cast<double>(s) / static_cast<double>(m)));
  }
}

TEST_CASE("tester guarantees at the calibrated constant") {
  const Constants consts;
  TesterConfig cfg;
  cfg.alpha = 0.0;
  cfg.eps = 0.25;
  cfg.delta = 0.05;
  cfg.sample_constant = consts.c_tester;
  const int d = 3;  // support 8
  const DensePmf ref = DensePmf::uniform(d);
  const auto m = required_samples(cfg, ref.size());
  Rng master(77);

  SECTION("identical distribution is declared Close") {
    int close = 0;
    for (int t = 0; t < 100; ++t) {
      Rng rng = master.child(static_cast<std::uint64_t>(t));
      if (tolerant_identity_test(ref, sample(ref, m, rng), cfg).close) ++close;
    }
    CHECK(close >= 95);
  }

  SECTION("distance 0.5 is declared Far") {
    const DensePmf far = shifted_from_uniform(d, 0.5);
    int fars = 0;
    for (int t = 0; t < 100; ++t) {
      Rng rng = master.child(5000 + static_cast<std::uint64_t>(t));
      if (!tolerant_identity_test(ref, sample(far, m, rng), cfg).close) ++fars;
    }
    CHECK(fars >= 95);
  }
}
