#include <cmath>

#include <gtest/gtest.h>

#include "expect_code.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "unicomm/chain.hpp"
#include "unicomm/linalg.hpp"
#include "unicomm/random.hpp"

namespace {

using namespace unicomm;
using fixture::dist;

TEST(Schedule, FrozenValues) {
  // Reference values from a 30-digit evaluation of the closed form.
  const SmoothingSchedule s = build_schedule(3, 1.0, 0.1);
  EXPECT_NEAR(s.theta, 1.0471975511965977462, 1e-15);
  EXPECT_NEAR(s.m, 0.86602540378443864676, 1e-15);
  EXPECT_NEAR(s.sigma, 0.0038765312959344753481, 1e-17);
  ASSERT_EQ(s.t.size(), 3u);
  EXPECT_NEAR(s.t[0], 0.99104753445108088736, 1e-15);
  EXPECT_NEAR(s.t[1], 0.97932516642168279814, 1e-15);
  EXPECT_NEAR(s.t[2], 0.95225351707243139927, 1e-15);

  const SmoothingSchedule one = build_schedule(1, 1.0, 10.0);
  EXPECT_NEAR(one.sigma, 0.21650635094610966169, 1e-15);
  EXPECT_NEAR(one.t[0], 0.5, 1e-15);

  const SmoothingSchedule tight = build_schedule(4, 1.9, 0.01);
  EXPECT_NEAR(tight.theta, 2.5064717950067505175, 1e-14);
  EXPECT_NEAR(tight.sigma, 1.1852130675948815927e-6, 1e-19);
  EXPECT_NEAR(tight.t[3], 0.9980051640676904031, 1e-14);
}

TEST(Schedule, StructuralInequalities) {
  for (int n = 1; n <= 10; ++n) {
    for (double eps : {0.1, 0.5, 1.0, 1.9, 1.999}) {
      for (double delta : {1.0, 0.1, 1e-4}) {
        const SmoothingSchedule s = build_schedule(n, eps, delta);
        if (2.0 * s.sigma / s.m < 1e-15) continue;  // below double resolution, covered separately
        for (int k = 0; k < n; ++k) {
          EXPECT_GT(s.t[k], 0.0);
          EXPECT_LT(s.t[k], 1.0);
          EXPECT_LE((1.0 - s.t[k]) * s.theta, delta);
          if (k + 1 < n) { EXPECT_GT(1.0 - s.t[k + 1], (1.0 - s.t[k]) / s.m); }
        }
      }
    }
  }
}

TEST(Schedule, UnresolvableStepsLeaveTheChainInPlace) {
  const SmoothingSchedule s = build_schedule(10, 1.999, 1e-4);
  EXPECT_GT(s.sigma, 0.0);
  EXPECT_EQ(s.t[0], 1.0);
  // A chain with slack still smooths; a chain sitting on the bound cannot.
  const auto loose = fixture::random_chain(2, 11, 1.9, 21);
  const SmoothingResult r = smooth_chain(UnitaryChain(loose, 1.999), 1e-4);
  EXPECT_GT(r.margin, 0.0);
  EXPECT_LE(r.max_displacement, 1e-4);
}

TEST(Schedule, SmallDeltaPushesStepsToOne) {
  const SmoothingSchedule s = build_schedule(5, 1.0, 1e-12);
  EXPECT_LT(s.sigma, 1e-12);
  for (double t : s.t) EXPECT_GT(t, 1.0 - 1e-10);
}

TEST(Schedule, MeanValueBoundsOfTheChord) {
  Rng rng(21);
  for (double eps : {0.5, 1.0, 1.9}) {
    const double theta = d_inv(eps);
    const double m = std::cos(theta / 2.0);
    for (int i = 0; i < 500; ++i) {
      const double t = rng.uniform(), s = rng.uniform();
      const double diff = std::abs(d_func(t * theta) - d_func(s * theta));
      EXPECT_GE(diff, m * std::abs(t - s) * theta - 1e-15);
      EXPECT_LE(diff, std::abs(t - s) * theta + 1e-15);
    }
  }
}

TEST(Chain, ConstructionErrors) {
  std::vector<UnitaryMatrix> two{UnitaryMatrix::identity(2), UnitaryMatrix(-CMatrix::Identity(2, 2))};
  EXPECT_ERROR_CODE(UnitaryChain(two, 0.0), ErrorCode::EpsOutOfRange);
  EXPECT_ERROR_CODE(UnitaryChain(two, 2.0), ErrorCode::EpsOutOfRange);
  EXPECT_ERROR_CODE(UnitaryChain(two, 1.9), ErrorCode::PreconditionViolated);
  EXPECT_ERROR_CODE(UnitaryChain({}, 1.0), ErrorCode::InvalidArgument);
  std::vector<UnitaryMatrix> mixed{UnitaryMatrix::identity(2), UnitaryMatrix::identity(3)};
  EXPECT_ERROR_CODE(UnitaryChain(mixed, 1.0), ErrorCode::DimensionMismatch);
}

TEST(Smooth, ConstantChainIsFixed) {
  const std::vector<UnitaryMatrix> same(5, UnitaryMatrix::identity(3));
  const SmoothingResult r = smooth_chain(UnitaryChain(same, 0.7), 0.1);
  for (std::size_t k = 0; k < r.chain.size(); ++k) {
    EXPECT_LT(op_norm(r.chain[k].matrix() - CMatrix::Identity(3, 3)), 1e-15);
  }
  for (double g : r.gaps_after) EXPECT_EQ(g, 0.0);
  EXPECT_NEAR(r.margin, 0.7, 1e-15);
}

TEST(Smooth, OneStepFormula) {
  const double theta0 = 1.2;
  const SkewHermitianMatrix h = random_skew(3, 31, theta0);
  const double hn = op_norm(h.matrix());
  const double eps = d_func(hn);
  const UnitaryChain chain({UnitaryMatrix::identity(3), exp_skew(h)}, eps);
  const SmoothingResult r = smooth_chain(chain, 0.05);
  const double t1 = r.schedule.t[0];
  EXPECT_LT(op_norm(r.chain[1].matrix() - oracle::taylor_exp(t1 * h.matrix())), 1e-12);
  EXPECT_NEAR(r.gaps_after[0], d_func(t1 * hn), 1e-12);
  EXPECT_LT(r.gaps_after[0], eps);
  EXPECT_GT(r.margin, 0.0);
}

TEST(Smooth, FirstElementIsKept) {
  const auto mats = fixture::random_chain(4, 6, 1.0, 41);
  const SmoothingResult r = smooth_chain(UnitaryChain(mats, 1.0), 0.01);
  EXPECT_EQ(r.chain[0].matrix(), mats[0].matrix());
  EXPECT_EQ(r.displacement[0], 0.0);
}

TEST(Smooth, RandomChainsMeetBothBounds) {
  int count = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Index dim = 1 + seed % 6;
    const int length = 2 + static_cast<int>(seed % 7);
    const double eps = std::vector<double>{0.5, 1.0, 1.9}[seed % 3];
    const double delta = seed % 2 ? 0.1 : 0.01;
    const auto mats = fixture::random_chain(dim, length, eps, 1000 + seed);
    const SmoothingResult r = smooth_chain(UnitaryChain(mats, eps), delta);
    double max_gap = 0.0;
    for (std::size_t k = 1; k < r.chain.size(); ++k) max_gap = std::max(max_gap, dist(r.chain[k - 1], r.chain[k]));
    EXPECT_LT(max_gap, eps);
    EXPECT_NEAR(r.margin, eps - max_gap, 1e-12);
    for (std::size_t k = 0; k < r.chain.size(); ++k) EXPECT_LE(dist(r.chain[k], mats[k]), delta);
    ++count;
  }
  EXPECT_EQ(count, 150);
}

TEST(Smooth, DisplacementShrinksWithDelta) {
  const auto mats = fixture::random_chain(3, 6, 1.0, 51);
  const UnitaryChain chain(mats, 1.0);
  double prev = 1e300;
  for (double delta : {0.1, 0.01, 0.001}) {
    const SmoothingResult r = smooth_chain(chain, delta);
    EXPECT_LT(r.max_displacement, prev);
    EXPECT_LE(r.max_displacement, delta);
    prev = r.max_displacement;
  }
}

TEST(Smooth, ChainAtTheGapBoundIsStrictAfterwards) {
  // Every gap equals eps exactly (up to rounding); smoothing must leave a positive margin.
  const double eps = 1.5;
  const SkewHermitianMatrix h = random_skew(2, 61, d_inv(eps));
  const SkewHermitianMatrix step = h * (d_inv(eps) / op_norm(h.matrix()));
  std::vector<UnitaryMatrix> mats{UnitaryMatrix::identity(2)};
  for (int k = 0; k < 5; ++k) mats.push_back(mats.back() * exp_skew(step));
  const SmoothingResult r = smooth_chain(UnitaryChain(mats, eps), 0.01);
  EXPECT_GT(r.margin, 0.0);
}

TEST(Windowed, FullWindowMatchesSmoothChain) {
  const auto mats = fixture::random_chain(3, 7, 1.0, 71);
  const UnitaryChain chain(mats, 1.0);
  const SmoothingResult full = windowed_smooth(chain, 3, 0.05);
  const std::vector<UnitaryMatrix> plain = smooth_chain(chain, 0.05).chain.matrices();
  for (std::size_t k = 0; k < plain.size(); ++k) EXPECT_LT(dist(full.chain[k], plain[k]), 1e-14);
}

TEST(Windowed, OutsideIndicesAreClamped) {
  const auto mats = fixture::random_chain(2, 9, 1.9, 81);  // indices -4..4
  const UnitaryChain chain(mats, 1.9);
  const SmoothingResult r = windowed_smooth(chain, 2, 0.05);
  ASSERT_EQ(r.chain.size(), 9u);
  EXPECT_EQ(r.chain[0].matrix(), r.chain[2].matrix());
  EXPECT_EQ(r.chain[1].matrix(), r.chain[2].matrix());
  EXPECT_EQ(r.chain[7].matrix(), r.chain[6].matrix());
  EXPECT_EQ(r.chain[8].matrix(), r.chain[6].matrix());
  EXPECT_GT(r.margin, 0.0);
  for (std::size_t k = 2; k <= 6; ++k) EXPECT_LE(dist(r.chain[k], mats[k]), 0.05);
}

TEST(Windowed, RandomInstancesKeepGapsBelowEps) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int half = 1 + static_cast<int>(seed % 4);
    const double eps = seed % 2 ? 1.0 : 1.9;
    const auto mats = fixture::random_chain(1 + seed % 4, 2 * half + 1, eps, 90 + seed);
    const SmoothingResult r = windowed_smooth(UnitaryChain(mats, eps), static_cast<int>(seed % (half + 1)), 0.1);
    for (std::size_t k = 1; k < r.chain.size(); ++k) EXPECT_LT(dist(r.chain[k - 1], r.chain[k]), eps);
  }
}

TEST(Windowed, Errors) {
  const auto even = fixture::random_chain(2, 4, 1.0, 3);
  EXPECT_ERROR_CODE(windowed_smooth(UnitaryChain(even, 1.0), 1, 0.1), ErrorCode::InvalidArgument);
  const auto odd = fixture::random_chain(2, 5, 1.0, 3);
  EXPECT_ERROR_CODE(windowed_smooth(UnitaryChain(odd, 1.0), 3, 0.1), ErrorCode::InvalidArgument);
  EXPECT_ERROR_CODE(windowed_smooth(UnitaryChain(odd, 1.0), -1, 0.1), ErrorCode::InvalidArgument);
  EXPECT_ERROR_CODE(smooth_chain(UnitaryChain(odd, 1.0), 0.0), ErrorCode::InvalidArgument);
}

}  // namespace
