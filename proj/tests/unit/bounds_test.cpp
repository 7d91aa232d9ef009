#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracle_values.hpp"
#include "thermcap/bounds.hpp"
#include "thermcap/errors.hpp"
#include "thermcap/gfunc.hpp"

namespace thermcap::bounds {
namespace {

TEST(Bounds, MatchesHighPrecisionValues) {
  for (const auto& p : oracle::kBounds) {
    const ChannelParams params(p.lambda, p.n_env);
    EXPECT_NEAR(holevo_lower(params, p.n_signal), p.lower_bits, 1e-12 * p.lower_bits) << p.lambda << ' ' << p.n_env;
    EXPECT_NEAR(additive_extension_upper(params, p.n_signal), p.upper_bits, 1e-12 * p.upper_bits);
  }
}

TEST(Bounds, HalfOneTenExample) {
  const BoundReport r = report(ChannelParams(0.5, 1.0), 10.0);
  EXPECT_NEAR(r.lower_bits, 2.6485405143302299, 1e-12);
  EXPECT_NEAR(r.upper_bits, 3.3771826282657020, 1e-12);
  EXPECT_NEAR(r.gap_bits, 0.72864211393547216, 1e-12);
  EXPECT_NEAR(r.refined_gap_bound_bits, oracle::kRefinedHalfOne, 1e-14);
  EXPECT_DOUBLE_EQ(r.universal_gap_bound_bits, 1.0 / std::numbers::ln2);
  EXPECT_TRUE(r.certified);
}

TEST(Bounds, HighTemperatureExampleCertified) {
  const BoundReport r = report(ChannelParams(0.9, 10.0), 100.0);
  EXPECT_TRUE(r.certified);
  EXPECT_LT(r.gap_bits, kUniversalGapBits);
  EXPECT_LE(r.gap_bits, r.refined_gap_bound_bits);
}

TEST(Bounds, ZeroTemperatureCollapse) {
  for (double lambda : {0.1, 0.5, 0.6, 1.0}) {
    for (double n : {0.0, 1.0, 4.0, 1e5}) {
      const ChannelParams params(lambda, 0.0);
      const double c = pure_loss_capacity(lambda, n);
      EXPECT_EQ(holevo_lower(params, n), c);
      EXPECT_EQ(additive_extension_upper(params, n), c);
      EXPECT_EQ(gap(params, n), 0.0);
      EXPECT_EQ(refined_gap_bound(params), 0.0);
    }
  }
  EXPECT_NEAR(pure_loss_capacity(0.5, 4.0), 2.754887502163468544, 1e-14);
  EXPECT_NEAR(pure_loss_capacity(0.6, 1.0), oracle::kPureLoss06Bits, 1e-14);
}

TEST(Bounds, ZeroSignal) {
  const ChannelParams params(0.4, 3.0);
  EXPECT_EQ(holevo_lower(params, 0.0), 0.0);
  EXPECT_EQ(additive_extension_upper(params, 0.0), 0.0);
  EXPECT_TRUE(report(params, 0.0).certified);
}

TEST(Bounds, DomainErrors) {
  EXPECT_THROW(report(ChannelParams(0.5, 1.0), -1.0), DomainError);
  EXPECT_THROW(report(ChannelParams(0.5, 2e6), 1.0), DomainError);
  EXPECT_THROW(report(ChannelParams(0.5, 1.0), 2e9), DomainError);
  EXPECT_THROW(pure_loss_capacity(0.0, 1.0), DomainError);
}

TEST(Bounds, TheoremOneOnRandomTriples) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const ChannelParams params(1.0 - unit(rng), 50.0 * (1.0 - unit(rng)));
    const double n = 100.0 * (1.0 - unit(rng));
    const BoundReport r = report(params, n);
    ASSERT_TRUE(r.certified);
    EXPECT_GE(r.gap_bits, -kCertificationTolerance);
    EXPECT_LE(r.gap_bits, r.refined_gap_bound_bits + kCertificationTolerance);
    EXPECT_LE(r.refined_gap_bound_bits, kUniversalGapBits + kCertificationTolerance);
    const double y = (1.0 - params.transmissivity()) * params.env_photons();
    EXPECT_LE(r.gap_bits, gfunc::delta_limit(y) / std::numbers::ln2 + 1e-10);
    EXPECT_NEAR(gap(params, n), gap_via_delta(params, n), 1e-10);
  }
}

TEST(Bounds, GapIncreasesWithSignalPower) {
  for (double lambda : {0.05, 0.5, 0.95}) {
    for (double ne : {0.01, 1.0, 30.0}) {
      const ChannelParams params(lambda, ne);
      double prev = gap(params, 1e-3);
      for (double n = 2e-3; n < 1e6; n *= 1.5) {
        const double cur = gap(params, n);
        EXPECT_GT(cur, prev) << lambda << ' ' << ne << ' ' << n;
        prev = cur;
      }
    }
  }
}

TEST(Bounds, GapApproachesRefinedBound) {
  for (double lambda : {0.25, 0.5, 0.75, 0.9}) {
    for (double ne : {0.1, 1.0, 10.0, 50.0}) {
      const ChannelParams params(lambda, ne);
      const double y = (1.0 - lambda) * ne;
      EXPECT_NEAR(gap(params, 1e8) * std::numbers::ln2, gfunc::delta_limit(y), 1e-6);
    }
  }
}

TEST(Bounds, CertificateRejectsTamperedReports) {
  BoundReport r = report(ChannelParams(0.5, 1.0), 10.0);
  ASSERT_TRUE(check_certificate(r));
  BoundReport worse = r;
  worse.upper_bits += 1.0;
  worse.gap_bits += 1.0;
  EXPECT_FALSE(check_certificate(worse));
  BoundReport negative = r;
  negative.lower_bits = negative.upper_bits + 1e-6;
  negative.gap_bits = -1e-6;
  EXPECT_FALSE(check_certificate(negative));
}

}  // namespace
}  // namespace thermcap::bounds
