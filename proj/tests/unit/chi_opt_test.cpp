#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "oracle_values.hpp"
#include "thermcap/bounds.hpp"
#include "thermcap/chi_opt.hpp"
#include "thermcap/errors.hpp"

namespace thermcap::chi_opt {
namespace {

TEST(ChiOpt, EnsembleChiMatchesGaussianOracleExactly) {
  const ChannelParams params(0.6, 0.5);
  const fock::QuadratureGrid grid{10, 8};
  const double n = 0.5;
  const int dim = fock::chi_dimension(n, grid);
  fock::StateEnsemble states = fock::gaussian_coherent_ensemble(n, grid, dim);
  const Ensemble ensemble = make_ensemble(std::move(states.states), std::move(states.weights));
  EXPECT_EQ(chi(params, ensemble), fock::holevo_chi_gaussian_ensemble(params, n, grid, dim));
}

TEST(ChiOpt, SingleMemberEnsembleHasZeroChi) {
  const Ensemble e = make_ensemble({fock::coherent_state({0.7, 0.2}, 16)}, {1.0});
  EXPECT_NEAR(e.mean_photons, std::norm(fock::Complex{0.7, 0.2}), 1e-10);
  EXPECT_NEAR(chi(ChannelParams(0.5, 1.0), e), 0.0, 1e-12);
}

TEST(ChiOpt, MemberStateInterpolatesDephasing) {
  const MemberParams pure{{0.9, 0.3}, 0.0};
  const MemberParams half{{0.9, 0.3}, 0.5};
  const auto a = member_state(pure, 20);
  const auto b = member_state(half, 20);
  EXPECT_NEAR(std::abs(b.matrix()(0, 1)), 0.5 * std::abs(a.matrix()(0, 1)), 1e-15);
  EXPECT_EQ(b.matrix()(3, 3), a.matrix()(3, 3));
  EXPECT_THROW(member_state({{0.0, 0.0}, 1.5}, 20), DomainError);
}

TEST(ChiOpt, RejectsBadConfiguration) {
  OptimizerConfig config;
  config.members = 17;
  EXPECT_THROW(optimize(ChannelParams(0.5, 0.0), 1.0, config), DomainError);
  config.members = 4;
  config.dim = 40;
  EXPECT_THROW(optimize(ChannelParams(0.5, 0.0), 1.0, config), DomainError);
  EXPECT_THROW(optimize(ChannelParams(0.5, 0.0), -1.0), DomainError);
}

TEST(ChiOpt, ZeroPhotonsGivesVacuum) {
  const OptimizationResult r = optimize(ChannelParams(0.6, 0.5), 0.0);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.best_chi_bits, 0.0);
  ASSERT_EQ(r.ensemble.members.size(), 1u);
  EXPECT_EQ(r.ensemble.mean_photons, 0.0);
}

TEST(ChiOpt, PureLossReachesCapacity) {
  const ChannelParams params(0.6, 0.0);
  const OptimizationResult r = optimize(params, 1.0);
  EXPECT_NEAR(r.upper_bits, oracle::kPureLoss06Bits, 1e-14);
  EXPECT_GE(r.best_chi_bits, oracle::kPureLoss06Bits - 5e-3);
  EXPECT_LE(r.best_chi_bits, r.upper_bits + 1e-6);
  EXPECT_LE(r.ensemble.mean_photons, 1.0 + 1e-9);
  EXPECT_TRUE(r.converged);

  ASSERT_GE(r.history.size(), 2u);
  for (std::size_t i = 1; i < r.history.size(); ++i) {
    EXPECT_GE(r.history[i].chi_bits, r.history[i - 1].chi_bits);
    EXPECT_EQ(r.history[i].iteration, static_cast<int>(i));
  }
  EXPECT_NEAR(r.history.back().chi_bits, r.best_chi_bits, 1e-12);
}

TEST(ChiOpt, ThermalCaseLandsInsideInterval) {
  const ChannelParams params(0.6, 0.5);
  OptimizerConfig config;
  config.members = 8;
  const OptimizationResult r = optimize(params, 1.0, config);
  EXPECT_GE(r.best_chi_bits, r.lower_bits - 5e-3);
  EXPECT_LE(r.best_chi_bits, r.upper_bits + 1e-6);
  EXPECT_LE(r.ensemble.mean_photons, 1.0 + 1e-9);
  EXPECT_NEAR(r.above_lower_bits(), r.best_chi_bits - r.lower_bits, 0.0);
}

TEST(ChiOpt, DeterministicForFixedSeed) {
  OptimizerConfig config;
  config.members = 4;
  config.dim = 16;
  config.max_iterations = 5;
  const OptimizationResult a = optimize(ChannelParams(0.7, 0.2), 0.5, config);
  const OptimizationResult b = optimize(ChannelParams(0.7, 0.2), 0.5, config);
  EXPECT_EQ(a.best_chi_bits, b.best_chi_bits);
  ASSERT_EQ(a.parameters.size(), b.parameters.size());
  for (std::size_t i = 0; i < a.parameters.size(); ++i) EXPECT_EQ(a.parameters[i].alpha, b.parameters[i].alpha);
}

TEST(ChiOpt, IterationCapReportsNonConvergence) {
  OptimizerConfig config;
  config.members = 4;
  config.dim = 16;
  config.max_iterations = 2;
  const OptimizationResult r = optimize(ChannelParams(0.7, 0.2), 0.5, config);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations, 2);
}

TEST(ChiOpt, WarmStartNeverLosesGround) {
  const ChannelParams params(0.6, 0.5);
  const double n = 0.5;
  OptimizerConfig config;
  config.dim = 24;
  config.max_iterations = 10;
  config.warm_start = fock::QuadratureGrid{2, 8, 4.0, 4.0};
  const OptimizationResult r = optimize(params, n, config);
  ASSERT_EQ(r.ensemble.members.size(), 16u);
  EXPECT_GE(r.best_chi_bits, r.history.front().chi_bits);
  EXPECT_LE(r.best_chi_bits, r.upper_bits + 1e-6);
}

}  // namespace
}  // namespace thermcap::chi_opt
