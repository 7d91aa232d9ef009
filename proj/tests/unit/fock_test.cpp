#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "oracle_values.hpp"
#include "thermcap/bounds.hpp"
#include "thermcap/errors.hpp"
#include "thermcap/fock.hpp"
#include "thermcap/gfunc.hpp"

namespace thermcap::fock {
namespace {

TEST(Truncation, TailsAndBudgets) {
  EXPECT_NEAR(thermal_tail(1.0, 10), std::pow(0.5, 10), 1e-18);
  EXPECT_EQ(thermal_tail(0.0, 1), 0.0);
  const TruncationBudget b = thermal_budget(1.0);
  EXPECT_LE(b.tail_bound, 1e-10);
  EXPECT_GT(thermal_tail(1.0, b.dim - 1), 1e-10);
  const TruncationBudget c = coherent_budget(4.0);
  EXPECT_LE(c.tail_bound, 1e-10);
  EXPECT_GE(c.dim, 16);
  // The Chernoff bound dominates the exact Poisson tail.
  double exact = 0.0;
  double p = std::exp(-4.0);
  for (int n = 0; n < 200; ++n) {
    if (n >= 20) exact += p;
    p *= 4.0 / (n + 1);
  }
  EXPECT_GE(poisson_tail_bound(4.0, 20), exact);
}

TEST(States, ThermalExample) {
  const FockDensityMatrix rho = thermal_state(1.0, 40);
  EXPECT_EQ(rho.dim(), 40);
  EXPECT_NEAR(rho.trace(), 1.0 - std::pow(0.5, 40), 1e-15);
  EXPECT_NEAR(von_neumann_entropy(rho), 2.0 * std::numbers::ln2, 1e-8);
  EXPECT_NEAR(rho.moments().mean_photons, 1.0, 1e-9);
}

TEST(States, ThermalEntropyWithinTailBudget) {
  for (double n : {0.2, 0.5, 1.0, 2.0, 5.0}) {
    const int dim = thermal_budget(n).dim;
    ASSERT_LE(dim, 128);
    const double err = std::abs(von_neumann_entropy(thermal_state(n, dim)) - gfunc::g(n));
    EXPECT_LE(err, 10.0 * thermal_entropy_tail(n, dim) + 1e-12) << n;
  }
}

TEST(States, CoherentPhotonStatistics) {
  const Complex alpha{1.2, -0.7};
  const FockDensityMatrix rho = coherent_state(alpha, 40);
  const Moments m = rho.moments();
  EXPECT_NEAR(m.mean_q, 2.0 * alpha.real(), 1e-10);
  EXPECT_NEAR(m.mean_p, 2.0 * alpha.imag(), 1e-10);
  EXPECT_NEAR(m.qq, 1.0, 1e-10);
  EXPECT_NEAR(m.pp, 1.0, 1e-10);
  EXPECT_NEAR(m.qp, 0.0, 1e-10);
  EXPECT_NEAR(m.mean_photons, std::norm(alpha), 1e-10);
  EXPECT_LT(von_neumann_entropy(rho), 1e-9);
}

TEST(States, CoherentRequiresEnoughCutoff) {
  EXPECT_THROW(coherent_state({3.0, 0.0}, 20), TruncationError);
  EXPECT_NO_THROW(coherent_state({2.0, 0.0}, 20));
}

TEST(States, DephasingKeepsPopulations) {
  const FockDensityMatrix rho = coherent_state({1.0, 0.5}, 24);
  const FockDensityMatrix d = dephase(rho);
  for (int n = 0; n < 24; ++n) EXPECT_EQ(d.matrix()(n, n), rho.matrix()(n, n));
  EXPECT_EQ(d.matrix()(0, 1), Complex(0.0, 0.0));
  EXPECT_GT(von_neumann_entropy(d), 0.5);
}

TEST(States, RejectsInvalidMatrices) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
  m(0, 0) = 0.5;
  m(1, 1) = 0.5;
  m(0, 1) = Complex(0.1, 0.0);
  EXPECT_THROW(FockDensityMatrix(m, 0.0), UnphysicalStateError);
  m(1, 0) = Complex(0.1, 0.0);
  EXPECT_NO_THROW(FockDensityMatrix(m, 0.0));
  m(1, 1) = 0.4;
  EXPECT_THROW(FockDensityMatrix(m, 0.0), UnphysicalStateError);
  EXPECT_NO_THROW(FockDensityMatrix(m, 0.2));
  Eigen::MatrixXcd neg = Eigen::MatrixXcd::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  EXPECT_THROW(FockDensityMatrix(neg, 0.0).check_positive(), UnphysicalStateError);
}

TEST(Beamsplitter, SinglePhotonAmplitudes) {
  const double lambda = 0.3;
  const ThermalChannelSimulator sim(ChannelParams(lambda, 0.0), 4);
  const auto col = sim.block_column(1, 0);
  ASSERT_EQ(col.size(), 2u);
  EXPECT_NEAR(col[1], std::sqrt(lambda), 1e-15);
  EXPECT_NEAR(col[0], -std::sqrt(1.0 - lambda), 1e-15);
}

TEST(Beamsplitter, PhotonNumberBlocksAreOrthogonal) {
  const ThermalChannelSimulator sim(ChannelParams(0.37, 2.0), 12);
  const int blocks = std::min(sim.input_dim(), sim.env_dim());
  for (int n = 0; n < blocks; ++n) {
    for (int k1 = 0; k1 <= n; ++k1) {
      for (int k2 = 0; k2 <= n; ++k2) {
        const auto a = sim.block_column(k1, n - k1);
        const auto b = sim.block_column(k2, n - k2);
        double dot = 0.0;
        for (int j = 0; j <= n; ++j) dot += a[j] * b[j];
        EXPECT_NEAR(dot, k1 == k2 ? 1.0 : 0.0, 1e-12) << n << ' ' << k1 << ' ' << k2;
      }
    }
  }
}

TEST(Channel, OutputDimensionAndEnvironmentBudget) {
  const ThermalChannelSimulator sim(ChannelParams(0.5, 1.0), 20);
  EXPECT_EQ(sim.output_dim(), sim.input_dim() + sim.env_dim() - 1);
  EXPECT_LE(sim.env_tail(), 1e-10);
  EXPECT_THROW(ThermalChannelSimulator(ChannelParams(0.5, 50.0), 32), TruncationError);
  EXPECT_NO_THROW(ThermalChannelSimulator(ChannelParams(0.5, 50.0), 32, {1e-10, 1 << 16}));
}

TEST(Channel, VacuumThroughPureLossStaysVacuum) {
  const FockDensityMatrix out = apply_channel(ChannelParams(0.4, 0.0), coherent_state({0.0, 0.0}, 8));
  EXPECT_NEAR(out.matrix()(0, 0).real(), 1.0, 1e-14);
  EXPECT_NEAR(von_neumann_entropy(out), 0.0, 1e-12);
}

TEST(Channel, CoherentThroughPureLossStaysCoherent) {
  const double lambda = 0.64;
  const Complex alpha{1.0, 0.5};
  const FockDensityMatrix out = apply_channel(ChannelParams(lambda, 0.0), coherent_state(alpha, 30));
  const FockDensityMatrix expected = coherent_state(std::sqrt(lambda) * alpha, out.dim());
  EXPECT_LT((out.matrix() - expected.matrix()).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Channel, ThermalInMapsToThermalOut) {
  const ChannelParams params(0.6, 0.5);
  const FockDensityMatrix out = apply_channel(params, thermal_state(2.0, thermal_budget(2.0).dim));
  const double n_out = 0.6 * 2.0 + 0.4 * 0.5;
  const FockDensityMatrix expected = thermal_state(n_out, out.dim());
  EXPECT_LT((out.matrix() - expected.matrix()).cwiseAbs().maxCoeff(), 1e-9);
  EXPECT_NEAR(von_neumann_entropy(out), gfunc::g(n_out), 1e-8);
}

TEST(Channel, TraceAccountedByTails) {
  const FockDensityMatrix in = thermal_state(1.0, 30);
  const FockDensityMatrix out = apply_channel(ChannelParams(0.5, 1.0), in);
  EXPECT_LE(out.trace_deficit(), in.tail_bound() + out.tail_bound() + 1e-12);
  EXPECT_GE(out.trace_deficit(), -1e-12);
}

TEST(Channel, CoherentOutputEntropyIsDisplacementInvariant) {
  const ChannelParams params(0.6, 0.5);
  const ThermalChannelSimulator sim(params, 40);
  for (Complex alpha : {Complex{0.0, 0.0}, Complex{1.0, 0.0}, Complex{-0.5, 2.0}, Complex{2.2, -1.3}}) {
    EXPECT_NEAR(von_neumann_entropy(sim.apply(coherent_state(alpha, 40))), oracle::kG02, 1e-6) << alpha;
  }
}

TEST(Decomposition, FockMomentsMatchCovarianceAlgebra) {
  const std::vector<FockDensityMatrix> states = {coherent_state({0.8, -0.3}, 24), thermal_state(0.7, 40),
                                                 dephase(coherent_state({1.1, 0.4}, 24))};
  for (const ChannelParams& params : {ChannelParams(0.5, 1.0), ChannelParams(0.9, 0.1), ChannelParams(0.2, 0.0)}) {
    const DecompositionCheck check = verify_decomposition_fock(params, states);
    EXPECT_TRUE(check.passed) << check.max_discrepancy;
    EXPECT_EQ(check.per_state.size(), states.size());
  }
}

TEST(Decomposition, WarmEnvironmentNeedsLargerJointSpace) {
  const std::vector<FockDensityMatrix> states = {thermal_state(2.0, thermal_budget(2.0).dim)};
  const ChannelParams params(0.8, 5.0);
  EXPECT_THROW(verify_decomposition_fock(params, states), TruncationError);
  const DecompositionCheck check = verify_decomposition_fock(params, states, {1e-10, 1 << 15});
  EXPECT_LE(check.max_discrepancy, kMomentTolerance);
}

TEST(Entropy, BudgetReportsFloorContribution) {
  const EntropyEstimate e = von_neumann_entropy_with_budget(thermal_state(0.5, 60));
  EXPECT_NEAR(e.nats, gfunc::g(0.5), 1e-10);
  EXPECT_GE(e.floor_error, 0.0);
  EXPECT_LT(e.floor_error, 1e-9);
}

TEST(Ensemble, NodesAreNormalizedAndCentred) {
  const auto nodes = gaussian_ensemble_nodes(2.0, {});
  ASSERT_EQ(nodes.size(), 24u * 24u);
  double total = 0.0;
  double photons = 0.0;
  Complex centroid{0.0, 0.0};
  for (const EnsembleNode& n : nodes) {
    total += n.weight;
    photons += n.weight * std::norm(n.alpha);
    centroid += n.weight * n.alpha;
  }
  EXPECT_NEAR(total, 1.0, 1e-14);
  EXPECT_NEAR(photons, 2.0, 1e-4);
  EXPECT_LT(std::abs(centroid), 1e-14);
  EXPECT_EQ(gaussian_ensemble_nodes(0.0, {}).size(), 1u);
  EXPECT_THROW(gaussian_ensemble_nodes(2.0, {4, 8}), TruncationError);
  EXPECT_GE(grid_for(20.0).radial_nodes, 24);
}

TEST(Chi, ZeroSignalGivesZero) {
  EXPECT_EQ(holevo_chi_gaussian_ensemble(ChannelParams(0.6, 0.5), 0.0), 0.0);
}

TEST(Chi, SingleMemberGivesZero) {
  const ThermalChannelSimulator sim(ChannelParams(0.6, 0.5), 16);
  const std::vector<FockDensityMatrix> states = {coherent_state({1.0, 0.0}, 16)};
  const std::vector<double> weights = {1.0};
  EXPECT_NEAR(holevo_chi(sim, states, weights).chi_bits, 0.0, 1e-12);
}

TEST(Chi, StableUnderGridAndCutoffRefinement) {
  const ChannelParams params(0.5, 0.2);
  const double n = 0.5;
  const QuadratureGrid base{12, 12};
  const double coarse = holevo_chi_gaussian_ensemble(params, n, base);
  const double finer_grid = holevo_chi_gaussian_ensemble(params, n, QuadratureGrid{24, 24});
  const int dim = chi_dimension(n, base);
  const double finer_dim = holevo_chi_gaussian_ensemble(params, n, base, 2 * dim);
  EXPECT_NEAR(coarse, finer_grid, 1e-4);
  EXPECT_NEAR(coarse, finer_dim, 1e-8);
  EXPECT_NEAR(finer_grid, bounds::holevo_lower(params, n), 1e-4);
}

TEST(Chi, BreakdownIsConsistent) {
  const ChannelParams params(0.7, 0.3);
  const ChiBreakdown b = holevo_chi_gaussian_ensemble_breakdown(params, 0.4, QuadratureGrid{12, 12});
  EXPECT_EQ(b.member_output_entropies.size(), 144u);
  EXPECT_GE(b.chi_bits, 0.0);
  EXPECT_GE(b.error_budget, 0.0);
  for (double s : b.member_output_entropies) EXPECT_NEAR(s, gfunc::g(0.3 * 0.3), 1e-6);
}

}  // namespace
}  // namespace thermcap::fock
