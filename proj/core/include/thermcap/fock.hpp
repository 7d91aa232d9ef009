#pragma once

// Truncated Fock-space simulation of the thermal noise channel, used as an
// independent numerical check of the closed-form bounds.
//
// The channel is simulated literally: a beamsplitter of transmissivity lambda
// couples the signal mode to a thermal environment, and the environment is
// traced out. Each total-photon-number block of the beamsplitter is an exact
// finite rotation, so the only approximation is the Fock cutoff, whose
// neglected weight is tracked analytically.

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "thermcap/gaussian.hpp"

namespace thermcap::fock {

using Complex = std::complex<double>;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kNegativeEigenvalueTolerance = 1e-10;
inline constexpr double kEigenvalueFloor = 1e-15;
inline constexpr double kDefaultTailTarget = 1e-10;

/// Fock cutoff together with an analytic bound on the probability weight the
/// cutoff discards.
struct TruncationBudget {
  int dim = 1;
  double tail_bound = 0.0;
};

/// (N / (N + 1))^dim, the exact weight of a thermal state above level dim - 1.
double thermal_tail(double mean_photons, int dim);

/// Exact entropy carried by the discarded thermal levels,
/// sum_{n >= dim} -p_n ln p_n.
double thermal_entropy_tail(double mean_photons, int dim);

/// Chernoff bound on P(n >= dim) for a Poisson distribution of the given mean.
double poisson_tail_bound(double mean, int dim);

/// Smallest cutoff whose thermal tail is <= target.
TruncationBudget thermal_budget(double mean_photons, double target = kDefaultTailTarget);

/// Smallest cutoff with Chernoff tail <= target and dim >= 4 |alpha|^2.
TruncationBudget coherent_budget(double mean_photons, double target = kDefaultTailTarget);

/// Quadrature moments in the vacuum = I convention.
struct Moments {
  double mean_q = 0.0;
  double mean_p = 0.0;
  double qq = 1.0;
  double qp = 0.0;
  double pp = 1.0;
  double mean_photons = 0.0;
};

/// Hermitian, unit-trace-up-to-truncation density matrix on Fock levels
/// 0..dim-1.
class FockDensityMatrix {
 public:
  /// Validates squareness, hermiticity within kHermitianTolerance and
  /// 1 - tail_bound - 1e-12 <= trace <= 1 + 1e-12. Positivity is checked by
  /// check_positive() and by the entropy functional.
  FockDensityMatrix(Eigen::MatrixXcd rho, double tail_bound);

  int dim() const { return static_cast<int>(rho_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return rho_; }
  double tail_bound() const { return tail_bound_; }
  double trace() const { return rho_.trace().real(); }
  double trace_deficit() const { return 1.0 - trace(); }

  /// Throws UnphysicalStateError if an eigenvalue is below -1e-10.
  void check_positive() const;

  /// Moments of the trace-normalized state.
  Moments moments() const;

 private:
  Eigen::MatrixXcd rho_;
  double tail_bound_;
};

/// Diagonal state with p_n = N^n / (N+1)^{n+1}, n < dim (not renormalized).
FockDensityMatrix thermal_state(double mean_photons, int dim);

/// Projector onto the renormalized truncated coherent state |alpha>.
/// Throws TruncationError unless |alpha|^2 <= dim / 4.
FockDensityMatrix coherent_state(Complex alpha, int dim);

/// Same amplitudes as coherent_state, as a unit vector.
Eigen::VectorXcd coherent_amplitudes(Complex alpha, int dim);

/// Fock-diagonal part of rho.
FockDensityMatrix dephase(const FockDensityMatrix& rho);

/// Convex combination sum_k w_k rho_k; all states must share one dimension.
FockDensityMatrix mix(std::span<const FockDensityMatrix> states, std::span<const double> weights);

struct ChannelSimConfig {
  /// Environment cutoff is the smallest with thermal tail <= env_tail_target.
  double env_tail_target = kDefaultTailTarget;
  /// Upper limit on signal dim * environment dim.
  int max_joint_dim = 4096;
};

/// Beamsplitter-plus-thermal-environment channel for a fixed input cutoff.
/// Building it precomputes the beamsplitter blocks, so reuse one instance to
/// push many states of the same dimension through the same channel.
class ThermalChannelSimulator {
 public:
  /// Throws TruncationError if input_dim * env_dim exceeds the configured cap.
  ThermalChannelSimulator(const ChannelParams& params, int input_dim,
                          const ChannelSimConfig& config = {});

  int input_dim() const { return input_dim_; }
  int env_dim() const { return env_dim_; }
  int output_dim() const { return input_dim_ + env_dim_ - 1; }
  double env_tail() const { return env_tail_; }
  const ChannelParams& params() const { return params_; }

  /// Tr_E[U (rho x thermal(N_E)) U^dagger]. The output keeps every level the
  /// joint truncated space can populate, so the only weight lost is the
  /// environment tail.
  FockDensityMatrix apply(const FockDensityMatrix& rho) const;

  /// <j, n - j| U |k, m> for n = k + m, j = 0..n.
  std::span<const double> block_column(int k, int m) const;

 private:
  ChannelParams params_;
  int input_dim_;
  int env_dim_;
  double env_tail_;
  std::vector<double> env_populations_;
  std::vector<double> amplitudes_;
  std::vector<std::size_t> offsets_;
};

/// One-shot convenience wrapper around ThermalChannelSimulator.
FockDensityMatrix apply_channel(const ChannelParams& params, const FockDensityMatrix& rho,
                                const ChannelSimConfig& config = {});

struct EntropyEstimate {
  double nats = 0.0;
  /// Bound on the entropy hidden below the eigenvalue floor.
  double floor_error = 0.0;
};

/// -sum mu ln mu over eigenvalues above kEigenvalueFloor, in nats.
/// Throws UnphysicalStateError on an eigenvalue below -1e-10.
double von_neumann_entropy(const FockDensityMatrix& rho);
EntropyEstimate von_neumann_entropy_with_budget(const FockDensityMatrix& rho);

/// Radial-angular discretization of the isotropic Gaussian distribution of
/// coherent amplitudes with mean photon number N. Radial nodes are
/// Gauss-Legendre on [0, radius_factor sqrt(N)], angular nodes equispaced.
struct QuadratureGrid {
  int radial_nodes = 24;
  int angular_nodes = 24;
  double radius_factor = 4.0;
  double max_radial_spacing = 0.5;
};

struct EnsembleNode {
  Complex alpha;
  double weight;
};

/// Nodes with weights summing to 1. N = 0 yields the single vacuum node.
/// Throws TruncationError if radius_factor < 4 or the radial spacing exceeds
/// max_radial_spacing.
std::vector<EnsembleNode> gaussian_ensemble_nodes(double mean_photons, const QuadratureGrid& grid);

/// Smallest radial node count meeting the spacing limit (at least grid.radial_nodes).
QuadratureGrid grid_for(double mean_photons, QuadratureGrid grid = {});

/// Cutoff admitting every node of the grid: dim >= 4 R^2 and Poisson tail at R^2 <= target.
int chi_dimension(double mean_photons, const QuadratureGrid& grid,
                  double target = kDefaultTailTarget);

struct ChiBreakdown {
  double chi_bits = 0.0;
  double average_output_entropy = 0.0;          // nats
  std::vector<double> member_output_entropies;  // nats
  double error_budget = 0.0;                    // nats, truncation + floor
};

/// Holevo quantity S(sum w_k E(rho_k)) - sum w_k S(E(rho_k)), reported in bits.
/// Members are processed and summed in index order.
ChiBreakdown holevo_chi(const ThermalChannelSimulator& channel,
                        std::span<const FockDensityMatrix> states,
                        std::span<const double> weights);

/// Holevo quantity of the discretized Gaussian coherent-state ensemble.
/// dim = 0 selects chi_dimension(N, grid).
ChiBreakdown holevo_chi_gaussian_ensemble_breakdown(const ChannelParams& params, double mean_photons,
                                                    const QuadratureGrid& grid = {}, int dim = 0,
                                                    const ChannelSimConfig& config = {});

double holevo_chi_gaussian_ensemble(const ChannelParams& params, double mean_photons,
                                    const QuadratureGrid& grid = {}, int dim = 0,
                                    const ChannelSimConfig& config = {});

/// Discretized Gaussian ensemble as explicit states and weights.
struct StateEnsemble {
  std::vector<FockDensityMatrix> states;
  std::vector<double> weights;
};
StateEnsemble gaussian_coherent_ensemble(double mean_photons, const QuadratureGrid& grid, int dim);

struct DecompositionCheck {
  double max_discrepancy = 0.0;
  std::vector<double> per_state;
  bool passed = false;
};

inline constexpr double kMomentTolerance = 1e-8;

/// Compares moments of apply_channel(params, rho) against the covariance
/// algebra prediction routed through decompose(): pure loss, then amplifier.
DecompositionCheck verify_decomposition_fock(const ChannelParams& params,
                                             std::span<const FockDensityMatrix> test_states,
                                             const ChannelSimConfig& config = {});

}  // namespace thermcap::fock
