#pragma once

// Numerical maximization of the single-letter Holevo quantity over finite
// input ensembles with a mean photon-number constraint. This is exploration
// tooling: it produces evidence about where the optimum sits between the
// lower and upper capacity bounds, not a proof of optimality.

#include <cstdint>
#include <optional>
#include <vector>

#include "thermcap/fock.hpp"
#include "thermcap/gaussian.hpp"

namespace thermcap::chi_opt {

inline constexpr int kMaxMembers = 16;
inline constexpr int kMaxDim = 32;

struct EnsembleMember {
  fock::FockDensityMatrix state;
  double weight;
};

struct Ensemble {
  std::vector<EnsembleMember> members;
  /// sum_k w_k <n>_k over the (trace-normalized) member states.
  double mean_photons = 0.0;
};

/// Builds an Ensemble and fills mean_photons. Weights must sum to 1 within 1e-12.
Ensemble make_ensemble(std::vector<fock::FockDensityMatrix> states, std::vector<double> weights);

/// Holevo quantity of the ensemble through the thermal channel, in bits.
double chi(const ChannelParams& params, const Ensemble& ensemble,
           const fock::ChannelSimConfig& config = {});

/// Member parametrization used by the optimizer: a coherent state |alpha>
/// mixed with its own Fock-diagonal part,
///   rho = (1 - dephasing) |alpha><alpha| + dephasing diag(|alpha><alpha|).
/// Dephasing leaves the photon number unchanged.
struct MemberParams {
  fock::Complex alpha;
  double dephasing = 0.0;
};

fock::FockDensityMatrix member_state(const MemberParams& member, int dim);

struct OptimizerConfig {
  int members = kMaxMembers;
  int dim = 24;
  int max_iterations = 300;
  /// A sweep improving chi by less than this (bits) shrinks the step, or ends
  /// the run once the step is at its floor.
  double tolerance = 1e-6;
  double initial_step = 0.25;
  double step_shrink = 0.5;
  double step_floor = 1e-4;
  std::uint64_t seed = 7;
  /// Start from the discretized Gaussian coherent ensemble on this grid
  /// instead of a random constellation. The grid must have <= 16 nodes.
  std::optional<fock::QuadratureGrid> warm_start;
  fock::ChannelSimConfig channel;
};

struct HistoryEntry {
  int iteration;
  double chi_bits;
};

struct OptimizationResult {
  double best_chi_bits = 0.0;
  Ensemble ensemble;
  std::vector<MemberParams> parameters;
  int iterations = 0;
  bool converged = false;
  std::vector<HistoryEntry> history;
  double lower_bits = 0.0;
  double upper_bits = 0.0;

  /// best - lower; negative when the search stopped below Holevo's rate.
  double above_lower_bits() const { return best_chi_bits - lower_bits; }
  /// upper - best; negative would contradict the upper bound.
  double below_upper_bits() const { return upper_bits - best_chi_bits; }
};

/// Alternating ascent: Blahut-Arimoto reweighting with a bisected Lagrange
/// multiplier for the photon constraint, then accept-if-better coordinate
/// moves on every member's displacement and dephasing. Deterministic for a
/// fixed config. Throws DomainError for invalid parameters or config.
OptimizationResult optimize(const ChannelParams& params, double mean_photons,
                            const OptimizerConfig& config = {});

}  // namespace thermcap::chi_opt
