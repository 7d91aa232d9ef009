#pragma once

// Single-mode Gaussian covariance algebra in the convention vacuum = I and
// thermal(N) = (2N + 1) I. Only zero-mean states are represented here.

#include <array>
#include <random>

namespace thermcap {

/// Tolerance on det(Gamma) >= 1 used by the physicality check.
inline constexpr double kPhysicalDetSlack = 1e-9;

/// 2x2 real symmetric quadrature covariance matrix of a physical state.
/// Construction enforces det >= 1 - kPhysicalDetSlack and trace > 0.
class CovarianceMatrix {
 public:
  /// Throws UnphysicalStateError if (qq, qp; qp, pp) violates Gamma + i Omega >= 0.
  CovarianceMatrix(double qq, double qp, double pp);

  static CovarianceMatrix identity() { return {1.0, 0.0, 1.0}; }

  /// True iff (qq, qp; qp, pp) is finite, has positive trace and det >= 1 - slack.
  static bool is_physical(double qq, double qp, double pp);

  double qq() const { return qq_; }
  double qp() const { return qp_; }
  double pp() const { return pp_; }
  double operator()(int row, int col) const;

  double trace() const { return qq_ + pp_; }
  double det() const { return qq_ * pp_ - qp_ * qp_; }

  /// Largest absolute entry difference.
  double max_abs_diff(const CovarianceMatrix& other) const;

  bool operator==(const CovarianceMatrix&) const = default;

 private:
  double qq_;
  double qp_;
  double pp_;
};

/// Thermal noise channel parameters: transmissivity in (0, 1] and mean photon
/// number of the thermal environment.
class ChannelParams {
 public:
  /// Throws DomainError unless 0 < transmissivity <= 1 and env_photons >= 0,
  /// both finite.
  ChannelParams(double transmissivity, double env_photons);

  double transmissivity() const { return transmissivity_; }
  double env_photons() const { return env_photons_; }

  bool operator==(const ChannelParams&) const = default;

 private:
  double transmissivity_;
  double env_photons_;
};

/// Phase-insensitive amplifier gain G >= 1.
class AmplifierParams {
 public:
  explicit AmplifierParams(double gain);
  double gain() const { return gain_; }

 private:
  double gain_;
};

/// Thermal channel written as amplifier(gain) after pure loss(transmissivity).
struct Decomposition {
  double gain;
  double pure_loss_transmissivity;
};

CovarianceMatrix thermal_covariance(double mean_photons);

/// (trace - 2) / 4; mean photon number of a zero-mean state.
double mean_photons(const CovarianceMatrix& gamma);

/// Gamma -> lambda Gamma + (1 - lambda)(2 N_E + 1) I.
CovarianceMatrix apply_thermal(const ChannelParams& params, const CovarianceMatrix& gamma);

/// Gamma -> G Gamma + (G - 1) I.
CovarianceMatrix apply_amplifier(const AmplifierParams& params, const CovarianceMatrix& gamma);

/// G = (1 - lambda) N_E + 1, pure-loss transmissivity lambda / G.
Decomposition decompose(const ChannelParams& params);

/// apply_amplifier(G, apply_thermal((lambda~, 0), gamma)).
CovarianceMatrix apply_decomposed(const Decomposition& d, const CovarianceMatrix& gamma);

/// Random squeezed, rotated thermal covariance
/// (2N+1) R(theta) diag(e^{2r}, e^{-2r}) R(theta)^T with N in [0, 5],
/// r in [-1, 1], theta in [0, pi).
CovarianceMatrix random_physical_covariance(std::mt19937_64& rng);

/// Random channel with transmissivity in (0, 1] and N_E in [0, max_env_photons].
ChannelParams random_channel(std::mt19937_64& rng, double max_env_photons = 50.0);

}  // namespace thermcap
