#pragma once

// Classical capacity bounds (bits per channel use) for the thermal noise
// channel with signal photon-number constraint N:
//
//   lower  gamma = (g(lambda N + (1 - lambda) N_E) - g((1 - lambda) N_E)) / ln 2
//   upper        = g(lambda N / ((1 - lambda) N_E + 1)) / ln 2
//
// and the certificate gamma <= C <= upper <= gamma + 1/ln 2.

#include <numbers>

#include "thermcap/gaussian.hpp"

namespace thermcap::bounds {

inline constexpr double kUniversalGapBits = 1.0 / std::numbers::ln2;

/// Absolute tolerance (bits) on the certificate inequalities.
inline constexpr double kCertificationTolerance = 1e-10;

/// Accepted parameter ranges. Values outside are rejected with DomainError.
inline constexpr double kMaxEnvPhotons = 1e6;
inline constexpr double kMaxSignalPhotons = 1e9;

struct BoundReport {
  double lambda = 0.0;
  double n_env = 0.0;
  double n_signal = 0.0;
  double lower_bits = 0.0;
  double upper_bits = 0.0;
  double gap_bits = 0.0;
  double refined_gap_bound_bits = 0.0;
  double universal_gap_bound_bits = kUniversalGapBits;
  bool certified = false;

  bool operator==(const BoundReport&) const = default;
};

/// Holevo's coherent-state rate gamma(lambda, N_E, N). Zero at N = 0.
double holevo_lower(const ChannelParams& params, double n_signal);

/// Upper bound obtained by splitting the channel into amplifier after pure loss.
double additive_extension_upper(const ChannelParams& params, double n_signal);

/// g(lambda N) / ln 2, the capacity of the pure-loss channel.
double pure_loss_capacity(double transmissivity, double n_signal);

/// upper - lower. Equals delta((1 - lambda) N_E, lambda N) / ln 2.
double gap(const ChannelParams& params, double n_signal);

/// Same quantity through gfunc::delta; second route used for cross-checks.
double gap_via_delta(const ChannelParams& params, double n_signal);

/// (1 - lambda) N_E ln(1 + 1/((1 - lambda) N_E)) / ln 2; 0 when N_E = 0.
double refined_gap_bound(const ChannelParams& params);

/// Checks the BoundReport invariants within kCertificationTolerance.
bool check_certificate(const BoundReport& r);

BoundReport report(const ChannelParams& params, double n_signal);

/// Throws DomainError unless params and N lie in the accepted ranges.
void validate(const ChannelParams& params, double n_signal);

}  // namespace thermcap::bounds
