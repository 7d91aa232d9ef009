#include "thermcap/bounds.hpp"

#include <cmath>

#include "thermcap/errors.hpp"
#include "thermcap/gfunc.hpp"

namespace thermcap::bounds {
namespace {

constexpr double kInvLn2 = 1.0 / std::numbers::ln2;

void validate_signal(double n_signal) {
  if (!std::isfinite(n_signal) || n_signal < 0.0 || n_signal > kMaxSignalPhotons) {
    detail::throw_domain("signal photon number must lie in [0, 1e9]", n_signal);
  }
}

// Environment photons that survive the beamsplitter, Y = (1 - lambda) N_E.
double surviving_noise(const ChannelParams& params) {
  return (1.0 - params.transmissivity()) * params.env_photons();
}

}  // namespace

void validate(const ChannelParams& params, double n_signal) {
  if (params.env_photons() > kMaxEnvPhotons) {
    detail::throw_domain("environment photon number must lie in [0, 1e6]", params.env_photons());
  }
  validate_signal(n_signal);
}

double pure_loss_capacity(double transmissivity, double n_signal) {
  if (!std::isfinite(transmissivity) || transmissivity <= 0.0 || transmissivity > 1.0) {
    detail::throw_domain("transmissivity must lie in (0, 1]", transmissivity);
  }
  validate_signal(n_signal);
  return gfunc::g(transmissivity * n_signal) * kInvLn2;
}

double holevo_lower(const ChannelParams& params, double n_signal) {
  validate(params, n_signal);
  // Zero temperature: share the exact expression path with the upper bound.
  if (params.env_photons() == 0.0) return pure_loss_capacity(params.transmissivity(), n_signal);
  const double noise = surviving_noise(params);
  const double out = params.transmissivity() * n_signal + noise;
  return (gfunc::g(out) - gfunc::g(noise)) * kInvLn2;
}

double additive_extension_upper(const ChannelParams& params, double n_signal) {
  validate(params, n_signal);
  if (params.env_photons() == 0.0) return pure_loss_capacity(params.transmissivity(), n_signal);
  const Decomposition d = decompose(params);
  return gfunc::g(d.pure_loss_transmissivity * n_signal) * kInvLn2;
}

double gap(const ChannelParams& params, double n_signal) {
  return additive_extension_upper(params, n_signal) - holevo_lower(params, n_signal);
}

double gap_via_delta(const ChannelParams& params, double n_signal) {
  validate(params, n_signal);
  if (params.env_photons() == 0.0) return 0.0;
  return gfunc::delta(surviving_noise(params), params.transmissivity() * n_signal) * kInvLn2;
}

double refined_gap_bound(const ChannelParams& params) {
  validate(params, 0.0);
  const double noise = surviving_noise(params);
  if (noise == 0.0) return 0.0;
  return gfunc::delta_limit(noise) * kInvLn2;
}

bool check_certificate(const BoundReport& r) {
  constexpr double tol = kCertificationTolerance;
  const bool ordered = r.lower_bits >= -tol && r.lower_bits <= r.upper_bits + tol;
  const bool consistent = std::abs(r.gap_bits - (r.upper_bits - r.lower_bits)) <= tol;
  const bool refined = r.gap_bits <= r.refined_gap_bound_bits + tol &&
                       r.refined_gap_bound_bits <= r.universal_gap_bound_bits + tol;
  return ordered && consistent && refined && r.gap_bits >= -tol;
}

BoundReport report(const ChannelParams& params, double n_signal) {
  BoundReport r;
  r.lambda = params.transmissivity();
  r.n_env = params.env_photons();
  r.n_signal = n_signal;
  r.lower_bits = holevo_lower(params, n_signal);
  r.upper_bits = additive_extension_upper(params, n_signal);
  r.gap_bits = r.upper_bits - r.lower_bits;
  r.refined_gap_bound_bits = refined_gap_bound(params);
  r.universal_gap_bound_bits = kUniversalGapBits;
  r.certified = check_certificate(r);
  return r;
}

}  // namespace thermcap::bounds
