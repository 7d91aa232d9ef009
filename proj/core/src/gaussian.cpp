#include "thermcap/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "thermcap/errors.hpp"

namespace thermcap {

CovarianceMatrix::CovarianceMatrix(double qq, double qp, double pp) : qq_(qq), qp_(qp), pp_(pp) {
  if (!is_physical(qq, qp, pp)) {
    std::ostringstream os;
    os.precision(17);
    os << "covariance matrix [[" << qq << ", " << qp << "], [" << qp << ", " << pp
       << "]] violates det >= 1 (det = " << (qq * pp - qp * qp) << ")";
    throw UnphysicalStateError(os.str());
  }
}

bool CovarianceMatrix::is_physical(double qq, double qp, double pp) {
  if (!std::isfinite(qq) || !std::isfinite(qp) || !std::isfinite(pp)) return false;
  if (qq + pp <= 0.0) return false;
  return qq * pp - qp * qp >= 1.0 - kPhysicalDetSlack;
}

double CovarianceMatrix::operator()(int row, int col) const {
  if (row == 0 && col == 0) return qq_;
  if (row == 1 && col == 1) return pp_;
  return qp_;
}

double CovarianceMatrix::max_abs_diff(const CovarianceMatrix& other) const {
  return std::max({std::abs(qq_ - other.qq_), std::abs(qp_ - other.qp_),
                   std::abs(pp_ - other.pp_)});
}

ChannelParams::ChannelParams(double transmissivity, double env_photons)
    : transmissivity_(transmissivity), env_photons_(env_photons) {
  if (!std::isfinite(transmissivity) || transmissivity <= 0.0 || transmissivity > 1.0) {
    detail::throw_domain("transmissivity must lie in (0, 1]", transmissivity);
  }
  if (!std::isfinite(env_photons) || env_photons < 0.0) {
    detail::throw_domain("environment photon number must be finite and >= 0", env_photons);
  }
}

AmplifierParams::AmplifierParams(double gain) : gain_(gain) {
  if (!std::isfinite(gain) || gain < 1.0) {
    detail::throw_domain("amplifier gain must be finite and >= 1", gain);
  }
}

CovarianceMatrix thermal_covariance(double mean_photons) {
  if (!std::isfinite(mean_photons) || mean_photons < 0.0) {
    detail::throw_domain("thermal_covariance: photon number must be finite and >= 0", mean_photons);
  }
  const double v = 2.0 * mean_photons + 1.0;
  return {v, 0.0, v};
}

double mean_photons(const CovarianceMatrix& gamma) {
  return std::max(0.0, (gamma.trace() - 2.0) / 4.0);
}

CovarianceMatrix apply_thermal(const ChannelParams& params, const CovarianceMatrix& gamma) {
  const double lambda = params.transmissivity();
  const double noise = (1.0 - lambda) * (2.0 * params.env_photons() + 1.0);
  return {lambda * gamma.qq() + noise, lambda * gamma.qp(), lambda * gamma.pp() + noise};
}

CovarianceMatrix apply_amplifier(const AmplifierParams& params, const CovarianceMatrix& gamma) {
  const double gain = params.gain();
  const double noise = gain - 1.0;
  return {gain * gamma.qq() + noise, gain * gamma.qp(), gain * gamma.pp() + noise};
}

Decomposition decompose(const ChannelParams& params) {
  const double gain = (1.0 - params.transmissivity()) * params.env_photons() + 1.0;
  return {gain, params.transmissivity() / gain};
}

CovarianceMatrix apply_decomposed(const Decomposition& d, const CovarianceMatrix& gamma) {
  const ChannelParams pure_loss(d.pure_loss_transmissivity, 0.0);
  return apply_amplifier(AmplifierParams(d.gain), apply_thermal(pure_loss, gamma));
}

CovarianceMatrix random_physical_covariance(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> photons(0.0, 5.0);
  std::uniform_real_distribution<double> squeeze(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  const double v = 2.0 * photons(rng) + 1.0;
  const double r = squeeze(rng);
  const double theta = angle(rng);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double a = std::exp(2.0 * r);
  const double b = std::exp(-2.0 * r);
  // R diag(a, b) R^T with R = [[c, -s], [s, c]].
  return {v * (c * c * a + s * s * b), v * (c * s * (a - b)), v * (s * s * a + c * c * b)};
}

ChannelParams random_channel(std::mt19937_64& rng, double max_env_photons) {
  // (0, 1]: 1 - U[0, 1).
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double lambda = 1.0 - unit(rng);
  return {lambda, max_env_photons * unit(rng)};
}

}  // namespace thermcap
