#include "cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <random>

#include "thermcap/bounds.hpp"
#include "thermcap/fock.hpp"
#include "thermcap/gaussian.hpp"

namespace thermcap::cli {
namespace {

std::vector<double> log_grid(double lo, double hi, int count) {
  std::vector<double> xs(count);
  for (int i = 0; i < count; ++i) {
    xs[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (count - 1));
  }
  return xs;
}

class Recorder {
 public:
  explicit Recorder(std::vector<InvariantResult>& out) : out_(out) {}

  // A check that throws counts as failed with infinite discrepancy.
  void check(const std::string& suite, const std::string& name, double tolerance,
             const std::function<double()>& measure) {
    double d = 0.0;
    try {
      d = measure();
    } catch (const std::exception&) {
      d = std::numeric_limits<double>::infinity();
    }
    out_.push_back({suite, name, d, tolerance, d <= tolerance});
  }

 private:
  std::vector<InvariantResult>& out_;
};

// Centered difference with step 1e-5 max(1, x), compared relative to
// max(1, |exact|).
double fd_mismatch(const std::function<double(double)>& f, const std::function<double(double)>& df,
                   const std::vector<double>& xs) {
  double worst = 0.0;
  for (double x : xs) {
    const double h = 1e-5 * std::max(1.0, x);
    const double fd = (f(x + h) - f(x - h)) / (2.0 * h);
    const double exact = df(x);
    worst = std::max(worst, std::abs(fd - exact) / std::max(1.0, std::abs(exact)));
  }
  return worst;
}

void gfunc_suite(Recorder& rec, const GFunctionTable& fn) {
  const std::string suite = "gfunc";
  const std::vector<double> wide = log_grid(1e-9, 1e9, 400);
  const std::vector<double> fd_grid = log_grid(0.01, 100.0, 200);

  rec.check(suite, "g > 0 on [1e-9, 1e9]", 0.0, [&] {
    return static_cast<double>(std::count_if(wide.begin(), wide.end(), [&](double x) { return !(fn.g(x) > 0.0); }));
  });
  rec.check(suite, "g strictly increasing", 0.0, [&] {
    int bad = 0;
    for (std::size_t i = 1; i < wide.size(); ++i) bad += !(fn.g(wide[i]) > fn.g(wide[i - 1]));
    return static_cast<double>(bad);
  });
  rec.check(suite, "g midpoint concave", 1e-14, [&] {
    double worst = 0.0;
    for (std::size_t i = 0; i + 7 < wide.size(); i += 3) {
      const double x = wide[i];
      const double y = wide[i + 7];
      const double mid = fn.g(0.5 * (x + y));
      worst = std::max(worst, (0.5 * (fn.g(x) + fn.g(y)) - mid) / std::max(1.0, mid));
    }
    return worst;
  });
  rec.check(suite, "g' matches finite difference of g", 1e-6,
            [&] { return fd_mismatch(fn.g, fn.g_prime, fd_grid); });
  rec.check(suite, "g'' matches finite difference of g'", 1e-6,
            [&] { return fd_mismatch(fn.g_prime, fn.g_second, fd_grid); });
  rec.check(suite, "delta' matches finite difference of delta", 1e-6, [&] {
    double worst = 0.0;
    for (double y : {0.1, 1.0, 10.0}) {
      worst = std::max(worst, fd_mismatch([&](double x) { return fn.delta(y, x); },
                                          [&](double x) { return fn.delta_prime(y, x); }, fd_grid));
    }
    return worst;
  });
  rec.check(suite, "delta'' matches finite difference of delta'", 1e-6, [&] {
    double worst = 0.0;
    for (double y : {0.1, 1.0, 10.0}) {
      worst = std::max(worst, fd_mismatch([&](double x) { return fn.delta_prime(y, x); },
                                          [&](double x) { return fn.delta_second(y, x); },
                                          log_grid(0.1, 100.0, 200)));
    }
    return worst;
  });

  const std::vector<double> xs = log_grid(1e-3, 1e6, 200);
  const std::vector<double> ys = log_grid(1e-3, 1e3, 25);
  rec.check(suite, "0 <= delta < delta_limit < 1", 0.0, [&] {
    int bad = 0;
    for (double y : ys) {
      const double limit = fn.delta_limit(y);
      bad += !(limit < 1.0);
      for (double x : xs) {
        const double d = fn.delta(y, x);
        bad += !(d >= 0.0 && d < limit);
      }
    }
    return static_cast<double>(bad);
  });
  rec.check(suite, "delta increasing, delta' > 0 and decreasing, delta'' < 0", 0.0, [&] {
    int bad = 0;
    for (double y : ys) {
      for (std::size_t i = 0; i < xs.size(); ++i) {
        bad += !(fn.delta_prime(y, xs[i]) > 0.0);
        bad += !(fn.delta_second(y, xs[i]) < 0.0);
        if (i > 0) {
          bad += !(fn.delta(y, xs[i]) > fn.delta(y, xs[i - 1]));
          bad += !(fn.delta_prime(y, xs[i]) < fn.delta_prime(y, xs[i - 1]));
        }
      }
    }
    return static_cast<double>(bad);
  });
}

void gaussian_suite(Recorder& rec, std::uint64_t seed) {
  const std::string suite = "gaussian_core";
  rec.check(suite, "thermal = amplifier o pure loss on 1000 random states", 1e-12, [&] {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const CovarianceMatrix gamma = random_physical_covariance(rng);
      const ChannelParams params = random_channel(rng);
      worst = std::max(worst, apply_thermal(params, gamma).max_abs_diff(apply_decomposed(decompose(params), gamma)));
    }
    return worst;
  });
  rec.check(suite, "channel outputs stay physical", 0.0, [&] {
    std::mt19937_64 rng(seed + 1);
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
      const CovarianceMatrix gamma = random_physical_covariance(rng);
      const ChannelParams params = random_channel(rng);
      for (const CovarianceMatrix& out :
           {apply_thermal(params, gamma), apply_amplifier(AmplifierParams(decompose(params).gain), gamma)}) {
        bad += !(out.det() >= 1.0 - kPhysicalDetSlack);
      }
    }
    return static_cast<double>(bad);
  });
  rec.check(suite, "zero-temperature channel is its own decomposition", 1e-15, [&] {
    std::mt19937_64 rng(seed + 2);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const CovarianceMatrix gamma = random_physical_covariance(rng);
      const ChannelParams params(random_channel(rng).transmissivity(), 0.0);
      worst = std::max(worst, apply_thermal(params, gamma).max_abs_diff(apply_decomposed(decompose(params), gamma)));
    }
    return worst;
  });
  rec.check(suite, "photon bookkeeping lambda N + (1 - lambda) N_E", 1e-12, [&] {
    std::mt19937_64 rng(seed + 3);
    std::uniform_real_distribution<double> photons(0.0, 5.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const ChannelParams params = random_channel(rng);
      const double n = photons(rng);
      const double expected = params.transmissivity() * n + (1.0 - params.transmissivity()) * params.env_photons();
      worst = std::max(worst, std::abs(mean_photons(apply_thermal(params, thermal_covariance(n))) - expected));
    }
    return worst;
  });
}

void bounds_suite(Recorder& rec, std::uint64_t seed) {
  const std::string suite = "bounds";
  rec.check(suite, "0 <= gap <= refined bound <= 1/ln 2 on 10^4 random triples", bounds::kCertificationTolerance, [&] {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const ChannelParams params(1.0 - unit(rng), 50.0 * (1.0 - unit(rng)));
      const double n = 100.0 * (1.0 - unit(rng));
      const bounds::BoundReport r = bounds::report(params, n);
      worst = std::max({worst, -r.gap_bits, r.gap_bits - r.refined_gap_bound_bits,
                        r.refined_gap_bound_bits - r.universal_gap_bound_bits, r.certified ? 0.0 : 1.0});
    }
    return worst;
  });
  rec.check(suite, "gap by subtraction equals delta / ln 2", 1e-10, [&] {
    std::mt19937_64 rng(seed + 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const ChannelParams params(1.0 - unit(rng), 50.0 * (1.0 - unit(rng)));
      const double n = 100.0 * (1.0 - unit(rng));
      worst = std::max(worst, std::abs(bounds::gap(params, n) - bounds::gap_via_delta(params, n)));
    }
    return worst;
  });
  rec.check(suite, "gap strictly increasing in N", 0.0, [&] {
    int bad = 0;
    const std::vector<double> ns = log_grid(1e-3, 1e6, 100);
    for (double lambda : {0.1, 0.5, 0.9}) {
      for (double ne : {0.1, 1.0, 10.0}) {
        const ChannelParams params(lambda, ne);
        for (std::size_t i = 1; i < ns.size(); ++i) bad += !(bounds::gap(params, ns[i]) > bounds::gap(params, ns[i - 1]));
      }
    }
    return static_cast<double>(bad);
  });
  rec.check(suite, "gap ln 2 at N = 1e8 within 1e-6 nats of its limit", 1e-6, [&] {
    double worst = 0.0;
    for (double lambda : {0.25, 0.5, 0.75, 0.9}) {
      for (double ne : {0.1, 1.0, 10.0, 50.0}) {
        const ChannelParams params(lambda, ne);
        const double limit = (1.0 - lambda) * ne * std::log1p(1.0 / ((1.0 - lambda) * ne));
        worst = std::max(worst, std::abs(bounds::gap(params, 1e8) * std::numbers::ln2 - limit));
      }
    }
    return worst;
  });
  rec.check(suite, "N_E = 0: lower = upper = pure-loss capacity exactly", 0.0, [&] {
    double worst = 0.0;
    for (double lambda : {0.1, 0.5, 0.7, 1.0}) {
      for (double n : {0.0, 0.5, 4.0, 1e3}) {
        const ChannelParams params(lambda, 0.0);
        const double c = bounds::pure_loss_capacity(lambda, n);
        worst = std::max({worst, std::abs(bounds::holevo_lower(params, n) - c),
                          std::abs(bounds::additive_extension_upper(params, n) - c)});
      }
    }
    return worst;
  });
}

void fock_suite(Recorder& rec, std::uint64_t seed) {
  const std::string suite = "fock_oracle";
  rec.check(suite, "thermal-state entropy error / (10 x analytic tail)", 1.0, [&] {
    double worst = 0.0;
    for (double n : {0.2, 0.5, 1.0, 2.0, 5.0}) {
      const int dim = fock::thermal_budget(n).dim;
      const double err = std::abs(fock::von_neumann_entropy(fock::thermal_state(n, dim)) - gfunc::g(n));
      // Report as a fraction of the allowed 10x tail (plus rounding slack).
      worst = std::max(worst, err / (10.0 * fock::thermal_entropy_tail(n, dim) + 1e-12));
    }
    return worst;
  });
  rec.check(suite, "channel moments match covariance algebra", fock::kMomentTolerance, [&] {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 6; ++i) {
      const ChannelParams params(1.0 - unit(rng), 2.0 * unit(rng));
      const fock::Complex alpha = std::polar(1.5 * unit(rng), 2.0 * std::numbers::pi * unit(rng));
      const double n_th = unit(rng);
      const std::vector<fock::FockDensityMatrix> states = {
          fock::coherent_state(alpha, 24), fock::thermal_state(n_th, fock::thermal_budget(n_th).dim)};
      worst = std::max(worst, fock::verify_decomposition_fock(params, states).max_discrepancy);
    }
    return worst;
  });
  rec.check(suite, "Holevo chi of Gaussian coherent ensemble matches lower bound (bits)", 1e-3, [&] {
    const ChannelParams params(0.6, 0.5);
    return std::abs(fock::holevo_chi_gaussian_ensemble(params, 2.0) - bounds::holevo_lower(params, 2.0));
  });
  rec.check(suite, "coherent output entropies equal g((1 - lambda) N_E)", 1e-6, [&] {
    const ChannelParams params(0.6, 0.5);
    const fock::QuadratureGrid grid{6, 8};
    const int dim = fock::chi_dimension(0.25, grid);
    const fock::ThermalChannelSimulator channel(params, dim);
    double worst = 0.0;
    for (const fock::EnsembleNode& node : fock::gaussian_ensemble_nodes(0.25, grid)) {
      const double s = fock::von_neumann_entropy(channel.apply(fock::coherent_state(node.alpha, dim)));
      worst = std::max(worst, std::abs(s - gfunc::g(0.2)));
    }
    return worst;
  });
}

}  // namespace

std::vector<InvariantResult> run_verify(VerifyLevel level, std::uint64_t seed, const GFunctionTable& functions) {
  std::vector<InvariantResult> results;
  Recorder rec(results);
  gfunc_suite(rec, functions);
  gaussian_suite(rec, seed);
  bounds_suite(rec, seed);
  if (level == VerifyLevel::kFull) fock_suite(rec, seed);
  return results;
}

}  // namespace thermcap::cli
