#include "thermcap/chi_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "thermcap/bounds.hpp"
#include "thermcap/errors.hpp"

namespace thermcap::chi_opt {
namespace {

using fock::Complex;
using fock::FockDensityMatrix;

double state_photons(const FockDensityMatrix& rho) { return rho.moments().mean_photons; }

void validate_config(const OptimizerConfig& config) {
  if (config.members < 1 || config.members > kMaxMembers) {
    detail::throw_domain("optimizer: members must lie in [1, 16]", config.members);
  }
  if (config.dim < 2 || config.dim > kMaxDim) {
    detail::throw_domain("optimizer: Fock dimension must lie in [2, 32]", config.dim);
  }
  if (config.max_iterations < 0) detail::throw_domain("optimizer: max_iterations must be >= 0", config.max_iterations);
  if (!(config.initial_step > 0.0) || !(config.step_floor > 0.0) || !(config.step_shrink > 0.0) ||
      !(config.step_shrink < 1.0)) {
    throw DomainError("optimizer: step schedule needs initial_step > 0, floor > 0, 0 < shrink < 1");
  }
  if (!(config.tolerance >= 0.0)) detail::throw_domain("optimizer: tolerance must be >= 0", config.tolerance);
}

// Optimizer state. Every candidate is evaluated on the saturated photon
// budget: displacements are scaled by one common factor so that the mean
// photon number equals the budget, which keeps coordinate moves on the
// constraint surface where the optimum lies.
class Search {
 public:
  Search(const ChannelParams& params, double budget, const OptimizerConfig& config)
      : channel_(params, config.dim, config.channel), budget_(budget), dim_(config.dim) {}

  struct Candidate {
    std::vector<MemberParams> members;
    std::vector<double> weights;
  };

  struct Evaluated {
    Candidate candidate;
    std::vector<FockDensityMatrix> states;
    std::vector<double> photons;
    std::vector<Eigen::MatrixXcd> outputs;
    std::vector<double> entropies;
    Eigen::MatrixXcd average;
    double chi_nats = 0.0;
  };

  // Evaluates c as given. With a base, only member `changed` is recomputed
  // (-1: none, weights only). Returns nullopt if a member breaks |alpha|^2 <= dim/4.
  std::optional<Evaluated> evaluate(Candidate c, const Evaluated* base = nullptr,
                                    int changed = -1) const {
    Evaluated e;
    const std::size_t k = c.members.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (base != nullptr && static_cast<int>(i) != changed) {
        e.states.push_back(base->states[i]);
        e.photons.push_back(base->photons[i]);
        e.outputs.push_back(base->outputs[i]);
        e.entropies.push_back(base->entropies[i]);
        continue;
      }
      if (std::norm(c.members[i].alpha) > dim_ / 4.0) return std::nullopt;
      e.states.push_back(member_state(c.members[i], dim_));
      e.photons.push_back(state_photons(e.states.back()));
      FockDensityMatrix out = channel_.apply(e.states.back());
      e.entropies.push_back(fock::von_neumann_entropy(out));
      e.outputs.push_back(out.matrix());
    }
    e.candidate = std::move(c);
    finish(e);
    return e;
  }

  // Rescales displacements onto the photon budget and evaluates. Members
  // other than `changed` are reused from base when no rescaling is needed.
  std::optional<Evaluated> evaluate_on_budget(Candidate c, const Evaluated* base = nullptr,
                                              int changed = -1) const {
    double second_moment = 0.0;
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      second_moment += c.weights[i] * std::norm(c.members[i].alpha);
    }
    if (second_moment <= 0.0) return evaluate(std::move(c));
    double factor = std::sqrt(budget_ / second_moment);
    if (std::abs(factor - 1.0) > 1e-14) base = nullptr;
    for (int attempt = 0; attempt < 4; ++attempt) {
      Candidate scaled = c;
      if (factor != 1.0) {
        for (auto& m : scaled.members) m.alpha *= factor;
      }
      std::optional<Evaluated> e = evaluate(std::move(scaled), base, changed);
      if (!e || feasible(*e)) return e;
      // Truncated coherent states carry slightly more or fewer photons than |alpha|^2.
      factor *= std::sqrt(budget_ / mean_photons(*e)) * (1.0 - 1e-12);
      base = nullptr;
    }
    return std::nullopt;
  }

  double mean_photons(const Evaluated& e) const {
    double n = 0.0;
    for (std::size_t i = 0; i < e.photons.size(); ++i) n += e.candidate.weights[i] * e.photons[i];
    return n;
  }

  bool feasible(const Evaluated& e) const { return mean_photons(e) <= budget_ + 1e-9; }

  // Blahut-Arimoto update w_k <- w_k exp(D_k - s n_k) / Z, where
  // D_k = D(E(rho_k) || E(rho_bar)) and s >= 0 is the smallest multiplier
  // (found by bisection) that keeps sum_k w_k n_k <= budget.
  std::vector<double> reweight(const Evaluated& e) const {
    const std::size_t k = e.outputs.size();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(e.average);
    Eigen::VectorXd logs(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < logs.size(); ++i) logs(i) = std::log(std::max(es.eigenvalues()(i), 1e-300));
    const Eigen::MatrixXcd log_average = es.eigenvectors() * logs.asDiagonal() * es.eigenvectors().adjoint();

    std::vector<double> divergence(k);
    for (std::size_t i = 0; i < k; ++i) {
      divergence[i] = -e.entropies[i] - e.outputs[i].cwiseProduct(log_average.transpose()).sum().real();
    }
    auto update = [&](double s) {
      std::vector<double> w(k, 0.0);
      double top = -std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < k; ++i) {
        if (e.candidate.weights[i] > 0.0) top = std::max(top, divergence[i] - s * e.photons[i]);
      }
      double total = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        if (e.candidate.weights[i] > 0.0) {
          w[i] = e.candidate.weights[i] * std::exp(divergence[i] - s * e.photons[i] - top);
        }
        total += w[i];
      }
      for (double& x : w) x /= total;
      return w;
    };
    auto usage = [&](const std::vector<double>& w) {
      double n = 0.0;
      for (std::size_t i = 0; i < k; ++i) n += w[i] * e.photons[i];
      return n;
    };

    if (usage(update(0.0)) <= budget_) return update(0.0);
    double hi = 1.0;
    for (int i = 0; i < 200 && usage(update(hi)) > budget_; ++i) hi *= 2.0;
    if (usage(update(hi)) > budget_) return e.candidate.weights;
    double lo = 0.0;
    for (int i = 0; i < 200 && hi - lo > 1e-13 * std::max(1.0, hi); ++i) {
      const double mid = 0.5 * (lo + hi);
      (usage(update(mid)) > budget_ ? lo : hi) = mid;
    }
    return update(hi);
  }

 private:
  void finish(Evaluated& e) const {
    const int d = channel_.output_dim();
    e.average = Eigen::MatrixXcd::Zero(d, d);
    double mean_entropy = 0.0;
    for (std::size_t i = 0; i < e.outputs.size(); ++i) {
      e.average += e.candidate.weights[i] * e.outputs[i];
      mean_entropy += e.candidate.weights[i] * e.entropies[i];
    }
    const FockDensityMatrix average(e.average, 1.0);
    e.chi_nats = fock::von_neumann_entropy(average) - mean_entropy;
  }

  fock::ThermalChannelSimulator channel_;
  double budget_;
  int dim_;
};

// Vacuum plus concentric rings (6, 12, ... members, the last ring takes the
// remainder), weighted by the Gaussian density and jittered by the seed.
Search::Candidate initial_candidate(double budget, const OptimizerConfig& config) {
  Search::Candidate c;
  if (config.warm_start) {
    for (const fock::EnsembleNode& node : fock::gaussian_ensemble_nodes(budget, *config.warm_start)) {
      c.members.push_back({node.alpha, 0.0});
      c.weights.push_back(node.weight);
    }
    if (c.members.size() > static_cast<std::size_t>(kMaxMembers)) {
      detail::throw_domain("optimizer: warm-start grid has more than 16 nodes",
                           static_cast<double>(c.members.size()));
    }
    return c;
  }
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> jitter(-0.05, 0.05);
  c.members.push_back({Complex{0.0, 0.0}, 0.0});
  int remaining = config.members - 1;
  std::vector<int> rings;
  for (int size = 6; remaining > 0; size += 6) {
    const int take = remaining < size + size / 2 ? remaining : size;
    rings.push_back(take);
    remaining -= take;
  }
  const double spacing = std::sqrt(budget);
  for (std::size_t j = 0; j < rings.size(); ++j) {
    const double radius = spacing * (j + 1.0);
    for (int i = 0; i < rings[j]; ++i) {
      const double phi = 2.0 * std::numbers::pi * (i + 0.5 * j) / rings[j];
      c.members.push_back({std::polar(radius * (1.0 + jitter(rng)), phi + jitter(rng)), 0.0});
    }
  }
  double total = 0.0;
  for (const auto& m : c.members) {
    const double w = std::exp(-std::norm(m.alpha) / budget);
    c.weights.push_back(w);
    total += w;
  }
  for (double& w : c.weights) w /= total;
  return c;
}

}  // namespace

fock::FockDensityMatrix member_state(const MemberParams& member, int dim) {
  if (!(member.dephasing >= 0.0 && member.dephasing <= 1.0)) {
    detail::throw_domain("member dephasing must lie in [0, 1]", member.dephasing);
  }
  const Eigen::VectorXcd c = fock::coherent_amplitudes(member.alpha, dim);
  Eigen::MatrixXcd rho = (1.0 - member.dephasing) * (c * c.adjoint());
  rho.diagonal() += member.dephasing * c.cwiseAbs2().cast<Complex>();
  return {std::move(rho), fock::poisson_tail_bound(std::norm(member.alpha), dim)};
}

Ensemble make_ensemble(std::vector<fock::FockDensityMatrix> states, std::vector<double> weights) {
  if (states.empty() || states.size() != weights.size()) {
    throw std::invalid_argument("ensemble needs one weight per state and at least one state");
  }
  Ensemble e;
  double total = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (!(weights[i] >= 0.0)) detail::throw_domain("ensemble weights must be >= 0", weights[i]);
    total += weights[i];
    e.mean_photons += weights[i] * state_photons(states[i]);
    e.members.push_back({std::move(states[i]), weights[i]});
  }
  if (std::abs(total - 1.0) > 1e-12) detail::throw_domain("ensemble weights must sum to 1", total);
  return e;
}

double chi(const ChannelParams& params, const Ensemble& ensemble, const fock::ChannelSimConfig& config) {
  if (ensemble.members.empty()) throw std::invalid_argument("chi: empty ensemble");
  std::vector<fock::FockDensityMatrix> states;
  std::vector<double> weights;
  for (const auto& m : ensemble.members) {
    states.push_back(m.state);
    weights.push_back(m.weight);
  }
  const fock::ThermalChannelSimulator channel(params, states.front().dim(), config);
  return fock::holevo_chi(channel, states, weights).chi_bits;
}

OptimizationResult optimize(const ChannelParams& params, double mean_photons,
                            const OptimizerConfig& config) {
  bounds::validate(params, mean_photons);
  validate_config(config);

  OptimizationResult result;
  result.lower_bits = bounds::holevo_lower(params, mean_photons);
  result.upper_bits = bounds::additive_extension_upper(params, mean_photons);

  if (mean_photons == 0.0) {
    result.parameters = {MemberParams{}};
    result.ensemble = make_ensemble({fock::coherent_state({0.0, 0.0}, config.dim)}, {1.0});
    result.best_chi_bits = chi(params, result.ensemble, config.channel);
    result.converged = true;
    result.history = {{0, result.best_chi_bits}};
    return result;
  }

  const Search search(params, mean_photons, config);
  std::optional<Search::Evaluated> start = search.evaluate(initial_candidate(mean_photons, config));
  if (!start || !search.feasible(*start)) {
    start = search.evaluate_on_budget(initial_candidate(mean_photons, config));
  }
  if (!start) throw TruncationError("optimizer: initial ensemble does not fit the Fock cutoff");
  Search::Evaluated current = std::move(*start);

  auto improves = [&](const std::optional<Search::Evaluated>& e) {
    return e && search.feasible(*e) && e->chi_nats > current.chi_nats;
  };
  auto to_bits = [](double nats) { return nats / std::numbers::ln2; };
  auto moved = [](Search::Candidate c, std::size_t i, int coord, double delta) {
    MemberParams& m = c.members[i];
    if (coord == 0) m.alpha += Complex{delta, 0.0};
    if (coord == 1) m.alpha += Complex{0.0, delta};
    if (coord == 2) m.dephasing = std::clamp(m.dephasing + delta, 0.0, 1.0);
    return c;
  };

  result.history.push_back({0, to_bits(current.chi_nats)});
  double step = config.initial_step;
  int sweep = 0;
  while (sweep < config.max_iterations) {
    ++sweep;
    const double before = current.chi_nats;

    // Weight step, damped toward the current weights until it is an ascent.
    const std::vector<double> target = search.reweight(current);
    for (double tau = 1.0; tau >= 1.0 / 64.0; tau *= 0.5) {
      Search::Candidate c = current.candidate;
      for (std::size_t i = 0; i < c.weights.size(); ++i) {
        c.weights[i] = (1.0 - tau) * current.candidate.weights[i] + tau * target[i];
      }
      std::optional<Search::Evaluated> e = search.evaluate_on_budget(std::move(c), &current, -1);
      if (improves(e)) {
        current = std::move(*e);
        break;
      }
    }

    // Coordinate moves on Re alpha, Im alpha and dephasing. A successful move
    // is extended with doubled steps while it keeps improving.
    for (std::size_t i = 0; i < current.candidate.members.size(); ++i) {
      for (int coord = 0; coord < 3; ++coord) {
        for (double sign : {1.0, -1.0}) {
          double delta = sign * step;
          Search::Candidate c = moved(current.candidate, i, coord, delta);
          if (coord == 2 && c.members[i].dephasing == current.candidate.members[i].dephasing) continue;
          std::optional<Search::Evaluated> e = search.evaluate_on_budget(std::move(c), &current, static_cast<int>(i));
          if (!improves(e)) continue;
          current = std::move(*e);
          for (int extend = 0; extend < 8; ++extend) {
            delta *= 2.0;
            std::optional<Search::Evaluated> further =
                search.evaluate_on_budget(moved(current.candidate, i, coord, delta), &current, static_cast<int>(i));
            if (!improves(further)) break;
            current = std::move(*further);
          }
          break;
        }
      }
    }

    result.history.push_back({sweep, to_bits(current.chi_nats)});
    if (current.chi_nats - before < config.tolerance * std::numbers::ln2) {
      if (step <= config.step_floor) {
        result.converged = true;
        break;
      }
      step = std::max(config.step_floor, step * config.step_shrink);
    }
  }

  result.iterations = sweep;
  result.parameters = current.candidate.members;
  result.ensemble = make_ensemble(current.states, current.candidate.weights);
  result.best_chi_bits = chi(params, result.ensemble, config.channel);
  return result;
}

}  // namespace thermcap::chi_opt
