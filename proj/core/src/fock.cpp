#include "thermcap/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "thermcap/errors.hpp"

namespace thermcap::fock {
namespace {

void require_photons(double n, const char* what) {
  if (!std::isfinite(n) || n < 0.0) detail::throw_domain(std::string(what) + " must be finite and >= 0", n);
}

void require_dim(int dim) {
  if (dim < 1) detail::throw_domain("Fock dimension must be >= 1", dim);
}

// Gauss-Legendre nodes and weights on [-1, 1], ascending.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      dp = n * (z * p1 - p2) / (z * z - 1.0);
      const double step = p1 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    nodes[i] = -z;
    nodes[n - 1 - i] = z;
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

double max_radial_spacing(const std::vector<double>& radii, double outer) {
  double spacing = radii.front();
  for (std::size_t i = 1; i < radii.size(); ++i) spacing = std::max(spacing, radii[i] - radii[i - 1]);
  return std::max(spacing, outer - radii.back());
}

std::vector<double> radial_nodes(int count, double outer, std::vector<double>* weights = nullptr) {
  std::vector<double> x;
  std::vector<double> w;
  gauss_legendre(count, x, w);
  std::vector<double> r(count);
  for (int i = 0; i < count; ++i) {
    r[i] = 0.5 * outer * (x[i] + 1.0);
    w[i] *= 0.5 * outer;
  }
  if (weights != nullptr) *weights = std::move(w);
  return r;
}

// Upper bound on the entropy change caused by discarding probability weight eps
// from a state on d levels.
double missing_weight_entropy(double eps, int d) {
  if (eps <= 0.0) return 0.0;
  return eps * (std::log(static_cast<double>(d)) + std::log(1.0 / eps) + 1.0);
}

}  // namespace

double thermal_tail(double mean_photons, int dim) {
  require_photons(mean_photons, "thermal_tail: photon number");
  require_dim(dim);
  if (mean_photons == 0.0) return 0.0;
  return std::pow(mean_photons / (mean_photons + 1.0), dim);
}

double thermal_entropy_tail(double mean_photons, int dim) {
  const double tail = thermal_tail(mean_photons, dim);
  if (tail == 0.0) return 0.0;
  return tail * (std::log1p(mean_photons) + (dim + mean_photons) * std::log1p(1.0 / mean_photons));
}

double poisson_tail_bound(double mean, int dim) {
  require_photons(mean, "poisson_tail_bound: mean");
  require_dim(dim);
  if (mean == 0.0) return 0.0;
  if (dim <= mean) return 1.0;
  // P(n >= D) <= e^{-mu} (e mu / D)^D
  const double log_bound = -mean + dim + dim * std::log(mean / dim);
  return std::min(1.0, std::exp(log_bound));
}

TruncationBudget thermal_budget(double mean_photons, double target) {
  require_photons(mean_photons, "thermal_budget: photon number");
  if (mean_photons == 0.0) return {1, 0.0};
  const double q = mean_photons / (mean_photons + 1.0);
  int dim = std::max(1, static_cast<int>(std::ceil(std::log(target) / std::log(q))));
  while (std::pow(q, dim) > target) ++dim;
  return {dim, std::pow(q, dim)};
}

TruncationBudget coherent_budget(double mean_photons, double target) {
  require_photons(mean_photons, "coherent_budget: photon number");
  int dim = std::max(1, static_cast<int>(std::ceil(4.0 * mean_photons)));
  while (poisson_tail_bound(mean_photons, dim) > target) ++dim;
  return {dim, poisson_tail_bound(mean_photons, dim)};
}

FockDensityMatrix::FockDensityMatrix(Eigen::MatrixXcd rho, double tail_bound)
    : rho_(std::move(rho)), tail_bound_(tail_bound) {
  if (rho_.rows() != rho_.cols() || rho_.rows() < 1) {
    throw UnphysicalStateError("density matrix must be square and non-empty");
  }
  if (!(tail_bound_ >= 0.0) || tail_bound_ > 1.0) {
    detail::throw_domain("tail bound must lie in [0, 1]", tail_bound_);
  }
  const double asym = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  if (!(asym <= kHermitianTolerance)) {
    std::ostringstream os;
    os << "density matrix is not Hermitian (max |rho - rho^dagger| = " << asym << ")";
    throw UnphysicalStateError(os.str());
  }
  rho_ = 0.5 * (rho_ + rho_.adjoint()).eval();
  const double tr = trace();
  if (tr > 1.0 + 1e-12 || tr < 1.0 - tail_bound_ - 1e-12) {
    std::ostringstream os;
    os.precision(17);
    os << "density matrix trace " << tr << " outside [1 - tail_bound, 1] with tail_bound "
       << tail_bound_;
    throw UnphysicalStateError(os.str());
  }
}

void FockDensityMatrix::check_positive() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho_, Eigen::EigenvaluesOnly);
  const double smallest = es.eigenvalues().minCoeff();
  if (smallest < -kNegativeEigenvalueTolerance) {
    std::ostringstream os;
    os << "density matrix has negative eigenvalue " << smallest;
    throw UnphysicalStateError(os.str());
  }
}

Moments FockDensityMatrix::moments() const {
  const int d = dim();
  const double tr = trace();
  Complex a{0.0, 0.0};
  Complex a2{0.0, 0.0};
  double n = 0.0;
  for (int k = 0; k < d; ++k) {
    n += k * rho_(k, k).real();
    if (k >= 1) a += std::sqrt(static_cast<double>(k)) * rho_(k, k - 1);
    if (k >= 2) a2 += std::sqrt(static_cast<double>(k) * (k - 1)) * rho_(k, k - 2);
  }
  a /= tr;
  a2 /= tr;
  n /= tr;
  Moments m;
  m.mean_q = 2.0 * a.real();
  m.mean_p = 2.0 * a.imag();
  m.qq = 2.0 * a2.real() + 2.0 * n + 1.0 - m.mean_q * m.mean_q;
  m.pp = -2.0 * a2.real() + 2.0 * n + 1.0 - m.mean_p * m.mean_p;
  m.qp = 2.0 * a2.imag() - m.mean_q * m.mean_p;
  m.mean_photons = n;
  return m;
}

FockDensityMatrix thermal_state(double mean_photons, int dim) {
  require_photons(mean_photons, "thermal_state: photon number");
  require_dim(dim);
  const double q = mean_photons / (mean_photons + 1.0);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  double p = 1.0 / (mean_photons + 1.0);
  for (int n = 0; n < dim; ++n) {
    rho(n, n) = p;
    p *= q;
  }
  return {std::move(rho), thermal_tail(mean_photons, dim)};
}

Eigen::VectorXcd coherent_amplitudes(Complex alpha, int dim) {
  require_dim(dim);
  const double mu = std::norm(alpha);
  if (!std::isfinite(mu)) detail::throw_domain("coherent amplitude must be finite", mu);
  if (mu > dim / 4.0) {
    std::ostringstream os;
    os << "coherent state |alpha|^2 = " << mu << " exceeds dim/4 = " << dim / 4.0;
    throw TruncationError(os.str());
  }
  Eigen::VectorXcd c(dim);
  c(0) = std::exp(-0.5 * mu);
  for (int n = 1; n < dim; ++n) c(n) = c(n - 1) * alpha / std::sqrt(static_cast<double>(n));
  c.normalize();
  return c;
}

FockDensityMatrix coherent_state(Complex alpha, int dim) {
  const Eigen::VectorXcd c = coherent_amplitudes(alpha, dim);
  return {c * c.adjoint(), poisson_tail_bound(std::norm(alpha), dim)};
}

FockDensityMatrix dephase(const FockDensityMatrix& rho) {
  Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(rho.dim(), rho.dim());
  diag.diagonal() = rho.matrix().diagonal().real().cast<Complex>();
  return {std::move(diag), rho.tail_bound()};
}

FockDensityMatrix mix(std::span<const FockDensityMatrix> states, std::span<const double> weights) {
  if (states.empty() || states.size() != weights.size()) {
    throw std::invalid_argument("mix: need one weight per state and at least one state");
  }
  const int d = states.front().dim();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
  double tail = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].dim() != d) throw std::invalid_argument("mix: states differ in dimension");
    if (!(weights[i] >= 0.0)) detail::throw_domain("mix: weights must be >= 0", weights[i]);
    acc += weights[i] * states[i].matrix();
    tail += weights[i] * states[i].tail_bound();
    total += weights[i];
  }
  if (std::abs(total - 1.0) > 1e-12) detail::throw_domain("mix: weights must sum to 1", total);
  return {std::move(acc), std::min(1.0, tail)};
}

ThermalChannelSimulator::ThermalChannelSimulator(const ChannelParams& params, int input_dim,
                                                 const ChannelSimConfig& config)
    : params_(params), input_dim_(input_dim) {
  require_dim(input_dim);
  const TruncationBudget env = thermal_budget(params.env_photons(), config.env_tail_target);
  env_dim_ = env.dim;
  env_tail_ = env.tail_bound;
  if (static_cast<long>(input_dim_) * env_dim_ > config.max_joint_dim) {
    std::ostringstream os;
    os << "joint dimension " << input_dim_ << " x " << env_dim_ << " = "
       << static_cast<long>(input_dim_) * env_dim_ << " exceeds cap " << config.max_joint_dim;
    throw TruncationError(os.str());
  }

  env_populations_.resize(env_dim_);
  const double ne = params.env_photons();
  double p = 1.0 / (ne + 1.0);
  for (int m = 0; m < env_dim_; ++m) {
    env_populations_[m] = p;
    p *= ne / (ne + 1.0);
  }

  offsets_.resize(static_cast<std::size_t>(input_dim_) * env_dim_ + 1);
  std::size_t total = 0;
  for (int k = 0; k < input_dim_; ++k) {
    for (int m = 0; m < env_dim_; ++m) {
      offsets_[k * env_dim_ + m] = total;
      total += k + m + 1;
    }
  }
  offsets_.back() = total;
  amplitudes_.assign(total, 0.0);

  // U a^dag U^dag = t a^dag - r b^dag and U b^dag U^dag = r a^dag + t b^dag, so
  // U|k, m> = (t a^dag - r b^dag)^k (r a^dag + t b^dag)^m |0, 0> / sqrt(k! m!).
  // Columns are built by applying one creation operator at a time; every
  // step maps a unit vector of block n to a unit vector of block n + 1.
  const double t = std::sqrt(params.transmissivity());
  const double r = std::sqrt(1.0 - params.transmissivity());
  auto column = [this](int k, int m) { return amplitudes_.data() + offsets_[k * env_dim_ + m]; };
  auto raise = [](const double* src, int n, double ca, double cb, double norm, double* dst) {
    // dst = (ca a^dag + cb b^dag) src / norm on |j, n - j> -> block n + 1.
    for (int j = 0; j <= n + 1; ++j) dst[j] = 0.0;
    for (int j = 0; j <= n; ++j) {
      dst[j + 1] += ca * std::sqrt(static_cast<double>(j + 1)) * src[j];
      dst[j] += cb * std::sqrt(static_cast<double>(n - j + 1)) * src[j];
    }
    for (int j = 0; j <= n + 1; ++j) dst[j] /= norm;
  };
  column(0, 0)[0] = 1.0;
  for (int m = 1; m < env_dim_; ++m) {
    raise(column(0, m - 1), m - 1, r, t, std::sqrt(static_cast<double>(m)), column(0, m));
  }
  for (int k = 1; k < input_dim_; ++k) {
    for (int m = 0; m < env_dim_; ++m) {
      raise(column(k - 1, m), k - 1 + m, t, -r, std::sqrt(static_cast<double>(k)), column(k, m));
    }
  }
}

std::span<const double> ThermalChannelSimulator::block_column(int k, int m) const {
  if (k < 0 || k >= input_dim_ || m < 0 || m >= env_dim_) {
    throw std::out_of_range("block_column: index outside the truncated joint space");
  }
  const std::size_t idx = static_cast<std::size_t>(k) * env_dim_ + m;
  return {amplitudes_.data() + offsets_[idx], static_cast<std::size_t>(k + m + 1)};
}

FockDensityMatrix ThermalChannelSimulator::apply(const FockDensityMatrix& rho) const {
  if (rho.dim() != input_dim_) {
    std::ostringstream os;
    os << "state dimension " << rho.dim() << " does not match channel input dimension " << input_dim_;
    throw std::invalid_argument(os.str());
  }
  const int d_in = input_dim_;
  const int d_out = output_dim();
  const Eigen::MatrixXcd& in = rho.matrix();

  // Output element (j, j + s) receives contributions from input (k, k + s);
  // accumulate diagonal by diagonal, upper triangle only.
  std::vector<double> re(static_cast<std::size_t>(d_in) * d_out, 0.0);
  std::vector<double> im(static_cast<std::size_t>(d_in) * d_out, 0.0);
  for (int m = 0; m < env_dim_; ++m) {
    const double pm = env_populations_[m];
    for (int k = 0; k < d_in; ++k) {
      const double* vk = amplitudes_.data() + offsets_[k * env_dim_ + m];
      const int len = k + m + 1;
      for (int kp = k; kp < d_in; ++kp) {
        const Complex c = pm * in(k, kp);
        if (c == Complex{0.0, 0.0}) continue;
        const int s = kp - k;
        const double* vkp = amplitudes_.data() + offsets_[kp * env_dim_ + m] + s;
        double* dr = re.data() + static_cast<std::size_t>(s) * d_out;
        double* di = im.data() + static_cast<std::size_t>(s) * d_out;
        const double cr = c.real();
        const double ci = c.imag();
        for (int j = 0; j < len; ++j) {
          const double prod = vk[j] * vkp[j];
          dr[j] += cr * prod;
          di[j] += ci * prod;
        }
      }
    }
  }

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d_out, d_out);
  for (int s = 0; s < d_in; ++s) {
    const double* dr = re.data() + static_cast<std::size_t>(s) * d_out;
    const double* di = im.data() + static_cast<std::size_t>(s) * d_out;
    for (int j = 0; j + s < d_out; ++j) {
      out(j, j + s) = Complex{dr[j], di[j]};
      if (s != 0) out(j + s, j) = Complex{dr[j], -di[j]};
    }
  }
  for (int j = 0; j < d_out; ++j) out(j, j) = out(j, j).real();

  const double deficit_in = rho.trace_deficit();
  FockDensityMatrix result(std::move(out), std::min(1.0, rho.tail_bound() + env_tail_));
  if (result.trace_deficit() > deficit_in + env_tail_ + 1e-12) {
    std::ostringstream os;
    os << "trace accounting violated: output deficit " << result.trace_deficit()
       << " > input deficit " << deficit_in << " + environment tail " << env_tail_;
    throw std::logic_error(os.str());
  }
  return result;
}

FockDensityMatrix apply_channel(const ChannelParams& params, const FockDensityMatrix& rho,
                                const ChannelSimConfig& config) {
  return ThermalChannelSimulator(params, rho.dim(), config).apply(rho);
}

EntropyEstimate von_neumann_entropy_with_budget(const FockDensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix(), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& mu = es.eigenvalues();
  EntropyEstimate est;
  int below_floor = 0;
  for (Eigen::Index i = 0; i < mu.size(); ++i) {
    const double v = mu(i);
    if (v < -kNegativeEigenvalueTolerance) {
      std::ostringstream os;
      os << "density matrix has negative eigenvalue " << v;
      throw UnphysicalStateError(os.str());
    }
    if (v > kEigenvalueFloor) {
      est.nats -= v * std::log(v);
    } else {
      ++below_floor;
    }
  }
  // -x ln x is increasing below 1/e, so the floor value bounds each dropped term.
  est.floor_error = below_floor * (-kEigenvalueFloor * std::log(kEigenvalueFloor));
  return est;
}

double von_neumann_entropy(const FockDensityMatrix& rho) {
  return von_neumann_entropy_with_budget(rho).nats;
}

std::vector<EnsembleNode> gaussian_ensemble_nodes(double mean_photons, const QuadratureGrid& grid) {
  require_photons(mean_photons, "gaussian_ensemble_nodes: photon number");
  if (mean_photons == 0.0) return {{Complex{0.0, 0.0}, 1.0}};
  if (grid.radial_nodes < 1 || grid.angular_nodes < 1) {
    throw TruncationError("quadrature grid needs at least one radial and one angular node");
  }
  if (grid.radius_factor < 4.0) {
    std::ostringstream os;
    os << "grid radius factor " << grid.radius_factor << " < 4 (radius must be >= 4 sqrt(N))";
    throw TruncationError(os.str());
  }
  const double outer = grid.radius_factor * std::sqrt(mean_photons);
  std::vector<double> gl_weights;
  const std::vector<double> radii = radial_nodes(grid.radial_nodes, outer, &gl_weights);
  const double spacing = max_radial_spacing(radii, outer);
  if (spacing > grid.max_radial_spacing) {
    std::ostringstream os;
    os << "radial grid spacing " << spacing << " exceeds " << grid.max_radial_spacing
       << " with " << grid.radial_nodes << " radial nodes over radius " << outer;
    throw TruncationError(os.str());
  }

  std::vector<EnsembleNode> nodes;
  nodes.reserve(static_cast<std::size_t>(grid.radial_nodes) * grid.angular_nodes);
  double total = 0.0;
  for (int i = 0; i < grid.radial_nodes; ++i) {
    // density (1 / (pi N)) exp(-r^2 / N) in d^2 alpha = r dr dphi
    const double radial = gl_weights[i] * radii[i] * std::exp(-radii[i] * radii[i] / mean_photons);
    for (int j = 0; j < grid.angular_nodes; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / grid.angular_nodes;
      nodes.push_back({std::polar(radii[i], phi), radial});
      total += radial;
    }
  }
  for (auto& node : nodes) node.weight /= total;
  return nodes;
}

QuadratureGrid grid_for(double mean_photons, QuadratureGrid grid) {
  require_photons(mean_photons, "grid_for: photon number");
  if (mean_photons == 0.0) return grid;
  const double outer = grid.radius_factor * std::sqrt(mean_photons);
  while (max_radial_spacing(radial_nodes(grid.radial_nodes, outer), outer) > grid.max_radial_spacing) {
    ++grid.radial_nodes;
  }
  return grid;
}

int chi_dimension(double mean_photons, const QuadratureGrid& grid, double target) {
  require_photons(mean_photons, "chi_dimension: photon number");
  const double outer_sq = grid.radius_factor * grid.radius_factor * mean_photons;
  return std::max(2, coherent_budget(outer_sq, target).dim);
}

StateEnsemble gaussian_coherent_ensemble(double mean_photons, const QuadratureGrid& grid, int dim) {
  StateEnsemble ens;
  for (const EnsembleNode& node : gaussian_ensemble_nodes(mean_photons, grid)) {
    ens.states.push_back(coherent_state(node.alpha, dim));
    ens.weights.push_back(node.weight);
  }
  return ens;
}

namespace {

// Streaming Holevo quantity: outputs are pushed one at a time so that large
// ensembles never hold all output states in memory.
class ChiAccumulator {
 public:
  explicit ChiAccumulator(const ThermalChannelSimulator& channel)
      : channel_(channel),
        average_(Eigen::MatrixXcd::Zero(channel.output_dim(), channel.output_dim())) {}

  void add(const FockDensityMatrix& state, double weight) {
    if (!(weight >= 0.0)) detail::throw_domain("ensemble weights must be >= 0", weight);
    const FockDensityMatrix out = channel_.apply(state);
    const EntropyEstimate s = von_neumann_entropy_with_budget(out);
    result_.member_output_entropies.push_back(s.nats);
    mean_entropy_ += weight * s.nats;
    result_.error_budget += weight * (s.floor_error + missing_weight_entropy(out.tail_bound(), out.dim()));
    average_ += weight * out.matrix();
    tail_ += weight * out.tail_bound();
    total_weight_ += weight;
  }

  ChiBreakdown finish() {
    if (std::abs(total_weight_ - 1.0) > 1e-12) {
      detail::throw_domain("ensemble weights must sum to 1", total_weight_);
    }
    const FockDensityMatrix average(std::move(average_), std::min(1.0, tail_));
    const EntropyEstimate s = von_neumann_entropy_with_budget(average);
    result_.average_output_entropy = s.nats;
    result_.error_budget += s.floor_error + missing_weight_entropy(average.tail_bound(), average.dim());
    result_.chi_bits = std::max(0.0, s.nats - mean_entropy_) / std::numbers::ln2;
    return std::move(result_);
  }

 private:
  const ThermalChannelSimulator& channel_;
  Eigen::MatrixXcd average_;
  double tail_ = 0.0;
  double mean_entropy_ = 0.0;
  double total_weight_ = 0.0;
  ChiBreakdown result_;
};

}  // namespace

ChiBreakdown holevo_chi(const ThermalChannelSimulator& channel,
                        std::span<const FockDensityMatrix> states,
                        std::span<const double> weights) {
  if (states.empty() || states.size() != weights.size()) {
    throw std::invalid_argument("holevo_chi: need one weight per state and at least one state");
  }
  ChiAccumulator acc(channel);
  for (std::size_t i = 0; i < states.size(); ++i) acc.add(states[i], weights[i]);
  return acc.finish();
}

ChiBreakdown holevo_chi_gaussian_ensemble_breakdown(const ChannelParams& params, double mean_photons,
                                                    const QuadratureGrid& grid, int dim,
                                                    const ChannelSimConfig& config) {
  const std::vector<EnsembleNode> nodes = gaussian_ensemble_nodes(mean_photons, grid);
  if (dim == 0) dim = chi_dimension(mean_photons, grid);
  const ThermalChannelSimulator channel(params, dim, config);
  ChiAccumulator acc(channel);
  for (const EnsembleNode& node : nodes) acc.add(coherent_state(node.alpha, dim), node.weight);
  return acc.finish();
}

double holevo_chi_gaussian_ensemble(const ChannelParams& params, double mean_photons,
                                    const QuadratureGrid& grid, int dim,
                                    const ChannelSimConfig& config) {
  return holevo_chi_gaussian_ensemble_breakdown(params, mean_photons, grid, dim, config).chi_bits;
}

DecompositionCheck verify_decomposition_fock(const ChannelParams& params,
                                             std::span<const FockDensityMatrix> test_states,
                                             const ChannelSimConfig& config) {
  const Decomposition d = decompose(params);
  const double amplitude_gain = std::sqrt(d.gain) * std::sqrt(d.pure_loss_transmissivity);
  DecompositionCheck check;
  for (const FockDensityMatrix& rho : test_states) {
    const Moments in = rho.moments();
    const Moments out = apply_channel(params, rho, config).moments();
    const CovarianceMatrix predicted = apply_decomposed(d, CovarianceMatrix(in.qq, in.qp, in.pp));
    const double discrepancy = std::max({std::abs(out.mean_q - amplitude_gain * in.mean_q),
                                         std::abs(out.mean_p - amplitude_gain * in.mean_p),
                                         std::abs(out.qq - predicted.qq()),
                                         std::abs(out.qp - predicted.qp()),
                                         std::abs(out.pp - predicted.pp())});
    check.per_state.push_back(discrepancy);
    check.max_discrepancy = std::max(check.max_discrepancy, discrepancy);
  }
  check.passed = check.max_discrepancy <= kMomentTolerance;
  return check;
}

}  // namespace thermcap::fock
