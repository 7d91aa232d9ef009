#pragma once

#include <cstdint>
#include <iosfwd>

#include "cli/sweep.hpp"
#include "cli/verify.hpp"
#include "thermcap/chi_opt.hpp"
#include "thermcap/fock.hpp"

namespace thermcap::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitUncertified = 2,
  kExitVerifyFailed = 3,
  kExitNotConverged = 4,
};

inline constexpr std::uint64_t kDefaultSeed = 7;

int cmd_bounds(double lambda, double n_env, double n_signal, Format format, std::ostream& out,
               std::ostream& err);

/// Writes to spec.out_path, or to `out` when the path is empty.
int cmd_sweep(const SweepSpec& spec, std::ostream& out, std::ostream& err);

int cmd_verify(VerifyLevel level, std::uint64_t seed, std::ostream& out, std::ostream& err,
               const GFunctionTable& functions = {});

struct OracleOptions {
  double lambda = 0.0;
  double n_env = 0.0;
  double n_signal = 0.0;
  /// 0 keeps the grid sized automatically for the photon number.
  int radial_nodes = 0;
  int angular_nodes = 24;
  /// 0 picks the tail-budgeted dimension.
  int dim = 0;
  Format format = Format::kText;
};

/// Holevo chi of the discretized Gaussian coherent ensemble next to the
/// closed-form lower bound.
int cmd_oracle(const OracleOptions& options, std::ostream& out, std::ostream& err);

int cmd_optimize(double lambda, double n_env, double n_signal, const chi_opt::OptimizerConfig& config,
                 std::ostream& out, std::ostream& err);

/// Full command-line entry point: parses argv and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace thermcap::cli
