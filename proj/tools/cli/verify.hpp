#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thermcap/gfunc.hpp"

namespace thermcap::cli {

enum class VerifyLevel { kQuick, kFull };

/// The g-function family the gfunc suite exercises. Swappable so a
/// deliberately broken implementation can be shown to fail.
struct GFunctionTable {
  double (*g)(double) = gfunc::g;
  double (*g_prime)(double) = gfunc::g_prime;
  double (*g_second)(double) = gfunc::g_second;
  double (*delta)(double, double) = gfunc::delta;
  double (*delta_prime)(double, double) = gfunc::delta_prime;
  double (*delta_second)(double, double) = gfunc::delta_second;
  double (*delta_limit)(double) = gfunc::delta_limit;
};

struct InvariantResult {
  std::string suite;
  std::string name;
  double max_discrepancy = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// quick: gfunc, gaussian_core and bounds invariants (well under a second).
/// full: adds the Fock-space oracle checks, including a Holevo-chi run.
std::vector<InvariantResult> run_verify(VerifyLevel level, std::uint64_t seed,
                                        const GFunctionTable& functions = {});

}  // namespace thermcap::cli
