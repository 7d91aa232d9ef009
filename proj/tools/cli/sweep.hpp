#pragma once

#include <string>
#include <vector>

#include "thermcap/bounds.hpp"

namespace thermcap::cli {

enum class Spacing { kLinear, kLog };
enum class Format { kText, kCsv, kJson };

/// Grid over one parameter: `count` points from start to stop inclusive.
struct Range {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;
  Spacing spacing = Spacing::kLinear;

  /// Accepts "v" (single value) or "start:stop:count[:lin|log]".
  /// Throws DomainError on malformed input.
  static Range parse(const std::string& text);

  std::vector<double> values() const;
};

struct SweepSpec {
  Range lambda;
  Range n_env;
  Range n_signal;
  std::string out_path;  // empty: stdout
  Format format = Format::kCsv;

  /// Throws DomainError if a range leaves the domain accepted by bounds::report.
  void validate() const;
};

/// One report per grid point, lambda outer, N_E middle, N inner.
std::vector<bounds::BoundReport> run_sweep(const SweepSpec& spec);

}  // namespace thermcap::cli
