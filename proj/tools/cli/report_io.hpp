#pragma once

// Machine-readable output: CSV rows for sweeps, JSON for reports and
// optimizer results. JSON keeps full double precision so that parsing an
// emitted document reproduces the same values; text and CSV use 10
// significant digits.

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "thermcap/bounds.hpp"
#include "thermcap/chi_opt.hpp"

namespace thermcap::cli {

inline constexpr const char* kCsvHeader =
    "lambda,n_env,n_signal,lower_bits,upper_bits,gap_bits,refined_gap_bound_bits,certified";

/// %.10g
std::string format_value(double v);

nlohmann::json to_json(const bounds::BoundReport& r);
bounds::BoundReport bound_report_from_json(const nlohmann::json& j);

void write_csv(std::ostream& os, std::span<const bounds::BoundReport> rows);
void write_json(std::ostream& os, std::span<const bounds::BoundReport> rows);

/// Two-column "name value" listing used by `bounds` without --format json.
void write_text(std::ostream& os, const bounds::BoundReport& r);

/// Includes the interval position (best - lower, upper - best) and enough
/// member data (alpha, dephasing, weight, dim) to rebuild the ensemble.
nlohmann::json to_json(const chi_opt::OptimizationResult& r, int dim);
chi_opt::OptimizationResult optimization_result_from_json(const nlohmann::json& j);

}  // namespace thermcap::cli
