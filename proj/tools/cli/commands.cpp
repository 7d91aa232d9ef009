#include "cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli/report_io.hpp"
#include "thermcap/bounds.hpp"
#include "thermcap/errors.hpp"

namespace thermcap::cli {

using nlohmann::json;

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

int cmd_bounds(double lambda, double n_env, double n_signal, Format format, std::ostream& out,
               std::ostream& err) {
  bounds::BoundReport r;
  try {
    r = bounds::report(ChannelParams(lambda, n_env), n_signal);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  switch (format) {
    case Format::kJson:
      out << to_json(r).dump(2) << '\n';
      break;
    case Format::kCsv:
      write_csv(out, std::span(&r, 1));
      break;
    case Format::kText:
      write_text(out, r);
      break;
  }
  if (!r.certified) {
    err << "certification failed: gap " << format_value(r.gap_bits) << " bits against refined bound "
        << format_value(r.refined_gap_bound_bits) << '\n';
    return kExitUncertified;
  }
  return kExitOk;
}

int cmd_sweep(const SweepSpec& spec, std::ostream& out, std::ostream& err) {
  std::vector<bounds::BoundReport> rows;
  try {
    spec.validate();
    rows = run_sweep(spec);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!spec.out_path.empty()) {
    file.open(spec.out_path);
    if (!file) {
      err << "error: cannot open '" << spec.out_path << "' for writing\n";
      return kExitUsage;
    }
    sink = &file;
  }
  if (spec.format == Format::kJson) {
    write_json(*sink, rows);
  } else {
    write_csv(*sink, rows);
  }
  sink->flush();
  if (!*sink) {
    err << "error: write to '" << spec.out_path << "' failed\n";
    return kExitUsage;
  }

  std::size_t uncertified = 0;
  for (const auto& r : rows) uncertified += !r.certified;
  if (uncertified > 0) {
    err << uncertified << " of " << rows.size() << " rows failed certification\n";
    return kExitUncertified;
  }
  return kExitOk;
}

int cmd_verify(VerifyLevel level, std::uint64_t seed, std::ostream& out, std::ostream& err,
               const GFunctionTable& functions) {
  const std::vector<InvariantResult> results = run_verify(level, seed, functions);

  std::map<std::string, std::pair<double, bool>> per_suite;
  std::vector<std::string> order;
  for (const InvariantResult& r : results) {
    auto [it, inserted] = per_suite.try_emplace(r.suite, 0.0, true);
    if (inserted) order.push_back(r.suite);
    it->second.first = std::max(it->second.first, r.max_discrepancy);
    it->second.second = it->second.second && r.passed;
    out << (r.passed ? "  ok    " : "  FAIL  ") << r.suite << ": " << r.name << "  (max " << sci(r.max_discrepancy)
        << ", tol " << sci(r.tolerance) << ")\n";
  }
  out << '\n';
  bool all = true;
  for (const std::string& suite : order) {
    const auto& [worst, passed] = per_suite[suite];
    out << (passed ? "pass  " : "FAIL  ") << suite << "  max discrepancy " << sci(worst) << '\n';
    all = all && passed;
  }
  if (!all) {
    for (const InvariantResult& r : results) {
      if (!r.passed) err << "violated invariant: " << r.suite << ": " << r.name << '\n';
    }
    return kExitVerifyFailed;
  }
  out << "all invariants hold (seed " << seed << ")\n";
  return kExitOk;
}

int cmd_oracle(const OracleOptions& o, std::ostream& out, std::ostream& err) {
  try {
    const ChannelParams params(o.lambda, o.n_env);
    bounds::validate(params, o.n_signal);
    fock::QuadratureGrid grid;
    grid.angular_nodes = o.angular_nodes;
    if (o.radial_nodes > 0) {
      grid.radial_nodes = o.radial_nodes;
    } else {
      grid = fock::grid_for(o.n_signal, grid);
    }
    const int dim = o.dim > 0 ? o.dim : fock::chi_dimension(o.n_signal, grid);
    const fock::ChiBreakdown b = fock::holevo_chi_gaussian_ensemble_breakdown(params, o.n_signal, grid, dim);
    const double lower = bounds::holevo_lower(params, o.n_signal);
    const double expected_entropy = gfunc::g((1.0 - o.lambda) * o.n_env);
    double entropy_spread = 0.0;
    for (double s : b.member_output_entropies) entropy_spread = std::max(entropy_spread, std::abs(s - expected_entropy));

    if (o.format == Format::kJson) {
      out << json{{"lambda", o.lambda},
                  {"n_env", o.n_env},
                  {"n_signal", o.n_signal},
                  {"radial_nodes", grid.radial_nodes},
                  {"angular_nodes", grid.angular_nodes},
                  {"dim", dim},
                  {"chi_bits", b.chi_bits},
                  {"holevo_lower_bits", lower},
                  {"discrepancy_bits", b.chi_bits - lower},
                  {"max_output_entropy_deviation_nats", entropy_spread},
                  {"error_budget_nats", b.error_budget}}
                 .dump(2)
          << '\n';
    } else {
      char buf[160];
      auto line = [&](const char* name, const std::string& value) {
        std::snprintf(buf, sizeof buf, "%-34s%s\n", name, value.c_str());
        out << buf;
      };
      line("grid (radial x angular)", std::to_string(grid.radial_nodes) + " x " + std::to_string(grid.angular_nodes));
      line("fock dimension", std::to_string(dim));
      line("chi_bits", format_value(b.chi_bits));
      line("holevo_lower_bits", format_value(lower));
      line("discrepancy_bits", sci(b.chi_bits - lower));
      line("max_output_entropy_deviation", sci(entropy_spread));
      line("error_budget_nats", sci(b.error_budget));
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_optimize(double lambda, double n_env, double n_signal, const chi_opt::OptimizerConfig& config,
                 std::ostream& out, std::ostream& err) {
  chi_opt::OptimizationResult result;
  try {
    result = chi_opt::optimize(ChannelParams(lambda, n_env), n_signal, config);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  json j = to_json(result, config.dim);
  j["lambda"] = lambda;
  j["n_env"] = n_env;
  j["n_signal"] = n_signal;
  out << j.dump(2) << '\n';
  if (!result.converged) {
    err << "optimizer stopped at the iteration cap (" << result.iterations << ") before converging\n";
    return kExitNotConverged;
  }
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Capacity bounds for single-mode bosonic thermal noise channels", "thermcap"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"text", Format::kText}, {"csv", Format::kCsv}, {"json", Format::kJson}};

  double lambda = 0.0;
  double n_env = 0.0;
  double n_signal = 0.0;
  Format format = Format::kText;

  auto* bounds_cmd = app.add_subcommand("bounds", "Lower/upper bounds and the certified gap for one channel");
  bounds_cmd->add_option("--lambda", lambda, "transmissivity in (0, 1]")->required();
  bounds_cmd->add_option("--ne", n_env, "environment photon number")->required();
  bounds_cmd->add_option("--n", n_signal, "signal photon-number constraint")->required();
  bounds_cmd->add_option("--format", format, "text, csv or json")->transform(CLI::CheckedTransformer(formats));

  std::string lambda_range;
  std::string ne_range;
  std::string n_range;
  std::string out_path;
  Format sweep_format = Format::kCsv;
  auto* sweep_cmd = app.add_subcommand("sweep", "Bounds over a parameter grid as CSV or JSON");
  sweep_cmd->add_option("--lambda", lambda_range, "value or start:stop:count[:lin|log]")->required();
  sweep_cmd->add_option("--ne", ne_range, "value or start:stop:count[:lin|log]")->required();
  sweep_cmd->add_option("--n", n_range, "value or start:stop:count[:lin|log]")->required();
  sweep_cmd->add_option("--out", out_path, "output file (default stdout)");
  sweep_cmd->add_option("--format", sweep_format, "csv or json")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"csv", Format::kCsv}, {"json", Format::kJson}}));

  VerifyLevel level = VerifyLevel::kQuick;
  std::uint64_t seed = kDefaultSeed;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suites");
  verify_cmd->add_option("--level", level, "quick or full")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, VerifyLevel>{{"quick", VerifyLevel::kQuick}, {"full", VerifyLevel::kFull}}));
  verify_cmd->add_option("--seed", seed, "seed for the randomized suites");

  OracleOptions oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Fock-space Holevo chi of the Gaussian coherent ensemble");
  oracle_cmd->add_option("--lambda", oracle.lambda, "transmissivity in (0, 1]")->required();
  oracle_cmd->add_option("--ne", oracle.n_env, "environment photon number")->required();
  oracle_cmd->add_option("--n", oracle.n_signal, "signal photon-number constraint")->required();
  oracle_cmd->add_option("--radial", oracle.radial_nodes, "radial quadrature nodes (default: sized for N)");
  oracle_cmd->add_option("--angular", oracle.angular_nodes, "angular quadrature nodes");
  oracle_cmd->add_option("--dim", oracle.dim, "Fock cutoff (default: tail-budgeted)");
  oracle_cmd->add_option("--format", oracle.format, "text or json")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::kText}, {"json", Format::kJson}}));

  chi_opt::OptimizerConfig config;
  auto* optimize_cmd = app.add_subcommand("optimize", "Numerically maximize single-letter chi; prints JSON");
  optimize_cmd->add_option("--lambda", lambda, "transmissivity in (0, 1]")->required();
  optimize_cmd->add_option("--ne", n_env, "environment photon number")->required();
  optimize_cmd->add_option("--n", n_signal, "signal photon-number constraint")->required();
  optimize_cmd->add_option("--members", config.members, "ensemble size (<= 16)");
  optimize_cmd->add_option("--dim", config.dim, "Fock cutoff of the input states (<= 32)");
  optimize_cmd->add_option("--max-iter", config.max_iterations, "sweep cap");
  optimize_cmd->add_option("--tol", config.tolerance, "convergence tolerance in bits");
  optimize_cmd->add_option("--seed", config.seed, "seed for the initial constellation");
  optimize_cmd->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    app.exit(e, os, os);
    err << os.str();
    return kExitUsage;
  }

  if (*bounds_cmd) return cmd_bounds(lambda, n_env, n_signal, format, out, err);
  if (*sweep_cmd) {
    SweepSpec spec;
    try {
      spec.lambda = Range::parse(lambda_range);
      spec.n_env = Range::parse(ne_range);
      spec.n_signal = Range::parse(n_range);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    spec.out_path = out_path;
    spec.format = sweep_format;
    return cmd_sweep(spec, out, err);
  }
  if (*verify_cmd) return cmd_verify(level, seed, out, err);
  if (*oracle_cmd) return cmd_oracle(oracle, out, err);
  if (*optimize_cmd) {
    if (out_path.empty()) return cmd_optimize(lambda, n_env, n_signal, config, out, err);
    std::ofstream file(out_path);
    if (!file) {
      err << "error: cannot open '" << out_path << "' for writing\n";
      return kExitUsage;
    }
    return cmd_optimize(lambda, n_env, n_signal, config, file, err);
  }
  return kExitUsage;
}

}  // namespace thermcap::cli
