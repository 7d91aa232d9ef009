#include "cli/report_io.hpp"

#include <cstdio>
#include <ostream>

namespace thermcap::cli {

using nlohmann::json;

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

json to_json(const bounds::BoundReport& r) {
  return json{{"lambda", r.lambda},
              {"n_env", r.n_env},
              {"n_signal", r.n_signal},
              {"lower_bits", r.lower_bits},
              {"upper_bits", r.upper_bits},
              {"gap_bits", r.gap_bits},
              {"refined_gap_bound_bits", r.refined_gap_bound_bits},
              {"universal_gap_bound_bits", r.universal_gap_bound_bits},
              {"certified", r.certified}};
}

bounds::BoundReport bound_report_from_json(const json& j) {
  bounds::BoundReport r;
  j.at("lambda").get_to(r.lambda);
  j.at("n_env").get_to(r.n_env);
  j.at("n_signal").get_to(r.n_signal);
  j.at("lower_bits").get_to(r.lower_bits);
  j.at("upper_bits").get_to(r.upper_bits);
  j.at("gap_bits").get_to(r.gap_bits);
  j.at("refined_gap_bound_bits").get_to(r.refined_gap_bound_bits);
  j.at("universal_gap_bound_bits").get_to(r.universal_gap_bound_bits);
  j.at("certified").get_to(r.certified);
  return r;
}

void write_csv(std::ostream& os, std::span<const bounds::BoundReport> rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) {
    os << format_value(r.lambda) << ',' << format_value(r.n_env) << ',' << format_value(r.n_signal)
       << ',' << format_value(r.lower_bits) << ',' << format_value(r.upper_bits) << ','
       << format_value(r.gap_bits) << ',' << format_value(r.refined_gap_bound_bits) << ','
       << (r.certified ? "true" : "false") << '\n';
  }
}

void write_json(std::ostream& os, std::span<const bounds::BoundReport> rows) {
  json arr = json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  os << arr.dump(2) << '\n';
}

void write_text(std::ostream& os, const bounds::BoundReport& r) {
  auto line = [&os](const char* name, const std::string& value) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-26s%s\n", name, value.c_str());
    os << buf;
  };
  line("lambda", format_value(r.lambda));
  line("n_env", format_value(r.n_env));
  line("n_signal", format_value(r.n_signal));
  line("lower_bits", format_value(r.lower_bits));
  line("upper_bits", format_value(r.upper_bits));
  line("gap_bits", format_value(r.gap_bits));
  line("refined_gap_bound_bits", format_value(r.refined_gap_bound_bits));
  line("universal_gap_bound_bits", format_value(r.universal_gap_bound_bits));
  line("certified", r.certified ? "true" : "false");
}

json to_json(const chi_opt::OptimizationResult& r, int dim) {
  json members = json::array();
  for (std::size_t i = 0; i < r.parameters.size(); ++i) {
    const auto& m = r.ensemble.members[i];
    members.push_back({{"alpha_re", r.parameters[i].alpha.real()},
                       {"alpha_im", r.parameters[i].alpha.imag()},
                       {"dephasing", r.parameters[i].dephasing},
                       {"weight", m.weight},
                       {"mean_photons", m.state.moments().mean_photons}});
  }
  json history = json::array();
  for (const auto& h : r.history) history.push_back({h.iteration, h.chi_bits});
  return json{{"best_chi_bits", r.best_chi_bits},
              {"lower_bits", r.lower_bits},
              {"upper_bits", r.upper_bits},
              {"above_lower_bits", r.above_lower_bits()},
              {"below_upper_bits", r.below_upper_bits()},
              {"iterations", r.iterations},
              {"converged", r.converged},
              {"dim", dim},
              {"ensemble", {{"mean_photons", r.ensemble.mean_photons}, {"members", members}}},
              {"history", history}};
}

chi_opt::OptimizationResult optimization_result_from_json(const json& j) {
  chi_opt::OptimizationResult r;
  j.at("best_chi_bits").get_to(r.best_chi_bits);
  j.at("lower_bits").get_to(r.lower_bits);
  j.at("upper_bits").get_to(r.upper_bits);
  j.at("iterations").get_to(r.iterations);
  j.at("converged").get_to(r.converged);
  const int dim = j.at("dim").get<int>();
  std::vector<fock::FockDensityMatrix> states;
  std::vector<double> weights;
  for (const auto& m : j.at("ensemble").at("members")) {
    chi_opt::MemberParams p;
    p.alpha = {m.at("alpha_re").get<double>(), m.at("alpha_im").get<double>()};
    p.dephasing = m.at("dephasing").get<double>();
    r.parameters.push_back(p);
    states.push_back(chi_opt::member_state(p, dim));
    weights.push_back(m.at("weight").get<double>());
  }
  if (!states.empty()) {
    r.ensemble = chi_opt::make_ensemble(std::move(states), std::move(weights));
  }
  // Keep the stored aggregate rather than the recomputed one.
  j.at("ensemble").at("mean_photons").get_to(r.ensemble.mean_photons);
  for (const auto& h : j.at("history")) r.history.push_back({h.at(0).get<int>(), h.at(1).get<double>()});
  return r;
}

}  // namespace thermcap::cli
