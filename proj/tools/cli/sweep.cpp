#include "cli/sweep.hpp"

#include <cmath>
#include <sstream>

#include "thermcap/errors.hpp"

namespace thermcap::cli {
namespace {

double parse_number(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw DomainError("cannot parse number '" + s + "'");
  }
  if (used != s.size()) throw DomainError("cannot parse number '" + s + "'");
  return v;
}

void check_range(const Range& r, const char* name, double lo, bool lo_open, double hi) {
  if (r.count < 1) detail::throw_domain(std::string(name) + ": count must be >= 1", r.count);
  for (double v : {r.start, r.stop}) {
    const bool below = lo_open ? !(v > lo) : !(v >= lo);
    if (below || !(v <= hi)) {
      std::ostringstream os;
      os << name << ": value outside " << (lo_open ? "(" : "[") << lo << ", " << hi << "]";
      detail::throw_domain(os.str(), v);
    }
  }
  if (r.spacing == Spacing::kLog && (r.start <= 0.0 || r.stop <= 0.0)) {
    throw DomainError(std::string(name) + ": log spacing needs positive endpoints");
  }
}

}  // namespace

Range Range::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  Range r;
  if (parts.size() == 1) {
    r.start = r.stop = parse_number(parts[0]);
    return r;
  }
  if (parts.size() < 3 || parts.size() > 4) {
    throw DomainError("range must be 'value' or 'start:stop:count[:lin|log]', got '" + text + "'");
  }
  r.start = parse_number(parts[0]);
  r.stop = parse_number(parts[1]);
  const double count = parse_number(parts[2]);
  if (count < 1 || count != std::floor(count) || count > 1e7) {
    detail::throw_domain("range count must be a positive integer", count);
  }
  r.count = static_cast<int>(count);
  if (parts.size() == 4) {
    if (parts[3] == "lin") {
      r.spacing = Spacing::kLinear;
    } else if (parts[3] == "log") {
      r.spacing = Spacing::kLog;
    } else {
      throw DomainError("range spacing must be 'lin' or 'log', got '" + parts[3] + "'");
    }
  }
  return r;
}

std::vector<double> Range::values() const {
  if (count == 1) return {start};
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    out[i] = spacing == Spacing::kLog ? std::exp(std::log(start) + t * (std::log(stop) - std::log(start)))
                                      : start + t * (stop - start);
  }
  // Endpoints exactly as given.
  out.front() = start;
  out.back() = stop;
  return out;
}

void SweepSpec::validate() const {
  check_range(lambda, "lambda", 0.0, true, 1.0);
  check_range(n_env, "ne", 0.0, false, bounds::kMaxEnvPhotons);
  check_range(n_signal, "n", 0.0, false, bounds::kMaxSignalPhotons);
}

std::vector<bounds::BoundReport> run_sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<bounds::BoundReport> rows;
  for (double lambda : spec.lambda.values()) {
    for (double ne : spec.n_env.values()) {
      const ChannelParams params(lambda, ne);
      for (double n : spec.n_signal.values()) rows.push_back(bounds::report(params, n));
    }
  }
  return rows;
}

}  // namespace thermcap::cli
