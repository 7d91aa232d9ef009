#include "thermcap/gfunc.hpp"

#include <cmath>

#include "thermcap/errors.hpp"

namespace thermcap::gfunc {
namespace {

// Below this g(x) and x ln(1 + 1/x) are zero to double precision.
constexpr double kTiny = 1e-300;

void require_nonnegative(double x, const char* name) {
  if (!std::isfinite(x) || x < 0.0) {
    detail::throw_domain(std::string(name) + " must be finite and >= 0", x);
  }
}

void require_positive(double x, const char* name) {
  if (!std::isfinite(x) || x <= 0.0) {
    detail::throw_domain(std::string(name) + " must be finite and > 0", x);
  }
}

// h(x) = x ln(1 + 1/x), so that g(x) = ln(1 + x) + h(x). h increases from 0
// to 1 and carries all the fine structure of g at both ends of its range.
double h(double x) {
  if (x < kTiny) return 0.0;
  return x * std::log1p(1.0 / x);
}

}  // namespace

double g(double x) {
  require_nonnegative(x, "g: photon number");
  if (x < kTiny) return 0.0;
  return h(x) + std::log1p(x);
}

double g_prime(double x) {
  require_positive(x, "g_prime: photon number");
  return std::log1p(1.0 / x);
}

double g_second(double x) {
  require_positive(x, "g_second: photon number");
  return -1.0 / (x * (x + 1.0));
}

double delta(double y, double x) {
  require_positive(y, "delta: Y");
  require_nonnegative(x, "delta: X");
  // ln(1 + X/(Y+1)) - ln(1 + X + Y) = -ln(1 + Y) exactly, so the logarithmic
  // parts of the three g terms collapse and only bounded h terms remain.
  const double value = h(y) + h(x / (y + 1.0)) - h(x + y);
  return value < 0.0 ? 0.0 : value;
}

double delta_prime(double y, double x) {
  require_positive(y, "delta_prime: Y");
  require_positive(x, "delta_prime: X");
  return std::log1p((y + 1.0) / x) / (y + 1.0) - std::log1p(1.0 / (x + y));
}

double delta_second(double y, double x) {
  require_positive(y, "delta_second: Y");
  require_positive(x, "delta_second: X");
  // (1/(X+Y) - 1/X) = -Y / (X (X+Y)), written without the cancellation.
  return -y / ((x + y + 1.0) * (x + y) * x);
}

double delta_limit(double y) {
  require_positive(y, "delta_limit: Y");
  return h(y);
}

}  // namespace thermcap::gfunc
