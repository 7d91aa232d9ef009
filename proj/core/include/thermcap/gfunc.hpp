#pragma once

// Entropy function g(x) = (x+1) ln(x+1) - x ln x and the auxiliary gap
// function Delta_Y(X) = g(X/(Y+1)) - g(X+Y) + g(Y), with their derivatives.
//
// Every value here is in nats. Arguments are mean photon numbers; invalid
// arguments throw thermcap::DomainError.

namespace thermcap::gfunc {

/// Von Neumann entropy of a thermal state with mean photon number x.
/// Requires x >= 0 and finite; g(0) = 0.
double g(double x);

/// g'(x) = ln(1 + 1/x), x > 0.
double g_prime(double x);

/// g''(x) = -1 / (x (x + 1)), x > 0.
double g_second(double x);

/// Delta_Y(X) for Y > 0, X >= 0. Satisfies 0 <= Delta_Y(X) < delta_limit(Y).
double delta(double y, double x);

/// d/dX Delta_Y(X) = ln(1 + (Y+1)/X)/(Y+1) - ln(1 + 1/(X+Y)), X, Y > 0.
double delta_prime(double y, double x);

/// d^2/dX^2 Delta_Y(X) = (1/(X+Y+1)) (1/(X+Y) - 1/X), X, Y > 0.
double delta_second(double y, double x);

/// lim_{X->inf} Delta_Y(X) = Y ln(1 + 1/Y), which lies in (0, 1) for Y > 0.
double delta_limit(double y);

}  // namespace thermcap::gfunc
