#pragma once

// Real Gamma and the confluent hypergeometric functions M (Kummer) and
// U (Tricomi), restricted to what the per-mode solutions need.

namespace crext::special {

/// Gamma(x). Throws PoleError at nonpositive integers.
double gamma_fn(double x);

/// 1/Gamma(x); zero at the poles of Gamma.
double rgamma(double x);

/// Kummer M(a, b, z) by its power series. Throws PoleError when b is a
/// nonpositive integer, ConvergenceError if the series stalls.
double kummer_m(double a, double b, double z);

/// Tricomi U(a, b, z) from
///   U = 1/Gamma(a) * int_0^inf e^{-zt} t^{a-1} (1+t)^{b-a-1} dt.
/// Requires a > 0 and z > 0 (DomainError otherwise).
double kummer_u(double a, double b, double z);

/// U through the connection formula in terms of M. b must not be an integer.
double kummer_u_connection(double a, double b, double z);

/// Truncated large-z asymptotic series z^{-a} sum (a)_n (a-b+1)_n / n! (-z)^{-n},
/// stopped at the smallest term. `error_bound` receives the size of that term.
double kummer_u_asymptotic(double a, double b, double z, double* error_bound = nullptr);

}  // namespace crext::special
