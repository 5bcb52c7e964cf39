#pragma once

#include <cstdint>
#include <string>

namespace puc {

using u128 = unsigned __int128;
using i128 = __int128;

/// Standard normal CDF, accurate over the full double range.
double norm_cdf(double x);

/// Standard normal quantile (inverse CDF) for p in (0,1).
/// Relative accuracy is close to machine precision across the whole range,
/// including extreme tails, so it is safe to use for inverse-transform
/// sampling.  Throws NumericError for p outside (0,1).
double norm_quantile(double p);

/// CDF of the Gamma(shape=a, rate=1) distribution at x for integer shape
/// a >= 1:  F_a(x) = 1 - e^{-x} sum_{k=0}^{a-1} x^k / k!.
///
/// Two evaluation branches keep the result accurate in both regimes: a
/// convergent series for small x (where the complement form cancels
/// catastrophically) and a log-space complement for large x (where the
/// partial sums overflow).  The result is clamped to [0,1].
/// Throws ConfigError for a < 1 and NumericError for x < 0.
double gamma_cdf_int(int a, double x);

/// Exact binomial coefficient in 128-bit arithmetic; valid for n <= 125
/// (the multiply-before-divide intermediate peaks at C(n,k)*k, which
/// overflows 128 bits at n = 126, k = 63).  Throws ConfigError beyond
/// that range.
u128 binom_u128(unsigned n, unsigned k);

/// Exact binomial coefficient as a 64-bit integer; valid for n <= 64.
/// Throws ConfigError beyond that range (use log_binom instead).
std::uint64_t binom_u64(unsigned n, unsigned k);

/// log(C(n,k)) via lgamma, for ranges where exact integers overflow.
double log_binom(double n, double k);

/// Central binomial ratio C(2a,a) / 4^a.  Exact 128-bit path for a <= 62,
/// stable product form beyond.
double central_binom_ratio(unsigned a);

/// Regularized incomplete beta function I_x(a,b), continued-fraction
/// evaluation (Lentz).  Requires a,b > 0 and x in [0,1].
double inc_beta(double a, double b, double x);

/// Student-t CDF with dof degrees of freedom (dof > 0, non-integer allowed).
/// dof == 2 uses the closed form (1 + x/sqrt(2+x^2))/2; other dof go through
/// the incomplete beta function.
double student_t_cdf(double x, double dof);

/// Decimal digits of a 128-bit value (for diagnostics and tests).
std::string u128_to_string(u128 v);
std::string i128_to_string(i128 v);

}  // namespace puc
