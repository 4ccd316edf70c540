#pragma once

namespace tailsmith {

// Standard normal CDF.
double normal_cdf(double z);

// Standard normal survival function P(Z >= z), accurate in the far tail.
double normal_sf(double z);

// Regularized lower incomplete gamma P(k, x); the gamma(shape=k, rate=1) CDF.
double gamma_p(double k, double x);

// Regularized upper incomplete gamma Q(k, x) = 1 - P(k, x), computed
// directly where the subtraction would cancel.
double gamma_q(double k, double x);

}  // namespace tailsmith
