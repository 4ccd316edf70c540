#include "tailsmith/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace tailsmith {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

namespace {

constexpr int kMaxIter = 500;
constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;

// Series expansion of P(k, x); converges fastest for x < k + 1.
double gamma_p_series(double k, double x) {
  double ap = k;
  double sum = 1.0 / k;
  double del = sum;
  for (int i = 0; i < kMaxIter; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * kEps) {
      break;
    }
  }
  return sum * std::exp(-x + k * std::log(x) - std::lgamma(k));
}

// Modified Lentz continued fraction for Q(k, x); converges for x >= k + 1.
double gamma_q_cf(double k, double x) {
  double b = x + 1.0 - k;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    double an = -i * (i - k);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) {
      break;
    }
  }
  return h * std::exp(-x + k * std::log(x) - std::lgamma(k));
}

}  // namespace

double gamma_p(double k, double x) {
  if (k <= 0.0) throw std::invalid_argument("gamma_p: shape must be > 0");
  if (x <= 0.0) return 0.0;
  if (x < k + 1.0) return gamma_p_series(k, x);
  return 1.0 - gamma_q_cf(k, x);
}

double gamma_q(double k, double x) {
  if (k <= 0.0) throw std::invalid_argument("gamma_q: shape must be > 0");
  if (x <= 0.0) return 1.0;
  if (x < k + 1.0) return 1.0 - gamma_p_series(k, x);
  return gamma_q_cf(k, x);
}

}  // namespace tailsmith
