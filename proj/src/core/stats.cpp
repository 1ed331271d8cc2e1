#include "core/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace rhhh {

ConfidenceParams ConfidenceParams::split(double epsilon, double delta) {
  ConfidenceParams p;
  p.epsilon = epsilon;
  p.delta = delta;
  p.epsilon_a = epsilon / 2;
  p.epsilon_s = epsilon / 2;
  p.delta_a = delta / 2;
  p.delta_s = delta / 4;
  p.validate();
  return p;
}

ConfidenceParams ConfidenceParams::explicit_split(double epsilon_a, double epsilon_s,
                                                  double delta_a, double delta_s) {
  ConfidenceParams p;
  p.epsilon_a = epsilon_a;
  p.epsilon_s = epsilon_s;
  p.delta_a = delta_a;
  p.delta_s = delta_s;
  p.epsilon = epsilon_a + epsilon_s;
  p.delta = delta_a + 2 * delta_s;
  p.validate();
  return p;
}

void ConfidenceParams::validate() const {
  auto in_unit = [](double x) { return x > 0.0 && x < 1.0; };
  if (!in_unit(epsilon) || !in_unit(delta) || !in_unit(epsilon_a) || !in_unit(epsilon_s) ||
      !in_unit(delta_a) || !in_unit(delta_s)) {
    throw std::domain_error("confidence parameters must lie strictly in (0,1)");
  }
  if (std::abs(epsilon_a + epsilon_s - epsilon) > 1e-12) {
    throw std::domain_error("epsilon_a + epsilon_s must equal epsilon");
  }
  if (std::abs(delta_a + 2 * delta_s - delta) > 1e-12) {
    throw std::domain_error("delta_a + 2*delta_s must equal delta");
  }
}

namespace {

// Standard normal CDF via the complementary error function; accurate in both
// tails, unlike 0.5*(1+erf(.)) which cancels near alpha -> 0.
double normal_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

double normal_pdf(double x) {
  static const double inv_sqrt_2pi = 0.3989422804014327;
  return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

// Rational approximation for the inverse normal CDF (Acklam's coefficients),
// good to ~1.15e-9 relative error on its own.
double inverse_cdf_approx(double p) {
  static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                              -2.759285104469687e+02, 1.383577518672690e+02,
                              -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                              -1.556989798598866e+02, 6.680131188771972e+01,
                              -1.328068155288572e+01};
  static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                              -2.400758277161838e+00, -2.549732539343734e+00,
                              4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                              2.445134137142996e+00, 3.754408661907416e+00};
  static const double p_low = 0.02425;

  if (p < p_low) {
    const double q = std::sqrt(-2 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  }
  if (p <= 1 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
  }
  const double q = std::sqrt(-2 * std::log1p(-p));
  return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
         ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
}

} // namespace

double normal_quantile(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error("normal_quantile: alpha must lie in (0,1)");
  }
  double x = inverse_cdf_approx(alpha);
  // One Newton step on the erf-based CDF pushes the error to machine level.
  const double density = normal_pdf(x);
  if (density > 0) {
    x -= (normal_cdf(x) - alpha) / density;
  }
  return x;
}

double psi(double epsilon_s, double delta_s, uint64_t v) {
  const double z = normal_quantile(1.0 - delta_s / 2.0);
  return z * static_cast<double>(v) / (epsilon_s * epsilon_s);
}

double psi(const ConfidenceParams& params, uint64_t v) {
  return psi(params.epsilon_s, params.delta_s, v);
}

double epsilon_s_of_n(uint64_t n, double delta_s, uint64_t v) {
  if (n == 0) {
    throw std::domain_error("epsilon_s_of_n: n must be positive");
  }
  const double z = normal_quantile(1.0 - delta_s / 2.0);
  return std::sqrt(z * static_cast<double>(v) / static_cast<double>(n));
}

} // namespace rhhh
