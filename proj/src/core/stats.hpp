#pragma once

#include <cstdint>

namespace rhhh {

// Error budget of a randomized sketch, split between the counter algorithm
// (epsilon_a, delta_a) and the sampling process (epsilon_s, delta_s). The
// composed guarantee is epsilon = epsilon_a + epsilon_s and
// delta = delta_a + 2*delta_s.
struct ConfidenceParams {
  double epsilon = 0;
  double delta = 0;
  double epsilon_a = 0;
  double epsilon_s = 0;
  double delta_a = 0;
  double delta_s = 0;

  // Balanced default split of a user-level (epsilon, delta) budget:
  // epsilon_a = epsilon_s = epsilon/2, delta_a = delta/2, delta_s = delta/4.
  static ConfidenceParams split(double epsilon, double delta);

  // Explicit split; epsilon and delta are derived from the composition rules.
  static ConfidenceParams explicit_split(double epsilon_a, double epsilon_s,
                                         double delta_a, double delta_s);

  // Throws std::domain_error unless all six values lie strictly in (0,1) and
  // the compositions hold within 1e-12.
  void validate() const;
};

// Inverse standard-normal CDF. Throws std::domain_error outside (0,1).
// Absolute error below 1e-8 over the full open interval.
double normal_quantile(double alpha);

// Minimum stream length for the sampling guarantee:
// psi = Z_{1 - delta_s/2} * v * epsilon_s^{-2}.
double psi(double epsilon_s, double delta_s, uint64_t v);
double psi(const ConfidenceParams& params, uint64_t v);

// Actual sampling error after n packets: sqrt(Z_{1 - delta_s/2} * v / n).
// Equals epsilon_s exactly at n = psi. Throws std::domain_error for n == 0.
double epsilon_s_of_n(uint64_t n, double delta_s, uint64_t v);

} // namespace rhhh
