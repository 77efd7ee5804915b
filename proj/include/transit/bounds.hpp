#pragma once

namespace transit {

/// Closed-form lower-bound values at order n.
///
/// tau_n is the connected-graph bound for tau; sigma_tree and tau_tree are
/// the tree bounds for sigma and tau. Each is the smaller root of its
/// defining quadratic:
///   tau_n:      x^2 - (n + 2 gamma) x + 2 gamma = 0,  gamma = 1 (odd n), 2 (even n)
///   sigma_tree: x^2 - (n + eta) x + eta = 0,          eta = n - 2
///   tau_tree:   x^2 - (n + 2 eta) x + 2 eta = 0
struct BoundValues {
  int n = 0;
  int gamma = 0;
  int eta = 0;
  double tau_n = 0.0;
  double sigma_tree = 0.0;
  double tau_tree = 0.0;
};

/// Evaluate the bound values at order n >= 3.
BoundValues bound_values(int n);

/// Residuals of the three defining quadratics at the stored values.
struct BoundResiduals {
  double tau_n = 0.0;
  double sigma_tree = 0.0;
  double tau_tree = 0.0;
};

BoundResiduals residuals(const BoundValues& b);

/// Monotonicity summary of the bound sequences over 3..n_max.
///
/// tau_n is compared within each parity class separately; the interleaved
/// sequence is not monotone (tau_5 < tau_6, for example).
struct TrendReport {
  int n_max = 0;
  bool tau_odd_decreasing = false;
  bool tau_even_decreasing = false;
  bool sigma_tree_increasing = false;
  bool tau_tree_increasing = false;
  bool all_below_one = false;  // tau_n and sigma_tree stay in (0,1) on the range
  double tau_final_odd = 0.0;
  double tau_final_even = 0.0;
  double sigma_tree_final = 0.0;
  double tau_tree_final = 0.0;
  // Limits as n grows: tau_n -> 0, sigma_tree -> 1/2, tau_tree -> 2/3.
  double tau_limit = 0.0;
  double sigma_tree_limit = 0.5;
  double tau_tree_limit = 2.0 / 3.0;
};

TrendReport sequence_trends(int n_max);

}  // namespace transit
