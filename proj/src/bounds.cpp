#include "transit/bounds.hpp"

#include <cmath>
#include <string>

#include "transit/errors.hpp"

namespace transit {

namespace {

// Smaller root of x^2 - b x + c = 0 with b^2 >= 4c, written with a
// rationalized numerator. The naive (b - sqrt(b^2 - 4c)) / 2 cancels away
// half the significant digits once b is large.
double smaller_quadratic_root(double b, double c) {
  return 2.0 * c / (b + std::sqrt(b * b - 4.0 * c));
}

}  // namespace

BoundValues bound_values(int n) {
  if (n < 3) throw DomainError("bound values need n >= 3, got " + std::to_string(n));
  BoundValues b;
  b.n = n;
  b.gamma = (n % 2 == 1) ? 1 : 2;
  b.eta = n - 2;
  b.tau_n = smaller_quadratic_root(n + 2.0 * b.gamma, 2.0 * b.gamma);
  b.sigma_tree = smaller_quadratic_root(n + static_cast<double>(b.eta), b.eta);
  b.tau_tree = smaller_quadratic_root(n + 2.0 * b.eta, 2.0 * b.eta);

  // Self-check against the expanded per-parity expressions.
  const double nd = n;
  const double tau_direct =
      (n % 2 == 1) ? (nd + 2.0 - std::sqrt(nd * nd + 4.0 * nd - 4.0)) / 2.0
                   : (nd + 4.0 - std::sqrt(nd * nd + 8.0 * nd)) / 2.0;
  const double sigma_tree_direct =
      (2.0 * nd - 2.0 - std::sqrt(4.0 * nd * nd - 12.0 * nd + 12.0)) / 2.0;
  const double tau_tree_direct =
      (3.0 * nd - 4.0 - std::sqrt(9.0 * nd * nd - 32.0 * nd + 32.0)) / 2.0;
  const double tol = 1e-12 * (nd + 2.0 * b.gamma);
  if (std::abs(b.tau_n - tau_direct) > tol ||
      std::abs(b.sigma_tree - sigma_tree_direct) > tol ||
      std::abs(b.tau_tree - tau_tree_direct) > tol) {
    throw DomainError("bound value self-check failed at n = " + std::to_string(n));
  }
  return b;
}

BoundResiduals residuals(const BoundValues& b) {
  BoundResiduals r;
  r.tau_n = b.tau_n * b.tau_n - (b.n + 2.0 * b.gamma) * b.tau_n + 2.0 * b.gamma;
  r.sigma_tree =
      b.sigma_tree * b.sigma_tree - (b.n + static_cast<double>(b.eta)) * b.sigma_tree + b.eta;
  r.tau_tree = b.tau_tree * b.tau_tree - (b.n + 2.0 * b.eta) * b.tau_tree + 2.0 * b.eta;
  return r;
}

TrendReport sequence_trends(int n_max) {
  if (n_max < 6) throw DomainError("trend report needs n_max >= 6");
  TrendReport t;
  t.n_max = n_max;
  t.tau_odd_decreasing = true;
  t.tau_even_decreasing = true;
  t.sigma_tree_increasing = true;
  t.tau_tree_increasing = true;
  t.all_below_one = true;

  BoundValues prev = bound_values(3);
  if (prev.tau_n >= 1.0 || prev.sigma_tree >= 1.0) t.all_below_one = false;
  BoundValues prev_odd = prev;
  BoundValues prev_even = bound_values(4);
  t.tau_final_odd = prev_odd.tau_n;
  t.tau_final_even = prev_even.tau_n;
  for (int n = 4; n <= n_max; ++n) {
    const BoundValues cur = bound_values(n);
    if (cur.tau_n >= 1.0 || cur.sigma_tree >= 1.0) t.all_below_one = false;
    if (n % 2 == 1) {
      if (cur.tau_n >= prev_odd.tau_n) t.tau_odd_decreasing = false;
      prev_odd = cur;
      t.tau_final_odd = cur.tau_n;
    } else if (n > 4) {
      if (cur.tau_n >= prev_even.tau_n) t.tau_even_decreasing = false;
      prev_even = cur;
      t.tau_final_even = cur.tau_n;
    }
    if (cur.sigma_tree <= prev.sigma_tree) t.sigma_tree_increasing = false;
    if (cur.tau_tree <= prev.tau_tree) t.tau_tree_increasing = false;
    prev = cur;
  }
  t.sigma_tree_final = prev.sigma_tree;
  t.tau_tree_final = prev.tau_tree;
  return t;
}

}  // namespace transit
