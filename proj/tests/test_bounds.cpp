#include <cmath>

#include "doctest.h"
#include "transit/bounds.hpp"
#include "transit/errors.hpp"

using namespace transit;

TEST_SUITE_BEGIN("bounds");

TEST_CASE("closed forms at the small orders") {
  const auto b5 = bound_values(5);
  CHECK(b5.gamma == 1);
  CHECK(b5.eta == 3);
  CHECK(std::abs(b5.tau_n - (7.0 - std::sqrt(41.0)) / 2.0) <= 1e-14);

  const auto b6 = bound_values(6);
  CHECK(b6.gamma == 2);
  CHECK(std::abs(b6.tau_n - (5.0 - std::sqrt(21.0))) <= 1e-14);

  const auto b4 = bound_values(4);
  CHECK(std::abs(b4.sigma_tree - (3.0 - std::sqrt(7.0))) <= 1e-14);
  CHECK(std::abs(b4.tau_tree - (4.0 - 2.0 * std::sqrt(3.0))) <= 1e-14);

  const auto b8 = bound_values(8);
  CHECK(std::abs(b8.tau_n - (6.0 - 4.0 * std::sqrt(2.0))) <= 1e-14);

  CHECK_THROWS_AS(bound_values(2), DomainError);
}

TEST_CASE("parity dispatch over 3..1000") {
  for (int n = 3; n <= 1000; ++n) {
    const auto b = bound_values(n);
    const double nd = n;
    const double odd_expr = (nd + 2.0 - std::sqrt(nd * nd + 4.0 * nd - 4.0)) / 2.0;
    const double even_expr = (nd + 4.0 - std::sqrt(nd * nd + 8.0 * nd)) / 2.0;
    const double expected = (n % 2 == 1) ? odd_expr : even_expr;
    REQUIRE(std::abs(b.tau_n - expected) <= 1e-12 * (nd + 2.0 * b.gamma));
    REQUIRE(b.gamma == (n % 2 == 1 ? 1 : 2));
    REQUIRE(b.eta == n - 2);
  }
}

TEST_CASE("defining quadratic residuals stay tiny over 3..1000") {
  for (int n = 3; n <= 1000; ++n) {
    const auto r = residuals(bound_values(n));
    REQUIRE(std::abs(r.tau_n) <= 1e-10);
    REQUIRE(std::abs(r.sigma_tree) <= 1e-10);
    REQUIRE(std::abs(r.tau_tree) <= 1e-10);
  }
}

TEST_CASE("stable evaluation holds up at very large n") {
  const auto b = bound_values(1000000);
  const auto r = residuals(b);
  // Value error is about residual / (n + 2 gamma); relative error <= 1e-12.
  CHECK(std::abs(r.tau_n) / (b.n + 2.0 * b.gamma) <= 1e-12 * b.tau_n);
  CHECK(b.tau_n > 0.0);
  CHECK(b.tau_n < 1e-5);
  CHECK(b.sigma_tree < 0.5);
  CHECK(b.tau_tree < 2.0 / 3.0);
}

TEST_CASE("bound values stay in their ranges") {
  for (int n = 3; n <= 1000; ++n) {
    const auto b = bound_values(n);
    REQUIRE(b.tau_n > 0.0);
    REQUIRE(b.tau_n < 1.0);
    REQUIRE(b.sigma_tree > 0.0);
    REQUIRE(b.sigma_tree < 1.0);  // keeps 1/(1 - sigma_tree) positive
    REQUIRE(b.tau_tree > 0.0);
    REQUIRE(b.tau_tree < 2.0);
  }
}

TEST_CASE("sequence trends: per-parity decrease, tree bounds increase") {
  const auto t = sequence_trends(1000);
  CHECK(t.tau_odd_decreasing);
  CHECK(t.tau_even_decreasing);
  CHECK(t.sigma_tree_increasing);
  CHECK(t.tau_tree_increasing);
  CHECK(t.all_below_one);
  CHECK(t.tau_final_odd < 0.01);   // n = 999
  CHECK(t.tau_final_even < 0.01);  // n = 1000
  CHECK(t.sigma_tree_final < t.sigma_tree_limit);
  CHECK(t.tau_tree_final < t.tau_tree_limit);

  // The interleaved sequence is not monotone across parities.
  CHECK(bound_values(5).tau_n < bound_values(6).tau_n);

  CHECK_THROWS_AS(sequence_trends(4), DomainError);
}

TEST_CASE("trend extremes approach the limits") {
  const auto near = bound_values(100000);
  CHECK(std::abs(near.sigma_tree - 0.5) < 1e-4);
  CHECK(std::abs(near.tau_tree - 2.0 / 3.0) < 1e-4);
  CHECK(near.tau_n < 1e-4);
}

TEST_SUITE_END();
