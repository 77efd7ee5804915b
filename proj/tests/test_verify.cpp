#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "transit/bounds.hpp"
#include "transit/enumerate.hpp"
#include "transit/errors.hpp"
#include "transit/families.hpp"
#include "transit/verify.hpp"

using namespace transit;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

bool close(double a, double b, double tol = 1e-10) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_SUITE_BEGIN("verify");

TEST_CASE("theorem 1 at order 5: cocktail apex is the unique witness") {
  const auto report = verify_theorem1(5);
  CHECK(report.passed);
  CHECK(report.population == 21);
  CHECK(close(report.minimum, (7.0 - std::sqrt(41.0)) / 2.0, 1e-9));
  REQUIRE(report.witnesses.size() == 1);
  CHECK(report.witnesses[0].canonical == canonical_form(cocktail_apex(5)));
  CHECK(report.runner_up > report.minimum + 1e-8);
}

TEST_CASE("theorem 1 at order 4: degenerate star witness, reported rather than assumed") {
  const auto report = verify_theorem1(4);
  CHECK(report.passed);
  CHECK(report.population == 6);
  CHECK(close(report.minimum, 4.0 - 2.0 * std::sqrt(3.0), 1e-9));
  REQUIRE(report.witnesses.size() == 1);
  CHECK(report.witnesses[0].canonical == canonical_form(star(4)));
  CHECK_FALSE(report.notes.empty());
}

TEST_CASE("theorem 1 at order 6: the wheel is the unique witness") {
  const auto report = verify_theorem1(6);
  CHECK(report.passed);
  CHECK(report.population == 112);
  CHECK(close(report.minimum, 5.0 - std::sqrt(21.0), 1e-9));
  REQUIRE(report.witnesses.size() == 1);
  CHECK(report.witnesses[0].canonical == canonical_form(dvdr_join(cycle(5))));
}

TEST_CASE("theorem 1 sigma scan reports without asserting a bound") {
  const auto report = verify_theorem1(5, Measure::kSigma);
  CHECK(report.passed);
  CHECK_FALSE(std::isfinite(report.bound));
  CHECK(report.minimum > 0.0);
  CHECK(report.checks.find("minimum_matches_bound") == report.checks.end());
  CHECK_FALSE(report.notes.empty());
}

TEST_CASE("theorem 1 rejects orders outside 4..9") {
  CHECK_THROWS_AS(verify_theorem1(3), DomainError);
  CHECK_THROWS_AS(verify_theorem1(10), DomainError);
}

TEST_CASE("theorem 2 rejects orders outside 3..14") {
  CHECK_THROWS_AS(verify_theorem2(2), DomainError);
  CHECK_THROWS_AS(verify_theorem2(15), DomainError);
}

TEST_CASE("theorem 2 certifies both tree bounds with the star as witness") {
  for (int n = 4; n <= 8; ++n) {
    const auto [sigma_report, tau_report] = verify_theorem2(n);
    const auto b = bound_values(n);
    REQUIRE(sigma_report.passed);
    REQUIRE(tau_report.passed);
    REQUIRE(close(sigma_report.minimum, b.sigma_tree, 1e-9));
    REQUIRE(close(tau_report.minimum, b.tau_tree, 1e-9));
    REQUIRE(sigma_report.witnesses.size() == 1);
    REQUIRE(tau_report.witnesses.size() == 1);
    REQUIRE(sigma_report.witnesses[0].canonical == canonical_form(star(n)));
    // min sigma < min tau at every order
    REQUIRE(sigma_report.minimum < tau_report.minimum);
  }
}

TEST_CASE("theorem 2 at order 5 matches the closed form 4 - sqrt(13)") {
  const auto [sigma_report, tau_report] = verify_theorem2(5);
  CHECK(close(sigma_report.minimum, 4.0 - std::sqrt(13.0), 1e-9));
  CHECK(sigma_report.population == 3);
  CHECK(tau_report.passed);
}

TEST_CASE("theorem 2 at order 3 is the trivial single-tree case") {
  const auto [sigma_report, tau_report] = verify_theorem2(3);
  CHECK(sigma_report.passed);
  CHECK(tau_report.passed);
  CHECK(sigma_report.population == 1);
  CHECK(sigma_report.witnesses.size() == 1);
}

TEST_CASE("extremal structure checks on the certified witnesses") {
  SUBCASE("cocktail apex at order 5") {
    const auto checks = check_extremal_structure(cocktail_apex(5), ExtremalContext::kGraphTau);
    for (const auto& [name, result] : checks) {
      INFO(name, ": ", result.detail);
      CHECK(result.pass);
    }
  }
  SUBCASE("wheel at order 6") {
    const auto checks = check_extremal_structure(dvdr_join(cycle(5)), ExtremalContext::kGraphTau);
    for (const auto& [name, result] : checks) {
      INFO(name, ": ", result.detail);
      CHECK(result.pass);
    }
  }
  SUBCASE("stars as trees, both measures") {
    for (int n : {4, 6, 9}) {
      for (auto context : {ExtremalContext::kTreeSigma, ExtremalContext::kTreeTau}) {
        const auto checks = check_extremal_structure(star(n), context);
        for (const auto& [name, result] : checks) {
          INFO("n=", n, " ", name, ": ", result.detail);
          REQUIRE(result.pass);
        }
      }
    }
  }
  SUBCASE("a non-extremal graph fails the profile check") {
    Graph p4(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    const auto checks = check_extremal_structure(p4, ExtremalContext::kGraphTau);
    CHECK_FALSE(checks.at("transmission_profile").pass);
  }
}

TEST_CASE("leaf gap identity") {
  Graph p4(4);
  p4.add_edge(0, 1);
  p4.add_edge(1, 2);
  p4.add_edge(2, 3);
  CHECK(leaf_gap_check(p4));
  CHECK(leaf_gap_check(star(10)));
  for (int n = 2; n <= 9; ++n) {
    for (const auto& t : free_trees(n)) CHECK(leaf_gap_check(t));
  }
  CHECK_THROWS_AS(leaf_gap_check(cycle(4)), DomainError);
}

TEST_CASE("scan_stream agrees with verify_theorem1 and validates its input") {
  const auto graphs = connected_graphs(5);
  const auto scanned = scan_stream(graphs, Measure::kTau);
  const auto reference = verify_theorem1(5);
  CHECK(scanned.minimum == reference.minimum);
  CHECK(scanned.population == reference.population);
  CHECK(scanned.witnesses.size() == reference.witnesses.size());

  CHECK_THROWS_AS(scan_stream({}, Measure::kTau), DomainError);

  std::vector<Graph> mixed{complete(3), complete(4)};
  CHECK_THROWS_AS(scan_stream(mixed, Measure::kTau), DomainError);

  std::vector<Graph> disconnected{parse_graph6("A?")};
  CHECK_THROWS_AS(scan_stream(disconnected, Measure::kTau), NotConnectedError);

  // A transmission-regular-only stream reports an empty evaluation.
  std::vector<Graph> tr_only{cycle(5)};
  const auto tr_report = scan_stream(tr_only, Measure::kTau);
  CHECK(tr_report.population == 1);
  CHECK(tr_report.evaluated == 0);
  CHECK(tr_report.transmission_regular_excluded == 1);
  CHECK_FALSE(std::isfinite(tr_report.minimum));
}

TEST_CASE("scan aggregation is order-insensitive") {
  auto graphs = connected_graphs(6);
  const auto base = scan_stream(graphs, Measure::kTau);
  std::mt19937_64 rng(20260809);
  std::shuffle(graphs.begin(), graphs.end(), rng);
  const auto shuffled = scan_stream(graphs, Measure::kTau);
  CHECK(base.minimum == shuffled.minimum);
  CHECK(base.runner_up == shuffled.runner_up);
  REQUIRE(base.witnesses.size() == shuffled.witnesses.size());
  for (std::size_t i = 0; i < base.witnesses.size(); ++i) {
    CHECK(base.witnesses[i].canonical == shuffled.witnesses[i].canonical);
  }
}

TEST_CASE("single-threaded and parallel scans agree") {
  const auto graphs = connected_graphs(6);
  VerifyOptions serial;
  serial.jobs = 1;
  VerifyOptions parallel;
  parallel.jobs = 4;
  const auto a = scan_stream(graphs, Measure::kTau, serial);
  const auto b = scan_stream(graphs, Measure::kTau, parallel);
  CHECK(a.minimum == b.minimum);
  CHECK(a.runner_up == b.runner_up);
  CHECK(a.witnesses.size() == b.witnesses.size());
}

TEST_CASE("report JSON parses and carries the schema with full-precision floats") {
  const auto report = verify_theorem1(5);
  const std::string text = report_to_json(report);
  const auto parsed = nlohmann::json::parse(text);
  CHECK(parsed.at("schema") == "transit-spectra/1");
  CHECK(parsed.at("n") == 5);
  CHECK(parsed.at("passed") == true);
  CHECK(parsed.at("population") == 21);
  CHECK(parsed.at("witnesses").size() == 1);
  const double minimum = parsed.at("minimum").get<double>();
  CHECK(close(minimum, report.minimum, 0.0));  // 17 significant digits round-trip
}

TEST_SUITE_END();
