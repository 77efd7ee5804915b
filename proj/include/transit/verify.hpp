#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "transit/enumerate.hpp"
#include "transit/graph.hpp"

namespace transit {

enum class Measure { kSigma, kTau };

std::string_view measure_name(Measure m);

struct CheckResult {
  bool pass = false;
  std::string detail;
};

struct WitnessRecord {
  std::string graph6;
  CanonicalForm canonical;
  double value = 0.0;
  std::map<std::string, CheckResult> structure;
};

/// Outcome of scanning a population for the minimum of sigma or tau.
///
/// Transmission-regular graphs are excluded from the minimum (both measures
/// vanish there); the report records how many were excluded. `bound` is NaN
/// when no closed form is asserted for the scanned measure. Witnesses are the
/// graphs within the tie tolerance of the minimum, sorted by canonical form;
/// `runner_up` is the smallest value strictly beyond the tie band.
struct VerificationReport {
  int n = 0;
  std::string graph_class;  // "connected" | "trees" | "stream"
  Measure measure = Measure::kTau;
  long long population = 0;
  long long transmission_regular_excluded = 0;
  long long evaluated = 0;
  double minimum = 0.0;
  double bound = 0.0;
  double runner_up = 0.0;
  std::vector<WitnessRecord> witnesses;
  std::map<std::string, CheckResult> checks;
  std::vector<std::string> notes;
  std::vector<std::string> eigensolver_failures;  // graph6 strings
  bool passed = false;
};

struct VerifyOptions {
  double perron_tolerance = 1e-12;
  double bound_tolerance = 1e-8;  // |minimum - bound|
  double tie_tolerance = 1e-8;
  int jobs = 0;  // 0 = hardware concurrency
};

/// Certify the connected-graph tau bound at order n (4 <= n <= 9): enumerate,
/// scan, compare the minimum to the closed form, and match the witness set
/// against the expected extremal family by canonical form. With
/// Measure::kSigma the scan is reported without a bound or witness assertion
/// (no closed form is asserted for sigma on general graphs).
VerificationReport verify_theorem1(int n, Measure measure = Measure::kTau,
                                   const VerifyOptions& options = {});

/// Certify both tree bounds at order n (3 <= n <= 14) with the star as the
/// expected unique witness. Returns the sigma report and the tau report.
std::pair<VerificationReport, VerificationReport> verify_theorem2(
    int n, const VerifyOptions& options = {});

/// Which extremal shape a witness is checked against.
enum class ExtremalContext { kGraphTau, kTreeSigma, kTreeTau };

/// Structural facts that must hold on an extremal witness: integer gap
/// n*Dmax - 2W equal to gamma (graphs) or eta (trees), n-1 vertices at
/// Dmax = n-1+gap with the remaining one at n-1, a Perron vector with n-1
/// maximal coordinates, and max/min coordinate ratio 1/(1 - bound).
std::map<std::string, CheckResult> check_extremal_structure(const Graph& g,
                                                            ExtremalContext context,
                                                            double tolerance = 1e-7);

/// True iff every leaf edge (v1, v2) of the tree satisfies
/// D_{v1} - D_{v2} = n - 2 exactly.
bool leaf_gap_check(const Graph& tree);

/// Aggregate an externally supplied population (all connected, same order)
/// without witness-set assertions.
VerificationReport scan_stream(const std::vector<Graph>& graphs, Measure measure,
                               const VerifyOptions& options = {});

/// Serialize a report as a schema-versioned JSON document.
std::string report_to_json(const VerificationReport& report);

}  // namespace transit
