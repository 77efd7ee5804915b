// Command-line front end: analyze graphs, construct the extremal families,
// enumerate populations, certify the bounds, and print bound tables.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "transit/bounds.hpp"
#include "transit/enumerate.hpp"
#include "transit/errors.hpp"
#include "transit/families.hpp"
#include "transit/json_writer.hpp"
#include "transit/spectral.hpp"
#include "transit/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
  double tol = 1e-12;
  double tie_tol = 1e-8;
  int jobs = 0;
  std::string format = "plain";
  std::string input = "-";
  std::string on_error = "abort";
};

transit::StreamErrorPolicy policy_of(const std::string& s) {
  return s == "skip" ? transit::StreamErrorPolicy::kSkip : transit::StreamErrorPolicy::kAbort;
}

transit::Measure measure_of(const std::string& s) {
  return s == "sigma" ? transit::Measure::kSigma : transit::Measure::kTau;
}

std::string fmt(double v) { return transit::JsonWriter::format_double(v); }

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

struct AnalyzeRecord {
  std::string graph6;
  int n;
  transit::TransmissionProfile profile;
  transit::IrregularityReport irr;
  std::optional<transit::DvdrWitness> dvdr;
};

AnalyzeRecord analyze_one(const transit::Graph& g, const transit::PerronOptions& opts) {
  AnalyzeRecord rec;
  rec.graph6 = transit::to_graph6(g);
  rec.n = g.order();
  rec.profile = transit::transmission_profile(transit::distance_matrix(g));
  rec.irr = transit::irregularity(g, opts);
  rec.dvdr = transit::is_dvdr(g);
  return rec;
}

void print_record_json(const AnalyzeRecord& r, std::ostream& out) {
  transit::JsonWriter w;
  w.begin_object();
  w.key("graph6").value(r.graph6);
  w.key("n").value(r.n);
  w.key("transmissions").begin_array();
  for (int t : r.profile.transmissions) w.value(t);
  w.end_array();
  w.key("dmax").value(r.profile.dmax);
  w.key("dmin").value(r.profile.dmin);
  w.key("wiener").value(r.profile.wiener);
  w.key("gap").value(r.profile.gap);
  w.key("distance_radius").value(r.irr.distance_radius);
  w.key("dsl_radius").value(r.irr.dsl_radius);
  w.key("sigma").value(r.irr.sigma);
  w.key("tau").value(r.irr.tau);
  w.key("transmission_regular").value(r.profile.gap == 0);
  if (r.dvdr) {
    w.key("dvdr").begin_object();
    w.key("apex").value(r.dvdr->apex);
    w.key("r").value(r.dvdr->degree);
    w.end_object();
  } else {
    w.key("dvdr").null();
  }
  w.end_object();
  out << w.str() << '\n';
}

void print_record_csv(const AnalyzeRecord& r, std::ostream& out, bool header) {
  if (header) {
    out << "graph6,n,dmax,dmin,wiener,gap,distance_radius,dsl_radius,sigma,tau,"
           "transmission_regular,dvdr_apex,dvdr_r\n";
  }
  out << r.graph6 << ',' << r.n << ',' << r.profile.dmax << ',' << r.profile.dmin << ','
      << r.profile.wiener << ',' << r.profile.gap << ',' << fmt(r.irr.distance_radius) << ','
      << fmt(r.irr.dsl_radius) << ',' << fmt(r.irr.sigma) << ',' << fmt(r.irr.tau) << ','
      << (r.profile.gap == 0 ? "true" : "false") << ',';
  if (r.dvdr) {
    out << r.dvdr->apex << ',' << r.dvdr->degree;
  } else {
    out << ',';
  }
  out << '\n';
}

void print_record_plain(const AnalyzeRecord& r, std::ostream& out) {
  out << r.graph6 << "  n=" << r.n << "  Dmax=" << r.profile.dmax
      << "  Dmin=" << r.profile.dmin << "  W=" << r.profile.wiener << "  gap=" << r.profile.gap
      << "\n  distance radius = " << fmt(r.irr.distance_radius)
      << "\n  dsl radius      = " << fmt(r.irr.dsl_radius)
      << "\n  sigma = " << fmt(r.irr.sigma) << "\n  tau   = " << fmt(r.irr.tau)
      << "\n  transmission-regular: " << (r.profile.gap == 0 ? "yes" : "no");
  if (r.dvdr) {
    out << "\n  dominating apex " << r.dvdr->apex << " with " << r.dvdr->degree
        << "-regular remainder";
  }
  out << '\n';
}

std::vector<transit::Graph> read_population(const std::string& positional,
                                            const CommonFlags& flags) {
  std::vector<transit::Graph> graphs;
  if (!positional.empty()) {
    graphs.push_back(transit::parse_graph6(positional));
    return graphs;
  }
  auto source = transit::open_line_source(flags.input);
  transit::Graph6Reader reader(*source, policy_of(flags.on_error));
  while (auto g = reader.next()) graphs.push_back(std::move(*g));
  for (const auto& diag : reader.diagnostics()) {
    std::cerr << "line " << diag.line << ": " << diag.message << '\n';
  }
  return graphs;
}

int run_analyze(const std::string& positional, bool scan, const std::string& measure,
                const CommonFlags& flags) {
  const std::vector<transit::Graph> graphs = read_population(positional, flags);
  if (scan) {
    transit::VerifyOptions options;
    options.perron_tolerance = flags.tol;
    options.tie_tolerance = flags.tie_tol;
    options.jobs = flags.jobs;
    const auto report = transit::scan_stream(graphs, measure_of(measure), options);
    std::cout << transit::report_to_json(report) << '\n';
    return report.passed ? kExitPass : kExitFail;
  }
  transit::PerronOptions opts{flags.tol, 0};
  bool first = true;
  for (const auto& g : graphs) {
    if (!transit::is_connected(g)) {
      throw transit::NotConnectedError("input graph " + transit::to_graph6(g) +
                                       " is disconnected");
    }
    const AnalyzeRecord rec = analyze_one(g, opts);
    if (flags.format == "json") {
      print_record_json(rec, std::cout);
    } else if (flags.format == "csv") {
      print_record_csv(rec, std::cout, first);
    } else {
      print_record_plain(rec, std::cout);
    }
    first = false;
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

void print_report_plain(const transit::VerificationReport& r, std::ostream& out) {
  out << "order " << r.n << " " << r.graph_class << " " << transit::measure_name(r.measure)
      << ": population " << r.population << " (" << r.transmission_regular_excluded
      << " transmission-regular excluded)\n"
      << "  minimum   = " << fmt(r.minimum) << "\n  bound     = " << fmt(r.bound)
      << "\n  runner-up = " << fmt(r.runner_up) << "\n  witnesses:";
  for (const auto& w : r.witnesses) out << ' ' << w.graph6;
  out << '\n';
  for (const auto& [name, check] : r.checks) {
    out << "  [" << (check.pass ? "pass" : "FAIL") << "] " << name << ": " << check.detail
        << '\n';
  }
  for (const auto& w : r.witnesses) {
    for (const auto& [name, check] : w.structure) {
      out << "  [" << (check.pass ? "pass" : "FAIL") << "] " << w.graph6 << " " << name << ": "
          << check.detail << '\n';
    }
  }
  for (const auto& note : r.notes) out << "  note: " << note << '\n';
  out << (r.passed ? "PASS" : "FAIL") << '\n';
}

void print_report_csv(const std::vector<transit::VerificationReport>& reports,
                      std::ostream& out) {
  out << "n,graph_class,measure,population,tr_excluded,minimum,bound,runner_up,witnesses,"
         "passed\n";
  for (const auto& r : reports) {
    out << r.n << ',' << r.graph_class << ',' << transit::measure_name(r.measure) << ','
        << r.population << ',' << r.transmission_regular_excluded << ',' << fmt(r.minimum)
        << ',' << fmt(r.bound) << ',' << fmt(r.runner_up) << ',';
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
      out << (i ? ";" : "") << r.witnesses[i].graph6;
    }
    out << ',' << (r.passed ? "true" : "false") << '\n';
  }
}

int run_verify(int theorem, int n, const std::string& measure, const CommonFlags& flags) {
  transit::VerifyOptions options;
  options.perron_tolerance = flags.tol;
  options.tie_tolerance = flags.tie_tol;
  options.jobs = flags.jobs;

  std::vector<transit::VerificationReport> reports;
  if (theorem == 1) {
    reports.push_back(transit::verify_theorem1(n, measure_of(measure), options));
  } else {
    auto [sigma_report, tau_report] = transit::verify_theorem2(n, options);
    reports.push_back(std::move(sigma_report));
    reports.push_back(std::move(tau_report));
  }

  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.passed;

  if (flags.format == "csv") {
    print_report_csv(reports, std::cout);
  } else if (flags.format == "plain") {
    for (const auto& r : reports) print_report_plain(r, std::cout);
  } else {
    if (reports.size() == 1) {
      std::cout << transit::report_to_json(reports[0]) << '\n';
    } else {
      std::cout << "{\"schema\":\"transit-spectra/1\",\"kind\":\"verification-report-set\","
                   "\"reports\":[";
      for (std::size_t i = 0; i < reports.size(); ++i) {
        std::cout << (i ? "," : "") << transit::report_to_json(reports[i]);
      }
      std::cout << "]}" << '\n';
    }
  }
  return all_pass ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

int run_bounds(int n_min, int n_max, const std::string& format) {
  if (format == "csv") {
    std::cout << "n,gamma,eta,tau_n,sigma_tree,tau_tree,residual_tau,residual_sigma_tree,"
                 "residual_tau_tree\n";
  }
  for (int n = n_min; n <= n_max; ++n) {
    const auto b = transit::bound_values(n);
    const auto r = transit::residuals(b);
    if (format == "json") {
      transit::JsonWriter w;
      w.begin_object();
      w.key("n").value(b.n);
      w.key("gamma").value(b.gamma);
      w.key("eta").value(b.eta);
      w.key("tau_n").value(b.tau_n);
      w.key("sigma_tree").value(b.sigma_tree);
      w.key("tau_tree").value(b.tau_tree);
      w.key("residual_tau").value(r.tau_n);
      w.key("residual_sigma_tree").value(r.sigma_tree);
      w.key("residual_tau_tree").value(r.tau_tree);
      w.end_object();
      std::cout << w.str() << '\n';
    } else if (format == "csv") {
      std::cout << b.n << ',' << b.gamma << ',' << b.eta << ',' << fmt(b.tau_n) << ','
                << fmt(b.sigma_tree) << ',' << fmt(b.tau_tree) << ',' << fmt(r.tau_n) << ','
                << fmt(r.sigma_tree) << ',' << fmt(r.tau_tree) << '\n';
    } else {
      std::cout << "n=" << b.n << "  gamma=" << b.gamma << "  eta=" << b.eta
                << "  tau_n=" << fmt(b.tau_n) << "  sigma_tree=" << fmt(b.sigma_tree)
                << "  tau_tree=" << fmt(b.tau_tree) << '\n';
    }
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------
// construct / enumerate
// ---------------------------------------------------------------------------

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw transit::DomainError("empty entry in integer list");
    out.push_back(std::stoi(item));
  }
  return out;
}

int run_construct(const std::string& family, const std::string& param,
                  const CommonFlags& flags) {
  std::vector<transit::Graph> graphs;
  if (family == "star") {
    graphs.push_back(transit::star(std::stoi(param)));
  } else if (family == "complete") {
    graphs.push_back(transit::complete(std::stoi(param)));
  } else if (family == "multipartite") {
    graphs.push_back(transit::complete_multipartite(parse_int_list(param)));
  } else if (family == "cocktail-apex") {
    graphs.push_back(transit::cocktail_apex(std::stoi(param)));
  } else if (family == "extremal-even") {
    graphs = transit::extremal_even_family(std::stoi(param));
  } else if (family == "dvdr-join") {
    auto source = transit::open_line_source(param.empty() ? flags.input : param);
    transit::Graph6Reader reader(*source);
    while (auto g = reader.next()) graphs.push_back(transit::dvdr_join(*g));
  } else {
    throw transit::DomainError("unknown family: " + family);
  }
  for (const auto& g : graphs) std::cout << transit::to_graph6(g) << '\n';
  return kExitPass;
}

int run_enumerate(const std::string& klass, int n, bool allow_order_ten) {
  std::vector<transit::Graph> graphs;
  if (klass == "connected") {
    graphs = transit::connected_graphs(n, allow_order_ten);
  } else if (klass == "trees") {
    graphs = transit::free_trees(n);
  } else {
    throw transit::DomainError("unknown class: " + klass);
  }
  for (const auto& g : graphs) std::cout << transit::to_graph6(g) << '\n';
  std::cerr << "count: " << graphs.size() << '\n';
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance-spectral irregularity toolkit: sigma = Dmax - radius(D), "
               "tau = 2 Dmax - radius(Q)"};
  app.require_subcommand(1);
  CommonFlags flags;

  auto* analyze = app.add_subcommand("analyze", "Per-graph transmissions, radii, sigma, tau");
  std::string analyze_g6;
  bool analyze_scan = false;
  std::string analyze_measure = "tau";
  analyze->add_option("graph6", analyze_g6, "Single graph6 string; omit to read --input");
  analyze->add_flag("--scan", analyze_scan, "Aggregate the population into one report");
  analyze->add_option("--measure", analyze_measure, "Measure for --scan (sigma|tau)")
      ->check(CLI::IsMember({"sigma", "tau"}));
  analyze->add_option("--input", flags.input, "graph6 file, .gz allowed, - for stdin");
  analyze->add_option("--format", flags.format, "Output format (json|csv|plain)")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  analyze->add_option("--tol", flags.tol, "Eigensolver residual tolerance");
  analyze->add_option("--tie-tol", flags.tie_tol, "Minimum tie tolerance for --scan");
  analyze->add_option("--jobs", flags.jobs, "Worker threads (0 = cores)");
  analyze->add_option("--on-error", flags.on_error, "Stream error policy (skip|abort)")
      ->check(CLI::IsMember({"skip", "abort"}));

  auto* verify = app.add_subcommand("verify", "Certify a bound by exhaustive enumeration");
  int verify_theorem = 0;
  int verify_n = 0;
  std::string verify_measure = "tau";
  std::string verify_format = "json";
  verify->add_option("--theorem", verify_theorem, "1 = connected graphs, 2 = trees")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  verify->add_option("--n", verify_n, "Order to certify")->required();
  verify->add_option("--measure", verify_measure, "Measure for theorem 1 (sigma|tau)")
      ->check(CLI::IsMember({"sigma", "tau"}));
  verify->add_option("--format", verify_format, "Output format (json|csv|plain)")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  verify->add_option("--tol", flags.tol, "Eigensolver residual tolerance");
  verify->add_option("--tie-tol", flags.tie_tol, "Minimum tie tolerance");
  verify->add_option("--jobs", flags.jobs, "Worker threads (0 = cores)");

  auto* bounds = app.add_subcommand("bounds", "Closed-form bound values and residuals");
  int bounds_n = 0, bounds_min = 0, bounds_max = 0;
  std::string bounds_format = "csv";
  bounds->add_option("--n", bounds_n, "Single order");
  bounds->add_option("--n-min", bounds_min, "Range start");
  bounds->add_option("--n-max", bounds_max, "Range end");
  bounds->add_option("--format", bounds_format, "Output format (json|csv|plain)")
      ->check(CLI::IsMember({"json", "csv", "plain"}));

  auto* construct = app.add_subcommand("construct", "Emit a named family as graph6");
  std::string construct_family, construct_param;
  construct->add_option("family", construct_family,
                        "star|complete|multipartite|cocktail-apex|extremal-even|dvdr-join")
      ->required();
  construct->add_option("param", construct_param, "Order, comma list, or input path");
  construct->add_option("--input", flags.input, "Input for dvdr-join");

  auto* enumerate = app.add_subcommand("enumerate", "Isomorph-free population as graph6");
  std::string enum_class = "connected";
  int enum_n = 0;
  bool enum_allow_ten = false;
  enumerate->add_option("--class", enum_class, "connected|trees")
      ->check(CLI::IsMember({"connected", "trees"}));
  enumerate->add_option("--n", enum_n, "Order")->required();
  enumerate->add_flag("--allow-n10", enum_allow_ten, "Unlock order 10 for connected graphs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(analyze_g6, analyze_scan, analyze_measure, flags);
    if (*verify) return run_verify(verify_theorem, verify_n, verify_measure,
                                   [&] {
                                     CommonFlags f = flags;
                                     f.format = verify_format;
                                     return f;
                                   }());
    if (*bounds) {
      if (bounds_n > 0) {
        bounds_min = bounds_max = bounds_n;
      }
      if (bounds_min < 3 || bounds_max > 1000000 || bounds_min > bounds_max) {
        throw transit::DomainError("bounds range must lie within 3..1000000");
      }
      return run_bounds(bounds_min, bounds_max, bounds_format);
    }
    if (*construct) return run_construct(construct_family, construct_param, flags);
    if (*enumerate) return run_enumerate(enum_class, enum_n, enum_allow_ten);
  } catch (const transit::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
