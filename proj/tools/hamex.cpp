// Command-line driver: batch verification and one-off queries against the
// library. stdout carries a single machine-parseable value or a JSON/CSV
// document; everything diagnostic goes to stderr. Exit codes: 0 on
// success/match, 1 on a verification mismatch (check=false, feasibility
// violated, sweep mismatch), 2 on usage errors.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hamex/families.hpp"
#include "hamex/graph.hpp"
#include "hamex/hamilton.hpp"
#include "hamex/parameters.hpp"
#include "hamex/reduction.hpp"
#include "hamex/sweep.hpp"

namespace {

using namespace hamex;

std::string format_value(const ParameterValue& v) {
  if (v.exact) return std::to_string(v.ivalue);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v.rvalue);
  return buf;
}

// Inline graph6 token or a file holding one; an inline token wins over a
// file of the same name, with a warning.
Graph load_graph(const std::string& token) {
  std::optional<Graph> inline_graph;
  try {
    inline_graph = from_graph6(token);
  } catch (const std::exception&) {
  }
  std::error_code ec;
  bool is_file = std::filesystem::is_regular_file(token, ec);
  if (inline_graph && is_file) {
    std::cerr << "warning: --in is both a graph6 token and an existing file; "
                 "using the inline token\n";
    return *inline_graph;
  }
  if (inline_graph) return *inline_graph;
  if (is_file) {
    std::ifstream f(token);
    std::string line;
    while (std::getline(f, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return from_graph6(line);
    }
    throw std::invalid_argument("file " + token + " holds no graph6 record");
  }
  throw std::invalid_argument("--in is neither a graph6 token nor a readable file: " + token);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content << "\n";
}

// --jobs beats HAMEX_JOBS beats machine parallelism.
int effective_jobs(bool flag_given, int flag_value) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("HAMEX_JOBS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<int>(v);
    std::cerr << "warning: ignoring malformed HAMEX_JOBS value '" << env << "'\n";
  }
  return 0;
}

int cmd_family(const std::string& property, int n, int s, const std::string& ptoken) {
  FamilySpec spec{ham_property_from_string(property), n, s};
  if (ptoken.empty()) {
    std::cout << to_graph6(build_family(spec)) << "\n";
    return 0;
  }
  ParameterId p = ParameterId::from_token(ptoken);
  ParameterValue v;
  switch (p.kind) {
    case ParameterKind::EdgeCount:
      v = ParameterValue::integer(family_edge_count(spec));
      break;
    case ParameterKind::CliqueCount:
      if (spec.property == HamProperty::Cycle) {
        long long direct = family_clique_count(spec, p.clique_k);
        long long variant = family_clique_count_variant(spec, p.clique_k);
        if (variant != direct)
          std::cerr << "note: the alternate closed form s*C(s-1,k-1)+C(n-s,k) gives "
                    << variant << " here; " << direct << " is what enumeration confirms\n";
        v = ParameterValue::integer(direct);
      } else {
        v = ParameterValue::integer(clique_count(build_family(spec), p.clique_k));
      }
      break;
    default:
      v = evaluate(p, build_family(spec));
  }
  std::cout << format_value(v) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hamex: extremal bounds for Hamiltonicity under a minimum-degree "
      "constraint.\nDefaults: tol 1e-9, feasibility nmax 6, exhaustive sweep "
      "ceiling n = 7 (n = 8 needs --allow-large)."};
  app.require_subcommand(1);
  int rc = 0;

  auto* param = app.add_subcommand("param", "Evaluate a parameter on one graph.");
  std::string param_in, param_p;
  param->add_option("--in", param_in, "graph6 token or file")->required();
  param->add_option("--parameter", param_p, "e | nk:<k> | rho | q")->required();
  param->callback([&] {
    std::cout << format_value(evaluate(ParameterId::from_token(param_p), load_graph(param_in)))
              << "\n";
  });

  auto* check = app.add_subcommand(
      "check", "Decide a property on one graph; prints true/false, exit 1 on false.");
  std::string check_in, check_prop;
  check->add_option("--in", check_in, "graph6 token or file")->required();
  check->add_option("--property", check_prop, "cycle | path | hc")->required();
  check->callback([&] {
    bool ok = satisfies(load_graph(check_in), ham_property_from_string(check_prop));
    std::cout << (ok ? "true" : "false") << "\n";
    rc = ok ? 0 : 1;
  });

  auto* clo = app.add_subcommand("closure", "Degree-sum closure of one graph, as graph6.");
  std::string clo_in;
  int clo_t = 0;
  clo->add_option("--in", clo_in, "graph6 token or file")->required();
  clo->add_option("--t", clo_t, "degree-sum threshold")->required();
  clo->callback([&] { std::cout << to_graph6(closure(load_graph(clo_in), clo_t)) << "\n"; });

  auto* fam = app.add_subcommand(
      "family", "Extremal family member: graph6, or a closed-form value with --parameter.");
  std::string fam_prop, fam_p;
  int fam_n = 0, fam_s = 0;
  fam->add_option("--property", fam_prop, "cycle | path | hc")->required();
  fam->add_option("--n", fam_n, "order")->required();
  fam->add_option("--s", fam_s, "family index")->required();
  fam->add_option("--parameter", fam_p, "e | nk:<k> | rho | q (omit to print graph6)");
  fam->callback([&] { rc = cmd_family(fam_prop, fam_n, fam_s, fam_p); });

  auto* red = app.add_subcommand(
      "reduce", "Run the two-stage reduction and write the step-by-step certificate.");
  std::string red_in, red_prop, red_p, red_out;
  int red_k = 1;
  red->add_option("--in", red_in, "graph6 token or file")->required();
  red->add_option("--property", red_prop, "cycle | path | hc")->required();
  red->add_option("--k", red_k, "minimum-degree bound")->required();
  red->add_option("--parameter", red_p, "e | nk:<k> | rho | q")->required();
  red->add_option("--out", red_out, "certificate file (default: stdout)");
  red->callback([&] {
    ReductionCertificate cert =
        reduce(load_graph(red_in), ham_property_from_string(red_prop), red_k,
               ParameterId::from_token(red_p));
    write_output(red_out, to_json_string(cert));
  });

  auto* fea = app.add_subcommand(
      "feasibility", "Check the parameter axioms over all connected graphs up to nmax.");
  std::string fea_p, fea_out;
  int fea_nmax = 6, fea_jobs = 0;
  bool fea_strict = false;
  double fea_tol = kCmpTol;
  fea->add_option("--parameter", fea_p, "e | nk:<k> | rho | q")->required();
  fea->add_option("--nmax", fea_nmax, "largest order scanned")->capture_default_str();
  fea->add_flag("--strict", fea_strict, "require strict growth under edge addition");
  fea->add_option("--tol", fea_tol, "comparison tolerance")->capture_default_str();
  auto* fea_jobs_opt =
      fea->add_option("--jobs", fea_jobs, "worker threads (default: machine, or HAMEX_JOBS)");
  fea->add_option("--out", fea_out, "report file (default: stdout)");
  fea->callback([&] {
    FeasibilityReport report = check_feasibility(
        ParameterId::from_token(fea_p), GraphPopulation::connected_upto(fea_nmax), fea_strict,
        fea_tol, effective_jobs(fea_jobs_opt->count() > 0, fea_jobs));
    write_output(fea_out, to_json_string(report));
    rc = report.holds() ? 0 : 1;
  });

  auto* swp = app.add_subcommand(
      "sweep", "Maximize a parameter over property-failing graphs and compare to the family.");
  std::string swp_prop, swp_p, swp_source, swp_out, swp_csv;
  int swp_n = 0, swp_k = 1, swp_jobs = 0;
  double swp_tol = kCmpTol;
  bool swp_weak = false, swp_erdos = false, swp_nopre = false, swp_large = false;
  swp->add_option("--n", swp_n, "order")->required();
  swp->add_option("--k", swp_k, "minimum-degree bound")->required();
  auto* swp_prop_opt = swp->add_option("--property", swp_prop, "cycle | path | hc");
  auto* swp_p_opt = swp->add_option("--parameter", swp_p, "e | nk:<k> | rho | q");
  swp->add_option("--source", swp_source,
                  "graph6:<path> to scan a stream (default: exhaustive-labeled)");
  swp->add_option("--tol", swp_tol, "comparison tolerance")->capture_default_str();
  auto* swp_jobs_opt =
      swp->add_option("--jobs", swp_jobs, "worker threads (default: machine, or HAMEX_JOBS)");
  swp->add_option("--out", swp_out, "report file (default: stdout)");
  swp->add_option("--csv", swp_csv, "also write a one-row CSV summary here");
  swp->add_flag("--weak", swp_weak, "upper-bound mode for clique counts");
  auto* swp_erdos_opt =
      swp->add_flag("--erdos", swp_erdos, "edge-threshold mode (needs only --n and --k)");
  swp->add_flag("--no-prefilter", swp_nopre, "evaluate spectral parameters on every candidate");
  swp->add_flag("--allow-large", swp_large, "permit the exhaustive n = 8 scan");
  swp_erdos_opt->excludes(swp_prop_opt)->excludes(swp_p_opt);
  swp->callback([&] {
    SweepOptions opts;
    opts.allow_large = swp_large;
    opts.no_prefilter = swp_nopre;
    opts.jobs = effective_jobs(swp_jobs_opt->count() > 0, swp_jobs);
    SweepReport report;
    if (swp_erdos) {
      report = verify_erdos(swp_n, swp_k, opts);
    } else {
      if (swp_prop_opt->count() == 0 || swp_p_opt->count() == 0)
        throw CLI::RequiredError("--property and --parameter (or --erdos)");
      SweepSpec spec;
      spec.n = swp_n;
      spec.k = swp_k;
      spec.property = ham_property_from_string(swp_prop);
      spec.parameter = ParameterId::from_token(swp_p);
      spec.tol = swp_tol;
      if (!swp_source.empty()) {
        if (swp_source.rfind("graph6:", 0) != 0)
          throw std::invalid_argument("--source must look like graph6:<path>");
        spec.source = SweepSource::stream(swp_source.substr(7));
      }
      report = swp_weak ? verify_weak_bound(spec, opts) : verify_theorem(spec, opts);
    }
    write_output(swp_out, to_json_string(report));
    if (!swp_csv.empty()) {
      std::ofstream csv(swp_csv);
      if (!csv) throw std::runtime_error("cannot open output file: " + swp_csv);
      csv << sweep_csv_header() << sweep_csv_row(report);
    }
    rc = report.match ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
