// swlab command line: Stiefel-Whitney representatives of triangulated
// manifolds and the metric probes on model geometries.
//
// exit 0 ok, 1 verification failure, 2 usage or input error

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "swlab/swlab.hpp"

namespace {

using swlab::Error;
using swlab::ErrorKind;
using swlab::io::Json;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

constexpr double kGaussBonnetTolerance = 1e-6;
constexpr double kSphereTolerance = 1e-6;  // relative, against the closed form
constexpr double kW3Tolerance = 1e-4;

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::OracleConflict:
    case ErrorKind::GridTooCoarse:
    case ErrorKind::NonConvergent:
    case ErrorKind::LeftDomain:
    case ErrorKind::PairingDegenerate:
      return kVerificationFailed;
    default:
      return kUsage;
  }
}

void write_json(const std::string& path, const Json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write report '" + path + "'");
  out << j.dump(2) << '\n';
}

std::string yn(bool b) { return b ? "yes" : "no"; }

void print_report(const swlab::SWReport& r, const std::string& source, bool diagnostics) {
  std::cout << "input " << source << "  dim " << r.dim << "  f =";
  for (auto f : r.f_vector) std::cout << ' ' << f;
  std::cout << "  f' =";
  for (auto f : r.derived_f_vector) std::cout << ' ' << f;
  std::cout << "  betti =";
  for (auto b : r.betti) std::cout << ' ' << b;
  std::cout << '\n';
  std::cout << "deg  cocycle  cycle  dual-cells  class  oracle  match\n";
  for (const auto& row : r.rows) {
    std::cout << 'w' << row.degree << "   " << yn(row.all_ones_is_cocycle) << "      " << yn(row.ht_chain_is_cycle)
              << "    " << row.dual_cells << "  " << (row.class_nonzero ? "nonzero" : "zero") << "  "
              << (row.oracle_nonzero ? "nonzero" : "zero") << "  "
              << (row.matches_oracle ? (*row.matches_oracle ? "true" : "FALSE") : "n/a") << '\n';
  }
  std::cout << "w0 unit " << yn(r.w0.is_unit) << ", odd-cell pairing " << (r.pairing_ok ? "ok" : "BROKEN") << '\n';
  if (diagnostics) {
    std::cout << "all-ones cocycle over K itself:";
    for (bool b : r.k_level_cocycle) std::cout << ' ' << (b ? 1 : 0);
    std::cout << "\ntimings ms: subdivision " << r.timings.subdivision_ms << ", homology " << r.timings.homology_ms
              << ", oracle " << r.timings.oracle_ms << ", rows " << r.timings.rows_ms << '\n';
  }
  std::cout << (r.consistent() ? "consistent" : "INCONSISTENT") << '\n';
}

struct ClassesArgs {
  std::string file;
  std::string corpus;
  std::string report;
  bool diagnostics = false;
};

int run_classes(const ClassesArgs& a) {
  if (a.file.empty() == a.corpus.empty()) {
    std::cerr << "classes: give exactly one of <file> or --corpus\n";
    return kUsage;
  }
  const std::string source = a.corpus.empty() ? a.file : "corpus:" + a.corpus;
  try {
    const swlab::SimplicialComplex k =
        a.corpus.empty() ? swlab::io::parse_complex_file(a.file) : swlab::io::corpus(a.corpus).complex();
    const std::string hash = swlab::io::input_hash(k);
    try {
      const swlab::SWReport r = swlab::compute_report(k);
      print_report(r, source, a.diagnostics);
      write_json(a.report, swlab::io::report_json(r, source, hash, a.diagnostics));
      return r.consistent() ? kOk : kVerificationFailed;
    } catch (const swlab::OracleConflict& c) {
      print_report(c.report(), source, a.diagnostics);
      Json j = swlab::io::report_json(c.report(), source, hash, a.diagnostics);
      j["status"] = "error";
      j["error"] = {{"kind", to_string(c.kind())}, {"message", c.what()}};
      write_json(a.report, j);
      std::cerr << c.what() << '\n';
      return kVerificationFailed;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    if (!a.report.empty()) write_json(a.report, swlab::io::error_json(e));
    return exit_code_for(e.kind());
  }
}

struct MetricArgs {
  std::string model;
  double eps = 0;
  std::size_t grid = 0;
  std::vector<double> eps_list;
  double warp = swlab::riemann::kDefaultWarp;
  std::string report;
};

int run_gauss_bonnet(const MetricArgs& a) {
  namespace rm = swlab::riemann;
  if (rm::model_dimension(a.model) != 2)
    throw Error(ErrorKind::UnknownModel, "gauss-bonnet needs a 2-dimensional model, got '" + a.model + "'");
  const rm::GaussBonnetResult r = rm::gauss_bonnet_disk(rm::make_model2(a.model), a.eps, {a.grid});
  std::cout.precision(9);
  std::cout << std::fixed << "model " << a.model << "  eps " << a.eps << "\ninterior " << r.interior
            << "\nboundary " << r.boundary << "\ntotal " << r.total << "  (2pi = " << 2 * std::numbers::pi
            << ")\ncochain " << r.cochain << " mod 2\n";
  write_json(a.report, swlab::io::gauss_bonnet_json(a.model, r));
  return std::abs(r.total - 2 * std::numbers::pi) <= kGaussBonnetTolerance ? kOk : kVerificationFailed;
}

int run_sphere_area(const MetricArgs& a) {
  namespace rm = swlab::riemann;
  rm::ProbeResult r;
  double exact = 0;
  if (rm::model_dimension(a.model) == 2) {
    const auto m = rm::make_model2(a.model);
    r = rm::sphere_area_probe(m, a.eps, {a.grid});
    exact = m.sphere_measure(a.eps);
  } else {
    const auto m = rm::make_model3(a.model, a.warp);
    r = rm::sphere_area_probe(m, a.eps, {a.grid});
    exact = m.sphere_measure(a.eps);
  }
  std::cout.precision(9);
  std::cout << std::fixed << "model " << a.model << "  eps " << a.eps << "\nmeasure " << r.value << "  (closed form "
            << exact << ")\nratio " << r.ratio << "\nerror estimate " << std::scientific << r.error_estimate << '\n';
  Json j = swlab::io::probe_json("sphere-area", a.model, r);
  j["closed_form"] = exact;
  write_json(a.report, j);
  return std::abs(r.value - exact) <= kSphereTolerance * exact ? kOk : kVerificationFailed;
}

int run_w3_limit(const MetricArgs& a) {
  namespace rm = swlab::riemann;
  if (rm::model_dimension(a.model) != 3)
    throw Error(ErrorKind::UnknownModel, "w3-limit needs a 3-dimensional model, got '" + a.model + "'");
  const rm::ProbeResult r = rm::w3_limit(rm::make_model3(a.model, a.warp), a.eps_list, {a.grid});
  std::cout.precision(9);
  std::cout << std::fixed << "model " << a.model << "\nratios";
  for (double x : r.ratios) std::cout << ' ' << x;
  std::cout << "\nlimit " << r.value << "\ncochain " << r.cochain << " mod 2\n";
  write_json(a.report, swlab::io::probe_json("w3-limit", a.model, r));
  return std::abs(r.value - 1) <= kW3Tolerance ? kOk : kVerificationFailed;
}

template <class F>
int guarded(const MetricArgs& a, F f) {
  try {
    return f(a);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    if (!a.report.empty()) {
      try {
        write_json(a.report, swlab::io::error_json(e));
      } catch (const Error&) {
      }
    }
    return exit_code_for(e.kind());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stiefel-Whitney classes of triangulated manifolds and metric probes"};
  app.require_subcommand(1);

  ClassesArgs ca;
  auto* classes = app.add_subcommand("classes", "dual-cell representatives checked against the Wu oracle");
  classes->add_option("file", ca.file, "facet-list file");
  classes->add_option("--corpus", ca.corpus, "built-in triangulation");
  classes->add_option("--report", ca.report, "write a JSON report");
  classes->add_flag("--diagnostics", ca.diagnostics, "K-level cocycle checks and timings");

  auto* metric = app.add_subcommand("metric", "numerical probes on model geometries");
  metric->require_subcommand(1);
  MetricArgs gb, sa, w3;
  auto* gbc = metric->add_subcommand("gauss-bonnet", "curvature integral plus boundary term on a geodesic disk");
  gbc->add_option("--model", gb.model)->required();
  gbc->add_option("--eps", gb.eps)->required();
  gbc->add_option("--grid", gb.grid, "angular nodes");
  gbc->add_option("--report", gb.report);
  auto* sac = metric->add_subcommand("sphere-area", "measure of a geodesic sphere");
  sac->add_option("--model", sa.model)->required();
  sac->add_option("--eps", sa.eps)->required();
  sac->add_option("--grid", sa.grid, "angular nodes (2D) or polar nodes (3D)");
  sac->add_option("--warp", sa.warp, "warp coefficient for warped-3");
  sac->add_option("--report", sa.report);
  auto* w3c = metric->add_subcommand("w3-limit", "extrapolated area ratio as eps goes to 0");
  w3c->add_option("--model", w3.model)->required();
  w3c->add_option("--eps-list", w3.eps_list)->required()->delimiter(',');
  w3c->add_option("--grid", w3.grid, "polar nodes");
  w3c->add_option("--warp", w3.warp, "warp coefficient for warped-3");
  w3c->add_option("--report", w3.report);

  auto* corpus = app.add_subcommand("corpus", "built-in triangulations");
  corpus->require_subcommand(1);
  auto* list = corpus->add_subcommand("list", "names and descriptions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (classes->parsed()) return run_classes(ca);
  if (gbc->parsed()) return guarded(gb, run_gauss_bonnet);
  if (sac->parsed()) return guarded(sa, run_sphere_area);
  if (w3c->parsed()) return guarded(w3, run_w3_limit);
  if (list->parsed()) {
    for (const auto& name : swlab::io::corpus_names()) {
      const auto e = swlab::io::corpus(name);
      std::cout << name << "  " << e.description << "  (" << e.facets.size() << " facets)\n";
    }
    return kOk;
  }
  return kUsage;
}
