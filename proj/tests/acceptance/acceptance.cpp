// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "swlab/swlab.hpp"

using namespace swlab;
using namespace swlab::riemann;
using std::numbers::pi;

namespace {

constexpr double kGaussBonnetTol = 1e-6;
constexpr double kW3Tol = 1e-4;
constexpr double kFrameTol = 1e-10;
constexpr double kConstantsRelTol = 1e-12;
constexpr double kGaussSphereTol = 1e-3;
constexpr double kGaussFlatTol = 1e-8;
constexpr double kWhitneySeconds = 60;
constexpr double kGaussBonnetSeconds = 5;
constexpr double kW3Seconds = 30;
constexpr double kFrameSeconds = 1;
constexpr int kOracleTrials = 100;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

int failures = 0;

void run(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  std::printf("AC%-2d %s  %s (%.2fs)%s\n", id, o.pass ? "PASS" : "FAIL", title.c_str(), seconds_since(t),
              o.detail.str().c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

const std::vector<std::string>& names() {
  static const auto n = io::corpus_names();
  return n;
}

}  // namespace

int main() {
  std::vector<SWReport> reports;

  run(1, "all-ones block cochains over K' are cocycles matching the Wu oracle", [&](Outcome& o) {
    const auto t = Clock::now();
    for (const auto& name : names()) {
      const SWReport r = compute_report(io::corpus(name).complex());
      for (const auto& row : r.rows) {
        o.require(row.all_ones_is_cocycle, name + " w" + std::to_string(row.degree) + " not a cocycle");
        o.require(row.matches_oracle == std::optional<bool>(true),
                  name + " w" + std::to_string(row.degree) + " differs from oracle");
      }
      reports.push_back(r);
    }
    const double s = seconds_since(t);
    o.detail << " corpus " << names().size() << " entries in " << s << "s";
    o.require(s < kWhitneySeconds, "runtime");
  });

  run(2, "class patterns: rp2 w1,w2; klein w1; others zero", [&](Outcome& o) {
    for (std::size_t e = 0; e < names().size(); ++e) {
      const auto& name = names()[e];
      const auto& r = e < reports.size() ? reports[e] : compute_report(io::corpus(name).complex());
      std::vector<bool> want(static_cast<std::size_t>(r.dim + 1), false);
      want[0] = true;
      if (name == "rp2-6") want[1] = want[2] = true;
      if (name == "klein") want[1] = true;
      std::string got;
      for (const auto& row : r.rows) {
        got += row.class_nonzero ? '1' : '0';
        o.require(row.class_nonzero == want[static_cast<std::size_t>(row.degree)],
                  name + " w" + std::to_string(row.degree));
        o.require(row.oracle_nonzero == want[static_cast<std::size_t>(row.degree)],
                  name + " oracle w" + std::to_string(row.degree));
      }
      o.detail << ' ' << name << '=' << got;
    }
  });

  run(3, "sum of all i-simplices of K' is a cycle Poincare dual to w_{n-i}", [&](Outcome& o) {
    for (const auto& name : names()) {
      const auto k = io::corpus(name).complex();
      const SubdividedComplex s(k);
      const HomologySummary h(s.derived());
      const auto order = VertexOrder::numeric(k);
      const auto wu = wu_classes(k, order);
      const int n = k.dim();
      for (int i = 0; i <= n; ++i) {
        const Chain c = ht_chain(s, i);
        o.require(is_cycle(c), name + " chain " + std::to_string(i) + " not a cycle");
        const Chain pd = subdivide_chain(
            s, poincare_dual_of_cocycle(wu.w[static_cast<std::size_t>(n - i)].representative, order));
        o.require(h.same_class(c, pd), name + " chain " + std::to_string(i) + " class");
      }
    }
  });

  run(4, "flag partner is a fixed-point-free involution in every degree >= 1", [&](Outcome& o) {
    std::size_t cells = 0;
    for (const auto& name : names()) {
      const SubdividedComplex s(io::corpus(name).complex());
      for (int i = 1; i <= s.base().dim(); ++i)
        for (const auto& c : flag_dual_cells(s, i)) {
          ++cells;
          const FlagSimplex& f = s.flag_of(c);
          const FlagSimplex p = flag_partner(s, f);
          o.require(p != f, name + " fixed point");
          o.require(flag_partner(s, p) == f, name + " not an involution");
          o.require(is_flag_dual_cell(s, p), name + " partner not a cell");
        }
    }
    o.detail << ' ' << cells << " cells";
  });

  run(5, "Gauss-Bonnet total 2pi on geodesic disks", [&](Outcome& o) {
    for (const char* model : {"round-s2", "hyperbolic-2", "flat-2"})
      for (double eps : {0.25, 0.5}) {
        const auto t = Clock::now();
        const auto r = gauss_bonnet_disk(make_model2(model), eps);
        const double s = seconds_since(t);
        const double err = std::abs(r.total - 2 * pi);
        o.detail << ' ' << model << '@' << eps << " err=" << err;
        o.require(err <= kGaussBonnetTol, std::string(model) + " total");
        o.require(r.cochain == 1, std::string(model) + " cochain");
        o.require(s < kGaussBonnetSeconds, std::string(model) + " runtime");
      }
  });

  run(6, "w3 limit of geodesic sphere area ratios", [&](Outcome& o) {
    for (const char* model : {"round-s3", "flat-3", "warped-3"}) {
      const auto t = Clock::now();
      const auto r = w3_limit(make_model3(model), {0.2, 0.1, 0.05});
      const double s = seconds_since(t);
      o.detail << ' ' << model << " limit=" << r.value << " (" << s << "s)";
      o.require(std::abs(r.value - 1) <= kW3Tol, std::string(model) + " limit");
      o.require(r.cochain == 1, std::string(model) + " cochain");
      o.require(s < kW3Seconds, std::string(model) + " runtime");
    }
  });

  run(7, "frame determinant is 1 at random points", [&](Outcome& o) {
    std::mt19937_64 g(7);
    std::uniform_real_distribution<double> u(-0.9, 0.9);
    double worst = 0;
    const auto t = Clock::now();
    auto sweep = [&](const auto& chart, auto point) {
      for (int k = 0; k < 100; ++k) {
        auto p = point();
        while (!chart.in_domain(p)) p = point();
        const auto r = frame_det_w1(chart, p);
        worst = std::max(worst, std::abs(r.det - 1));
        o.require(r.value == 1, chart.name + " value");
      }
    };
    for (const char* model : {"round-s2", "hyperbolic-2", "flat-2"}) {
      const auto m = make_model2(model);
      sweep(m.chart, [&] { return Point<2>(u(g), u(g)); });
      sweep(m.polar, [&] { return Point<2>(1 + 0.5 * u(g), 3 * u(g)); });
    }
    for (const char* model : {"round-s3", "flat-3", "warped-3"}) {
      const auto m = make_model3(model);
      sweep(m.chart, [&] { return Point<3>(u(g), u(g), u(g)); });
      sweep(m.polar, [&] { return Point<3>(1 + 0.5 * u(g), 1.5 + u(g), 3 * u(g)); });
    }
    const double s = seconds_since(t);
    o.detail << " max|det-1|=" << worst;
    o.require(worst <= kFrameTol, "det");
    o.require(s < kFrameSeconds, "runtime");
  });

  run(8, "sphere volume constants", [&](Outcome& o) {
    double worst = 0;
    for (int k = 1; k <= 8; ++k) {
      const auto c = sphere_constants(k);
      worst = std::max(worst, std::abs(c.omega_2k - c.omega_2k_double_factorial) / c.omega_2k);
      worst = std::max(worst, std::abs(c.cgb - c.omega_2k / 2) / c.cgb);
    }
    o.detail << " max rel=" << worst;
    o.require(worst <= kConstantsRelTol, "Gamma vs double factorial");
    o.require(cgb_constant(1) == 2 * pi, "cgb_1 = 2pi");
    o.require(sphere_volume(2) == 4 * pi, "omega_2 = 4pi");
  });

  run(9, "Gauss equation on the equator of S3 and a flat plane", [&](Outcome& o) {
    std::mt19937_64 g(9);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    const auto s3 = make_model3("round-s3");
    const auto flat = make_model3("flat-3");
    double worst_s3 = 0, worst_flat = 0;
    for (int k = 0; k < 20; ++k) {
      const Point<2> p(u(g), u(g));
      worst_s3 = std::max(worst_s3, gauss_equation_check(s3.chart, p));
      worst_flat = std::max(worst_flat, gauss_equation_check(flat.chart, p));
    }
    o.detail << " S3=" << worst_s3 << " flat=" << worst_flat;
    o.require(worst_s3 <= kGaussSphereTol, "S3 residual");
    o.require(worst_flat <= kGaussFlatTol, "flat residual");
  });

  run(10, "oracle self-tests: Leibniz, Sq axioms, Wu vanishing, order independence", [&](Outcome& o) {
    std::mt19937_64 g(10);
    for (const auto& name : names()) {
      const auto x = io::corpus(name).complex();
      const int n = x.dim();
      const CohomologySummary h(x);
      const auto order = VertexOrder::numeric(x);
      auto random_cochain = [&](int d) { return Cochain(x, d, BitVector::random(x.count(d), g)); };
      auto random_cocycle = [&](int d) {
        Cochain c = h.from_coordinates(d, BitVector::random(h.betti(d), g));
        if (d > 0) c += coboundary(random_cochain(d - 1));
        return c;
      };
      for (int t = 0; t < kOracleTrials; ++t) {
        const int p = static_cast<int>(g() % static_cast<unsigned>(n));
        const int q = static_cast<int>(g() % static_cast<unsigned>(n - p));
        const auto a = random_cochain(p), b = random_cochain(q);
        o.require(coboundary(cup(a, b, order)) == cup(coboundary(a), b, order) + cup(a, coboundary(b), order),
                  name + " cup Leibniz");
        const int d = 1 + static_cast<int>(g() % static_cast<unsigned>(n));
        const int pc = static_cast<int>(g() % static_cast<unsigned>(d));
        const auto ac = random_cochain(pc);
        const Chain c(x, d, BitVector::random(x.count(d), g));
        o.require(boundary(cap(ac, c, order)) == cap(coboundary(ac), c, order) + cap(ac, boundary(c), order),
                  name + " cap Leibniz");
        const int r = static_cast<int>(g() % static_cast<unsigned>(n + 1));
        const auto z = random_cocycle(r);
        o.require(h.same_class(steenrod_sq(z, 0, order), z), name + " Sq0");
        if (2 * r <= n) o.require(h.same_class(steenrod_sq(z, r, order), cup(z, z, order)), name + " Sq top");
        if (2 * r + 1 <= n) o.require(steenrod_sq(z, r + 1, order).is_zero(), name + " Sq above degree");
      }
      const auto wu = wu_classes(x, order, h);
      for (int k = 0; k <= n; ++k)
        if (2 * k > n) o.require(wu.v[static_cast<std::size_t>(k)].is_zero(), name + " Wu vanishing");
      const auto wr = wu_classes(x, VertexOrder::reversed(x), h);
      std::vector<Vertex> seq;
      for (const auto& v : x.skeleton(0)) seq.push_back(v[0]);
      std::shuffle(seq.begin(), seq.end(), g);
      const auto ws = wu_classes(x, VertexOrder::from_sequence(x, seq), h);
      for (std::size_t i = 0; i < wu.w.size(); ++i) {
        o.require(wu.w[i].coordinates == wr.w[i].coordinates, name + " reversed order");
        o.require(wu.w[i].coordinates == ws.w[i].coordinates, name + " shuffled order");
      }
    }
  });

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
