#pragma once

// End-to-end check of the dual-cell description of Stiefel-Whitney classes:
//   K → K' → dual blocks of K' → all-ones block cochains → cocycle and cycle
//   checks → class comparison with the Wu-formula oracle (in K' homology).

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "swlab/complex.hpp"
#include "swlab/dual_blocks.hpp"
#include "swlab/homology.hpp"
#include "swlab/oracle.hpp"
#include "swlab/subdivision.hpp"

namespace swlab {

struct DegreeRow {
  int degree = 0;
  bool all_ones_is_cocycle = false;
  bool ht_chain_is_cycle = false;
  bool class_nonzero = false;
  bool oracle_nonzero = false;
  std::optional<bool> matches_oracle;  // set only when both sides verified
  std::size_t dual_cells = 0;
};

struct W0Row {
  bool is_cocycle = false;
  bool is_unit = false;                      // PD is the fundamental class of K'
  bool pd_is_subdivided_fundamental = false;  // exact chain equality
};

struct Timings {
  double subdivision_ms = 0;
  double homology_ms = 0;
  double oracle_ms = 0;
  double rows_ms = 0;
};

struct SWReport {
  int dim = 0;
  std::vector<std::size_t> f_vector;
  std::vector<std::size_t> derived_f_vector;
  std::vector<std::size_t> betti;
  std::vector<DegreeRow> rows;
  W0Row w0;
  std::vector<bool> k_level_cocycle;  // all-ones block cochain over K itself
  bool pairing_ok = false;
  Timings timings;

  bool consistent() const {
    for (const auto& r : rows)
      if (!r.all_ones_is_cocycle || !r.ht_chain_is_cycle || r.matches_oracle != std::optional<bool>(true))
        return false;
    return pairing_ok && w0.is_cocycle && w0.is_unit;
  }
};

/// Raised when verified representatives land in different classes. Carries
/// the full report.
class OracleConflict : public Error {
 public:
  OracleConflict(SWReport report, const std::string& what)
      : Error(ErrorKind::OracleConflict, what), report_(std::move(report)) {}
  const SWReport& report() const noexcept { return report_; }

 private:
  SWReport report_;
};

/// Sum of all i-simplices of K'.
inline Chain ht_chain(const SubdividedComplex& s, int i) {
  if (!is_closed_pseudomanifold(s.base()).ok())
    throw Error(ErrorKind::NotPseudomanifold, "Stiefel chains need a closed pseudomanifold");
  return Chain::all_ones(s.derived(), i);
}

/// Checks flag_partner is a fixed-point-free involution on the dual i-cells.
inline bool partner_pairing_ok(const SubdividedComplex& s, int i) {
  const auto cells = flag_dual_cells(s, i);
  std::vector<bool> seen(s.derived().count(i), false);
  for (const auto& c : cells) seen[s.derived().index_of(c)] = true;
  for (const auto& c : cells) {
    const FlagSimplex& f = s.flag_of(c);
    const FlagSimplex g = flag_partner(s, f);
    if (g == f) return false;
    if (flag_partner(s, g) != f) return false;
    const auto gi = s.derived().find(s.simplex_of(g));
    if (!gi || !seen[*gi]) return false;
  }
  return true;
}

inline W0Row w0_row(const SubdividedComplex& s, const BlockComplex& b, const HomologySummary& derived_homology) {
  const int n = s.base().dim();
  W0Row row;
  const BlockCochain ones = all_ones_block_cochain(b, 0);
  row.is_cocycle = is_block_cocycle(b, ones);
  const Chain pd = poincare_dual_chain(b, ones);
  const Chain sub_gamma = subdivide_chain(s, fundamental_cycle(s.base()));
  row.pd_is_subdivided_fundamental = pd == sub_gamma;
  row.is_unit = is_cycle(pd) && derived_homology.betti(n) == 1 && !derived_homology.is_boundary(pd) &&
                derived_homology.same_class(pd, sub_gamma);
  return row;
}

/// Runs the full comparison. Throws NotPseudomanifold on bad input and
/// OracleConflict when verified representatives disagree with the oracle.
inline SWReport compute_report(const SimplicialComplex& k) {
  using clock = std::chrono::steady_clock;
  auto ms = [](clock::time_point a, clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
  };
  const auto diag = is_closed_pseudomanifold(k);
  if (!diag.ok()) throw Error(ErrorKind::NotPseudomanifold, "input is not a closed pseudomanifold");

  SWReport report;
  const int n = k.dim();
  report.dim = n;
  report.f_vector = k.f_vector();

  auto t0 = clock::now();
  const SubdividedComplex s(k);
  const BlockComplex blocks(s.derived());
  report.derived_f_vector = s.derived().f_vector();
  auto t1 = clock::now();
  const HomologySummary hk(k);
  const HomologySummary hd(s.derived());
  report.betti = hk.betti();
  auto t2 = clock::now();
  const VertexOrder order = VertexOrder::numeric(k);
  const CohomologySummary ck(k);
  const WuData wu = wu_classes(k, order, ck);
  const Chain gamma = fundamental_cycle(k);
  auto t3 = clock::now();

  std::string conflicts;
  for (int i = 0; i <= n; ++i) {
    DegreeRow row;
    row.degree = i;
    const BlockCochain ones = all_ones_block_cochain(blocks, i);
    row.all_ones_is_cocycle = is_block_cocycle(blocks, ones);
    const Chain chain = poincare_dual_chain(blocks, ones);
    row.ht_chain_is_cycle = is_cycle(chain);
    if (row.ht_chain_is_cycle != row.all_ones_is_cocycle)
      throw Error(ErrorKind::OracleConflict, "block cocycle and dual chain cycle status differ in degree " +
                                                 std::to_string(i));
    row.dual_cells = flag_dual_cells(s, i).size();
    const CohomologyClass& w = wu.w[static_cast<std::size_t>(i)];
    row.oracle_nonzero = !w.is_zero();
    if (row.ht_chain_is_cycle) {
      row.class_nonzero = !hd.is_boundary(chain);
      const Chain pushed = subdivide_chain(s, cap(w.representative, gamma, order));
      row.matches_oracle = hd.same_class(chain, pushed);
      if (!*row.matches_oracle) conflicts += " w" + std::to_string(i);
    }
    report.rows.push_back(row);
  }
  report.w0 = w0_row(s, blocks, hd);

  // The same all-ones cochains over K itself, kept as a diagnostic.
  const BlockComplex k_blocks(k);
  for (int i = 0; i <= n; ++i)
    report.k_level_cocycle.push_back(is_block_cocycle(k_blocks, all_ones_block_cochain(k_blocks, i)));

  report.pairing_ok = true;
  for (int i = 1; i <= n; ++i) report.pairing_ok = report.pairing_ok && partner_pairing_ok(s, i);
  auto t4 = clock::now();
  report.timings = {ms(t0, t1), ms(t1, t2), ms(t2, t3), ms(t3, t4)};

  if (!conflicts.empty()) throw OracleConflict(report, "dual-cell classes differ from the Wu oracle in" + conflicts);
  return report;
}

}  // namespace swlab
