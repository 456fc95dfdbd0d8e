#pragma once

// Barycentric subdivision K' of a simplicial complex K. Each simplex of K'
// is a flag σ_1 ≻ σ_2 ≻ … ≻ σ_k of simplices of K, spanned by their
// barycenters. Derived vertex ids are assigned by decreasing dimension of
// the base simplex (ties broken lexicographically), so the sorted vertex
// tuple of a derived simplex lists its flag from the largest simplex down.

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "swlab/bits.hpp"
#include "swlab/complex.hpp"

namespace swlab {

/// Position of a simplex in the canonical enumeration of a complex.
struct SimplexRef {
  int dim = -1;
  std::size_t index = 0;
  friend auto operator<=>(const SimplexRef&, const SimplexRef&) = default;
};

/// Descending chain of base simplices; each entry a proper face of the
/// previous one.
using FlagSimplex = std::vector<SimplexRef>;

class SubdividedComplex {
 public:
  explicit SubdividedComplex(SimplicialComplex base) : base_(std::move(base)) {
    if (base_.empty()) throw Error(ErrorKind::EmptyComplex, "cannot subdivide the empty complex");
    const int n = base_.dim();
    // Derived ids: dimension n first, then n-1, ..., then the vertices.
    offset_.assign(static_cast<std::size_t>(n + 1), 0);
    Vertex next = 0;
    for (int d = n; d >= 0; --d) {
      offset_[static_cast<std::size_t>(d)] = next;
      for (std::size_t i = 0; i < base_.count(d); ++i) barycenter_of_.push_back({d, i});
      next += static_cast<Vertex>(base_.count(d));
    }
    // Maximal flags start at a maximal simplex and drop one dimension at a time.
    std::vector<Simplex> gens;
    for (const auto& top : base_.facets()) {
      std::vector<Vertex> chain;
      collect_full_flags(top, chain, gens);
    }
    derived_ = SimplicialComplex::from_simplices(std::move(gens));
    flags_.resize(static_cast<std::size_t>(derived_.dim() + 1));
    for (int d = 0; d <= derived_.dim(); ++d) {
      auto& out = flags_[static_cast<std::size_t>(d)];
      for (const auto& s : derived_.skeleton(d)) {
        FlagSimplex f;
        f.reserve(s.size());
        for (Vertex v : s) f.push_back(barycenter_of_[v]);
        out.push_back(std::move(f));
      }
    }
  }

  const SimplicialComplex& base() const noexcept { return base_; }
  const SimplicialComplex& derived() const noexcept { return derived_; }

  /// Base simplex whose barycenter is the given derived vertex.
  const Simplex& barycenter_of(Vertex derived_vertex) const {
    const SimplexRef r = barycenter_of_.at(derived_vertex);
    return base_.skeleton(r.dim)[r.index];
  }
  SimplexRef barycenter_ref(Vertex derived_vertex) const { return barycenter_of_.at(derived_vertex); }

  /// Derived vertex id of the barycenter of a base simplex.
  Vertex barycenter(const SimplexRef& r) const {
    return offset_.at(static_cast<std::size_t>(r.dim)) + static_cast<Vertex>(r.index);
  }
  Vertex barycenter(const Simplex& s) const { return barycenter(SimplexRef{s.dim(), base_.index_of(s)}); }

  const FlagSimplex& flag_of(int d, std::size_t derived_index) const {
    return flags_.at(static_cast<std::size_t>(d)).at(derived_index);
  }
  const FlagSimplex& flag_of(const Simplex& derived_simplex) const {
    return flag_of(derived_simplex.dim(), derived_.index_of(derived_simplex));
  }

  /// The derived simplex spanned by the barycenters of a flag.
  Simplex simplex_of(const FlagSimplex& flag) const {
    std::vector<Vertex> vs;
    vs.reserve(flag.size());
    for (const auto& r : flag) vs.push_back(barycenter(r));
    return Simplex(std::move(vs));
  }

  const Simplex& base_simplex(const SimplexRef& r) const { return base_.skeleton(r.dim)[r.index]; }

 private:
  void collect_full_flags(const Simplex& s, std::vector<Vertex>& chain, std::vector<Simplex>& out) const {
    chain.push_back(barycenter(s));
    if (s.size() == 1) {
      out.push_back(Simplex::from_sorted(chain));
    } else {
      for (std::size_t i = 0; i < s.size(); ++i) collect_full_flags(s.facet_without(i), chain, out);
    }
    chain.pop_back();
  }

  SimplicialComplex base_;
  SimplicialComplex derived_;
  std::vector<Vertex> offset_;
  std::vector<SimplexRef> barycenter_of_;
  std::vector<std::vector<FlagSimplex>> flags_;
};

inline SubdividedComplex barycentric_subdivide(const SimplicialComplex& x) { return SubdividedComplex(x); }

/// Mod-2 subdivision chain map in degree d: rows are derived d-simplices,
/// columns base d-simplices. A base d-simplex maps to the (d+1)! derived
/// d-simplices whose flags are full flags inside it.
inline BitMatrix subdivision_chain_map(const SubdividedComplex& s, int d) {
  const auto& base = s.base();
  const auto& derived = s.derived();
  base.check_dim(d, 0);
  BitMatrix m(derived.count(d), base.count(d));
  const auto& flags_d = derived.skeleton(d);
  for (std::size_t j = 0; j < flags_d.size(); ++j) {
    const FlagSimplex& f = s.flag_of(d, j);
    // A full flag of a d-simplex has dimensions d, d-1, ..., 0.
    if (f.front().dim == d && f.back().dim == 0) m.set(j, f.front().index);
  }
  return m;
}

inline Chain subdivide_chain(const SubdividedComplex& s, const Chain& c) {
  if (!(c.complex() == s.base())) throw Error(ErrorKind::DimensionMismatch, "chain is not on the base complex");
  return Chain(s.derived(), c.dim(), subdivision_chain_map(s, c.dim()) * c.bits());
}

/// Flags σ_n ≻ σ_{n-1} ≻ … ≻ σ_{n-i} of consecutive dimensions: the dual
/// i-cells. Returned as derived i-simplices grouped by the final base
/// simplex σ_{n-i} in its canonical order.
inline std::vector<Simplex> flag_dual_cells(const SubdividedComplex& s, int i) {
  const auto& base = s.base();
  const int n = base.dim();
  if (i < 0 || i > n) throw Error(ErrorKind::DegreeOutOfRange, "dual cell degree " + std::to_string(i));
  if (!is_closed_pseudomanifold(base).ok())
    throw Error(ErrorKind::NotPseudomanifold, "dual cells need a closed pseudomanifold");
  const auto& derived = s.derived();
  std::vector<std::pair<std::size_t, Simplex>> keyed;
  const auto& level = derived.skeleton(i);
  for (std::size_t j = 0; j < level.size(); ++j) {
    const FlagSimplex& f = s.flag_of(i, j);
    if (f.front().dim == n && f.back().dim == n - i) keyed.emplace_back(f.back().index, level[j]);
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Simplex> out;
  out.reserve(keyed.size());
  for (auto& [k, simplex] : keyed) out.push_back(std::move(simplex));
  return out;
}

inline bool is_flag_dual_cell(const SubdividedComplex& s, const FlagSimplex& f) {
  const int n = s.base().dim();
  if (f.empty() || f.front().dim != n) return false;
  for (std::size_t k = 1; k < f.size(); ++k) {
    if (f[k].dim != f[k - 1].dim - 1) return false;
    if (!s.base_simplex(f[k]).is_face_of(s.base_simplex(f[k - 1]))) return false;
  }
  return true;
}

/// The other flag sharing σ_{n-1}, …, σ_{n-i}: the top simplex is swapped for
/// the second n-simplex containing σ_{n-1}.
inline FlagSimplex flag_partner(const SubdividedComplex& s, const FlagSimplex& cell) {
  if (cell.size() < 2 || !is_flag_dual_cell(s, cell))
    throw Error(ErrorKind::NotAFlagCell, "partner needs a flag dual cell of positive degree");
  const auto& base = s.base();
  const int n = base.dim();
  const Simplex& ridge = s.base_simplex(cell[1]);
  std::vector<std::size_t> cofaces;
  const auto& tops = base.skeleton(n);
  for (std::size_t j = 0; j < tops.size(); ++j)
    if (ridge.is_face_of(tops[j])) cofaces.push_back(j);
  if (cofaces.size() != 2)
    throw Error(ErrorKind::NotPseudomanifold,
                ridge.to_string() + " lies in " + std::to_string(cofaces.size()) + " top simplices");
  FlagSimplex partner = cell;
  partner.front().index = cofaces[0] == cell.front().index ? cofaces[1] : cofaces[0];
  return partner;
}

/// Writes the derived facets in the facet-list format and, on `sidecar`, one
/// line per derived vertex: "<derived id> <base vertex ids...>".
inline void write_subdivision(const SubdividedComplex& s, std::ostream& facets, std::ostream& sidecar) {
  for (const auto& f : s.derived().facets()) {
    for (std::size_t k = 0; k < f.size(); ++k) facets << (k ? " " : "") << f[k];
    facets << '\n';
  }
  const auto& vs = s.derived().skeleton(0);
  for (const auto& v : vs) {
    sidecar << v[0];
    for (Vertex b : s.barycenter_of(v[0])) sidecar << ' ' << b;
    sidecar << '\n';
  }
}

}  // namespace swlab
