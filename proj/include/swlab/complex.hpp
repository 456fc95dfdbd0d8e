#pragma once

// Finite abstract simplicial complexes with a canonical per-dimension
// enumeration, mod-2 chains over that enumeration, links, boundary matrices
// and closed-pseudomanifold diagnostics.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "swlab/bits.hpp"
#include "swlab/error.hpp"

namespace swlab {

using Vertex = std::uint32_t;

/// A simplex in canonical form: strictly increasing vertex ids.
class Simplex {
 public:
  Simplex() = default;
  Simplex(std::initializer_list<Vertex> vs) : Simplex(std::vector<Vertex>(vs)) {}

  /// Sorts the input; throws MalformedFacet on repeated ids.
  explicit Simplex(std::vector<Vertex> vs) : vertices_(std::move(vs)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
      throw Error(ErrorKind::MalformedFacet, "repeated vertex id in " + to_string());
  }

  /// The caller guarantees `vs` is strictly increasing.
  static Simplex from_sorted(std::vector<Vertex> vs) {
    Simplex s;
    s.vertices_ = std::move(vs);
    return s;
  }

  int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  Vertex operator[](std::size_t i) const noexcept { return vertices_[i]; }
  auto begin() const noexcept { return vertices_.begin(); }
  auto end() const noexcept { return vertices_.end(); }

  /// The codimension-1 face omitting the vertex at position `i`.
  Simplex facet_without(std::size_t i) const {
    std::vector<Vertex> vs;
    vs.reserve(vertices_.size() - 1);
    for (std::size_t k = 0; k < vertices_.size(); ++k)
      if (k != i) vs.push_back(vertices_[k]);
    return from_sorted(std::move(vs));
  }

  bool contains(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

  bool is_face_of(const Simplex& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(vertices_[i]);
    }
    return s + ")";
  }

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Immutable simplicial complex. Copies share the underlying data.
class SimplicialComplex {
 public:
  /// The empty complex (dimension -1); only produced internally, e.g. by link().
  SimplicialComplex() : data_(std::make_shared<const Data>()) {}

  /// Downward closure of the given facets. Throws EmptyInput when there are
  /// none and MalformedFacet on an empty tuple or a repeated vertex.
  static SimplicialComplex from_facets(const std::vector<std::vector<Vertex>>& facets) {
    if (facets.empty()) throw Error(ErrorKind::EmptyInput, "no facets given");
    std::vector<Simplex> simplices;
    simplices.reserve(facets.size());
    for (const auto& f : facets) {
      if (f.empty()) throw Error(ErrorKind::MalformedFacet, "empty facet");
      simplices.emplace_back(f);
    }
    return from_simplices(std::move(simplices));
  }

  static SimplicialComplex from_simplices(std::vector<Simplex> generators) {
    Data d;
    std::vector<std::set<Simplex>> faces;
    for (const auto& g : generators) {
      if (g.empty()) continue;
      const std::size_t n = g.size();
      if (faces.size() < n) faces.resize(n);
      if (faces[n - 1].count(g)) continue;
      // Enumerate all nonempty subsets by bitmask.
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Vertex> vs;
        for (std::size_t k = 0; k < n; ++k)
          if (mask >> k & 1u) vs.push_back(g[k]);
        faces[vs.size() - 1].insert(Simplex::from_sorted(std::move(vs)));
      }
    }
    d.skeleton.reserve(faces.size());
    for (auto& level : faces) d.skeleton.emplace_back(level.begin(), level.end());
    // Maximal simplices: those that are not a codimension-1 face of anything.
    for (std::size_t k = 0; k < d.skeleton.size(); ++k) {
      std::vector<bool> covered(d.skeleton[k].size(), false);
      if (k + 1 < d.skeleton.size()) {
        for (const auto& s : d.skeleton[k + 1])
          for (std::size_t i = 0; i < s.size(); ++i) covered[index_in(d.skeleton[k], s.facet_without(i))] = true;
      }
      for (std::size_t j = 0; j < covered.size(); ++j)
        if (!covered[j]) d.facets.push_back(d.skeleton[k][j]);
    }
    std::sort(d.facets.begin(), d.facets.end());
    SimplicialComplex x;
    x.data_ = std::make_shared<const Data>(std::move(d));
    return x;
  }

  int dim() const noexcept { return static_cast<int>(data_->skeleton.size()) - 1; }
  bool empty() const noexcept { return data_->skeleton.empty(); }

  /// Maximal simplices, sorted.
  const std::vector<Simplex>& facets() const noexcept { return data_->facets; }

  /// All d-simplices in lexicographic order; positions define chain layouts.
  const std::vector<Simplex>& skeleton(int d) const {
    check_dim(d, 0);
    return data_->skeleton[static_cast<std::size_t>(d)];
  }

  std::size_t count(int d) const {
    if (d < 0 || d > dim()) return 0;
    return data_->skeleton[static_cast<std::size_t>(d)].size();
  }

  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& level : data_->skeleton) f.push_back(level.size());
    return f;
  }

  std::size_t total_simplices() const {
    std::size_t t = 0;
    for (const auto& level : data_->skeleton) t += level.size();
    return t;
  }

  long long euler_characteristic() const {
    long long chi = 0;
    for (int d = 0; d <= dim(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(count(d));
    return chi;
  }

  std::optional<std::size_t> find(const Simplex& s) const {
    if (s.empty() || s.dim() > dim()) return std::nullopt;
    const auto& level = data_->skeleton[static_cast<std::size_t>(s.dim())];
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - level.begin());
  }

  bool contains(const Simplex& s) const { return find(s).has_value(); }

  std::size_t index_of(const Simplex& s) const {
    auto i = find(s);
    if (!i) throw Error(ErrorKind::SimplexNotInComplex, s.to_string());
    return *i;
  }

  /// Identity of the shared data; copies of one complex compare equal.
  bool same_as(const SimplicialComplex& other) const noexcept { return data_ == other.data_; }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.data_ == b.data_ || a.data_->skeleton == b.data_->skeleton;
  }

  void check_dim(int d, int lowest) const {
    if (d < lowest || d > dim())
      throw Error(ErrorKind::DimensionOutOfRange,
                  "dimension " + std::to_string(d) + " outside [" + std::to_string(lowest) + ", " +
                      std::to_string(dim()) + "]");
  }

 private:
  struct Data {
    std::vector<std::vector<Simplex>> skeleton;
    std::vector<Simplex> facets;
  };

  static std::size_t index_in(const std::vector<Simplex>& level, const Simplex& s) {
    return static_cast<std::size_t>(std::lower_bound(level.begin(), level.end(), s) - level.begin());
  }

  std::shared_ptr<const Data> data_;
};

inline SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& facets) {
  return SimplicialComplex::from_facets(facets);
}

inline const std::vector<Simplex>& skeleton_enumerate(const SimplicialComplex& x, int d) {
  return x.skeleton(d);
}

/// Mod-2 chain or cochain of one dimension, laid out over the canonical
/// enumeration of skeleton(dim). The tag keeps chains and cochains apart.
template <class Tag>
class Graded {
 public:
  Graded(SimplicialComplex complex, int dim)
      : complex_(std::move(complex)), dim_(dim), bits_(complex_.count(dim)) {
    complex_.check_dim(dim, 0);
  }
  Graded(SimplicialComplex complex, int dim, BitVector bits)
      : complex_(std::move(complex)), dim_(dim), bits_(std::move(bits)) {
    complex_.check_dim(dim, 0);
    if (bits_.size() != complex_.count(dim))
      throw Error(ErrorKind::DimensionMismatch, "bit length " + std::to_string(bits_.size()) + " for " +
                                                    std::to_string(complex_.count(dim)) + " simplices");
  }

  static Graded all_ones(SimplicialComplex complex, int dim) {
    Graded g(std::move(complex), dim);
    g.bits_ = BitVector(g.bits_.size(), true);
    return g;
  }

  const SimplicialComplex& complex() const noexcept { return complex_; }
  int dim() const noexcept { return dim_; }
  const BitVector& bits() const noexcept { return bits_; }
  BitVector& bits() noexcept { return bits_; }

  bool get(const Simplex& s) const { return bits_.get(complex_.index_of(s)); }
  void set(const Simplex& s, bool v = true) { bits_.set(complex_.index_of(s), v); }
  bool is_zero() const noexcept { return bits_.none(); }
  std::size_t weight() const noexcept { return bits_.count(); }

  std::vector<Simplex> support() const {
    std::vector<Simplex> out;
    const auto& level = complex_.skeleton(dim_);
    for (std::size_t i : bits_.ones()) out.push_back(level[i]);
    return out;
  }

  Graded& operator+=(const Graded& other) {
    check_compatible(other);
    bits_ ^= other.bits_;
    return *this;
  }
  friend Graded operator+(Graded a, const Graded& b) { return a += b; }

  friend bool operator==(const Graded& a, const Graded& b) {
    return a.dim_ == b.dim_ && a.complex_ == b.complex_ && a.bits_ == b.bits_;
  }

  void check_compatible(const Graded& other) const {
    if (other.dim_ != dim_ || !(other.complex_ == complex_))
      throw Error(ErrorKind::DimensionMismatch, "chains live on different complexes or dimensions");
  }

 private:
  SimplicialComplex complex_;
  int dim_;
  BitVector bits_;
};

struct ChainTag {};
struct CochainTag {};
using Chain = Graded<ChainTag>;
using Cochain = Graded<CochainTag>;

/// {τ : τ ∩ σ = ∅, τ ∪ σ ∈ X}; empty when σ is maximal.
inline SimplicialComplex link(const SimplicialComplex& x, const Simplex& sigma) {
  if (!x.contains(sigma)) throw Error(ErrorKind::SimplexNotInComplex, sigma.to_string());
  std::vector<Simplex> gens;
  for (const auto& f : x.facets()) {
    if (!sigma.is_face_of(f) || f.size() == sigma.size()) continue;
    std::vector<Vertex> rest;
    std::set_difference(f.begin(), f.end(), sigma.begin(), sigma.end(), std::back_inserter(rest));
    gens.push_back(Simplex::from_sorted(std::move(rest)));
  }
  if (gens.empty()) return SimplicialComplex();
  return SimplicialComplex::from_simplices(std::move(gens));
}

/// Rows: skeleton(d-1); columns: skeleton(d); entry 1 iff face.
inline BitMatrix boundary_matrix(const SimplicialComplex& x, int d) {
  x.check_dim(d, 1);
  const auto& cols = x.skeleton(d);
  BitMatrix m(x.count(d - 1), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) m.set(x.index_of(cols[j].facet_without(i)), j);
  return m;
}

/// Transpose of boundary_matrix(d): row j is the boundary of the j-th d-simplex.
inline BitMatrix boundary_rows(const SimplicialComplex& x, int d) {
  x.check_dim(d, 1);
  const auto& simplices = x.skeleton(d);
  BitMatrix m(simplices.size(), x.count(d - 1));
  for (std::size_t j = 0; j < simplices.size(); ++j)
    for (std::size_t i = 0; i < simplices[j].size(); ++i) m.set(j, x.index_of(simplices[j].facet_without(i)));
  return m;
}

/// Mod-2 boundary of a chain; the boundary of a 0-chain is zero and is
/// reported as a 0-chain of the empty sum (use is_cycle instead).
inline Chain boundary(const Chain& c) {
  if (c.dim() == 0) throw Error(ErrorKind::DimensionOutOfRange, "boundary of a 0-chain");
  return Chain(c.complex(), c.dim() - 1, boundary_matrix(c.complex(), c.dim()) * c.bits());
}

inline bool is_cycle(const Chain& c) { return c.dim() == 0 || boundary(c).is_zero(); }

/// Mod-2 coboundary; throws DimensionOutOfRange at the top dimension.
inline Cochain coboundary(const Cochain& c) {
  const auto& x = c.complex();
  if (c.dim() >= x.dim()) throw Error(ErrorKind::DimensionOutOfRange, "coboundary of a top-degree cochain");
  return Cochain(x, c.dim() + 1, boundary_rows(x, c.dim() + 1) * c.bits());
}

inline bool is_cocycle(const Cochain& c) { return c.dim() == c.complex().dim() || coboundary(c).is_zero(); }

/// Kronecker pairing ⟨α, c⟩ mod 2.
inline bool evaluate(const Cochain& alpha, const Chain& c) {
  if (alpha.dim() != c.dim() || !(alpha.complex() == c.complex()))
    throw Error(ErrorKind::DimensionMismatch, "pairing cochain and chain of different shape");
  return alpha.bits().dot(c.bits());
}

struct PseudomanifoldReport {
  int dim = -1;
  bool pure = false;
  bool ridges_thin = false;  // every (n-1)-simplex in exactly two n-simplices
  bool connected = false;    // facet adjacency through ridges
  std::vector<Simplex> impure_facets;
  std::vector<Simplex> bad_ridges;

  bool ok() const noexcept { return pure && ridges_thin && connected; }
};

inline PseudomanifoldReport is_closed_pseudomanifold(const SimplicialComplex& x) {
  PseudomanifoldReport r;
  r.dim = x.dim();
  if (x.empty()) return r;
  const int n = x.dim();
  for (const auto& f : x.facets())
    if (f.dim() != n) r.impure_facets.push_back(f);
  r.pure = r.impure_facets.empty();

  const auto& tops = x.skeleton(n);
  if (n == 0) {
    r.ridges_thin = true;
    r.connected = tops.size() == 1;
    return r;
  }
  // Cofaces of each ridge, and union-find over top simplices.
  std::vector<std::vector<std::size_t>> cofaces(x.count(n - 1));
  for (std::size_t j = 0; j < tops.size(); ++j)
    for (std::size_t i = 0; i < tops[j].size(); ++i) cofaces[x.index_of(tops[j].facet_without(i))].push_back(j);
  std::vector<std::size_t> parent(tops.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  const auto& ridges = x.skeleton(n - 1);
  for (std::size_t k = 0; k < cofaces.size(); ++k) {
    if (cofaces[k].size() != 2) r.bad_ridges.push_back(ridges[k]);
    for (std::size_t t = 1; t < cofaces[k].size(); ++t) parent[root(cofaces[k][t])] = root(cofaces[k][0]);
  }
  r.ridges_thin = r.bad_ridges.empty();
  std::size_t components = 0;
  for (std::size_t j = 0; j < tops.size(); ++j)
    if (root(j) == j) ++components;
  r.connected = components == 1;
  return r;
}

}  // namespace swlab
