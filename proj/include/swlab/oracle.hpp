#pragma once

// Independent cohomological ground truth over GF(2): cup, cap and Steenrod
// cup-i products on ordered simplicial cochains, Steenrod squares, the mod-2
// fundamental cycle, and Stiefel-Whitney classes through the Wu formula
//   ⟨v_k ∪ x, γ⟩ = ⟨Sq^k x, γ⟩ for all x ∈ H^{n-k},   w = Sq(v).

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "swlab/bits.hpp"
#include "swlab/complex.hpp"
#include "swlab/homology.hpp"

namespace swlab {

/// Strict total order on the vertices of a complex. Products of cochains
/// read each simplex with its vertices sorted by this order.
class VertexOrder {
 public:
  /// Increasing numeric ids. On a derived complex this is the
  /// decreasing-dimension order of the barycenters.
  static VertexOrder numeric(const SimplicialComplex& x) {
    std::vector<Vertex> seq;
    for (const auto& v : x.skeleton(0)) seq.push_back(v[0]);
    return from_sequence(x, seq);
  }

  /// `sequence` lists every vertex exactly once, smallest first.
  static VertexOrder from_sequence(const SimplicialComplex& x, const std::vector<Vertex>& sequence) {
    VertexOrder o;
    for (const auto& v : x.skeleton(0)) o.ids_.push_back(v[0]);
    if (sequence.size() != o.ids_.size())
      throw Error(ErrorKind::DimensionMismatch, "vertex order must list every vertex once");
    o.rank_.assign(o.ids_.size(), static_cast<std::size_t>(-1));
    for (std::size_t r = 0; r < sequence.size(); ++r) {
      const std::size_t pos = o.position(sequence[r]);
      if (pos == o.ids_.size() || o.rank_[pos] != static_cast<std::size_t>(-1))
        throw Error(ErrorKind::DimensionMismatch, "vertex order is not a permutation of the vertices");
      o.rank_[pos] = r;
    }
    return o;
  }

  static VertexOrder reversed(const SimplicialComplex& x) {
    std::vector<Vertex> seq;
    for (const auto& v : x.skeleton(0)) seq.push_back(v[0]);
    std::reverse(seq.begin(), seq.end());
    return from_sequence(x, seq);
  }

  std::size_t rank(Vertex v) const { return rank_.at(position(v)); }

  /// The vertices of s listed in increasing order.
  std::vector<Vertex> ordered(const Simplex& s) const {
    std::vector<Vertex> vs(s.begin(), s.end());
    std::sort(vs.begin(), vs.end(), [this](Vertex a, Vertex b) { return rank(a) < rank(b); });
    return vs;
  }

 private:
  std::size_t position(Vertex v) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) return ids_.size();
    return static_cast<std::size_t>(it - ids_.begin());
  }

  std::vector<Vertex> ids_;
  std::vector<std::size_t> rank_;
};

namespace detail {

inline bool value_on(const Cochain& c, std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  return c.bits().get(c.complex().index_of(Simplex::from_sorted(std::move(vs))));
}

inline void check_same_complex(const Cochain& a, const Cochain& b) {
  if (!(a.complex() == b.complex())) throw Error(ErrorKind::DimensionMismatch, "cochains on different complexes");
}

}  // namespace detail

/// Steenrod's cup-i product. For an ordered simplex (v_0 … v_m) and positions
/// u_0 < … < u_i, the intervals [0,u_0], [u_0,u_1], …, [u_i,m] alternate
/// between α (even intervals) and β (odd intervals); the value is the sum
/// over all choices with |α-face| = p+1 and |β-face| = q+1.
inline Cochain cup_i(const Cochain& alpha, const Cochain& beta, int i, const VertexOrder& order) {
  detail::check_same_complex(alpha, beta);
  const int p = alpha.dim();
  const int q = beta.dim();
  if (i < 0 || i > std::min(p, q))
    throw Error(ErrorKind::IndexOutOfRange, "cup-" + std::to_string(i) + " of degrees " + std::to_string(p) +
                                                " and " + std::to_string(q));
  const auto& x = alpha.complex();
  const int m = p + q - i;
  if (m > x.dim()) throw Error(ErrorKind::DegreeOverflow, "product degree " + std::to_string(m));
  Cochain out(x, m);
  const auto& level = x.skeleton(m);
  const std::size_t slots = static_cast<std::size_t>(m + 1);
  const std::size_t picks = static_cast<std::size_t>(i + 1);
  std::vector<std::size_t> u(picks);
  std::vector<Vertex> front;
  std::vector<Vertex> back;
  for (std::size_t j = 0; j < level.size(); ++j) {
    const std::vector<Vertex> w = order.ordered(level[j]);
    bool value = false;
    // Enumerate u as increasing tuples from {0..m}.
    for (std::size_t k = 0; k < picks; ++k) u[k] = k;
    while (true) {
      front.clear();
      back.clear();
      std::size_t start = 0;
      for (std::size_t k = 0; k <= picks; ++k) {
        const std::size_t stop = k < picks ? u[k] : slots - 1;
        auto& target = (k % 2 == 0) ? front : back;
        for (std::size_t t = start; t <= stop; ++t) target.push_back(w[t]);
        start = stop;
      }
      if (front.size() == static_cast<std::size_t>(p + 1) && back.size() == static_cast<std::size_t>(q + 1)) {
        if (detail::value_on(alpha, front) && detail::value_on(beta, back)) value = !value;
      }
      // Next combination.
      std::size_t k = picks;
      while (k > 0 && u[k - 1] == slots - picks + (k - 1)) --k;
      if (k == 0) break;
      ++u[k - 1];
      for (std::size_t t = k; t < picks; ++t) u[t] = u[t - 1] + 1;
    }
    if (value) out.bits().set(j);
  }
  return out;
}

/// Front-face/back-face cup product.
inline Cochain cup(const Cochain& alpha, const Cochain& beta, const VertexOrder& order) {
  detail::check_same_complex(alpha, beta);
  const int p = alpha.dim();
  const int q = beta.dim();
  const auto& x = alpha.complex();
  if (p + q > x.dim()) throw Error(ErrorKind::DegreeOverflow, "product degree " + std::to_string(p + q));
  Cochain out(x, p + q);
  const auto& level = x.skeleton(p + q);
  for (std::size_t j = 0; j < level.size(); ++j) {
    const std::vector<Vertex> w = order.ordered(level[j]);
    const std::vector<Vertex> front(w.begin(), w.begin() + p + 1);
    const std::vector<Vertex> back(w.begin() + p, w.end());
    if (detail::value_on(alpha, front) && detail::value_on(beta, back)) out.bits().set(j);
  }
  return out;
}

/// α ⌢ c: evaluate α on front p-faces, keep the back (d-p)-faces.
inline Chain cap(const Cochain& alpha, const Chain& c, const VertexOrder& order) {
  if (!(alpha.complex() == c.complex())) throw Error(ErrorKind::DimensionMismatch, "cap on different complexes");
  const int p = alpha.dim();
  const int d = c.dim();
  if (p > d) throw Error(ErrorKind::DegreeOverflow, "cap of degree " + std::to_string(p) + " with a " +
                                                        std::to_string(d) + "-chain");
  const auto& x = c.complex();
  Chain out(x, d - p);
  const auto& level = x.skeleton(d);
  for (std::size_t j : c.bits().ones()) {
    const std::vector<Vertex> w = order.ordered(level[j]);
    if (!detail::value_on(alpha, std::vector<Vertex>(w.begin(), w.begin() + p + 1))) continue;
    std::vector<Vertex> back(w.begin() + p, w.end());
    std::sort(back.begin(), back.end());
    out.bits().flip(x.index_of(Simplex::from_sorted(std::move(back))));
  }
  return out;
}

/// Sq^k on cochains: α ∪_{p-k} α for k ≤ p, zero for k > p. Throws
/// DegreeOverflow when p + k exceeds the dimension and NotACocycle when α
/// is not a cocycle.
inline Cochain steenrod_sq(const Cochain& alpha, int k, const VertexOrder& order) {
  const int p = alpha.dim();
  const auto& x = alpha.complex();
  if (k < 0) throw Error(ErrorKind::IndexOutOfRange, "negative Steenrod square index");
  if (p + k > x.dim()) throw Error(ErrorKind::DegreeOverflow, "Sq^" + std::to_string(k) + " of degree " + std::to_string(p));
  if (!is_cocycle(alpha)) throw Error(ErrorKind::NotACocycle, "Sq^" + std::to_string(k) + " of a non-cocycle");
  if (k > p) return Cochain(x, p + k);
  return cup_i(alpha, alpha, p - k, order);
}

/// Sum of all n-simplices of a closed pseudomanifold.
inline Chain fundamental_cycle(const SimplicialComplex& x) {
  const auto diag = is_closed_pseudomanifold(x);
  if (!diag.ok()) throw Error(ErrorKind::NotPseudomanifold, "fundamental cycle needs a closed pseudomanifold");
  Chain gamma = Chain::all_ones(x, x.dim());
  if (!is_cycle(gamma)) throw Error(ErrorKind::NotACycle, "sum of top simplices has nonzero boundary");
  return gamma;
}

/// Mod-2 cohomology with a fixed basis of representative cocycles per degree.
class CohomologySummary {
 public:
  explicit CohomologySummary(SimplicialComplex x) : complex_(std::move(x)) {
    const int n = complex_.dim();
    for (int k = 0; k <= n; ++k) {
      const std::size_t len = complex_.count(k);
      std::vector<BitVector> cocycles;
      if (k < n) {
        cocycles = kernel(boundary_rows(complex_, k + 1));
      } else {
        for (std::size_t j = 0; j < len; ++j) {
          BitVector e(len);
          e.set(j);
          cocycles.push_back(std::move(e));
        }
      }
      EchelonBasis ech(len, cocycles.size());
      if (k > 0) {
        const BitMatrix cob = boundary_matrix(complex_, k);  // row r = δ of (k-1)-simplex r
        for (std::size_t r = 0; r < cob.rows(); ++r) ech.insert(cob.row(r));
      }
      std::vector<Cochain> basis;
      for (const auto& z : cocycles) {
        BitVector tag(cocycles.size());
        tag.set(basis.size());
        if (ech.insert(z, tag)) basis.emplace_back(complex_, k, z);
      }
      reductions_.push_back(std::move(ech));
      basis_.push_back(std::move(basis));
    }
  }

  const SimplicialComplex& complex() const noexcept { return complex_; }
  std::size_t betti(int k) const { return basis(k).size(); }

  /// Representative cocycles of a basis of H^k.
  const std::vector<Cochain>& basis(int k) const {
    complex_.check_dim(k, 0);
    return basis_[static_cast<std::size_t>(k)];
  }

  /// Coordinates of the class of a cocycle in basis(k).
  BitVector coordinates(const Cochain& c) const {
    if (!(c.complex() == complex_)) throw Error(ErrorKind::DimensionMismatch, "cochain belongs to another complex");
    if (!is_cocycle(c)) throw Error(ErrorKind::NotACocycle, "degree " + std::to_string(c.dim()) + " cochain");
    const std::size_t k = static_cast<std::size_t>(c.dim());
    auto red = reductions_[k].reduce(c.bits());
    BitVector out(basis_[k].size());
    for (std::size_t j = 0; j < out.size(); ++j)
      if (red.tag.get(j)) out.set(j);
    return out;
  }

  bool is_zero_class(const Cochain& c) const { return coordinates(c).none(); }
  bool same_class(const Cochain& a, const Cochain& b) const { return coordinates(a) == coordinates(b); }

  Cochain from_coordinates(int k, const BitVector& coords) const {
    Cochain out(complex_, k);
    for (std::size_t j : coords.ones()) out += basis(k).at(j);
    return out;
  }

 private:
  SimplicialComplex complex_;
  std::vector<EchelonBasis> reductions_;
  std::vector<std::vector<Cochain>> basis_;
};

struct CohomologyClass {
  Cochain representative;
  BitVector coordinates;  // in the summary's basis of H^degree

  int degree() const noexcept { return representative.dim(); }
  bool is_zero() const noexcept { return coordinates.none(); }
};

struct WuData {
  std::vector<CohomologyClass> v;  // Wu classes v_0 … v_n
  std::vector<CohomologyClass> w;  // Stiefel-Whitney classes w_0 … w_n
};

/// Solves for the Wu classes degreewise against the Poincaré-duality pairing
/// and assembles w_i = Σ_j Sq^{i-j} v_j. Throws PairingDegenerate when the
/// pairing H^k × H^{n-k} → Z/2 is singular (the input is not a mod-2
/// Poincaré duality space).
inline WuData wu_classes(const SimplicialComplex& x, const VertexOrder& order, const CohomologySummary& h) {
  const Chain gamma = fundamental_cycle(x);
  const int n = x.dim();
  WuData out;
  for (int k = 0; k <= n; ++k) {
    const auto& ek = h.basis(k);
    const auto& xs = h.basis(n - k);
    if (ek.size() != xs.size())
      throw Error(ErrorKind::PairingDegenerate, "b_" + std::to_string(k) + " != b_" + std::to_string(n - k));
    BitMatrix pairing(xs.size(), ek.size());
    BitVector rhs(xs.size());
    for (std::size_t r = 0; r < xs.size(); ++r) {
      for (std::size_t c = 0; c < ek.size(); ++c)
        if (evaluate(cup(ek[c], xs[r], order), gamma)) pairing.set(r, c);
      if (k <= n - k && evaluate(steenrod_sq(xs[r], k, order), gamma)) rhs.set(r);
    }
    if (rank(pairing) != ek.size())
      throw Error(ErrorKind::PairingDegenerate, "cup pairing in degree " + std::to_string(k) + " is singular");
    const auto a = solve(pairing, rhs);
    if (!a) throw Error(ErrorKind::PairingDegenerate, "no Wu class in degree " + std::to_string(k));
    Cochain rep = h.from_coordinates(k, *a);
    out.v.push_back({rep, h.coordinates(rep)});
  }
  for (int i = 0; i <= n; ++i) {
    Cochain w(x, i);
    for (int j = 0; j <= i; ++j) {
      if (i - j > j) continue;  // Sq^k vanishes above the degree
      w += steenrod_sq(out.v[static_cast<std::size_t>(j)].representative, i - j, order);
    }
    out.w.push_back({w, h.coordinates(w)});
  }
  return out;
}

inline WuData wu_classes(const SimplicialComplex& x, const VertexOrder& order) {
  return wu_classes(x, order, CohomologySummary(x));
}

/// α ⌢ γ for a cocycle α.
inline Chain poincare_dual_of_cocycle(const Cochain& alpha, const VertexOrder& order) {
  if (!is_cocycle(alpha)) throw Error(ErrorKind::NotACocycle, "Poincaré dual of a non-cocycle");
  return cap(alpha, fundamental_cycle(alpha.complex()), order);
}

}  // namespace swlab
