#pragma once

// Mod-2 homology of simplicial complexes: Betti numbers, cycle bases and
// boundary-membership queries backed by stored reduction transcripts.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "swlab/bits.hpp"
#include "swlab/complex.hpp"

namespace swlab {

class HomologySummary {
 public:
  explicit HomologySummary(SimplicialComplex x) : complex_(std::move(x)) {
    const int n = complex_.dim();
    for (int d = 0; d <= n; ++d) {
      // im ∂_{d+1}, tagged by the (d+1)-simplices that produced each row.
      const std::size_t len = complex_.count(d);
      const std::size_t up = complex_.count(d + 1);
      EchelonBasis basis(len, up);
      if (d < n) {
        const BitMatrix rows = boundary_rows(complex_, d + 1);
        for (std::size_t j = 0; j < rows.rows(); ++j) {
          BitVector tag(up);
          tag.set(j);
          basis.insert(rows.row(j), tag);
        }
      }
      boundaries_.push_back(std::move(basis));
      cycles_.push_back(d == 0 ? identity_basis(len) : kernel(boundary_matrix(complex_, d)));
    }
    for (int d = 0; d <= n; ++d) {
      const std::size_t z = cycles_[static_cast<std::size_t>(d)].size();
      betti_.push_back(z - boundaries_[static_cast<std::size_t>(d)].rank());
    }
  }

  const SimplicialComplex& complex() const noexcept { return complex_; }
  const std::vector<std::size_t>& betti() const noexcept { return betti_; }
  std::size_t betti(int d) const { return betti_.at(static_cast<std::size_t>(d)); }

  /// Basis of the cycle space Z_d (as raw bit vectors over skeleton(d)).
  const std::vector<BitVector>& cycle_basis(int d) const { return cycles_.at(static_cast<std::size_t>(d)); }

  std::size_t boundary_rank(int d) const { return boundaries_.at(static_cast<std::size_t>(d)).rank(); }

  bool is_boundary(const Chain& z) const {
    check(z);
    return boundaries_[static_cast<std::size_t>(z.dim())].contains(z.bits());
  }

  /// A (d+1)-chain whose boundary is z, when z bounds. There are no chains
  /// above the top dimension, so top-dimensional input always yields nullopt.
  std::optional<Chain> bounding_chain(const Chain& z) const {
    check(z);
    const int d = z.dim();
    if (d == complex_.dim()) return std::nullopt;
    const auto red = boundaries_[static_cast<std::size_t>(d)].reduce(z.bits());
    if (red.residual.any()) return std::nullopt;
    return Chain(complex_, d + 1, red.tag);
  }

  /// True iff z1 + z2 bounds. Throws NotACycle naming the offending input.
  bool same_class(const Chain& z1, const Chain& z2) const {
    require_cycle(z1, "first");
    require_cycle(z2, "second");
    return is_boundary(z1 + z2);
  }

  void require_cycle(const Chain& z, const char* which) const {
    check(z);
    if (z.dim() == 0) return;
    const Chain b = boundary(z);
    if (b.is_zero()) return;
    throw Error(ErrorKind::NotACycle, std::string(which) + " chain of dimension " + std::to_string(z.dim()) +
                                          " has boundary on " + b.support().front().to_string());
  }

 private:
  static std::vector<BitVector> identity_basis(std::size_t n) {
    std::vector<BitVector> out;
    for (std::size_t i = 0; i < n; ++i) {
      BitVector v(n);
      v.set(i);
      out.push_back(std::move(v));
    }
    return out;
  }

  void check(const Chain& z) const {
    if (!(z.complex() == complex_)) throw Error(ErrorKind::DimensionMismatch, "chain belongs to another complex");
  }

  SimplicialComplex complex_;
  std::vector<EchelonBasis> boundaries_;
  std::vector<std::vector<BitVector>> cycles_;
  std::vector<std::size_t> betti_;
};

inline HomologySummary homology(const SimplicialComplex& x) { return HomologySummary(x); }

inline bool same_class(const SimplicialComplex& x, int d, const Chain& z1, const Chain& z2) {
  if (z1.dim() != d || z2.dim() != d) throw Error(ErrorKind::DimensionMismatch, "chains not of dimension " + std::to_string(d));
  return HomologySummary(x).same_class(z1, z2);
}

}  // namespace swlab
