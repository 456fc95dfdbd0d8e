#pragma once

// Dual block complex of a closed pseudomanifold L, realized by incidence.
// The block D(σ) dual to an (n-k)-simplex σ has dimension k; D(σ) lies in
// the boundary of D(ρ) exactly when ρ is a codimension-1 face of σ. Mod 2
// the block incidences coincide with simplicial incidences, so no second
// subdivision is built.

#include <cstddef>
#include <string>
#include <vector>

#include "swlab/bits.hpp"
#include "swlab/complex.hpp"

namespace swlab {

struct DualBlock {
  Simplex base;
  int block_dim = 0;
};

class BlockComplex {
 public:
  explicit BlockComplex(SimplicialComplex ambient) : ambient_(std::move(ambient)) {
    if (!is_closed_pseudomanifold(ambient_).ok())
      throw Error(ErrorKind::NotPseudomanifold, "dual blocks need a closed pseudomanifold");
    const int n = ambient_.dim();
    boundaries_.resize(static_cast<std::size_t>(n + 1));
    for (int i = 1; i <= n; ++i) boundaries_[static_cast<std::size_t>(i)] = boundary_rows(ambient_, n - i + 1);
  }

  const SimplicialComplex& ambient() const noexcept { return ambient_; }
  int dim() const noexcept { return ambient_.dim(); }

  /// Number of blocks of dimension i (= number of (n-i)-simplices).
  std::size_t generator_count(int i) const {
    check_degree(i);
    return ambient_.count(dim() - i);
  }

  std::vector<DualBlock> generators(int i) const {
    check_degree(i);
    std::vector<DualBlock> out;
    for (const auto& s : ambient_.skeleton(dim() - i)) out.push_back({s, i});
    return out;
  }

  /// Rows: blocks of dimension i-1; columns: blocks of dimension i.
  const BitMatrix& block_boundary(int i) const {
    if (i < 1 || i > dim()) throw Error(ErrorKind::DegreeOutOfRange, "block boundary degree " + std::to_string(i));
    return boundaries_[static_cast<std::size_t>(i)];
  }

  void check_degree(int i) const {
    if (i < 0 || i > dim())
      throw Error(ErrorKind::DegreeOutOfRange,
                  "block degree " + std::to_string(i) + " outside [0, " + std::to_string(dim()) + "]");
  }

 private:
  SimplicialComplex ambient_;
  std::vector<BitMatrix> boundaries_;
};

/// Mod-2 cochain on the blocks of one dimension.
class BlockCochain {
 public:
  BlockCochain(const BlockComplex& b, int degree, BitVector bits) : degree_(degree), bits_(std::move(bits)) {
    b.check_degree(degree);
    if (bits_.size() != b.generator_count(degree))
      throw Error(ErrorKind::DimensionMismatch, "block cochain length differs from generator count");
  }

  int degree() const noexcept { return degree_; }
  const BitVector& bits() const noexcept { return bits_; }
  bool is_zero() const noexcept { return bits_.none(); }
  friend bool operator==(const BlockCochain&, const BlockCochain&) = default;

 private:
  int degree_;
  BitVector bits_;
};

inline BlockComplex build_block_complex(const SimplicialComplex& l) { return BlockComplex(l); }

/// The cochain assigning 1 to every dual i-block.
inline BlockCochain all_ones_block_cochain(const BlockComplex& b, int i) {
  b.check_degree(i);
  return BlockCochain(b, i, BitVector(b.generator_count(i), true));
}

inline BlockCochain zero_block_cochain(const BlockComplex& b, int i) {
  b.check_degree(i);
  return BlockCochain(b, i, BitVector(b.generator_count(i)));
}

inline BlockCochain block_coboundary(const BlockComplex& b, const BlockCochain& c) {
  if (c.degree() >= b.dim())
    throw Error(ErrorKind::DegreeOutOfRange, "coboundary of a block cochain of top degree");
  const BitMatrix& up = b.block_boundary(c.degree() + 1);
  // (δc)(D) sums c over the blocks in ∂D: the transpose of the boundary.
  BitVector out(up.cols());
  for (std::size_t r = 0; r < up.rows(); ++r)
    if (c.bits().get(r)) out ^= up.row(r);
  return BlockCochain(b, c.degree() + 1, std::move(out));
}

inline bool is_block_cocycle(const BlockComplex& b, const BlockCochain& c) {
  return c.degree() == b.dim() || block_coboundary(b, c).is_zero();
}

/// Bit on σ^{n-i} iff c(D(σ)) = 1.
inline Chain poincare_dual_chain(const BlockComplex& b, const BlockCochain& c) {
  return Chain(b.ambient(), b.dim() - c.degree(), c.bits());
}

}  // namespace swlab
