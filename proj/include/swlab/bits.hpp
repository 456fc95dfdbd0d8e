#pragma once

// Dense bit-packed GF(2) vectors and matrices.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swlab/error.hpp"

namespace swlab {

class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size, bool value = false)
      : size_(size), words_((size + kWordBits - 1) / kWordBits, value ? ~Word{0} : 0) {
    trim();
  }

  static BitVector from_string(const std::string& bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, bits[i] == '1');
    return v;
  }

  template <class Rng>
  static BitVector random(std::size_t size, Rng& rng) {
    BitVector v(size);
    for (auto& w : v.words_) w = static_cast<Word>(rng());
    v.trim();
    return v;
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  const Word* data() const noexcept { return words_.data(); }

  bool get(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  bool operator[](std::size_t i) const noexcept { return get(i); }

  void set(std::size_t i, bool value = true) noexcept {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  BitVector& operator^=(const BitVector& other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  BitVector& operator&=(const BitVector& other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator+(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

  bool any() const noexcept {
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
  }
  bool none() const noexcept { return !any(); }
  bool all() const noexcept { return count() == size_; }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Index of the lowest set bit, or size() when the vector is zero.
  std::size_t lowest() const noexcept { return next_set(0); }

  std::size_t next_set(std::size_t from) const noexcept {
    if (from >= size_) return size_;
    std::size_t w = from / kWordBits;
    Word cur = words_[w] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (cur != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur));
      if (++w == words_.size()) return size_;
      cur = words_[w];
    }
  }

  std::vector<std::size_t> ones() const {
    std::vector<std::size_t> out;
    for (std::size_t i = next_set(0); i < size_; i = next_set(i + 1)) out.push_back(i);
    return out;
  }

  /// Parity of the bitwise AND: the GF(2) inner product.
  bool dot(const BitVector& other) const {
    check_same_size(other);
    Word acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
  }

  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  void trim() noexcept {
    if (size_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
  }
  void check_same_size(const BitVector& other) const {
    if (other.size_ != size_)
      throw Error(ErrorKind::DimensionMismatch,
                  "bit vectors of length " + std::to_string(size_) + " and " +
                      std::to_string(other.size_));
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Row-major dense GF(2) matrix; each row is a BitVector of length cols().
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols) {
    for (const auto& r : rows)
      if (r.size() != cols) throw Error(ErrorKind::DimensionMismatch, "row length differs from column count");
    BitMatrix m;
    m.cols_ = cols;
    m.rows_ = std::move(rows);
    return m;
  }

  template <class Rng>
  static BitMatrix random(std::size_t rows, std::size_t cols, Rng& rng) {
    BitMatrix m(rows, cols);
    for (auto& r : m.rows_) r = BitVector::random(cols, rng);
    return m;
  }

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const noexcept { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) noexcept { rows_[r].set(c, value); }
  void flip(std::size_t r, std::size_t c) noexcept { rows_[r].flip(c); }

  const BitVector& row(std::size_t r) const noexcept { return rows_[r]; }
  BitVector& row(std::size_t r) noexcept { return rows_[r]; }
  const std::vector<BitVector>& row_vectors() const noexcept { return rows_; }

  BitVector column(std::size_t c) const {
    BitVector v(rows());
    for (std::size_t r = 0; r < rows(); ++r)
      if (rows_[r].get(c)) v.set(r);
    return v;
  }

  bool is_zero() const noexcept {
    return std::none_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.any(); });
  }

  BitMatrix transpose() const {
    BitMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t c : rows_[r].ones()) t.set(c, r);
    return t;
  }

  /// Matrix-vector product over GF(2).
  BitVector operator*(const BitVector& x) const {
    if (x.size() != cols_)
      throw Error(ErrorKind::DimensionMismatch, "vector length " + std::to_string(x.size()) +
                                                    " against " + std::to_string(cols_) + " columns");
    BitVector y(rows());
    for (std::size_t r = 0; r < rows(); ++r)
      if (rows_[r].dot(x)) y.set(r);
    return y;
  }

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.rows())
      throw Error(ErrorKind::DimensionMismatch, "inner dimensions differ in matrix product");
    BitMatrix p(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t k : a.rows_[r].ones()) p.rows_[r] ^= b.rows_[k];
    return p;
  }

  /// [A | b] with b appended as the last column.
  BitMatrix augmented(const BitVector& b) const {
    if (b.size() != rows()) throw Error(ErrorKind::DimensionMismatch, "augmenting column has wrong length");
    BitMatrix m(rows(), cols_ + 1);
    for (std::size_t r = 0; r < rows(); ++r) {
      for (std::size_t c : rows_[r].ones()) m.set(r, c);
      if (b.get(r)) m.set(r, cols_);
    }
    return m;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

/// Reduced row echelon form of a GF(2) matrix, with the lowest-index pivot
/// policy. Every pivot column holds a single one (in its pivot row).
struct RowEchelon {
  BitMatrix reduced;                    // only the nonzero rows, in pivot order
  std::vector<std::size_t> pivot_cols;  // pivot column of each reduced row

  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

inline RowEchelon row_echelon(const BitMatrix& m) {
  std::vector<BitVector> rows = m.row_vectors();
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols() && next < rows.size(); ++c) {
    std::size_t p = next;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[next], rows[p]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != next && rows[r].get(c)) rows[r] ^= rows[next];
    pivots.push_back(c);
    ++next;
  }
  rows.resize(next);
  return {BitMatrix::from_rows(std::move(rows), m.cols()), std::move(pivots)};
}

inline std::size_t rank(const BitMatrix& m) {
  // Row-space insertion keyed by lowest set bit; cheaper than full RREF.
  std::vector<BitVector> basis;
  std::vector<std::size_t> pivot_of(m.cols(), static_cast<std::size_t>(-1));
  for (const auto& r : m.row_vectors()) {
    BitVector v = r;
    for (std::size_t p = v.lowest(); p < v.size(); p = v.lowest()) {
      if (pivot_of[p] == static_cast<std::size_t>(-1)) {
        pivot_of[p] = basis.size();
        basis.push_back(std::move(v));
        break;
      }
      v ^= basis[pivot_of[p]];
    }
  }
  return basis.size();
}

/// Some x with M x = b over GF(2), or nullopt when the system is
/// inconsistent. Free variables are set to zero, so the answer is the unique
/// solution supported on the lowest-index pivot columns.
inline std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
  if (b.size() != m.rows())
    throw Error(ErrorKind::DimensionMismatch, "right-hand side has length " + std::to_string(b.size()) +
                                                  ", matrix has " + std::to_string(m.rows()) + " rows");
  const RowEchelon e = row_echelon(m.augmented(b));
  BitVector x(m.cols());
  for (std::size_t r = 0; r < e.rank(); ++r) {
    if (e.pivot_cols[r] == m.cols()) return std::nullopt;
    if (e.reduced.get(r, m.cols())) x.set(e.pivot_cols[r]);
  }
  return x;
}

/// Basis of {x : M x = 0}, one vector per free column in increasing order.
inline std::vector<BitVector> kernel(const BitMatrix& m) {
  const RowEchelon e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector x(m.cols());
    x.set(f);
    for (std::size_t r = 0; r < e.rank(); ++r)
      if (e.reduced.get(r, f)) x.set(e.pivot_cols[r]);
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Incrementally built basis of a subspace of GF(2)^n, keyed by lowest set
/// bit. Each stored vector carries a tag recording which caller-supplied
/// generators it is the sum of, so membership queries also return a
/// witness combination. This is the reduction transcript reused by the
/// homology and cohomology summaries.
class EchelonBasis {
 public:
  EchelonBasis() = default;
  EchelonBasis(std::size_t length, std::size_t tag_length)
      : length_(length), tag_length_(tag_length), pivot_of_(length, kNone) {}

  std::size_t length() const noexcept { return length_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Adds a generator; returns true when it enlarges the span.
  bool insert(const BitVector& v, const BitVector& tag) {
    Reduction red = reduce(v);
    red.tag ^= tag;
    const std::size_t p = red.residual.lowest();
    if (p == length_) return false;
    pivot_of_[p] = rows_.size();
    rows_.push_back(std::move(red.residual));
    tags_.push_back(std::move(red.tag));
    return true;
  }

  bool insert(const BitVector& v) { return insert(v, BitVector(tag_length_)); }

  struct Reduction {
    BitVector residual;
    BitVector tag;  // sum of tags of the rows that were added
  };

  Reduction reduce(const BitVector& v) const {
    if (v.size() != length_) throw Error(ErrorKind::DimensionMismatch, "vector length differs from basis length");
    Reduction out{v, BitVector(tag_length_)};
    std::size_t p = out.residual.lowest();
    while (p < length_) {
      const std::size_t r = pivot_of_[p];
      if (r != kNone) {
        out.residual ^= rows_[r];
        out.tag ^= tags_[r];
        p = out.residual.next_set(p + 1);
      } else {
        p = out.residual.next_set(p + 1);
      }
    }
    return out;
  }

  bool contains(const BitVector& v) const { return reduce(v).residual.none(); }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t length_ = 0;
  std::size_t tag_length_ = 0;
  std::vector<BitVector> rows_;
  std::vector<BitVector> tags_;
  std::vector<std::size_t> pivot_of_;
};

}  // namespace swlab
