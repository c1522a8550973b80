#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hcob {

// Bit-packed vector over GF(2).
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static BitVector unit(std::size_t size, std::size_t index) {
    BitVector v(size);
    v.set(index);
    return v;
  }

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  bool operator==(const BitVector& other) const = default;

  bool any() const;
  bool none() const { return !any(); }
  std::size_t count() const;
  // Index of the lowest set bit, or size() when the vector is zero.
  std::size_t first_set() const;
  bool dot(const BitVector& other) const;

  std::vector<std::size_t> support() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Dense GF(2) matrix stored as bit-packed rows. Matrices act on column
// vectors: entry (i, j) is the coefficient of basis vector i in the image of
// basis vector j.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows, BitVector(cols)) {}

  static F2Matrix identity(std::size_t n);
  static F2Matrix from_rows(const std::vector<std::vector<int>>& rows);
  static F2Matrix from_columns(std::size_t rows, std::span<const BitVector> columns);

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { data_[r].set(c, value); }
  void flip(std::size_t r, std::size_t c) { data_[r].flip(c); }

  const BitVector& row(std::size_t r) const { return data_[r]; }
  BitVector& row(std::size_t r) { return data_[r]; }
  BitVector column(std::size_t c) const;

  bool is_zero() const;
  F2Matrix transpose() const;
  // Submatrix on the given row and column index lists, in order.
  F2Matrix select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;

  BitVector operator*(const BitVector& x) const;
  friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b);
  F2Matrix& operator+=(const F2Matrix& other);
  friend F2Matrix operator+(F2Matrix a, const F2Matrix& b) { return a += b; }
  bool operator==(const F2Matrix& other) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> data_;
};

std::size_t rank_f2(const F2Matrix& m);

// Basis of the null space {x : m x = 0}; size is cols - rank.
std::vector<BitVector> kernel_basis_f2(const F2Matrix& m);

// Some x with m x = b, or nullopt when b is outside the column space.
// Throws InputError when b has the wrong length.
std::optional<BitVector> solve_f2(const F2Matrix& m, const BitVector& b);

std::optional<F2Matrix> inverse_f2(const F2Matrix& m);

// Incrementally built row-echelon basis of a subspace of GF(2)^n. Each stored
// vector optionally carries a tag recording which inserted vectors were
// combined to produce it, so residuals can be expressed in the inserted basis.
class Echelon {
 public:
  explicit Echelon(std::size_t ambient, std::size_t tag_width = 0)
      : ambient_(ambient), tag_width_(tag_width) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dimension() const { return rows_.size(); }

  // Reduce v against the basis. Returns the residual; when `tag` is non-null it
  // is xored with the tags of every basis row used.
  BitVector reduce(BitVector v, BitVector* tag = nullptr) const;
  bool contains(const BitVector& v) const { return reduce(v).none(); }

  // Insert v (with its tag). Returns true when v was independent.
  bool insert(BitVector v, BitVector tag = {});

 private:
  struct Row {
    std::size_t pivot;
    BitVector value;
    BitVector tag;
  };
  std::size_t ambient_;
  std::size_t tag_width_;
  std::vector<Row> rows_;
};

}  // namespace hcob
