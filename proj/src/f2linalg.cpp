#include "hcob/f2linalg.hpp"

#include <bit>
#include <utility>

#include "hcob/errors.hpp"

namespace hcob {

BitVector& BitVector::operator^=(const BitVector& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool BitVector::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

std::size_t BitVector::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

std::size_t BitVector::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
  return size_;
}

bool BitVector::dot(const BitVector& other) const {
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word) {
      out.push_back(w * 64 + std::countr_zero(word));
      word &= word - 1;
    }
  }
  return out;
}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  F2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged GF(2) matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      const int e = rows[r][c];
      if (e != 0 && e != 1) throw InputError("GF(2) matrix entry must be 0 or 1");
      m.set(r, c, e == 1);
    }
  }
  return m;
}

F2Matrix F2Matrix::from_columns(std::size_t rows, std::span<const BitVector> columns) {
  F2Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (auto r : columns[c].support()) m.set(r, c);
  return m;
}

BitVector F2Matrix::column(std::size_t c) const {
  BitVector v(rows());
  for (std::size_t r = 0; r < rows(); ++r)
    if (get(r, c)) v.set(r);
  return v;
}

bool F2Matrix::is_zero() const {
  for (const auto& r : data_)
    if (r.any()) return false;
  return true;
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (auto c : data_[r].support()) t.set(c, r);
  return t;
}

F2Matrix F2Matrix::select(std::span<const std::size_t> row_idx,
                          std::span<const std::size_t> col_idx) const {
  F2Matrix m(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      if (get(row_idx[i], col_idx[j])) m.set(i, j);
  return m;
}

BitVector F2Matrix::operator*(const BitVector& x) const {
  if (x.size() != cols_) throw InputError("matrix-vector dimension mismatch");
  BitVector y(rows());
  for (std::size_t r = 0; r < rows(); ++r)
    if (data_[r].dot(x)) y.set(r);
  return y;
}

F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
  F2Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (auto k : a.row(r).support()) out.row(r) ^= b.row(k);
  return out;
}

F2Matrix& F2Matrix::operator+=(const F2Matrix& other) {
  if (rows() != other.rows() || cols_ != other.cols_)
    throw InputError("matrix sum dimension mismatch");
  for (std::size_t r = 0; r < rows(); ++r) data_[r] ^= other.data_[r];
  return *this;
}

namespace {

// Gauss-Jordan elimination in place. Returns pivot columns, one per pivot row
// (row i of the result has its pivot at pivots[i]); rows past pivots.size()
// are zero.
std::vector<std::size_t> reduce_rows(F2Matrix& m, BitVector* rhs = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols() && next < m.rows(); ++c) {
    std::size_t p = next;
    while (p < m.rows() && !m.get(p, c)) ++p;
    if (p == m.rows()) continue;
    if (p != next) {
      std::swap(m.row(p), m.row(next));
      if (rhs) {
        const bool a = rhs->get(p), b = rhs->get(next);
        rhs->set(p, b);
        rhs->set(next, a);
      }
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != next && m.get(r, c)) {
        m.row(r) ^= m.row(next);
        if (rhs && rhs->get(next)) rhs->flip(r);
      }
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

}  // namespace

std::size_t rank_f2(const F2Matrix& m) {
  F2Matrix work = m;
  return reduce_rows(work).size();
}

std::vector<BitVector> kernel_basis_f2(const F2Matrix& m) {
  F2Matrix work = m;
  const auto pivots = reduce_rows(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector x(m.cols());
    x.set(free);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (work.get(i, free)) x.set(pivots[i]);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<BitVector> solve_f2(const F2Matrix& m, const BitVector& b) {
  if (b.size() != m.rows()) throw InputError("solve_f2: right-hand side length must equal row count");
  F2Matrix work = m;
  BitVector rhs = b;
  const auto pivots = reduce_rows(work, &rhs);
  for (std::size_t r = pivots.size(); r < m.rows(); ++r)
    if (rhs.get(r)) return std::nullopt;
  BitVector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    if (rhs.get(i)) x.set(pivots[i]);
  return x;
}

std::optional<F2Matrix> inverse_f2(const F2Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  std::vector<BitVector> cols;
  cols.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto x = solve_f2(m, BitVector::unit(n, j));
    if (!x) return std::nullopt;
    cols.push_back(std::move(*x));
  }
  return F2Matrix::from_columns(n, cols);
}

BitVector Echelon::reduce(BitVector v, BitVector* tag) const {
  for (const auto& row : rows_) {
    if (v.get(row.pivot)) {
      v ^= row.value;
      if (tag) *tag ^= row.tag;
    }
  }
  return v;
}

bool Echelon::insert(BitVector v, BitVector tag) {
  if (tag.size() != tag_width_) tag = BitVector(tag_width_);
  for (const auto& row : rows_) {
    if (v.get(row.pivot)) {
      v ^= row.value;
      tag ^= row.tag;
    }
  }
  const std::size_t pivot = v.first_set();
  if (pivot == v.size()) return false;
  rows_.push_back(Row{pivot, std::move(v), std::move(tag)});
  return true;
}

}  // namespace hcob
