#include "hcob/intmatrix.hpp"

#include <utility>

#include "hcob/errors.hpp"

namespace hcob {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

F2Matrix IntMatrix::mod2() const {
  F2Matrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (bit_test((*this)(r, c), 0)) m.set(r, c);
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& e : data_)
    if (e != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("integer matrix product dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("integer matrix sum dimension mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("integer matrix difference dimension mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    if ((*this)(src, c) != 0) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    if ((*this)(r, src) != 0) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

namespace {

// Diagonalizes `d` in place. Row operations are mirrored on `left` and column
// operations on `right` when those are non-null.
void diagonalize(IntMatrix& d, IntMatrix* left, IntMatrix* right) {
  const std::size_t rows = d.rows(), cols = d.cols();
  auto row_swap = [&](std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    if (left) left->swap_rows(a, b);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    if (right) right->swap_cols(a, b);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
    d.add_row(dst, src, k);
    if (left) left->add_row(dst, src, k);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
    d.add_col(dst, src, k);
    if (right) right->add_col(dst, src, k);
  };

  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    for (;;) {
      // Minimal |entry| pivot in the trailing block.
      std::size_t pr = rows, pc = cols;
      Integer best;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c) {
          const Integer& e = d(r, c);
          if (e == 0) continue;
          if (pr == rows || abs(e) < best) {
            best = abs(e);
            pr = r;
            pc = c;
          }
        }
      if (pr == rows) return;
      row_swap(t, pr);
      col_swap(t, pc);

      bool dirty = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (d(r, t) == 0) continue;
        const Integer q = d(r, t) / d(t, t);
        row_add(r, t, -q);
        if (d(r, t) != 0) dirty = true;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (d(t, c) == 0) continue;
        const Integer q = d(t, c) / d(t, t);
        col_add(c, t, -q);
        if (d(t, c) != 0) dirty = true;
      }
      if (dirty) continue;

      // Row and column are clear; enforce divisibility on the trailing block.
      std::size_t bad = rows;
      for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (d(r, c) % d(t, t) != 0) {
            bad = r;
            break;
          }
      if (bad == rows) break;
      row_add(t, bad, Integer(1));
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      if (left) left->negate_row(t);
    }
  }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm out{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  diagonalize(out.diagonal, &out.left, &out.right);

  check_internal(out.left * m * out.right == out.diagonal, "SNF recheck U*m*V == D failed");
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      check_internal(i == j || out.diagonal(i, j) == 0, "SNF result not diagonal");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Integer& a = out.diagonal(i, i);
    const Integer& b = out.diagonal(i + 1, i + 1);
    check_internal(a >= 0 && b >= 0, "SNF diagonal has a negative entry");
    check_internal(a == 0 ? b == 0 : b % a == 0, "SNF divisibility chain broken");
  }
  check_internal(abs(determinant(out.left)) == 1 && abs(determinant(out.right)) == 1,
                 "SNF transform not unimodular");
  return out;
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
  IntMatrix d = m;
  diagonalize(d, nullptr, nullptr);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < d.rows() && i < d.cols(); ++i)
    if (d(i, i) != 0) out.push_back(d(i, i));
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return Integer(0);
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace hcob
