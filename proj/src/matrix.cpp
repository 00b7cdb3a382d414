#include "sncd/matrix.hpp"

#include <algorithm>
#include <utility>

namespace sncd {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    for (long long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

namespace {

// Elementary operations applied to the working matrix and mirrored on the
// transforms: rows on `left`, columns on `right`, inverse column ops on
// `right_inverse`.
struct Reducer {
  IntMatrix a, left, right, right_inverse;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < left.cols(); ++c) std::swap(left(i, c), left(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < right.rows(); ++r) std::swap(right(r, i), right(r, j));
    for (std::size_t c = 0; c < right_inverse.cols(); ++c)
      std::swap(right_inverse(i, c), right_inverse(j, c));
  }
  // row_dst -= q * row_src
  void sub_row(std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(src, c) != 0) a(dst, c) -= q * a(src, c);
    for (std::size_t c = 0; c < left.cols(); ++c)
      if (left(src, c) != 0) left(dst, c) -= q * left(src, c);
  }
  // col_dst -= q * col_src
  void sub_col(std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (a(r, src) != 0) a(r, dst) -= q * a(r, src);
    for (std::size_t r = 0; r < right.rows(); ++r)
      if (right(r, src) != 0) right(r, dst) -= q * right(r, src);
    for (std::size_t c = 0; c < right_inverse.cols(); ++c)
      if (right_inverse(dst, c) != 0) right_inverse(src, c) += q * right_inverse(dst, c);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = -a(r, c);
    for (std::size_t c = 0; c < left.cols(); ++c) left(r, c) = -left(r, c);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Reducer red{m, IntMatrix::identity(rows), IntMatrix::identity(cols),
              IntMatrix::identity(cols)};
  IntMatrix& a = red.a;

  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // Pivot: smallest nonzero absolute value in the trailing block.
    auto pick_pivot = [&]() -> bool {
      bool found = false;
      Integer best;
      std::size_t bi = t, bj = t;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          Integer v = boost::multiprecision::abs(a(i, j));
          if (!found || v < best) {
            found = true;
            best = v;
            bi = i;
            bj = j;
            if (best == 1) break;
          }
        }
        if (found && best == 1) break;
      }
      if (!found) return false;
      red.swap_rows(t, bi);
      red.swap_cols(t, bj);
      return true;
    };
    if (!pick_pivot()) break;

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        red.sub_row(i, t, q);
        if (a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        red.sub_col(j, t, q);
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // Bring the smallest remainder in row/column t to the pivot.
        std::size_t bi = t, bj = t;
        Integer best = boost::multiprecision::abs(a(t, t));
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a(i, t) != 0 && boost::multiprecision::abs(a(i, t)) < best) {
            best = boost::multiprecision::abs(a(i, t));
            bi = i;
            bj = t;
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a(t, j) != 0 && boost::multiprecision::abs(a(t, j)) < best) {
            best = boost::multiprecision::abs(a(t, j));
            bi = t;
            bj = j;
          }
        }
        red.swap_rows(t, bi);
        red.swap_cols(t, bj);
        continue;
      }
      // Row and column cleared; enforce divisibility of the trailing block.
      bool fixed = true;
      for (std::size_t i = t + 1; i < rows && fixed; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            red.sub_row(t, i, Integer(-1));
            fixed = false;
            break;
          }
        }
      }
      if (fixed) break;
    }
    if (a(t, t) < 0) red.negate_row(t);
  }

  SmithForm out;
  out.rank = t;
  out.diagonal.resize(std::min(rows, cols));
  for (std::size_t i = 0; i < out.diagonal.size(); ++i) out.diagonal[i] = a(i, i);
  out.left = std::move(red.left);
  out.right = std::move(red.right);
  out.right_inverse = std::move(red.right_inverse);
  return out;
}

}  // namespace sncd
