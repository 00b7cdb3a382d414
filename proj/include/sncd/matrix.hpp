#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "sncd/integer.hpp"

namespace sncd {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Result of a Smith normal form computation: left * input * right = diagonal.
struct SmithForm {
  std::vector<Integer> diagonal;  // nonnegative, each dividing the next; zeros last
  IntMatrix left;                 // unimodular, rows x rows
  IntMatrix right;                // unimodular, cols x cols
  IntMatrix right_inverse;        // inverse of right
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace sncd
