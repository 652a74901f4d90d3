#pragma once

// Dense integer matrices with Hermite and Smith normal forms.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "wld/laurent.hpp"

namespace wld {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Integer> row(std::size_t r) const;
  void append_row(const std::vector<Integer>& row);
  void swap_rows(std::size_t a, std::size_t b);
  bool row_is_zero(std::size_t r) const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::string to_string(const IntMatrix& m);

/// Row Hermite normal form: same shape, nonzero rows first with strictly
/// increasing pivot columns, positive pivots, entries above a pivot in
/// [0, pivot). Unique for the row lattice.
IntMatrix hnf(const IntMatrix& m);

/// Number of nonzero rows of the HNF.
std::size_t rank(const IntMatrix& m);

/// Nonzero Smith invariant factors d1 | d2 | ... (positive), one per unit of
/// rank.
std::vector<Integer> snf(const IntMatrix& m);

}  // namespace wld
