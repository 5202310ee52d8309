#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "charvar/errors.hpp"

namespace charvar {

using Integer = mpz_class;

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Integer& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix pow(unsigned long e) const;
  Integer trace() const;

  /// Exact determinant by fraction-free Bareiss elimination.
  Integer det() const;

  /// Inverse of a matrix with |det| = 1, via the adjugate. Throws otherwise.
  IntMatrix unimodular_inverse() const;

  bool is_unimodular() const;  // |det| == 1

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  IntMatrix operator-() const;

  std::string to_string() const;  // bracket syntax, e.g. "[[2,1],[1,1]]"

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> e_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Integer& c, const IntMatrix& a);

/// Parses "[[2, 1],[1,1]]". Whitespace-insensitive; rejects ragged rows and
/// non-integer tokens.
IntMatrix parse_int_matrix(std::string_view text);

}  // namespace charvar
