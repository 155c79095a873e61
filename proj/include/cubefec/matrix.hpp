// Copyright (c) the cubefec contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef CUBEFEC_MATRIX_HPP
#define CUBEFEC_MATRIX_HPP

#include <iosfwd>
#include <vector>

#include "cubefec/rational.hpp"

namespace cubefec {

/// Dense matrix over the rationals. Rank, solve and inverse use plain exact
/// Gaussian elimination with first-nonzero pivoting; results are deterministic
/// and unconditional.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(long rows, long cols);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  Rational& at(long i, long j) { return data_[i * cols_ + j]; }
  const Rational& at(long i, long j) const { return data_[i * cols_ + j]; }

  long rank() const;
  bool is_zero() const;
  RationalMatrix transpose() const;
  RationalMatrix multiply(const RationalMatrix& other) const;

  /// Solves A x = b for square nonsingular A; throws std::domain_error if
  /// singular.
  std::vector<Rational> solve(const std::vector<Rational>& b) const;
  RationalMatrix inverse() const;

  /// Basis of the right nullspace {x : A x = 0}, one vector per column of the
  /// result.
  RationalMatrix nullspace() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Comma-separated values, one row per line, entries as "p" or "p/q".
  void write_csv(std::ostream& os) const;
  /// Sparse triplet lines "row col p/q" (zero entries omitted), 0-based.
  void write_triplets(std::ostream& os) const;

 private:
  // Returns the rank; on request records the pivot column per eliminated row.
  static long eliminate(RationalMatrix& m, std::vector<long>* pivot_cols);

  long rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace cubefec

#endif
