// Copyright (c) the cubefec contributors
// SPDX-License-Identifier: Apache-2.0

#include "cubefec/matrix.hpp"

#include <ostream>
#include <stdexcept>

namespace cubefec {

RationalMatrix::RationalMatrix(long rows, long cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

long RationalMatrix::eliminate(RationalMatrix& m, std::vector<long>* pivot_cols) {
  long rank = 0;
  for (long col = 0; col < m.cols_ && rank < m.rows_; ++col) {
    long pivot = -1;
    for (long i = rank; i < m.rows_; ++i) {
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (long j = col; j < m.cols_; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    }
    const Rational inv = 1 / m.at(rank, col);
    for (long j = col; j < m.cols_; ++j) m.at(rank, j) *= inv;
    for (long i = 0; i < m.rows_; ++i) {
      if (i == rank || m.at(i, col) == 0) continue;
      const Rational f = m.at(i, col);
      for (long j = col; j < m.cols_; ++j) m.at(i, j) -= f * m.at(rank, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

long RationalMatrix::rank() const {
  RationalMatrix work = *this;
  return eliminate(work, nullptr);
}

bool RationalMatrix::is_zero() const {
  for (const Rational& v : data_) {
    if (v != 0) return false;
  }
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (long i = 0; i < rows_; ++i) {
    for (long j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

RationalMatrix RationalMatrix::multiply(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matmul shape mismatch");
  RationalMatrix out(rows_, other.cols_);
  for (long i = 0; i < rows_; ++i) {
    for (long l = 0; l < cols_; ++l) {
      const Rational& a = at(i, l);
      if (a == 0) continue;
      for (long j = 0; j < other.cols_; ++j) {
        if (other.at(l, j) != 0) out.at(i, j) += a * other.at(l, j);
      }
    }
  }
  return out;
}

std::vector<Rational> RationalMatrix::solve(const std::vector<Rational>& b) const {
  if (rows_ != cols_ || static_cast<long>(b.size()) != rows_)
    throw std::invalid_argument("solve needs a square system");
  RationalMatrix aug(rows_, cols_ + 1);
  for (long i = 0; i < rows_; ++i) {
    for (long j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::vector<long> pivots;
  eliminate(aug, &pivots);
  if (static_cast<long>(pivots.size()) != rows_ || pivots.back() >= cols_)
    throw std::domain_error("singular system");
  std::vector<Rational> x(cols_, Rational(0));
  for (long i = 0; i < rows_; ++i) x[pivots[i]] = aug.at(i, cols_);
  return x;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  RationalMatrix aug(rows_, 2 * cols_);
  for (long i = 0; i < rows_; ++i) {
    for (long j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  std::vector<long> pivots;
  eliminate(aug, &pivots);
  if (static_cast<long>(pivots.size()) != rows_ || (rows_ > 0 && pivots.back() >= cols_))
    throw std::domain_error("singular matrix");
  RationalMatrix out(rows_, cols_);
  for (long i = 0; i < rows_; ++i) {
    for (long j = 0; j < cols_; ++j) out.at(i, j) = aug.at(i, cols_ + j);
  }
  return out;
}

RationalMatrix RationalMatrix::nullspace() const {
  RationalMatrix work = *this;
  std::vector<long> pivots;
  const long rank = eliminate(work, &pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (long c : pivots) is_pivot[c] = true;
  RationalMatrix out(cols_, cols_ - rank);
  long idx = 0;
  for (long free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    out.at(free, idx) = 1;
    for (long i = 0; i < rank; ++i) out.at(pivots[i], idx) = -work.at(i, free);
    ++idx;
  }
  return out;
}

void RationalMatrix::write_csv(std::ostream& os) const {
  for (long i = 0; i < rows_; ++i) {
    for (long j = 0; j < cols_; ++j) {
      if (j) os << ",";
      os << rat_str(at(i, j));
    }
    os << "\n";
  }
}

void RationalMatrix::write_triplets(std::ostream& os) const {
  for (long i = 0; i < rows_; ++i) {
    for (long j = 0; j < cols_; ++j) {
      if (at(i, j) != 0) os << i << " " << j << " " << rat_str(at(i, j)) << "\n";
    }
  }
}

}  // namespace cubefec
