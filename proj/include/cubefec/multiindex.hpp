// Copyright (c) the cubefec contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef CUBEFEC_MULTIINDEX_HPP
#define CUBEFEC_MULTIINDEX_HPP

#include <compare>
#include <vector>

#include "cubefec/rational.hpp"

namespace cubefec {

/// Exponent vector of a monomial x^alpha in n variables. Axis numbering is
/// 1-based throughout the library (alpha[i-1] is the exponent of x_i).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents);
  static MultiIndex zero(int n) { return MultiIndex(std::vector<int>(n, 0)); }

  int size() const { return static_cast<int>(e_.size()); }
  int operator[](int axis) const { return e_[axis - 1]; }  // 1-based
  int degree() const { return deg_; }
  const std::vector<int>& exponents() const { return e_; }

  MultiIndex bump(int axis, int delta) const;  // alpha + delta*e_axis
  MultiIndex drop_axis(int axis) const;        // forget x_axis (trace re-indexing)

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
  friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
    if (a.deg_ != b.deg_) return a.deg_ < b.deg_;
    return a.e_ < b.e_;
  }

 private:
  std::vector<int> e_;
  int deg_ = 0;
};

/// Strictly increasing subset of {1..n}; the index set sigma of a basic
/// alternator dx_sigma.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<int> indices);  // validates strict increase, >= 1

  int size() const { return static_cast<int>(idx_.size()); }
  bool contains(int q) const;
  const std::vector<int>& indices() const { return idx_; }
  int operator[](int pos) const { return idx_[pos]; }  // 0-based position

  IndexSet insert(int q) const;  // sigma + q, requires q not in sigma
  IndexSet erase(int q) const;   // sigma - q, requires q in sigma
  std::vector<int> complement(int n) const;
  IndexSet shift_down_above(int axis) const;  // indices > axis decrease by one

  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.idx_ == b.idx_; }
  friend bool operator<(const IndexSet& a, const IndexSet& b) { return a.idx_ < b.idx_; }

 private:
  std::vector<int> idx_;
};

/// epsilon(q, sigma) = (-1)^#{p in sigma : p < q}; requires q not in sigma.
int eps(int q, const IndexSet& sigma);

/// epsilon(q, p, sigma) = eps(q, sigma) * eps(p, sigma + q - p);
/// requires q in the complement of sigma and p in sigma.
int eps2(int q, int p, const IndexSet& sigma);

/// A monomial coefficient times a basic alternator: x^alpha dx_sigma.
struct FormMonomial {
  MultiIndex alpha;
  IndexSet sigma;

  FormMonomial() = default;
  FormMonomial(MultiIndex a, IndexSet s);  // validates sigma within 1..n

  int dimension() const { return alpha.size(); }
  int form_degree() const { return sigma.size(); }
  int degree() const { return alpha.degree(); }
  /// Number of variables outside the alternator entering exactly linearly.
  int ldeg() const;

  friend bool operator==(const FormMonomial& a, const FormMonomial& b) {
    return a.alpha == b.alpha && a.sigma == b.sigma;
  }
  // Canonical term order: graded lexicographic on (deg, alpha, sigma).
  friend bool operator<(const FormMonomial& a, const FormMonomial& b) {
    if (!(a.alpha == b.alpha)) return a.alpha < b.alpha;
    return a.sigma < b.sigma;
  }
};

/// All multi-indices in n variables of total degree exactly deg, ascending
/// in the canonical order.
std::vector<MultiIndex> multi_indices_of_degree(int n, int deg);

/// All k-element index sets in {1..n}, lexicographic.
std::vector<IndexSet> index_sets(int n, int k);

/// Binomial coefficient; zero when b < 0 or b > a (or a < 0).
long long binom(long long a, long long b);

}  // namespace cubefec

#endif
