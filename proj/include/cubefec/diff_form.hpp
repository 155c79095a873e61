// Copyright (c) the cubefec contributors
// SPDX-License-Identifier: Apache-2.0
//
// Differential k-forms in n variables with polynomial coefficients over the
// rationals, written as finite sums of form monomials  c * x^alpha dx_sigma.
// All values are immutable after construction and every operation is a pure
// function, so forms may be shared freely between threads.

#ifndef CUBEFEC_DIFF_FORM_HPP
#define CUBEFEC_DIFF_FORM_HPP

#include <map>
#include <string>

#include "cubefec/multiindex.hpp"
#include "cubefec/rational.hpp"

namespace cubefec {

class DiffForm {
 public:
  using TermMap = std::map<FormMonomial, Rational>;

  DiffForm() = default;
  DiffForm(int n, int k);
  /// Single-term form c * x^alpha dx_sigma.
  DiffForm(int n, FormMonomial m, Rational c);

  static DiffForm zero(int n, int k) { return DiffForm(n, k); }
  /// The constant 0-form 1 (n >= 0).
  static DiffForm one(int n);
  /// x_axis as a 0-form.
  static DiffForm coordinate(int n, int axis);
  /// The basic alternator dx_sigma.
  static DiffForm alternator(int n, IndexSet sigma);

  int dimension() const { return n_; }
  int form_degree() const { return k_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }

  /// Maximum polynomial degree over the terms (-1 for the zero form).
  int degree() const;
  /// True when every term has the same polynomial degree (zero form counts).
  bool is_homogeneous() const;

  /// Adds c * m, keeping the canonical no-zero-coefficients invariant.
  void add_term(const FormMonomial& m, const Rational& c);

  DiffForm& operator+=(const DiffForm& other);
  DiffForm& operator-=(const DiffForm& other);
  DiffForm& operator*=(const Rational& c);
  friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
  friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }
  friend DiffForm operator*(const Rational& c, DiffForm a) { return a *= c; }
  DiffForm operator-() const;

  friend bool operator==(const DiffForm& a, const DiffForm& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.terms_ == b.terms_;
  }

  std::string str() const;  // human-readable, canonical term order

 private:
  int n_ = 0;
  int k_ = 0;
  TermMap terms_;
};

/// Exterior (wedge) product; forms must share the ambient dimension.
DiffForm wedge(const DiffForm& a, const DiffForm& b);

/// Exterior derivative d; raises the form degree by one.
DiffForm exterior_derivative(const DiffForm& w);

/// Koszul differential kappa (contraction with the identity vector field);
/// lowers the form degree by one and raises the polynomial degree by one.
DiffForm koszul(const DiffForm& w);

/// (d kappa + kappa d) w for homogeneous w; checks the result equals
/// (deg + form_degree) * w and throws std::domain_error on non-homogeneous
/// input.
DiffForm homotopy_apply(const DiffForm& w);

/// Linear degree of a nonzero form: minimum ldeg over its monomials.
/// The zero form has no linear degree (std::domain_error).
int ldeg(const DiffForm& w);

/// True when w is zero or ldeg(w) >= l; the convention callers use for
/// "linear degree at least l" as a subspace condition.
bool ldeg_at_least(const DiffForm& w, int l);

/// Pullback through x_axis = value: terms whose alternator contains the axis
/// vanish; elsewhere the axis is substituted and the remaining variables are
/// re-indexed to 1..n-1 preserving order.
DiffForm trace_hyperplane(const DiffForm& w, int axis, const Rational& value);

}  // namespace cubefec

#endif
