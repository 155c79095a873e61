// Copyright (c) the cubefec contributors
// SPDX-License-Identifier: Apache-2.0

#include "cubefec/diff_form.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace cubefec {

DiffForm::DiffForm(int n, int k) : n_(n), k_(k) {
  if (n < 0 || k < 0) throw std::invalid_argument("negative dimension or form degree");
}

DiffForm::DiffForm(int n, FormMonomial m, Rational c) : DiffForm(n, m.form_degree()) {
  if (m.dimension() != n) throw std::invalid_argument("monomial dimension mismatch");
  add_term(m, c);
}

DiffForm DiffForm::one(int n) {
  return DiffForm(n, FormMonomial(MultiIndex::zero(n), IndexSet{}), Rational(1));
}

DiffForm DiffForm::coordinate(int n, int axis) {
  return DiffForm(n, FormMonomial(MultiIndex::zero(n).bump(axis, 1), IndexSet{}),
                  Rational(1));
}

DiffForm DiffForm::alternator(int n, IndexSet sigma) {
  return DiffForm(n, FormMonomial(MultiIndex::zero(n), std::move(sigma)), Rational(1));
}

int DiffForm::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool DiffForm::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  return terms_.rbegin()->first.degree() == d;  // terms are graded-sorted
}

void DiffForm::add_term(const FormMonomial& m, const Rational& c) {
  if (c == 0) return;
  if (m.dimension() != n_ || m.form_degree() != k_)
    throw std::invalid_argument("term does not match form shape");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

DiffForm& DiffForm::operator+=(const DiffForm& other) {
  if (other.n_ != n_ || other.k_ != k_)
    throw std::invalid_argument("form shape mismatch in addition");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& other) {
  if (other.n_ != n_ || other.k_ != k_)
    throw std::invalid_argument("form shape mismatch in subtraction");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

DiffForm& DiffForm::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

DiffForm DiffForm::operator-() const {
  DiffForm out(n_, k_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

std::string DiffForm::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << rat_str(c) << ")";
    for (int i = 1; i <= n_; ++i) {
      if (m.alpha[i] == 0) continue;
      os << "*x" << i;
      if (m.alpha[i] > 1) os << "^" << m.alpha[i];
    }
    if (m.sigma.size() > 0) {
      os << " dx";
      for (int q : m.sigma.indices()) os << "_" << q;
    }
  }
  return os.str();
}

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  if (a.dimension() != b.dimension())
    throw std::domain_error("wedge: ambient dimension mismatch");
  const int n = a.dimension();
  DiffForm out(n, a.form_degree() + b.form_degree());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      // Sign of sorting the concatenation (sigma_a, sigma_b); zero on overlap.
      bool overlap = false;
      int inversions = 0;
      for (int p : ma.sigma.indices()) {
        for (int q : mb.sigma.indices()) {
          if (p == q) {
            overlap = true;
            break;
          }
          if (p > q) ++inversions;
        }
        if (overlap) break;
      }
      if (overlap) continue;
      std::vector<int> merged;
      merged.reserve(ma.sigma.size() + mb.sigma.size());
      std::merge(ma.sigma.indices().begin(), ma.sigma.indices().end(),
                 mb.sigma.indices().begin(), mb.sigma.indices().end(),
                 std::back_inserter(merged));
      MultiIndex alpha = ma.alpha;
      for (int i = 1; i <= n; ++i) {
        if (mb.alpha[i] != 0) alpha = alpha.bump(i, mb.alpha[i]);
      }
      Rational c = ca * cb;
      if (inversions % 2 != 0) c = -c;
      out.add_term(FormMonomial(alpha, IndexSet(std::move(merged))), c);
    }
  }
  return out;
}

DiffForm exterior_derivative(const DiffForm& w) {
  const int n = w.dimension();
  DiffForm out(n, w.form_degree() + 1);
  for (const auto& [m, c] : w.terms()) {
    for (int q = 1; q <= n; ++q) {
      if (m.alpha[q] == 0 || m.sigma.contains(q)) continue;
      out.add_term(FormMonomial(m.alpha.bump(q, -1), m.sigma.insert(q)),
                   c * m.alpha[q] * eps(q, m.sigma));
    }
  }
  return out;
}

DiffForm koszul(const DiffForm& w) {
  const int n = w.dimension();
  const int k = w.form_degree();
  if (k == 0) return DiffForm::zero(n, 0);
  DiffForm out(n, k - 1);
  for (const auto& [m, c] : w.terms()) {
    int sign = 1;
    for (int pos = 0; pos < k; ++pos) {
      const int q = m.sigma[pos];
      out.add_term(FormMonomial(m.alpha.bump(q, 1), m.sigma.erase(q)),
                   (sign > 0) ? c : -c);
      sign = -sign;
    }
  }
  return out;
}

DiffForm homotopy_apply(const DiffForm& w) {
  if (!w.is_homogeneous())
    throw std::domain_error("homotopy formula needs a homogeneous form");
  DiffForm lhs = exterior_derivative(koszul(w));
  lhs += koszul(exterior_derivative(w));
  DiffForm expected = w;
  if (!w.is_zero()) expected *= Rational(w.degree() + w.form_degree());
  if (!(lhs == expected))
    throw std::logic_error("homotopy identity violated");  // unreachable
  return lhs;
}

int ldeg(const DiffForm& w) {
  if (w.is_zero()) throw std::domain_error("linear degree of the zero form");
  int best = -1;
  for (const auto& [m, c] : w.terms()) {
    const int l = m.ldeg();
    if (best < 0 || l < best) best = l;
  }
  return best;
}

bool ldeg_at_least(const DiffForm& w, int l) {
  return w.is_zero() || ldeg(w) >= l;
}

DiffForm trace_hyperplane(const DiffForm& w, int axis, const Rational& value) {
  const int n = w.dimension();
  if (axis < 1 || axis > n) throw std::domain_error("trace axis out of range");
  DiffForm out(n - 1, w.form_degree());
  for (const auto& [m, c] : w.terms()) {
    if (m.sigma.contains(axis)) continue;
    const int e = m.alpha[axis];
    Rational coeff = c;
    if (e > 0) {
      if (value == 0) continue;
      coeff *= rat_pow(value, e);
    }
    out.add_term(FormMonomial(m.alpha.drop_axis(axis), m.sigma.shift_down_above(axis)),
                 coeff);
  }
  return out;
}

}  // namespace cubefec
