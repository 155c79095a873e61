// Copyright (c) the cubefec contributors
// SPDX-License-Identifier: Apache-2.0
//
// Explicit bases over the rationals for the polynomial differential form
// families used as cubical shape functions:
//
//   P_r Lambda^k      forms of polynomial degree at most r
//   H_r Lambda^k      homogeneous degree-r forms
//   H_{r,l} Lambda^k  homogeneous forms of linear degree at least l
//   J_r Lambda^k      sum over l >= 1 of kappa H_{r+l-1,l} Lambda^{k+1}
//   S_r Lambda^k      P_r Lambda^k + J_r Lambda^k + d J_{r+1} Lambda^{k-1}
//
// Every basis is the unique reduced echelon basis of its span under the
// canonical term order, so constructions are reproducible bit for bit.

#ifndef CUBEFEC_SPACES_HPP
#define CUBEFEC_SPACES_HPP

#include <optional>
#include <string>
#include <vector>

#include "cubefec/diff_form.hpp"
#include "cubefec/echelon.hpp"

namespace cubefec {

/// Echelonized span of differential forms of a fixed shape (n, k).
class FormEchelon {
 public:
  FormEchelon(int n, int k, bool track_combos = false);

  SparseEchelon<FormMonomial>::InsertResult insert(const DiffForm& f);
  bool contains(const DiffForm& f) const;
  std::optional<std::vector<Rational>> coordinates(const DiffForm& f) const;
  void finalize();

  long dim() const { return ech_.rank(); }
  int dimension() const { return n_; }
  int form_degree() const { return k_; }
  std::vector<DiffForm> forms() const;
  DiffForm form_from_terms(const DiffForm::TermMap& terms) const;

 private:
  int n_, k_;
  SparseEchelon<FormMonomial> ech_;
};

enum class Family { P, H, H_ldeg, J, S };
std::string family_name(Family f);

/// An echelonized basis of one of the polynomial form spaces, together with
/// its construction parameters.
class SpaceBasis {
 public:
  SpaceBasis(Family family, int n, int r, int k, int l,
             const std::vector<DiffForm>& generators);

  Family family() const { return family_; }
  int dimension() const { return n_; }
  int degree() const { return r_; }
  int form_degree() const { return k_; }
  int linear_degree_bound() const { return l_; }  // -1 when not applicable
  long dim() const { return static_cast<long>(forms_.size()); }
  const std::vector<DiffForm>& forms() const { return forms_; }

  bool contains(const DiffForm& f) const { return ech_.contains(f); }
  std::optional<std::vector<Rational>> coordinates(const DiffForm& f) const {
    return ech_.coordinates(f);
  }
  /// Linear combination of the basis forms.
  DiffForm combine(const std::vector<Rational>& coeffs) const;

 private:
  Family family_;
  int n_, r_, k_, l_;
  FormEchelon ech_;
  std::vector<DiffForm> forms_;
};

/// All k-form monomials of the exact polynomial degree, canonical order.
std::vector<FormMonomial> form_monomials(int n, int deg, int k);

/// Monomial generators m of Prop.-style J spans: (k+1)-form monomials with
/// deg m >= r and deg m - ldeg m <= r - 1; applying kappa to them spans
/// J_r Lambda^k.
std::vector<FormMonomial> j_generator_monomials(int n, int r, int k);

SpaceBasis basis_P(int n, int r, int k);
SpaceBasis basis_H(int n, int r, int k);
SpaceBasis basis_H_ldeg(int n, int r, int l, int k);
SpaceBasis span_J(int n, int r, int k);
SpaceBasis basis_S(int n, int r, int k);

/// Degree-of-freedom count for S_r Lambda^k on an n-box:
/// sum over d of 2^(n-d) C(n,d) C(r-d+2k,d) C(d,k).
long long dim_S_formula(int n, int r, int k);

/// Count of monomials in n variables that are linear in some number l of the
/// first n-k variables with deg - l <= r; C(n,k) * count_A = dim_S_formula.
long long count_A(int n, int r, int k);

struct CheckReport {
  bool pass = true;
  std::string detail;
};

struct KoszulExactnessReport {
  int n, r, l, k;
  long dim_mid = 0;      // dim H_{r,l} Lambda^k
  long dim_img_in = 0;   // dim kappa(H_{r-1,l} Lambda^{k+1})
  long dim_img_mid = 0;  // dim kappa(H_{r,l} Lambda^k)
  bool dims_match = false;
  bool kernel_in_image = false;
  bool pass() const { return dims_match && kernel_in_image; }
};

/// Certifies exactness of  H_{r-1,l}L^{k+1} -k-> H_{r,l}L^k -k-> H_{r+1,l}L^{k-1}
/// by the rank identity and by reducing an explicit kernel basis against the
/// incoming image. Requires r >= 1, 0 <= l < r, 0 <= k < n.
KoszulExactnessReport verify_koszul_exactness(int n, int r, int l, int k);

/// Every monomial of every basis form of S_r Lambda^k obeys the degree bound
/// deg <= r+n-k-[k==0] and deg - ldeg <= r+1-[k==0].
CheckReport verify_degree_property(int n, int r, int k);

/// d S_{r+1} Lambda^{k-1} is contained in S_r Lambda^k (k >= 1).
CheckReport verify_subcomplex(int n, int r, int k);

/// S_r Lambda^k is contained in S_{r+1} Lambda^k.
CheckReport verify_inclusion(int n, int r, int k);

/// Traces of S_r Lambda^k(R^n) onto the hyperplanes x_i = c, c in {-1,0,1},
/// span exactly S_r Lambda^k(R^{n-1}); checks both containments (n >= 2).
CheckReport verify_trace(int n, int r, int k);

}  // namespace cubefec

#endif
