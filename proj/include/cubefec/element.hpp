// Copyright (c) the cubefec contributors
// SPDX-License-Identifier: Apache-2.0
//
// The reference finite element on an axis-aligned box: faces, exact moments,
// the face-moment degrees of freedom of the S family, unisolvence and
// vanishing-trace certificates, the canonical projection, the de Rham complex
// on a single cube, and the 3-D vector proxies.

#ifndef CUBEFEC_ELEMENT_HPP
#define CUBEFEC_ELEMENT_HPP

#include <array>
#include <map>
#include <vector>

#include "cubefec/matrix.hpp"
#include "cubefec/spaces.hpp"

namespace cubefec {

/// Cartesian product of n closed intervals with rational endpoints.
struct Box {
  std::vector<std::pair<Rational, Rational>> intervals;

  Box() = default;
  explicit Box(std::vector<std::pair<Rational, Rational>> iv);
  /// [-1,1]^n, the reference element.
  static Box reference(int n);
  /// [0,1]^n.
  static Box unit(int n);

  int dimension() const { return static_cast<int>(intervals.size()); }
  const std::pair<Rational, Rational>& interval(int axis) const {
    return intervals[axis - 1];
  }

  friend bool operator==(const Box& a, const Box& b) { return a.intervals == b.intervals; }
};

/// A d-dimensional face of a box: a choice of fixed axes pinned at endpoints,
/// the remaining axes free. Face-local coordinates are the free axes in
/// increasing global order, re-indexed to 1..d.
class CubeFace {
 public:
  CubeFace(const Box& parent, std::map<int, Rational> fixed);

  int parent_dimension() const { return parent_.dimension(); }
  int dimension() const { return static_cast<int>(free_axes_.size()); }
  const Box& parent() const { return parent_; }
  const std::map<int, Rational>& fixed() const { return fixed_; }
  const std::vector<int>& free_axes() const { return free_axes_; }
  /// Intervals of the free axes: the face as a d-dimensional box.
  Box face_box() const;

 private:
  Box parent_;
  std::map<int, Rational> fixed_;
  std::vector<int> free_axes_;
};

/// All d-dimensional faces of T, in the normative order: fixed-axis subsets
/// lexicographic, then endpoint patterns lexicographic with low before high
/// (first fixed axis most significant). There are 2^(n-d) C(n,d) of them.
std::vector<CubeFace> faces(const Box& T, int d);

/// Exact integral of a top-degree form over a box; every alternator must be
/// dx_{1..d} (std::domain_error otherwise).
Rational integrate_top_form(const DiffForm& w, const Box& domain);

/// Iterated hyperplane trace onto a face, fixed axes processed in increasing
/// order; result lives in the face-local coordinates.
DiffForm trace_to_face(const DiffForm& w, const CubeFace& f);

/// One face-moment functional mu -> integral over f of tr_f(mu) wedge weight.
struct DofFunctional {
  CubeFace face;
  DiffForm weight;  // (d-k)-form in the face's d local variables
};

struct DofSet {
  int n = 0, r = 0, k = 0;
  std::vector<DofFunctional> dofs;
};

/// The degrees of freedom of S_r Lambda^k on T, ordered by (face dimension
/// ascending, face order, weight monomial order). Weights run over the
/// monomial basis of P_{r-2(d-k)} Lambda^{d-k} on each d-face.
DofSet make_dofs(const Box& T, int r, int k);

Rational eval_dof(const DiffForm& mu, const DofFunctional& dof);

/// Square moment matrix M[i][j] = dof_i(basis_j) with the constructed basis
/// of S_r Lambda^k.
RationalMatrix dof_matrix(const Box& T, int r, int k);
RationalMatrix dof_matrix(const SpaceBasis& basis, const DofSet& dofs);

struct UnisolvenceReport {
  int n = 0, r = 0, k = 0;
  long long dim_formula = 0;
  long dim_basis = 0;
  long n_dofs = 0;
  bool dimension_ok = false;
  bool matrix_nonsingular = false;
  bool pass() const { return dimension_ok && matrix_nonsingular; }
};

UnisolvenceReport certify_unisolvence(const Box& T, int r, int k);
UnisolvenceReport certify_unisolvence(int n, int r, int k);  // reference box

/// Basis of the subspace of S_r Lambda^k(reference box) whose traces vanish
/// on every facet, as the kernel of the stacked facet-trace map.
std::vector<DiffForm> vanishing_trace_basis(int n, int r, int k);

struct VanishingTraceReport {
  int n = 0, r = 0, k = 0;
  long ring_dim = 0;   // dim of the vanishing-trace subspace
  long n_weights = 0;  // dim P_{r-2(n-k)} Lambda^{n-k}
  bool full_column_rank = false;
  bool square = false;
  bool pass() const { return full_column_rank; }
};

/// The interior moments against P_{r-2(n-k)} Lambda^{n-k} are injective on the
/// vanishing-trace subspace (full column rank); squareness is reported, not
/// asserted.
VanishingTraceReport certify_vanishing_trace_unisolvence(int n, int r, int k);

/// Canonical projection onto S_r Lambda^k(T): the unique element with the
/// same degrees of freedom. Idempotent, the identity on S_r Lambda^k.
class Projector {
 public:
  Projector(const Box& T, int r, int k);

  const SpaceBasis& basis() const { return basis_; }
  const DofSet& dofs() const { return dofs_; }
  DiffForm operator()(const DiffForm& mu) const;

 private:
  SpaceBasis basis_;
  DofSet dofs_;
  RationalMatrix inverse_;
};

/// dpi = pid on seeded polynomial k-forms of degree <= r+2, for every k < n,
/// comparing project(d mu, r-k-1, k+1) with d(project(mu, r-k, k)). Needs
/// r >= n so all spaces in the chain exist.
CheckReport certify_commuting_diagram(int n, int r, int samples_per_k,
                                      unsigned long long seed);

struct CohomologyReport {
  std::vector<long> defects;  // dim ker - dim image, one entry per form degree
  bool subcomplex_ok = true;
  bool products_vanish = true;
  bool contractible_profile() const;  // defects == (1, 0, ..., 0)
  bool pass() const { return subcomplex_ok && products_vanish && contractible_profile(); }
};

/// Exactness defects of S_r L^0 -d-> S_{r-1} L^1 -d-> ... -d-> S_{r-n} L^n on
/// one cube, from exact rank-nullity of the d matrices in the constructed
/// bases. Needs r >= n.
CohomologyReport complex_cohomology_on_cube(int n, int r);

/// Standard 3-D vector proxy: 1-form coefficients <-> components, 2-forms via
/// the theta_i = (-1)^(i-1) dx_1 ^ ... ^ (omit dx_i) ^ ... ^ dx_3 basis.
std::array<DiffForm, 3> vector_proxy_3d(const DiffForm& mu);
DiffForm form_from_proxy_3d(const std::array<DiffForm, 3>& components, int k);

}  // namespace cubefec

#endif
