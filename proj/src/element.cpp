// Copyright (c) the cubefec contributors
// SPDX-License-Identifier: Apache-2.0

#include "cubefec/element.hpp"

#include <sstream>
#include <stdexcept>

#include "cubefec/sampling.hpp"

namespace cubefec {

Box::Box(std::vector<std::pair<Rational, Rational>> iv) : intervals(std::move(iv)) {
  for (const auto& [lo, hi] : intervals) {
    if (!(lo < hi)) throw std::invalid_argument("box interval with nonpositive length");
  }
}

Box Box::reference(int n) {
  std::vector<std::pair<Rational, Rational>> iv(n, {rat(-1), rat(1)});
  return Box(std::move(iv));
}

Box Box::unit(int n) {
  std::vector<std::pair<Rational, Rational>> iv(n, {rat(0), rat(1)});
  return Box(std::move(iv));
}

CubeFace::CubeFace(const Box& parent, std::map<int, Rational> fixed)
    : parent_(parent), fixed_(std::move(fixed)) {
  const int n = parent_.dimension();
  for (const auto& [axis, value] : fixed_) {
    if (axis < 1 || axis > n) throw std::invalid_argument("fixed axis out of range");
    const auto& iv = parent_.interval(axis);
    if (value != iv.first && value != iv.second)
      throw std::invalid_argument("fixed value is not a box endpoint");
  }
  for (int axis = 1; axis <= n; ++axis) {
    if (!fixed_.count(axis)) free_axes_.push_back(axis);
  }
}

Box CubeFace::face_box() const {
  std::vector<std::pair<Rational, Rational>> iv;
  iv.reserve(free_axes_.size());
  for (int axis : free_axes_) iv.push_back(parent_.interval(axis));
  return Box(std::move(iv));
}

std::vector<CubeFace> faces(const Box& T, int d) {
  const int n = T.dimension();
  if (d < 0 || d > n) throw std::domain_error("face dimension out of range");
  std::vector<CubeFace> out;
  const int m = n - d;
  for (const IndexSet& fixed_axes : index_sets(n, m)) {
    for (long mask = 0; mask < (1L << m); ++mask) {
      std::map<int, Rational> fixed;
      for (int i = 0; i < m; ++i) {
        const int axis = fixed_axes[i];
        const bool high = (mask >> (m - 1 - i)) & 1;  // first axis most significant
        const auto& iv = T.interval(axis);
        fixed.emplace(axis, high ? iv.second : iv.first);
      }
      out.emplace_back(T, std::move(fixed));
    }
  }
  return out;
}

Rational integrate_top_form(const DiffForm& w, const Box& domain) {
  const int d = domain.dimension();
  if (w.dimension() != d)
    throw std::domain_error("integrand dimension does not match the domain");
  Rational total(0);
  for (const auto& [m, c] : w.terms()) {
    if (m.form_degree() != d)
      throw std::domain_error("integrand is not a top-degree form");
    for (int pos = 0; pos < d; ++pos) {
      if (m.sigma[pos] != pos + 1)
        throw std::domain_error("integrand carries a non-top alternator");
    }
    Rational factor = c;
    for (int axis = 1; axis <= d; ++axis) {
      const auto& [lo, hi] = domain.interval(axis);
      const int p = m.alpha[axis];
      factor *= (rat_pow(hi, p + 1) - rat_pow(lo, p + 1)) / Rational(p + 1);
    }
    total += factor;
  }
  return total;
}

DiffForm trace_to_face(const DiffForm& w, const CubeFace& f) {
  if (w.dimension() != f.parent_dimension())
    throw std::domain_error("form does not live on the face's parent box");
  DiffForm out = w;
  int removed = 0;
  for (const auto& [axis, value] : f.fixed()) {
    out = trace_hyperplane(out, axis - removed, value);
    ++removed;
  }
  return out;
}

DofSet make_dofs(const Box& T, int r, int k) {
  const int n = T.dimension();
  DofSet set{n, r, k, {}};
  const int dmax = std::min(n, r / 2 + k);
  for (int d = k; d <= dmax; ++d) {
    const SpaceBasis weights = basis_P(d, r - 2 * (d - k), d - k);
    if (weights.dim() == 0) continue;
    for (const CubeFace& f : faces(T, d)) {
      for (const DiffForm& nu : weights.forms()) set.dofs.push_back({f, nu});
    }
  }
  return set;
}

Rational eval_dof(const DiffForm& mu, const DofFunctional& dof) {
  const DiffForm tr = trace_to_face(mu, dof.face);
  return integrate_top_form(wedge(tr, dof.weight), dof.face.face_box());
}

RationalMatrix dof_matrix(const SpaceBasis& basis, const DofSet& dofs) {
  RationalMatrix M(static_cast<long>(dofs.dofs.size()), basis.dim());
  for (long j = 0; j < basis.dim(); ++j) {
    const DiffForm& b = basis.forms()[j];
    for (std::size_t i = 0; i < dofs.dofs.size(); ++i) {
      M.at(static_cast<long>(i), j) = eval_dof(b, dofs.dofs[i]);
    }
  }
  return M;
}

RationalMatrix dof_matrix(const Box& T, int r, int k) {
  return dof_matrix(basis_S(T.dimension(), r, k), make_dofs(T, r, k));
}

UnisolvenceReport certify_unisolvence(const Box& T, int r, int k) {
  const int n = T.dimension();
  UnisolvenceReport rep;
  rep.n = n;
  rep.r = r;
  rep.k = k;
  rep.dim_formula = dim_S_formula(n, r, k);
  const SpaceBasis basis = basis_S(n, r, k);
  const DofSet dofs = make_dofs(T, r, k);
  rep.dim_basis = basis.dim();
  rep.n_dofs = static_cast<long>(dofs.dofs.size());
  rep.dimension_ok =
      (rep.dim_basis == rep.dim_formula) && (rep.n_dofs == rep.dim_formula);
  const RationalMatrix M = dof_matrix(basis, dofs);
  rep.matrix_nonsingular = (M.rows() == M.cols()) && (M.rank() == M.rows());
  return rep;
}

UnisolvenceReport certify_unisolvence(int n, int r, int k) {
  return certify_unisolvence(Box::reference(n), r, k);
}

std::vector<DiffForm> vanishing_trace_basis(int n, int r, int k) {
  const Box T = Box::reference(n);
  const SpaceBasis basis = basis_S(n, r, k);
  const std::vector<CubeFace> facets = faces(T, n - 1);

  using Key = std::pair<int, FormMonomial>;
  SparseEchelon<Key> stacked(true);
  std::vector<SparseEchelon<Key>::Combo> kernel;
  for (const DiffForm& b : basis.forms()) {
    SparseEchelon<Key>::Vec v;
    for (std::size_t t = 0; t < facets.size(); ++t) {
      const DiffForm tr = trace_to_face(b, facets[t]);
      for (const auto& [m, c] : tr.terms()) v.emplace(Key(static_cast<int>(t), m), c);
    }
    auto res = stacked.insert(std::move(v));
    if (!res.independent) kernel.push_back(std::move(res.combo));
  }

  FormEchelon ring(n, k);
  for (const auto& combo : kernel) {
    std::vector<Rational> coeffs(basis.dim(), Rational(0));
    for (const auto& [idx, c] : combo) coeffs[static_cast<std::size_t>(idx)] = c;
    ring.insert(basis.combine(coeffs));
  }
  ring.finalize();
  return ring.forms();
}

VanishingTraceReport certify_vanishing_trace_unisolvence(int n, int r, int k) {
  VanishingTraceReport rep;
  rep.n = n;
  rep.r = r;
  rep.k = k;
  const Box T = Box::reference(n);
  const std::vector<DiffForm> ring = vanishing_trace_basis(n, r, k);
  const SpaceBasis weights = basis_P(n, r - 2 * (n - k), n - k);
  rep.ring_dim = static_cast<long>(ring.size());
  rep.n_weights = weights.dim();
  RationalMatrix M(rep.n_weights, rep.ring_dim);
  for (long i = 0; i < rep.n_weights; ++i) {
    for (long j = 0; j < rep.ring_dim; ++j) {
      M.at(i, j) = integrate_top_form(wedge(ring[j], weights.forms()[i]), T);
    }
  }
  rep.full_column_rank = (M.rank() == rep.ring_dim);
  rep.square = (rep.n_weights == rep.ring_dim);
  return rep;
}

Projector::Projector(const Box& T, int r, int k)
    : basis_(basis_S(T.dimension(), r, k)), dofs_(make_dofs(T, r, k)) {
  if (static_cast<long>(dofs_.dofs.size()) != basis_.dim())
    throw std::logic_error("degree-of-freedom count differs from the basis dimension");
  inverse_ = dof_matrix(basis_, dofs_).inverse();
}

DiffForm Projector::operator()(const DiffForm& mu) const {
  std::vector<Rational> coeffs(dofs_.dofs.size(), Rational(0));
  for (std::size_t i = 0; i < dofs_.dofs.size(); ++i) {
    const Rational v = eval_dof(mu, dofs_.dofs[i]);
    if (v == 0) continue;
    for (long j = 0; j < inverse_.cols(); ++j) {
      coeffs[j] += inverse_.at(j, static_cast<long>(i)) * v;
    }
  }
  return basis_.combine(coeffs);
}

CheckReport certify_commuting_diagram(int n, int r, int samples_per_k,
                                      unsigned long long seed) {
  if (r < n) throw std::domain_error("commuting diagram needs r >= n");
  CheckReport rep;
  const Box T = Box::reference(n);
  FormSampler sampler(seed);
  for (int k = 0; k < n; ++k) {
    const Projector pk(T, r - k, k);
    const Projector pk1(T, r - k - 1, k + 1);
    for (int t = 0; t < samples_per_k; ++t) {
      const DiffForm mu = sampler.polynomial_form(n, r + 2, k, 4);
      if (!(pk1(exterior_derivative(mu)) == exterior_derivative(pk(mu)))) {
        rep.pass = false;
        std::ostringstream os;
        os << "projection does not commute with d at k = " << k << ", sample " << t;
        rep.detail = os.str();
        return rep;
      }
    }
  }
  return rep;
}

bool CohomologyReport::contractible_profile() const {
  for (std::size_t i = 0; i < defects.size(); ++i) {
    if (defects[i] != (i == 0 ? 1 : 0)) return false;
  }
  return !defects.empty();
}

CohomologyReport complex_cohomology_on_cube(int n, int r) {
  if (r < n) throw std::domain_error("cube complex needs r >= n");
  CohomologyReport rep;
  std::vector<SpaceBasis> bases;
  bases.reserve(n + 1);
  for (int k = 0; k <= n; ++k) bases.push_back(basis_S(n, r - k, k));

  std::vector<RationalMatrix> D;  // D[k]: coordinates of d on basis k
  for (int k = 0; k < n; ++k) {
    RationalMatrix Dk(bases[k + 1].dim(), bases[k].dim());
    for (long j = 0; j < bases[k].dim(); ++j) {
      const DiffForm df = exterior_derivative(bases[k].forms()[j]);
      const auto coords = bases[k + 1].coordinates(df);
      if (!coords) {
        rep.subcomplex_ok = false;
        return rep;
      }
      for (long i = 0; i < bases[k + 1].dim(); ++i) Dk.at(i, j) = (*coords)[i];
    }
    D.push_back(std::move(Dk));
  }
  for (int k = 0; k + 1 < n; ++k) {
    if (!D[k + 1].multiply(D[k]).is_zero()) rep.products_vanish = false;
  }
  std::vector<long> rank(n, 0);
  for (int k = 0; k < n; ++k) rank[k] = D[k].rank();
  rep.defects.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    const long ker = (k < n) ? bases[k].dim() - rank[k] : bases[k].dim();
    const long img = (k > 0) ? rank[k - 1] : 0;
    rep.defects[k] = ker - img;
  }
  return rep;
}

std::array<DiffForm, 3> vector_proxy_3d(const DiffForm& mu) {
  if (mu.dimension() != 3) throw std::domain_error("vector proxy needs n = 3");
  const int k = mu.form_degree();
  if (k != 1 && k != 2) throw std::domain_error("vector proxy needs k in {1,2}");
  std::array<DiffForm, 3> out = {DiffForm(3, 0), DiffForm(3, 0), DiffForm(3, 0)};
  for (const auto& [m, c] : mu.terms()) {
    const FormMonomial scalar(m.alpha, IndexSet{});
    if (k == 1) {
      out[m.sigma[0] - 1].add_term(scalar, c);
    } else {
      // theta_1 = dx_23, theta_2 = -dx_13, theta_3 = dx_12
      const int i = m.sigma[0], j = m.sigma[1];
      if (i == 2 && j == 3) out[0].add_term(scalar, c);
      if (i == 1 && j == 3) out[1].add_term(scalar, -c);
      if (i == 1 && j == 2) out[2].add_term(scalar, c);
    }
  }
  return out;
}

DiffForm form_from_proxy_3d(const std::array<DiffForm, 3>& components, int k) {
  if (k != 1 && k != 2) throw std::domain_error("vector proxy needs k in {1,2}");
  DiffForm out(3, k);
  for (int i = 0; i < 3; ++i) {
    if (components[i].dimension() != 3 || components[i].form_degree() != 0)
      throw std::domain_error("proxy components must be 0-forms in 3 variables");
    IndexSet sigma;
    Rational sign(1);
    if (k == 1) {
      sigma = IndexSet({i + 1});
    } else {
      if (i == 0) sigma = IndexSet({2, 3});
      if (i == 1) {
        sigma = IndexSet({1, 3});
        sign = -1;
      }
      if (i == 2) sigma = IndexSet({1, 2});
    }
    for (const auto& [m, c] : components[i].terms()) {
      out.add_term(FormMonomial(m.alpha, sigma), sign * c);
    }
  }
  return out;
}

}  // namespace cubefec
