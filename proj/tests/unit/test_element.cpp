// Copyright (c) the cubefec contributors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubefec/element.hpp"
#include "cubefec/sampling.hpp"

using namespace cubefec;

namespace {

DiffForm monomial_form(int n, std::vector<int> alpha, std::vector<int> sigma,
                       long num = 1, long den = 1) {
  return DiffForm(n, FormMonomial(MultiIndex(std::move(alpha)), IndexSet(std::move(sigma))),
                  rat(num, den));
}

}  // namespace

TEST_CASE("face enumeration") {
  const Box I3 = Box::reference(3);
  CHECK(faces(I3, 2).size() == 6);
  CHECK(faces(I3, 0).size() == 8);
  CHECK(faces(I3, 3).size() == 1);
  CHECK(faces(Box::reference(4), 1).size() == 32);
  CHECK_THROWS_AS(faces(I3, 4), std::domain_error);

  // normative order: first facet fixes axis 1 at the low end
  const CubeFace first = faces(I3, 2).front();
  REQUIRE(first.fixed().size() == 1);
  CHECK(first.fixed().begin()->first == 1);
  CHECK(first.fixed().begin()->second == rat(-1));
  CHECK(first.free_axes() == std::vector<int>{2, 3});
}

TEST_CASE("exact integration of top forms") {
  CHECK(integrate_top_form(monomial_form(1, {1}, {1}), Box::reference(1)) == rat(0));
  CHECK(integrate_top_form(monomial_form(2, {2, 2}, {1, 2}), Box::reference(2)) ==
        rat(4, 9));
  CHECK(integrate_top_form(monomial_form(3, {0, 0, 0}, {1, 2, 3}), Box::reference(3)) ==
        rat(8));
  CHECK_THROWS_AS(integrate_top_form(monomial_form(2, {0, 0}, {1}), Box::reference(2)),
                  std::domain_error);
}

TEST_CASE("face traces are independent of the substitution order") {
  FormSampler gen(21);
  const Box I3 = Box::reference(3);
  for (int t = 0; t < 30; ++t) {
    const DiffForm w = gen.polynomial_form(3, 4, gen.uniform(0, 1), 4);
    const CubeFace f(I3, {{1, rat(-1)}, {3, rat(1)}});
    // axis 1 then axis 3 (which has shifted to 2), and the other way round
    const DiffForm a = trace_hyperplane(trace_hyperplane(w, 1, rat(-1)), 2, rat(1));
    const DiffForm b = trace_hyperplane(trace_hyperplane(w, 3, rat(1)), 1, rat(-1));
    CHECK(a == b);
    CHECK(trace_to_face(w, f) == a);
  }
}

TEST_CASE("degree-of-freedom evaluation") {
  // vertex values of 0-forms are point evaluations
  const Box I2 = Box::reference(2);
  const DofSet set2 = make_dofs(I2, 1, 0);
  REQUIRE(set2.dofs.size() == 4);
  const DiffForm f = monomial_form(2, {1, 1}, {});  // x1 x2
  CHECK(eval_dof(f, set2.dofs[0]) == rat(1));   // (-1,-1)
  CHECK(eval_dof(f, set2.dofs[1]) == rat(-1));  // (-1,+1)
  CHECK(eval_dof(f, set2.dofs[2]) == rat(-1));  // (+1,-1)
  CHECK(eval_dof(f, set2.dofs[3]) == rat(1));   // (+1,+1)

  // n=1, r=1, k=0: mu = x has vertex values (-1, +1)
  const DofSet set1 = make_dofs(Box::reference(1), 1, 0);
  REQUIRE(set1.dofs.size() == 2);
  const DiffForm x = DiffForm::coordinate(1, 1);
  CHECK(eval_dof(x, set1.dofs[0]) == rat(-1));
  CHECK(eval_dof(x, set1.dofs[1]) == rat(1));

  // n=2, k=1, r=1: mu = dx1 against the bottom edge (x2 = -1), weight 1
  const CubeFace bottom(I2, {{2, rat(-1)}});
  const DofFunctional dof{bottom, DiffForm::one(1)};
  CHECK(eval_dof(DiffForm::alternator(2, IndexSet({1})), dof) == rat(2));
}

TEST_CASE("moment matrices on the interval") {
  // (1,1,0): vertex values against the basis {1, x}
  const RationalMatrix M = dof_matrix(Box::reference(1), 1, 0);
  REQUIRE(M.rows() == 2);
  REQUIRE(M.cols() == 2);
  CHECK(M.at(0, 0) == rat(1));
  CHECK(M.at(0, 1) == rat(-1));
  CHECK(M.at(1, 0) == rat(1));
  CHECK(M.at(1, 1) == rat(1));
  CHECK(M.rank() == 2);

  // (1,r,1): cell moments against P_r, exact Gram-type matrices
  for (int r = 1; r <= 4; ++r) {
    const RationalMatrix G = dof_matrix(Box::reference(1), r, 1);
    CHECK(G.rows() == r + 1);
    CHECK(G.rank() == r + 1);
  }
}

TEST_CASE("unisolvence certificates") {
  const auto rep311 = certify_unisolvence(3, 1, 1);
  CHECK(rep311.n_dofs == 24);
  CHECK(rep311.pass());

  for (int r = 1; r <= 3; ++r) CHECK(certify_unisolvence(2, r, 1).pass());
  for (int k = 0; k <= 4; ++k) CHECK(certify_unisolvence(4, 1, k).pass());

  // verdicts survive dilation and translation of the box
  for (auto [n, r, k] : {std::tuple{2, 2, 1}, std::tuple{3, 1, 2}}) {
    CHECK(certify_unisolvence(Box::unit(n), r, k).pass());
    std::vector<std::pair<Rational, Rational>> iv(n, {rat(1, 2), rat(7, 2)});
    CHECK(certify_unisolvence(Box(iv), r, k).pass());
  }
}

TEST_CASE("vanishing-trace subspace") {
  // on the interval: polynomials divisible by (1 - x^2)
  for (int r = 1; r <= 4; ++r) {
    CHECK(vanishing_trace_basis(1, r, 0).size() == static_cast<std::size_t>(r - 1));
  }
  // top forms have no trace condition
  CHECK(vanishing_trace_basis(2, 2, 2).size() == 6);
  // interior dof count of the (3,2,2) element
  CHECK(vanishing_trace_basis(3, 2, 2).size() == 3);

  const auto rep332 = certify_vanishing_trace_unisolvence(3, 3, 2);
  CHECK(rep332.n_weights == 12);
  CHECK(rep332.full_column_rank);
  const auto rep221 = certify_vanishing_trace_unisolvence(2, 2, 1);
  CHECK(rep221.n_weights == 2);
  CHECK(rep221.full_column_rank);

  // when the interior weight space is empty the kernel must be zero
  for (int n = 1; n <= 3; ++n) {
    for (int r = 1; r <= 4; ++r) {
      for (int k = 0; k <= n; ++k) {
        const auto rep = certify_vanishing_trace_unisolvence(n, r, k);
        CHECK(rep.pass());
        if (rep.n_weights == 0) CHECK(rep.ring_dim == 0);
      }
    }
  }
}

TEST_CASE("canonical projection") {
  const Projector p(Box::reference(1), 1, 0);
  CHECK(p(monomial_form(1, {2}, {})) == DiffForm::one(1));  // x^2 -> 1

  // identity on the space itself
  const Projector q(Box::reference(2), 2, 1);
  for (const DiffForm& f : q.basis().forms()) CHECK(q(f) == f);

  // linearity
  FormSampler gen(22);
  for (int t = 0; t < 10; ++t) {
    const DiffForm a = gen.polynomial_form(2, 4, 1, 3);
    const DiffForm b = gen.polynomial_form(2, 4, 1, 3);
    CHECK(q(a + b) == q(a) + q(b));
  }
}

TEST_CASE("projections commute with the exterior derivative") {
  // constants project to themselves, derivative vanishes on both paths
  const Projector p0(Box::reference(2), 2, 0);
  const Projector p1(Box::reference(2), 1, 1);
  const DiffForm c = DiffForm::one(2);
  CHECK(p1(exterior_derivative(c)).is_zero());
  CHECK(exterior_derivative(p0(c)).is_zero());

  // on S itself both sides are d mu (projection is the identity there and
  // d maps into the next space)
  for (const DiffForm& mu : basis_S(2, 2, 0).forms()) {
    CHECK(p1(exterior_derivative(mu)) == exterior_derivative(p0(mu)));
  }

  CHECK(certify_commuting_diagram(2, 2, 25, 5).pass);
  CHECK(certify_commuting_diagram(3, 3, 8, 5).pass);
}

TEST_CASE("de Rham complex on a single cube") {
  const auto rep12 = complex_cohomology_on_cube(1, 2);
  CHECK(rep12.defects == std::vector<long>{1, 0});
  CHECK(rep12.pass());
  const auto rep23 = complex_cohomology_on_cube(2, 3);
  CHECK(rep23.defects == std::vector<long>{1, 0, 0});
  CHECK(rep23.pass());
}

TEST_CASE("3-D vector proxies") {
  const DiffForm dx1 = DiffForm::alternator(3, IndexSet({1}));
  const auto v1 = vector_proxy_3d(dx1);
  CHECK(v1[0] == DiffForm::one(3));
  CHECK(v1[1].is_zero());
  CHECK(v1[2].is_zero());

  const DiffForm theta1 = DiffForm::alternator(3, IndexSet({2, 3}));
  const auto v2 = vector_proxy_3d(theta1);
  CHECK(v2[0] == DiffForm::one(3));
  CHECK(v2[1].is_zero());
  CHECK(v2[2].is_zero());

  CHECK_THROWS_AS(vector_proxy_3d(DiffForm::one(3)), std::domain_error);
  CHECK_THROWS_AS(vector_proxy_3d(DiffForm::alternator(2, IndexSet({1}))),
                  std::domain_error);

  FormSampler gen(23);
  for (int t = 0; t < 20; ++t) {
    for (int k : {1, 2}) {
      const DiffForm w = gen.polynomial_form(3, 4, k, 4);
      CHECK(form_from_proxy_3d(vector_proxy_3d(w), k) == w);
    }
  }
}

namespace {

// The middle term of the 3-D vector-proxy descriptions: the 1-form with
// components (x2 x3 (w2 - w3), x3 x1 (w3 - w1), x1 x2 (w1 - w2)) where exactly
// one w slot holds the monomial `m` (independent of that slot's variable).
DiffForm middle_term(int slot, const MultiIndex& m) {
  std::array<DiffForm, 3> w = {DiffForm(3, 0), DiffForm(3, 0), DiffForm(3, 0)};
  w[slot].add_term(FormMonomial(m, IndexSet{}), rat(1));
  std::array<DiffForm, 3> comp;
  const int pairs[3][2] = {{2, 3}, {3, 1}, {1, 2}};
  for (int i = 0; i < 3; ++i) {
    const int a = pairs[i][0], b = pairs[i][1];
    DiffForm factor = w[a - 1] - w[b - 1];
    DiffForm xa = DiffForm::coordinate(3, a);
    DiffForm xb = DiffForm::coordinate(3, b);
    comp[i] = wedge(wedge(xa, xb), factor);
  }
  return form_from_proxy_3d(comp, 1);
}

}  // namespace

TEST_CASE("3-D shape-function descriptions through vector proxies") {
  // 2-forms: P_r vectors plus curls of the middle term with w_i in P_r
  for (int r = 1; r <= 2; ++r) {
    FormEchelon span(3, 2);
    for (const DiffForm& f : basis_P(3, r, 2).forms()) span.insert(f);
    for (int slot = 0; slot < 3; ++slot) {
      for (int deg = 0; deg <= r; ++deg) {
        for (const MultiIndex& m : multi_indices_of_degree(3, deg)) {
          if (m[slot + 1] != 0) continue;
          const DiffForm u = exterior_derivative(middle_term(slot, m));
          if (!u.is_zero()) span.insert(u);
        }
      }
    }
    const SpaceBasis S = basis_S(3, r, 2);
    CHECK(span.dim() == S.dim());
    for (const DiffForm& f : S.forms()) CHECK(span.contains(f));
  }

  // 1-forms: P_r vectors, the middle term with w_i in P_{r-1}, and gradients
  // of polynomials of superlinear degree at most r+1
  for (int r = 1; r <= 2; ++r) {
    FormEchelon span(3, 1);
    for (const DiffForm& f : basis_P(3, r, 1).forms()) span.insert(f);
    for (int slot = 0; slot < 3; ++slot) {
      for (int deg = 0; deg <= r - 1; ++deg) {
        for (const MultiIndex& m : multi_indices_of_degree(3, deg)) {
          if (m[slot + 1] != 0) continue;
          const DiffForm u = middle_term(slot, m);
          if (!u.is_zero()) span.insert(u);
        }
      }
    }
    for (int deg = 0; deg <= r + 4; ++deg) {
      for (const MultiIndex& m : multi_indices_of_degree(3, deg)) {
        const FormMonomial fm(m, IndexSet{});
        if (fm.degree() - fm.ldeg() > r + 1) continue;
        const DiffForm ds = exterior_derivative(DiffForm(3, fm, rat(1)));
        if (!ds.is_zero()) span.insert(ds);
      }
    }
    const SpaceBasis S = basis_S(3, r, 1);
    CHECK(span.dim() == S.dim());
    for (const DiffForm& f : S.forms()) CHECK(span.contains(f));
  }
}
