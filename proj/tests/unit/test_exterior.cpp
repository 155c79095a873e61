// Copyright (c) the cubefec contributors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubefec/diff_form.hpp"
#include "cubefec/json_io.hpp"
#include "cubefec/sampling.hpp"
#include "cubefec/spaces.hpp"

using namespace cubefec;

namespace {

DiffForm monomial_form(int n, std::vector<int> alpha, std::vector<int> sigma,
                       long num = 1, long den = 1) {
  return DiffForm(n, FormMonomial(MultiIndex(std::move(alpha)), IndexSet(std::move(sigma))),
                  rat(num, den));
}

// 0-form helpers for the coordinate-formula oracle below.
DiffForm coefficient_of(const DiffForm& w, const IndexSet& sigma) {
  DiffForm out(w.dimension(), 0);
  for (const auto& [m, c] : w.terms()) {
    if (m.sigma == sigma) out.add_term(FormMonomial(m.alpha, IndexSet{}), c);
  }
  return out;
}

DiffForm partial(const DiffForm& p, int q) {
  DiffForm out(p.dimension(), 0);
  for (const auto& [m, c] : p.terms()) {
    if (m.alpha[q] == 0) continue;
    out.add_term(FormMonomial(m.alpha.bump(q, -1), IndexSet{}), c * m.alpha[q]);
  }
  return out;
}

DiffForm times_x(const DiffForm& p, int q) {
  DiffForm out(p.dimension(), 0);
  for (const auto& [m, c] : p.terms()) {
    out.add_term(FormMonomial(m.alpha.bump(q, 1), IndexSet{}), c);
  }
  return out;
}

DiffForm embed(const DiffForm& p, const IndexSet& sigma) {
  DiffForm out(p.dimension(), sigma.size());
  for (const auto& [m, c] : p.terms()) out.add_term(FormMonomial(m.alpha, sigma), c);
  return out;
}

// Independent expansion of kappa(d w) straight from the coordinate formula
// mu_sigma = sum_q [ x_q d_q w_sigma + sum_p eps(q,p,sigma) x_q d_p w_{sigma+q-p} ].
DiffForm koszul_d_oracle(const DiffForm& w) {
  const int n = w.dimension();
  const int k = w.form_degree();
  DiffForm out(n, k);
  for (const IndexSet& sigma : index_sets(n, k)) {
    DiffForm mu(n, 0);
    for (int q : sigma.complement(n)) {
      mu += times_x(partial(coefficient_of(w, sigma), q), q);
      for (int p : sigma.indices()) {
        DiffForm t = times_x(partial(coefficient_of(w, sigma.insert(q).erase(p)), p), q);
        t *= Rational(eps2(q, p, sigma));
        mu += t;
      }
    }
    out += embed(mu, sigma);
  }
  return out;
}

}  // namespace

TEST_CASE("sign function eps") {
  CHECK(eps(1, IndexSet({2, 3})) == 1);
  CHECK(eps(2, IndexSet({1, 3})) == -1);
  CHECK(eps(4, IndexSet({1, 2, 3})) == -1);
  CHECK_THROWS_AS(eps(2, IndexSet({1, 2})), std::domain_error);
}

TEST_CASE("sign function eps2 and its identity") {
  CHECK(eps2(2, 1, IndexSet({1, 3})) == -1);
  CHECK(eps2(1, 3, IndexSet({2, 3})) == 1);
  CHECK_THROWS_AS(eps2(1, 3, IndexSet({1, 3})), std::domain_error);
  CHECK_THROWS_AS(eps2(2, 2, IndexSet({1, 3})), std::domain_error);

  // eps2(q,p,sigma) = -eps(p,sigma-p) eps(q,sigma-p), exhaustively for n <= 5.
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k < n; ++k) {
      for (const IndexSet& sigma : index_sets(n, k)) {
        for (int q : sigma.complement(n)) {
          for (int p : sigma.indices()) {
            const IndexSet rest = sigma.erase(p);
            CHECK(eps2(q, p, sigma) == -eps(p, rest) * eps(q, rest));
          }
        }
      }
    }
  }
}

TEST_CASE("wedge product") {
  const DiffForm dx1 = DiffForm::alternator(2, IndexSet({1}));
  const DiffForm dx2 = DiffForm::alternator(2, IndexSet({2}));
  CHECK(wedge(dx1, dx2) == DiffForm::alternator(2, IndexSet({1, 2})));
  CHECK(wedge(dx1, dx1).is_zero());

  const DiffForm a = monomial_form(2, {1, 0}, {2});  // x1 dx2
  const DiffForm b = monomial_form(2, {0, 1}, {1});  // x2 dx1
  CHECK(wedge(a, b) == monomial_form(2, {1, 1}, {1, 2}, -1));

  CHECK_THROWS_AS(wedge(DiffForm::one(2), DiffForm::one(3)), std::domain_error);

  FormSampler gen(11);
  for (int t = 0; t < 40; ++t) {
    const int n = gen.uniform(1, 4);
    const int ka = gen.uniform(0, n), kb = gen.uniform(0, n), kc = gen.uniform(0, n);
    const DiffForm u = gen.polynomial_form(n, 3, ka, 3);
    const DiffForm v = gen.polynomial_form(n, 3, kb, 3);
    const DiffForm z = gen.polynomial_form(n, 3, kc, 3);
    // graded anticommutativity and associativity
    DiffForm vu = wedge(v, u);
    if ((ka * kb) % 2 != 0) vu *= rat(-1);
    CHECK(wedge(u, v) == vu);
    CHECK(wedge(wedge(u, v), z) == wedge(u, wedge(v, z)));
  }
}

TEST_CASE("exterior derivative") {
  CHECK(exterior_derivative(monomial_form(2, {1, 0}, {2})) ==
        monomial_form(2, {0, 0}, {1, 2}));  // d(x1 dx2) = dx1^dx2
  DiffForm expected(2, 1);
  expected.add_term(FormMonomial(MultiIndex({0, 1}), IndexSet({1})), rat(1));
  expected.add_term(FormMonomial(MultiIndex({1, 0}), IndexSet({2})), rat(1));
  CHECK(exterior_derivative(monomial_form(2, {1, 1}, {})) == expected);
  CHECK(exterior_derivative(exterior_derivative(monomial_form(3, {2, 1, 0}, {3})))
            .is_zero());

  FormSampler gen(12);
  for (int t = 0; t < 60; ++t) {
    const int n = gen.uniform(1, 4);
    const int k = gen.uniform(0, n);
    const DiffForm w = gen.polynomial_form(n, 6, k, 4);
    CHECK(exterior_derivative(exterior_derivative(w)).is_zero());
  }
}

TEST_CASE("Koszul differential") {
  DiffForm expected(2, 1);
  expected.add_term(FormMonomial(MultiIndex({1, 0}), IndexSet({2})), rat(1));
  expected.add_term(FormMonomial(MultiIndex({0, 1}), IndexSet({1})), rat(-1));
  CHECK(koszul(DiffForm::alternator(2, IndexSet({1, 2}))) == expected);

  CHECK(koszul(monomial_form(3, {0, 0, 1}, {3})) == monomial_form(3, {0, 0, 2}, {}));
  CHECK(koszul(koszul(DiffForm::alternator(3, IndexSet({1, 2, 3})))).is_zero());

  FormSampler gen(13);
  for (int t = 0; t < 60; ++t) {
    const int n = gen.uniform(1, 4);
    const int k = gen.uniform(0, n);
    const DiffForm w = gen.polynomial_form(n, 6, k, 4);
    CHECK(koszul(koszul(w)).is_zero());

    // graded Leibniz rule
    const int l = gen.uniform(0, n);
    const DiffForm e = gen.polynomial_form(n, 4, l, 3);
    DiffForm rhs = wedge(koszul(w), e);
    DiffForm second = wedge(w, koszul(e));
    if (k % 2 != 0) second *= rat(-1);
    rhs += second;
    CHECK(koszul(wedge(w, e)) == rhs);
  }
}

TEST_CASE("homotopy formula") {
  const DiffForm w = monomial_form(3, {1, 1, 0}, {3});  // x1 x2 dx3, r=2, k=1
  DiffForm three_w = w;
  three_w *= rat(3);
  CHECK(homotopy_apply(w) == three_w);
  CHECK(homotopy_apply(DiffForm::one(2)).is_zero());

  DiffForm mixed = DiffForm::one(2);
  mixed += DiffForm::coordinate(2, 1);
  CHECK_THROWS_AS(homotopy_apply(mixed), std::domain_error);

  FormSampler gen(14);
  for (int t = 0; t < 120; ++t) {
    const int n = gen.uniform(1, 4);
    const int k = gen.uniform(0, n);
    const int r = gen.uniform(0, 6);
    const DiffForm h = gen.homogeneous_form(n, r, k, 4);
    DiffForm scaled = h;
    scaled *= rat(r + k);
    DiffForm lhs = exterior_derivative(koszul(h));
    lhs += koszul(exterior_derivative(h));
    CHECK(lhs == scaled);
    CHECK(homotopy_apply(h) == scaled);
  }
}

TEST_CASE("composition kappa d matches its coordinate formula") {
  FormSampler gen(15);
  for (int t = 0; t < 60; ++t) {
    const int n = gen.uniform(1, 4);
    const int k = gen.uniform(0, n);
    const DiffForm w = gen.polynomial_form(n, 5, k, 4);
    CHECK(koszul(exterior_derivative(w)) == koszul_d_oracle(w));
  }
}

TEST_CASE("linear degree") {
  CHECK(ldeg(monomial_form(3, {2, 1, 3}, {})) == 1);
  CHECK(ldeg(monomial_form(3, {1, 2, 0}, {2})) == 1);
  CHECK(ldeg(monomial_form(1, {1}, {1})) == 0);
  CHECK_THROWS_AS(ldeg(DiffForm::zero(2, 0)), std::domain_error);
  CHECK(ldeg_at_least(DiffForm::zero(2, 0), 5));
}

TEST_CASE("kappa and kappa-d-kappa do not decrease linear degree") {
  FormSampler gen(16);
  for (int t = 0; t < 120; ++t) {
    const int n = gen.uniform(1, 4);
    const int k = gen.uniform(0, n);
    const DiffForm w = gen.polynomial_form(n, 6, k, 4);
    if (w.is_zero()) continue;
    const int l = ldeg(w);
    CHECK(ldeg_at_least(koszul(w), l));
    CHECK(ldeg_at_least(koszul(exterior_derivative(koszul(w))), l));
  }
}

TEST_CASE("hyperplane traces") {
  CHECK(trace_hyperplane(monomial_form(3, {1, 1, 0}, {1}), 1, rat(1)).is_zero());
  CHECK(trace_hyperplane(monomial_form(3, {1, 1, 0}, {2}), 1, rat(1)) ==
        monomial_form(2, {1, 0}, {1}));
  CHECK(trace_hyperplane(monomial_form(3, {0, 2, 0}, {1, 3}), 2, rat(-1)) ==
        monomial_form(2, {0, 0}, {1, 2}));
  // x2 = 0 kills terms that depend on x2
  CHECK(trace_hyperplane(monomial_form(2, {1, 1}, {}), 2, rat(0)).is_zero());

  FormSampler gen(17);
  for (int t = 0; t < 80; ++t) {
    const int n = gen.uniform(2, 4);
    const int k = gen.uniform(0, n - 1);
    const DiffForm w = gen.polynomial_form(n, 5, k, 4);
    const int axis = gen.uniform(1, n);
    const Rational c = rat(gen.uniform(-1, 1));
    CHECK(trace_hyperplane(exterior_derivative(w), axis, c) ==
          exterior_derivative(trace_hyperplane(w, axis, c)));
  }
}

TEST_CASE("JSON round trip and canonical bytes") {
  DiffForm f(2, 1);
  f.add_term(FormMonomial(MultiIndex({1, 0}), IndexSet({2})), rat(-3, 2));
  f.add_term(FormMonomial(MultiIndex({0, 0}), IndexSet({1})), rat(5));
  const auto j = form_to_json(f);
  CHECK(form_from_json(j) == f);
  CHECK(j.dump() ==
        R"({"n":2,"k":1,"terms":[{"num":"5","den":"1","alpha":[0,0],"sigma":[1]},)"
        R"({"num":"-3","den":"2","alpha":[1,0],"sigma":[2]}]})");

  FormSampler gen(18);
  for (int t = 0; t < 40; ++t) {
    const int n = gen.uniform(1, 4);
    const DiffForm w = gen.polynomial_form(n, 5, gen.uniform(0, n), 4);
    CHECK(form_from_json(form_to_json(w)) == w);
  }
}
