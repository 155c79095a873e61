# Copyright (c) the cubefec contributors
# SPDX-License-Identifier: Apache-2.0
"""Smoke tests for the python bindings."""

from math import comb

import cubefec


def form(n, k, terms):
    return {
        "n": n,
        "k": k,
        "terms": [
            {"num": str(num), "den": str(den), "alpha": list(alpha), "sigma": list(sigma)}
            for num, den, alpha, sigma in terms
        ],
    }


def test_dimension_formula():
    assert cubefec.dim_S_formula(3, 2, 1) == 48
    assert cubefec.dim_S_formula(4, 7, 2) == 2418
    assert cubefec.dim_S_formula(2, 4, 0) == 17
    for n in range(1, 4):
        for k in range(n + 1):
            for r in range(1, 5):
                assert comb(n, k) * cubefec.count_A(n, r, k) == cubefec.dim_S_formula(
                    n, r, k
                )


def test_basis_construction():
    basis = cubefec.basis_S(3, 1, 2)
    assert basis["dim"] == 18
    assert len(basis["forms"]) == 18
    assert cubefec.basis_S(3, 1, 2) == basis  # deterministic


def test_exterior_operations():
    x1_dx2 = form(2, 1, [(1, 1, (1, 0), (2,))])
    d = cubefec.exterior_derivative(x1_dx2)
    assert d == form(2, 2, [(1, 1, (0, 0), (1, 2))])
    assert cubefec.exterior_derivative(d)["terms"] == []

    w = form(3, 1, [(1, 1, (1, 1, 0), (3,))])  # x1 x2 dx3
    hom = cubefec.homotopy_apply(w)
    assert hom == form(3, 1, [(3, 1, (1, 1, 0), (3,))])
    assert cubefec.ldeg(w) == 2

    tr = cubefec.trace_hyperplane(w, 1, "1")
    assert tr == form(2, 1, [(1, 1, (1, 0), (2,))])


def test_koszul_exactness():
    rep = cubefec.verify_koszul_exactness(3, 3, 1, 1)
    assert rep["pass"]
    assert rep["dim_img_in"] + rep["dim_img_mid"] == rep["dim_mid"]


def test_unisolvence_and_projection():
    assert cubefec.certify_unisolvence(2, 2, 1)["pass"]
    assert cubefec.dof_count(3, 1, 1) == 24

    basis = cubefec.basis_S(2, 1, 1)
    f = basis["forms"][0]
    assert cubefec.project(f, 1, 1) == f

    x_sq = form(1, 0, [(1, 1, (2,), ())])
    proj = cubefec.project(x_sq, 1, 0)  # affine interpolant of x^2 at +-1
    assert proj == form(1, 0, [(1, 1, (0,), ())])


def test_space_properties():
    assert cubefec.verify_degree_property(3, 2, 1)["pass"]
    assert cubefec.verify_subcomplex(3, 2, 1)["pass"]
    assert cubefec.verify_inclusion(2, 1, 1)["pass"]
    assert cubefec.verify_trace(2, 2, 1)["pass"]
    assert cubefec.certify_vanishing_trace_unisolvence(2, 2, 1)["full_column_rank"]


def test_mesh_level():
    assert cubefec.assemble_dim([2, 1], 1, 0) == 6
    assert cubefec.mesh_continuity([2, 1, 1], 1, 2)
    coh = cubefec.mesh_cohomology([2, 2], 2)
    assert coh["defects"] == [1, 0, 0]
    assert coh["pass"]
    cube = cubefec.cube_cohomology(2, 3)
    assert cube["defects"] == [1, 0, 0]
