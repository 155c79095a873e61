# Copyright (c) the cubefec contributors
# SPDX-License-Identifier: Apache-2.0
"""Exact-arithmetic S-family finite element differential forms on cubes.

Forms are plain dicts mirroring the JSON wire format:
``{"n": int, "k": int, "terms": [{"num": str, "den": str,
"alpha": [int, ...], "sigma": [int, ...]}, ...]}``.
"""

from cubefec._core import (
    __version__,
    assemble_dim,
    basis_P,
    basis_S,
    certify_unisolvence,
    certify_vanishing_trace_unisolvence,
    count_A,
    cube_cohomology,
    dim_S_formula,
    dof_count,
    exterior_derivative,
    homotopy_apply,
    koszul,
    ldeg,
    mesh_cohomology,
    mesh_continuity,
    project,
    span_J,
    trace_hyperplane,
    verify_degree_property,
    verify_inclusion,
    verify_koszul_exactness,
    verify_subcomplex,
    verify_trace,
    wedge,
)

__all__ = [
    "__version__",
    "assemble_dim",
    "basis_P",
    "basis_S",
    "certify_unisolvence",
    "certify_vanishing_trace_unisolvence",
    "count_A",
    "cube_cohomology",
    "dim_S_formula",
    "dof_count",
    "exterior_derivative",
    "homotopy_apply",
    "koszul",
    "ldeg",
    "mesh_cohomology",
    "mesh_continuity",
    "project",
    "span_J",
    "trace_hyperplane",
    "verify_degree_property",
    "verify_inclusion",
    "verify_koszul_exactness",
    "verify_subcomplex",
    "verify_trace",
    "wedge",
]
