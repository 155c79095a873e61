// Copyright (c) the cubefec contributors
// SPDX-License-Identifier: Apache-2.0
//
// Python bindings for the main operations. Forms cross the boundary as plain
// dicts mirroring the JSON wire format: {"n", "k", "terms": [{"num", "den",
// "alpha", "sigma"}, ...]} with coefficients as decimal strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubefec/element.hpp"
#include "cubefec/mesh.hpp"
#include "cubefec/spaces.hpp"

namespace py = pybind11;
using namespace cubefec;

namespace {

py::dict form_to_py(const DiffForm& f) {
  py::list terms;
  for (const auto& [m, c] : f.terms()) {
    py::dict t;
    t["num"] = num_str(c);
    t["den"] = den_str(c);
    t["alpha"] = m.alpha.exponents();
    t["sigma"] = m.sigma.indices();
    terms.append(t);
  }
  py::dict d;
  d["n"] = f.dimension();
  d["k"] = f.form_degree();
  d["terms"] = terms;
  return d;
}

DiffForm form_from_py(const py::dict& d) {
  DiffForm f(d["n"].cast<int>(), d["k"].cast<int>());
  for (const auto& item : d["terms"].cast<py::list>()) {
    const py::dict t = item.cast<py::dict>();
    f.add_term(FormMonomial(MultiIndex(t["alpha"].cast<std::vector<int>>()),
                            IndexSet(t["sigma"].cast<std::vector<int>>())),
               rat_from_strings(t["num"].cast<std::string>(),
                                t["den"].cast<std::string>()));
  }
  return f;
}

py::dict basis_to_py(const SpaceBasis& b) {
  py::list forms;
  for (const DiffForm& f : b.forms()) forms.append(form_to_py(f));
  py::dict d;
  d["family"] = family_name(b.family());
  d["n"] = b.dimension();
  d["r"] = b.degree();
  d["k"] = b.form_degree();
  d["dim"] = b.dim();
  d["forms"] = forms;
  return d;
}

CubicalMesh mesh_from_grid(const std::vector<int>& grid) {
  MeshSpec spec;
  spec.n = static_cast<int>(grid.size());
  spec.grid = grid;
  return build_mesh(spec);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact-arithmetic S-family finite element differential forms on cubes";

  m.def("dim_S_formula", &dim_S_formula, py::arg("n"), py::arg("r"), py::arg("k"),
        "Degree-of-freedom count of S_r Lambda^k on an n-box");
  m.def("count_A", &count_A, py::arg("n"), py::arg("r"), py::arg("k"));

  m.def(
      "basis_S",
      [](int n, int r, int k) { return basis_to_py(basis_S(n, r, k)); },
      py::arg("n"), py::arg("r"), py::arg("k"),
      "Echelonized basis of S_r Lambda^k as a dict of forms");
  m.def(
      "basis_P",
      [](int n, int r, int k) { return basis_to_py(basis_P(n, r, k)); },
      py::arg("n"), py::arg("r"), py::arg("k"));
  m.def(
      "span_J",
      [](int n, int r, int k) { return basis_to_py(span_J(n, r, k)); },
      py::arg("n"), py::arg("r"), py::arg("k"));

  m.def(
      "exterior_derivative",
      [](const py::dict& f) { return form_to_py(exterior_derivative(form_from_py(f))); },
      py::arg("form"));
  m.def(
      "koszul",
      [](const py::dict& f) { return form_to_py(koszul(form_from_py(f))); },
      py::arg("form"));
  m.def(
      "wedge",
      [](const py::dict& a, const py::dict& b) {
        return form_to_py(wedge(form_from_py(a), form_from_py(b)));
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "trace_hyperplane",
      [](const py::dict& f, int axis, const std::string& value) {
        return form_to_py(trace_hyperplane(form_from_py(f), axis, rat_parse(value)));
      },
      py::arg("form"), py::arg("axis"), py::arg("value"));
  m.def(
      "homotopy_apply",
      [](const py::dict& f) { return form_to_py(homotopy_apply(form_from_py(f))); },
      py::arg("form"), "(d kappa + kappa d) on a homogeneous form");
  m.def(
      "ldeg", [](const py::dict& f) { return ldeg(form_from_py(f)); }, py::arg("form"));

  m.def(
      "project",
      [](const py::dict& f, int r, int k) {
        const DiffForm mu = form_from_py(f);
        return form_to_py(Projector(Box::reference(mu.dimension()), r, k)(mu));
      },
      py::arg("form"), py::arg("r"), py::arg("k"),
      "Canonical projection onto S_r Lambda^k on the reference box");

  m.def(
      "dof_count",
      [](int n, int r, int k) {
        return make_dofs(Box::reference(n), r, k).dofs.size();
      },
      py::arg("n"), py::arg("r"), py::arg("k"));

  m.def(
      "certify_unisolvence",
      [](int n, int r, int k) {
        const auto rep = certify_unisolvence(n, r, k);
        return py::dict(py::arg("dim_formula") = rep.dim_formula,
                        py::arg("dim_basis") = rep.dim_basis,
                        py::arg("n_dofs") = rep.n_dofs,
                        py::arg("dimension_ok") = rep.dimension_ok,
                        py::arg("matrix_nonsingular") = rep.matrix_nonsingular,
                        py::arg("pass") = rep.pass());
      },
      py::arg("n"), py::arg("r"), py::arg("k"));

  m.def(
      "verify_koszul_exactness",
      [](int n, int r, int l, int k) {
        const auto rep = verify_koszul_exactness(n, r, l, k);
        return py::dict(py::arg("dim_mid") = rep.dim_mid,
                        py::arg("dim_img_in") = rep.dim_img_in,
                        py::arg("dim_img_mid") = rep.dim_img_mid,
                        py::arg("pass") = rep.pass());
      },
      py::arg("n"), py::arg("r"), py::arg("l"), py::arg("k"));

  auto check_to_py = [](const CheckReport& rep) {
    return py::dict(py::arg("pass") = rep.pass, py::arg("detail") = rep.detail);
  };
  m.def(
      "verify_degree_property",
      [check_to_py](int n, int r, int k) { return check_to_py(verify_degree_property(n, r, k)); },
      py::arg("n"), py::arg("r"), py::arg("k"));
  m.def(
      "verify_subcomplex",
      [check_to_py](int n, int r, int k) { return check_to_py(verify_subcomplex(n, r, k)); },
      py::arg("n"), py::arg("r"), py::arg("k"));
  m.def(
      "verify_inclusion",
      [check_to_py](int n, int r, int k) { return check_to_py(verify_inclusion(n, r, k)); },
      py::arg("n"), py::arg("r"), py::arg("k"));
  m.def(
      "verify_trace",
      [check_to_py](int n, int r, int k) { return check_to_py(verify_trace(n, r, k)); },
      py::arg("n"), py::arg("r"), py::arg("k"));

  m.def(
      "certify_vanishing_trace_unisolvence",
      [](int n, int r, int k) {
        const auto rep = certify_vanishing_trace_unisolvence(n, r, k);
        return py::dict(py::arg("ring_dim") = rep.ring_dim,
                        py::arg("n_weights") = rep.n_weights,
                        py::arg("full_column_rank") = rep.full_column_rank,
                        py::arg("square") = rep.square);
      },
      py::arg("n"), py::arg("r"), py::arg("k"));

  m.def(
      "cube_cohomology",
      [](int n, int r) {
        const auto rep = complex_cohomology_on_cube(n, r);
        return py::dict(py::arg("defects") = rep.defects,
                        py::arg("subcomplex") = rep.subcomplex_ok,
                        py::arg("products_vanish") = rep.products_vanish,
                        py::arg("pass") = rep.pass());
      },
      py::arg("n"), py::arg("r"));

  m.def(
      "mesh_cohomology",
      [](const std::vector<int>& grid, int r) {
        const auto rep = mesh_complex_cohomology(mesh_from_grid(grid), r);
        return py::dict(py::arg("defects") = rep.defects,
                        py::arg("subcomplex") = rep.subcomplex_ok,
                        py::arg("products_vanish") = rep.products_vanish,
                        py::arg("pass") = rep.pass());
      },
      py::arg("grid"), py::arg("r"));

  m.def(
      "mesh_continuity",
      [](const std::vector<int>& grid, int r, int k) {
        return certify_continuity(assemble(mesh_from_grid(grid), r, k)).pass;
      },
      py::arg("grid"), py::arg("r"), py::arg("k"));

  m.def(
      "assemble_dim",
      [](const std::vector<int>& grid, int r, int k) {
        return assemble(mesh_from_grid(grid), r, k).dim();
      },
      py::arg("grid"), py::arg("r"), py::arg("k"));

#ifdef CUBEFEC_VERSION
  m.attr("__version__") = CUBEFEC_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
