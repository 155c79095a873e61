// Copyright (c) the cubefec contributors
// SPDX-License-Identifier: Apache-2.0

#include "cubefec/json_io.hpp"

#include <stdexcept>

namespace cubefec {

namespace {

nlohmann::ordered_json rational_value(const Rational& v) {
  if (v.get_den() == 1 && v.get_num().fits_slong_p()) {
    return nlohmann::ordered_json(v.get_num().get_si());
  }
  return nlohmann::ordered_json(rat_str(v));
}

Rational rational_from(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return rat_parse(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a \"p/q\" string");
}

}  // namespace

nlohmann::ordered_json form_to_json(const DiffForm& f) {
  nlohmann::ordered_json j;
  j["n"] = f.dimension();
  j["k"] = f.form_degree();
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [m, c] : f.terms()) {
    nlohmann::ordered_json t;
    t["num"] = num_str(c);
    t["den"] = den_str(c);
    t["alpha"] = m.alpha.exponents();
    t["sigma"] = m.sigma.indices();
    j["terms"].push_back(std::move(t));
  }
  return j;
}

DiffForm form_from_json(const nlohmann::json& j) {
  DiffForm f(j.at("n").get<int>(), j.at("k").get<int>());
  for (const auto& t : j.at("terms")) {
    const Rational c =
        rat_from_strings(t.at("num").get<std::string>(), t.at("den").get<std::string>());
    f.add_term(FormMonomial(MultiIndex(t.at("alpha").get<std::vector<int>>()),
                            IndexSet(t.at("sigma").get<std::vector<int>>())),
               c);
  }
  return f;
}

nlohmann::ordered_json basis_to_json(const SpaceBasis& basis) {
  nlohmann::ordered_json j;
  j["family"] = family_name(basis.family());
  j["n"] = basis.dimension();
  j["r"] = basis.degree();
  j["k"] = basis.form_degree();
  if (basis.family() == Family::H_ldeg) j["l"] = basis.linear_degree_bound();
  j["dim"] = basis.dim();
  j["forms"] = nlohmann::ordered_json::array();
  for (const DiffForm& f : basis.forms()) j["forms"].push_back(form_to_json(f));
  return j;
}

nlohmann::ordered_json dofs_to_json(const DofSet& dofs) {
  nlohmann::ordered_json j;
  j["n"] = dofs.n;
  j["r"] = dofs.r;
  j["k"] = dofs.k;
  j["dim"] = dofs.dofs.size();
  j["dofs"] = nlohmann::ordered_json::array();
  for (const DofFunctional& dof : dofs.dofs) {
    nlohmann::ordered_json d;
    nlohmann::ordered_json fixed = nlohmann::ordered_json::object();
    for (const auto& [axis, value] : dof.face.fixed()) {
      fixed[std::to_string(axis)] = rational_value(value);
    }
    d["face"] = nlohmann::ordered_json{{"fixed", std::move(fixed)}};
    d["weight"] = form_to_json(dof.weight);
    j["dofs"].push_back(std::move(d));
  }
  return j;
}

MeshSpec mesh_spec_from_json(const nlohmann::json& j) {
  MeshSpec spec;
  if (j.contains("grid")) {
    spec.grid = j.at("grid").get<std::vector<int>>();
    spec.n = j.contains("n") ? j.at("n").get<int>() : static_cast<int>(spec.grid.size());
    if (spec.n != static_cast<int>(spec.grid.size()))
      throw std::invalid_argument("grid length differs from n");
    return spec;
  }
  if (!j.contains("boxes")) throw std::invalid_argument("mesh needs \"grid\" or \"boxes\"");
  for (const auto& b : j.at("boxes")) {
    const auto& lo = b.at("lo");
    const auto& hi = b.at("hi");
    if (lo.size() != hi.size()) throw std::invalid_argument("lo/hi length mismatch");
    std::vector<std::pair<Rational, Rational>> iv;
    for (std::size_t a = 0; a < lo.size(); ++a) {
      iv.push_back({rational_from(lo[a]), rational_from(hi[a])});
    }
    spec.boxes.push_back(Box(std::move(iv)));
  }
  spec.n = j.contains("n") ? j.at("n").get<int>()
                           : (spec.boxes.empty() ? 0 : spec.boxes.front().dimension());
  return spec;
}

}  // namespace cubefec
