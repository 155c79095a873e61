// Copyright (c) the cubefec contributors
// SPDX-License-Identifier: Apache-2.0
//
// JSON wire formats. Coefficients travel as decimal num/den strings so
// arbitrary-precision values survive the round trip; terms appear in the
// canonical order, making serialized output byte-deterministic.

#ifndef CUBEFEC_JSON_IO_HPP
#define CUBEFEC_JSON_IO_HPP

#include <json.hpp>

#include "cubefec/element.hpp"
#include "cubefec/mesh.hpp"
#include "cubefec/spaces.hpp"

namespace cubefec {

/// {"n":..,"k":..,"terms":[{"num":..,"den":..,"alpha":[..],"sigma":[..]},..]}
nlohmann::ordered_json form_to_json(const DiffForm& f);
DiffForm form_from_json(const nlohmann::json& j);

/// Basis header {"family","n","r","k","dim"} (plus "l" for H_ldeg) followed by
/// the forms.
nlohmann::ordered_json basis_to_json(const SpaceBasis& basis);

/// {"n","r","k","dim","dofs":[{"face":{"fixed":{"1":1,..}},"weight":..},..]}
nlohmann::ordered_json dofs_to_json(const DofSet& dofs);

/// {"n":..,"grid":[..]} or {"boxes":[{"lo":[..],"hi":[..]},..]}; endpoints are
/// integers or "p/q" strings.
MeshSpec mesh_spec_from_json(const nlohmann::json& j);

}  // namespace cubefec

#endif
