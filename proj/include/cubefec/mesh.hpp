// Copyright (c) the cubefec contributors
// SPDX-License-Identifier: Apache-2.0
//
// Assembly of the S family on conforming meshes of axis-aligned boxes: global
// degrees of freedom attached to geometric faces, inter-element continuity
// certificates, and the assembled de Rham complex.

#ifndef CUBEFEC_MESH_HPP
#define CUBEFEC_MESH_HPP

#include <map>
#include <string>
#include <vector>

#include "cubefec/element.hpp"

namespace cubefec {

struct MeshSpec {
  int n = 0;
  std::vector<int> grid;   // N_1 x ... x N_n unit cells when non-empty
  std::vector<Box> boxes;  // explicit conforming boxes otherwise
};

/// A geometric face of the mesh: shared geometry plus the cells incident to
/// it. Weight functionals live on the face in global coordinates, so every
/// incident cell sees literally the same functional.
struct GeomFace {
  std::map<int, Rational> fixed;      // global axis -> value
  std::vector<int> free_axes;         // ascending global axes
  Box box;                            // intervals of the free axes
  std::vector<int> cells;             // incident cell ids, ascending
  std::vector<Rational> lower_corner; // per global axis, for the normative order
};

class CubicalMesh {
 public:
  int dimension() const { return n_; }
  int cell_count() const { return static_cast<int>(cells_.size()); }
  const Box& cell(int c) const { return cells_[c]; }
  const std::vector<GeomFace>& faces(int d) const { return faces_by_dim_[d]; }

  friend CubicalMesh build_mesh(const MeshSpec& spec);

 private:
  int n_ = 0;
  std::vector<Box> cells_;
  std::vector<std::vector<GeomFace>> faces_by_dim_;
};

/// Validates conformity (any two cells meet in a common face of both) and
/// builds the face adjacency tables; throws std::invalid_argument naming the
/// offending cell pair otherwise.
CubicalMesh build_mesh(const MeshSpec& spec);

/// Debug corruption for the negative continuity test: the second cell
/// incident to the chosen face assembles against the negated weight
/// functionals of that face.
struct FlipSpec {
  int face_dim = -1;
  int face_index = -1;
  bool active() const { return face_dim >= 0; }
};

struct GlobalDof {
  int face_dim;
  int face_index;    // into mesh.faces(face_dim)
  int weight_index;  // into the weight monomial basis for that face dimension
};

/// The assembled space S_r Lambda^k on a mesh: global DOF enumeration,
/// per-cell local-to-global map, and the per-cell nodal basis.
class GlobalSpace {
 public:
  GlobalSpace(const CubicalMesh& mesh, int r, int k, FlipSpec flip = {});

  const CubicalMesh& mesh() const { return *mesh_; }
  int r() const { return r_; }
  int k() const { return k_; }
  long dim() const { return static_cast<long>(global_dofs_.size()); }
  const std::vector<GlobalDof>& global_dofs() const { return global_dofs_; }
  const std::vector<std::vector<long>>& local_to_global() const { return l2g_; }

  /// Nodal basis function of global dof g restricted to a cell; the zero form
  /// when the dof is not supported there.
  DiffForm restriction(int cell, long g) const;

  /// Evaluates global dof g on a cellwise-defined form (one DiffForm per
  /// cell), using the first incident cell's geometry.
  Rational eval_global_dof(long g, const std::vector<DiffForm>& cellwise) const;

  const DofSet& cell_dofs(int cell) const { return cell_dofs_[cell]; }

 private:
  const CubicalMesh* mesh_;
  int r_, k_;
  std::vector<GlobalDof> global_dofs_;
  std::vector<std::vector<long>> l2g_;          // [cell][local dof] -> global
  std::vector<DofSet> cell_dofs_;               // possibly flip-corrupted
  std::vector<std::vector<DiffForm>> nodal_;    // [cell][local dof]
  std::vector<std::map<long, int>> global_to_local_;
};

GlobalSpace assemble(const CubicalMesh& mesh, int r, int k, FlipSpec flip = {});

/// Exact trace agreement across every interior facet for every global basis
/// function; this is the H Lambda^k membership certificate.
CheckReport certify_continuity(const GlobalSpace& space);

struct MeshCohomologyReport {
  std::vector<long> defects;
  bool subcomplex_ok = true;
  bool products_vanish = true;
  bool contractible_profile() const;
  bool pass() const { return subcomplex_ok && products_vanish && contractible_profile(); }
  std::vector<RationalMatrix> d_matrices;  // global d in the nodal bases
};

/// Assembled complex S_r L^0(T_h) -d-> S_{r-1} L^1(T_h) -d-> ...; checks that
/// d lands in the assembled spaces (cellwise interpolation identity), that
/// consecutive matrices multiply to zero, and returns rank-nullity defects.
MeshCohomologyReport mesh_complex_cohomology(const CubicalMesh& mesh, int r);

}  // namespace cubefec

#endif
