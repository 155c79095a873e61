// Copyright (c) the cubefec contributors
// SPDX-License-Identifier: Apache-2.0

#include "cubefec/mesh.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cubefec {

namespace {

std::string face_key(const CubeFace& f) {
  std::ostringstream os;
  for (const auto& [axis, value] : f.fixed()) os << axis << "=" << rat_str(value) << ";";
  os << "|";
  const Box fb = f.face_box();
  for (int a = 1; a <= fb.dimension(); ++a) {
    os << f.free_axes()[a - 1] << ":[" << rat_str(fb.interval(a).first) << ","
       << rat_str(fb.interval(a).second) << "];";
  }
  return os.str();
}

std::vector<Rational> face_lower_corner(const CubeFace& f) {
  std::vector<Rational> corner;
  const int n = f.parent_dimension();
  corner.reserve(n);
  for (int axis = 1; axis <= n; ++axis) {
    auto it = f.fixed().find(axis);
    corner.push_back(it != f.fixed().end() ? it->second : f.parent().interval(axis).first);
  }
  return corner;
}

bool face_order(const GeomFace& a, const GeomFace& b) {
  if (a.lower_corner != b.lower_corner) {
    return std::lexicographical_compare(a.lower_corner.begin(), a.lower_corner.end(),
                                        b.lower_corner.begin(), b.lower_corner.end());
  }
  std::vector<int> fa, fb;
  for (const auto& [axis, v] : a.fixed) fa.push_back(axis);
  for (const auto& [axis, v] : b.fixed) fb.push_back(axis);
  return fa < fb;
}

}  // namespace

CubicalMesh build_mesh(const MeshSpec& spec) {
  CubicalMesh mesh;
  mesh.n_ = spec.n;
  if (spec.n < 1) throw std::invalid_argument("mesh dimension must be >= 1");

  if (!spec.grid.empty()) {
    if (static_cast<int>(spec.grid.size()) != spec.n)
      throw std::invalid_argument("grid shape length differs from dimension");
    for (int N : spec.grid) {
      if (N < 1) throw std::invalid_argument("grid extents must be positive");
    }
    std::vector<int> idx(spec.n, 0);
    while (true) {
      std::vector<std::pair<Rational, Rational>> iv;
      iv.reserve(spec.n);
      for (int a = 0; a < spec.n; ++a) iv.push_back({rat(idx[a]), rat(idx[a] + 1)});
      mesh.cells_.push_back(Box(std::move(iv)));
      int a = spec.n - 1;
      while (a >= 0 && ++idx[a] == spec.grid[a]) idx[a--] = 0;
      if (a < 0) break;
    }
  } else {
    if (spec.boxes.empty()) throw std::invalid_argument("empty mesh specification");
    for (const Box& b : spec.boxes) {
      if (b.dimension() != spec.n)
        throw std::invalid_argument("box dimension differs from mesh dimension");
    }
    mesh.cells_ = spec.boxes;
  }

  // Conformity: any two cells intersect in a common (possibly empty) face.
  const int n = spec.n;
  for (std::size_t i = 0; i < mesh.cells_.size(); ++i) {
    for (std::size_t j = i + 1; j < mesh.cells_.size(); ++j) {
      bool disjoint = false;
      std::vector<std::pair<Rational, Rational>> inter(n);
      for (int a = 1; a <= n; ++a) {
        const auto& ia = mesh.cells_[i].interval(a);
        const auto& ib = mesh.cells_[j].interval(a);
        const Rational lo = std::max(ia.first, ib.first);
        const Rational hi = std::min(ia.second, ib.second);
        if (lo > hi) {
          disjoint = true;
          break;
        }
        inter[a - 1] = {lo, hi};
      }
      if (disjoint) continue;
      bool ok = true;
      bool full_dim = true;
      for (const auto& cell : {mesh.cells_[i], mesh.cells_[j]}) {
        for (int a = 1; a <= n; ++a) {
          const auto& civ = cell.interval(a);
          const auto& iv = inter[a - 1];
          if (iv.first == iv.second) {
            full_dim = false;
            if (iv.first != civ.first && iv.first != civ.second) ok = false;
          } else if (!(iv.first == civ.first && iv.second == civ.second)) {
            ok = false;
          }
        }
      }
      if (full_dim) ok = false;  // overlapping interiors (or duplicate cells)
      if (!ok) {
        std::ostringstream os;
        os << "mesh is not conforming: cells " << i << " and " << j
           << " do not meet in a common face";
        throw std::invalid_argument(os.str());
      }
    }
  }

  mesh.faces_by_dim_.assign(n + 1, {});
  for (int d = 0; d <= n; ++d) {
    std::map<std::string, GeomFace> by_key;
    for (int c = 0; c < mesh.cell_count(); ++c) {
      for (const CubeFace& f : faces(mesh.cells_[c], d)) {
        const std::string key = face_key(f);
        auto it = by_key.find(key);
        if (it == by_key.end()) {
          GeomFace gf;
          gf.fixed = f.fixed();
          gf.free_axes = f.free_axes();
          gf.box = f.face_box();
          gf.lower_corner = face_lower_corner(f);
          gf.cells = {c};
          by_key.emplace(key, std::move(gf));
        } else if (it->second.cells.back() != c) {
          it->second.cells.push_back(c);
        }
      }
    }
    auto& list = mesh.faces_by_dim_[d];
    list.reserve(by_key.size());
    for (auto& [key, gf] : by_key) list.push_back(std::move(gf));
    std::sort(list.begin(), list.end(), face_order);
  }
  return mesh;
}

GlobalSpace::GlobalSpace(const CubicalMesh& mesh, int r, int k, FlipSpec flip)
    : mesh_(&mesh), r_(r), k_(k) {
  const int n = mesh.dimension();
  if (k < 0 || k > n) throw std::domain_error("form degree out of range");
  const int dmax = std::min(n, r / 2 + k);

  // Weight-space dimensions per face dimension.
  std::vector<long> weight_dim(n + 1, 0);
  for (int d = k; d <= dmax; ++d) weight_dim[d] = basis_P(d, r - 2 * (d - k), d - k).dim();

  // Global enumeration: faces by (dimension, normative face order), weights
  // graded-lex within each face.
  std::vector<std::vector<long>> face_offset(n + 1);
  for (int d = k; d <= dmax; ++d) {
    face_offset[d].resize(mesh.faces(d).size());
    for (std::size_t fi = 0; fi < mesh.faces(d).size(); ++fi) {
      face_offset[d][fi] = static_cast<long>(global_dofs_.size());
      for (long w = 0; w < weight_dim[d]; ++w) {
        global_dofs_.push_back({d, static_cast<int>(fi), static_cast<int>(w)});
      }
    }
  }

  // Geometric face lookup by key.
  std::vector<std::map<std::string, int>> face_index(n + 1);
  for (int d = 0; d <= n; ++d) {
    for (std::size_t fi = 0; fi < mesh.faces(d).size(); ++fi) {
      const GeomFace& gf = mesh.faces(d)[fi];
      CubeFace cf(mesh.cell(gf.cells.front()), gf.fixed);
      face_index[d][face_key(cf)] = static_cast<int>(fi);
    }
  }

  const SpaceBasis basis = basis_S(n, r, k);
  l2g_.resize(mesh.cell_count());
  cell_dofs_.reserve(mesh.cell_count());
  nodal_.resize(mesh.cell_count());
  global_to_local_.resize(mesh.cell_count());

  for (int c = 0; c < mesh.cell_count(); ++c) {
    DofSet dofs = make_dofs(mesh.cell(c), r, k);
    // Local dof -> global dof through the geometric face.
    long local = 0;
    for (int d = k; d <= dmax; ++d) {
      const auto cell_faces = faces(mesh.cell(c), d);
      for (const CubeFace& f : cell_faces) {
        auto it = face_index[d].find(face_key(f));
        if (it == face_index[d].end())
          throw std::logic_error("cell face missing from the mesh face table");
        const bool flipped = flip.active() && flip.face_dim == d &&
                             flip.face_index == it->second &&
                             mesh.faces(d)[it->second].cells.size() > 1 &&
                             mesh.faces(d)[it->second].cells[1] == c;
        for (long w = 0; w < weight_dim[d]; ++w, ++local) {
          l2g_[c].push_back(face_offset[d][it->second] + w);
          if (flipped) dofs.dofs[local].weight *= rat(-1);
        }
      }
    }
    if (local != static_cast<long>(dofs.dofs.size()))
      throw std::logic_error("local dof enumeration mismatch");

    const RationalMatrix inv = dof_matrix(basis, dofs).inverse();
    nodal_[c].reserve(dofs.dofs.size());
    for (long l = 0; l < inv.cols(); ++l) {
      std::vector<Rational> coeffs(basis.dim());
      for (long j = 0; j < inv.rows(); ++j) coeffs[j] = inv.at(j, l);
      nodal_[c].push_back(basis.combine(coeffs));
    }
    for (std::size_t l = 0; l < l2g_[c].size(); ++l) {
      global_to_local_[c][l2g_[c][l]] = static_cast<int>(l);
    }
    cell_dofs_.push_back(std::move(dofs));
  }
}

DiffForm GlobalSpace::restriction(int cell, long g) const {
  auto it = global_to_local_[cell].find(g);
  if (it == global_to_local_[cell].end()) return DiffForm(mesh_->dimension(), k_);
  return nodal_[cell][it->second];
}

Rational GlobalSpace::eval_global_dof(long g, const std::vector<DiffForm>& cellwise) const {
  const GlobalDof& gd = global_dofs_[g];
  const GeomFace& gf = mesh_->faces(gd.face_dim)[gd.face_index];
  const int c = gf.cells.front();
  const CubeFace cf(mesh_->cell(c), gf.fixed);
  const SpaceBasis weights =
      basis_P(gd.face_dim, r_ - 2 * (gd.face_dim - k_), gd.face_dim - k_);
  return eval_dof(cellwise[c], {cf, weights.forms()[gd.weight_index]});
}

GlobalSpace assemble(const CubicalMesh& mesh, int r, int k, FlipSpec flip) {
  return GlobalSpace(mesh, r, k, flip);
}

CheckReport certify_continuity(const GlobalSpace& space) {
  CheckReport rep;
  const CubicalMesh& mesh = space.mesh();
  const int n = mesh.dimension();
  for (std::size_t fi = 0; fi < mesh.faces(n - 1).size(); ++fi) {
    const GeomFace& gf = mesh.faces(n - 1)[fi];
    if (gf.cells.size() < 2) continue;
    const int c1 = gf.cells[0], c2 = gf.cells[1];
    const CubeFace f1(mesh.cell(c1), gf.fixed);
    const CubeFace f2(mesh.cell(c2), gf.fixed);
    for (long g = 0; g < space.dim(); ++g) {
      const DiffForm t1 = trace_to_face(space.restriction(c1, g), f1);
      const DiffForm t2 = trace_to_face(space.restriction(c2, g), f2);
      if (!(t1 == t2)) {
        rep.pass = false;
        std::ostringstream os;
        os << "trace mismatch across interior facet " << fi << " for global dof " << g;
        rep.detail = os.str();
        return rep;
      }
    }
  }
  return rep;
}

bool MeshCohomologyReport::contractible_profile() const {
  for (std::size_t i = 0; i < defects.size(); ++i) {
    if (defects[i] != (i == 0 ? 1 : 0)) return false;
  }
  return !defects.empty();
}

MeshCohomologyReport mesh_complex_cohomology(const CubicalMesh& mesh, int r) {
  const int n = mesh.dimension();
  if (r < n) throw std::domain_error("mesh complex needs r >= n");
  MeshCohomologyReport rep;

  std::vector<GlobalSpace> spaces;
  spaces.reserve(n + 1);
  for (int k = 0; k <= n; ++k) spaces.emplace_back(mesh, r - k, k);

  for (int k = 0; k < n; ++k) {
    const GlobalSpace& src = spaces[k];
    const GlobalSpace& dst = spaces[k + 1];
    RationalMatrix Dk(dst.dim(), src.dim());
    for (long j = 0; j < src.dim(); ++j) {
      std::vector<DiffForm> dphi;
      dphi.reserve(mesh.cell_count());
      for (int c = 0; c < mesh.cell_count(); ++c) {
        dphi.push_back(exterior_derivative(src.restriction(c, j)));
      }
      for (long i = 0; i < dst.dim(); ++i) Dk.at(i, j) = dst.eval_global_dof(i, dphi);
      // d of a global basis function must interpolate to itself in the next
      // space, cell by cell; this is the global subcomplex certificate.
      for (int c = 0; c < mesh.cell_count(); ++c) {
        DiffForm interp(n, k + 1);
        for (long i = 0; i < dst.dim(); ++i) {
          if (Dk.at(i, j) == 0) continue;
          DiffForm t = dst.restriction(c, i);
          t *= Dk.at(i, j);
          interp += t;
        }
        if (!(interp == dphi[c])) {
          rep.subcomplex_ok = false;
          return rep;
        }
      }
    }
    rep.d_matrices.push_back(std::move(Dk));
  }

  for (int k = 0; k + 1 < n; ++k) {
    if (!rep.d_matrices[k + 1].multiply(rep.d_matrices[k]).is_zero())
      rep.products_vanish = false;
  }
  std::vector<long> rank(n, 0);
  for (int k = 0; k < n; ++k) rank[k] = rep.d_matrices[k].rank();
  rep.defects.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    const long ker = (k < n) ? spaces[k].dim() - rank[k] : spaces[k].dim();
    const long img = (k > 0) ? rank[k - 1] : 0;
    rep.defects[k] = ker - img;
  }
  return rep;
}

}  // namespace cubefec
