// Copyright (c) 2026 ciarlet authors
// SPDX-License-Identifier: MIT

#pragma once

#include "ciarlet/dofmap.hpp"
#include "ciarlet/element.hpp"
#include "ciarlet/mesh.hpp"

#include <Eigen/Dense>
#include <optional>
#include <vector>

namespace ciarlet
{

/// Vertex-interpolated (multilinear or affine) map from a reference cell
/// to a physical cell.
struct GeometryMap
{
  CellKind kind;
  int gdim = 0;
  Eigen::MatrixXd vertex_coords; // [n_vertices x gdim]

  Eigen::VectorXd map_point(const std::array<double, 3>& X) const;
  /// dx/dX, gdim x tdim.
  Eigen::MatrixXd jacobian(const std::array<double, 3>& X) const;
};

GeometryMap make_geometry_map(const Mesh& mesh, int cell);

/// Maps reference basis values to physical values at the given reference
/// points: identity for H1, contravariant Piola (J/det J) for Hdiv,
/// covariant (J^-T) for Hcurl. Vector maps require gdim == tdim and a
/// nonsingular Jacobian.
TabulatedBasis push_forward(Sobolev sobolev, const TabulatedBasis& reference,
                            const GeometryMap& geometry,
                            const PointSet& points);

/// Applies the facet coordinate self-maps that convert canonical facet
/// coordinates into a cell's local facet coordinates: the rotation map
/// `rotations` times followed by the reflection when `reflected` is set.
/// These are the same self-maps the DOF transformations use.
PointSet permute_facet_points(CellKind facet_kind, const PointSet& points,
                              int rotations, bool reflected);

struct ContinuityReport
{
  struct Facet
  {
    int cell_a, local_a, cell_b, local_b;
    double max_jump;
  };

  int n_points = 0;
  double tolerance = 0;
  double max_jump = 0;
  bool pass = false;
  std::vector<Facet> facets;
};

enum class TransformPolicy
{
  automatic, ///< fold permutations or apply transformations, as classified
  disabled   ///< no folding, no transformations (negative control)
};

/// Verifies inter-cell continuity of the mapped global basis: for every
/// interior facet, matched physical points are sampled from both sides and
/// the trace mismatch of every global basis function is measured. Scalar
/// elements compare values, Hdiv the normal component against a facet
/// normal fixed from the facet's own global-vertex geometry, Hcurl the
/// tangential components.
ContinuityReport check_continuity(
    const Mesh& mesh, const std::map<CellKind, FiniteElement>& elements,
    int n_points_per_facet = 6, std::optional<double> tolerance = {},
    TransformPolicy policy = TransformPolicy::automatic);

} // namespace ciarlet
