// Copyright (c) 2026 ciarlet authors
// SPDX-License-Identifier: MIT

#pragma once

#include "ciarlet/polyset.hpp"
#include "ciarlet/topology.hpp"

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <vector>

namespace ciarlet
{

enum class Family
{
  lagrange,
  raviart_thomas,
  nedelec1,
  serendipity
};

std::string to_string(Family family);
Family family_from_string(const std::string& name);

enum class Sobolev
{
  H1,
  Hdiv,
  Hcurl
};

/// How an integral-moment weight pairs with the argument function.
enum class DirectionMode
{
  scalar,       ///< scalar weight against a scalar function
  normal,       ///< scalar weight against v . n on an edge
  tangent,      ///< scalar weight against v . t on an edge
  face_tangent, ///< 2-component weight in the face frame against v
  fixed_vector  ///< vector weight in cell coordinates (interior DOFs)
};

struct Functional
{
  enum class Kind
  {
    point_eval,
    directional_point_eval,
    integral_moment
  };

  Kind kind = Kind::point_eval;
  std::array<int, 2> entity = {0, 0}; // (dim, index)
  std::array<double, 3> point = {0, 0, 0};
  std::array<double, 3> direction = {0, 0, 0};
  int weight_index = -1; ///< row in the entity's moment space
  DirectionMode mode = DirectionMode::scalar;
};

/// Weight-function space a group of integral moments integrates against,
/// expressed in the sub-entity's own coordinates.
struct MomentSpace
{
  CellKind entity_kind;    // interval, triangle or quadrilateral
  DirectionMode mode = DirectionMode::scalar;
  int value_size = 1;      // components in the entity frame
  int degree = 0;          // expansion degree of the coefficient rows
  int weight_degree = 0;   // polynomial degree of the weights
  Eigen::MatrixXd coeffs;  // [n_weights x value_size * n_exp(entity)]

  int size() const { return static_cast<int>(coeffs.rows()); }

  /// values[w][q * value_size + c] at entity-coordinate points.
  Eigen::MatrixXd evaluate(const PointSet& entity_points) const;
};

/// Tabulated basis values: values(i, p, c) = component c of basis i at
/// point p. Stored row-major so a [n_dofs x (n_points*value_size)] view is
/// available for in-place transformation.
struct TabulatedBasis
{
  int n_dofs = 0;
  int n_points = 0;
  int value_size = 1;
  std::vector<double> data;

  double& operator()(int i, int p, int c)
  {
    return data[(static_cast<std::size_t>(i) * n_points + p) * value_size + c];
  }
  double operator()(int i, int p, int c) const
  {
    return data[(static_cast<std::size_t>(i) * n_points + p) * value_size + c];
  }

  Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                           Eigen::RowMajor>>
  as_matrix()
  {
    return {data.data(), n_dofs, n_points * value_size};
  }
};

/// A solved Ciarlet element: functional list with entity association and
/// the basis coefficients obtained by inverting the dual matrix.
struct FiniteElement
{
  CellKind cell;
  Family family = Family::lagrange;
  int degree = 1;
  int value_size = 1;
  Sobolev sobolev = Sobolev::H1;

  CellTopology topo;
  std::vector<Functional> functionals;
  PolynomialSet span;
  Eigen::MatrixXd basis_coeffs; // [n_dofs x value_size * n_expansion]

  /// entity_dofs[dim][index] lists the DOFs on that entity, in order.
  std::vector<std::vector<std::vector<int>>> entity_dofs;

  /// Moment spaces keyed by (dim, index); only entities carrying integral
  /// moments appear.
  std::map<std::array<int, 2>, MomentSpace> moment_spaces;

  /// Coordinate frames of all edge/face/cell entities, with any vertex
  /// overrides applied at construction.
  std::map<std::array<int, 2>, EntityChart> entity_charts;

  int n_dofs() const { return static_cast<int>(functionals.size()); }
};

/// Optional override of the per-entity vertex tuples used when placing
/// functionals. Used to construct the element "as seen from" a relabeled
/// cell; the default uses the reference tuples. Keys are (dim, index).
using EntityVertexOverrides = std::map<std::array<int, 2>, std::vector<int>>;

/// Builds a finite element. Supported combinations:
///   lagrange:       interval/triangle/quadrilateral/tetrahedron/
///                   hexahedron/prism, degree 1-10
///   raviart_thomas: triangle/quadrilateral, degree 1-2
///   nedelec1:       tetrahedron, degree 1-2
///   serendipity:    quadrilateral/hexahedron, degree 1-5
FiniteElement create_element(Family family, CellKind cell, int degree);

/// As create_element, with some entities' vertex tuples replaced. This is
/// the ground-truth construction the transformation machinery must agree
/// with: an element built on a cell whose global vertex order differs from
/// the reference.
FiniteElement create_element_oriented(Family family, CellKind cell,
                                      int degree,
                                      const EntityVertexOverrides& overrides);

/// Evaluates all basis functions at points on the reference cell.
TabulatedBasis tabulate(const FiniteElement& element, const PointSet& points);

/// Applies every functional to a set of polynomials (columns: span
/// members); the dual matrix. apply_functionals(e, e.span) is the identity
/// for a solved element.
Eigen::MatrixXd apply_functionals(const FiniteElement& element,
                                  const PolynomialSet& polys);

/// The weight space an entity's integral moments integrate against,
/// together with the entity chart fixing its coordinate frame. Throws
/// no-moments if the entity carries none.
std::pair<MomentSpace, EntityChart>
moment_space(const FiniteElement& element, int dim, int index);

} // namespace ciarlet
