// Copyright (c) 2026 ciarlet authors
// SPDX-License-Identifier: MIT

#pragma once

#include "ciarlet/topology.hpp"

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <vector>

namespace ciarlet
{

/// Points in reference-cell coordinates.
struct PointSet
{
  std::vector<std::array<double, 3>> coords;

  std::size_t size() const { return coords.size(); }
};

/// True if the point lies in the closed reference cell up to `tol` slack.
bool point_in_cell(CellKind kind, const std::array<double, 3>& p,
                   double tol = 1e-12);

/// Throws invalid-argument if any point lies outside the closed cell.
void validate_points(CellKind kind, const PointSet& points,
                     double tol = 1e-12);

/// Dimension of the orthonormal expansion set of the given degree.
int expansion_dim(CellKind kind, int degree);

/// Maximum supported expansion degree (conditioning cap).
inline constexpr int max_expansion_degree = 10;

/// Evaluates the orthonormal expansion basis at the given points. Rows are
/// basis members, columns are points. The basis is L2-orthonormal on the
/// reference cell: tensor Legendre on quadrilateral/hexahedron,
/// orthonormalized simplex polynomials on triangle/tetrahedron, and their
/// product on the prism.
Eigen::MatrixXd tabulate_expansion(CellKind kind, int degree,
                                   const PointSet& points);

/// As tabulate_expansion but without the degree cap; used internally where
/// the degree is structural rather than user-facing.
Eigen::MatrixXd tabulate_expansion_unchecked(CellKind kind, int degree,
                                             const PointSet& points);

/// A span of (possibly vector-valued) polynomials expressed over the
/// orthonormal expansion set. Component c of member m has expansion
/// coefficients coeffs(m, c * n_expansion .. (c+1) * n_expansion - 1).
struct PolynomialSet
{
  CellKind cell;
  int degree = 0; ///< expansion degree the coefficients refer to
  int value_size = 1;
  int dim_space = 0;
  Eigen::MatrixXd coeffs;

  int n_expansion() const { return expansion_dim(cell, degree); }

  /// values[m][p*value_size + c], returned as a dim_space x (n_points *
  /// value_size) matrix with the component index fastest.
  Eigen::MatrixXd evaluate(const PointSet& points) const;
};

enum class VectorFamily
{
  raviart_thomas,
  nedelec1
};

/// Explicit vector spans: Raviart-Thomas on triangle/quadrilateral and
/// first-kind Nedelec on tetrahedron, degrees 1 and 2.
PolynomialSet vector_span(VectorFamily family, CellKind cell, int degree);

/// Full scalar span of the expansion set itself (Lagrange spaces).
PolynomialSet scalar_span(CellKind cell, int degree);

/// Serendipity span: monomials whose superlinear degree is at most
/// `degree` (quadrilateral and hexahedron, degree 1-5).
PolynomialSet serendipity_span(CellKind cell, int degree);

/// dPc span on a quadrilateral: monomials of total degree <= degree.
PolynomialSet dpc_span(int degree);

/// L2-projection of an arbitrary smooth function onto the expansion set,
/// exact when the function is a polynomial of total degree
/// <= poly_degree. Returns one coefficient row per component block.
Eigen::VectorXd project_onto_expansion(
    CellKind cell, int expansion_degree, int poly_degree,
    const std::function<double(const std::array<double, 3>&)>& f);

} // namespace ciarlet
