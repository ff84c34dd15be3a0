// Copyright (c) 2026 ciarlet authors
// SPDX-License-Identifier: MIT

#pragma once

#include "ciarlet/topology.hpp"

#include <array>
#include <vector>

namespace ciarlet
{

struct QuadratureRule
{
  std::vector<std::array<double, 3>> points; // reference-cell coordinates
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
};

/// Gauss-Legendre rule on [0, 1], exact for polynomials of degree 2n-1.
QuadratureRule gauss_legendre(int n);

/// Gauss-Jacobi rule on [0, 1] for the weight (1-x)^alpha; the returned
/// weights absorb the (1-x)^alpha factor.
QuadratureRule gauss_jacobi(int alpha, int n);

/// Rule on the reference cell exact for all polynomials of total degree
/// <= degree. Tensor Gauss-Legendre on tensor-product cells, collapsed
/// Gauss-Jacobi on simplices.
QuadratureRule make_quadrature(CellKind kind, int degree);

} // namespace ciarlet
