// Copyright (c) 2026 ciarlet authors
// SPDX-License-Identifier: MIT

#include "ciarlet/quadrature.hpp"
#include "ciarlet/errors.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace ciarlet
{

namespace
{

// Golub-Welsch on the Jacobi-weight three-term recurrence. Returns nodes
// on [-1, 1] and weights including the total mass of (1-x)^a (1+x)^b.
std::pair<std::vector<double>, std::vector<double>>
golub_welsch_jacobi(double a, double b, int n)
{
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k)
  {
    double s = 2 * k + a + b;
    // Diagonal (b^2-a^2)/(s(s+2)); the k = 0 case is the removable limit.
    J(k, k) = (k == 0) ? (b - a) / (a + b + 2)
                       : (b * b - a * a) / (s * (s + 2));
    if (k > 0)
    {
      double num = 4.0 * k * (k + a) * (k + b) * (k + a + b);
      double den = (s * s) * (s + 1) * (s - 1);
      J(k, k - 1) = J(k - 1, k) = std::sqrt(num / den);
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  double mass = std::pow(2.0, a + b + 1) * std::tgamma(a + 1)
                * std::tgamma(b + 1) / std::tgamma(a + b + 2);

  std::vector<double> x(n), w(n);
  for (int i = 0; i < n; ++i)
  {
    x[i] = es.eigenvalues()(i);
    double v = es.eigenvectors()(0, i);
    w[i] = mass * v * v;
  }
  return {x, w};
}

int points_for_degree(int degree) { return std::max(1, (degree + 2) / 2); }

} // namespace

QuadratureRule gauss_legendre(int n)
{
  auto [x, w] = golub_welsch_jacobi(0.0, 0.0, n);
  QuadratureRule rule;
  rule.points.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i)
  {
    rule.points[i] = {0.5 * (x[i] + 1.0), 0, 0};
    rule.weights[i] = 0.5 * w[i];
  }
  return rule;
}

QuadratureRule gauss_jacobi(int alpha, int n)
{
  auto [x, w] = golub_welsch_jacobi(static_cast<double>(alpha), 0.0, n);
  QuadratureRule rule;
  rule.points.resize(n);
  rule.weights.resize(n);
  double scale = std::pow(2.0, -(alpha + 1));
  for (int i = 0; i < n; ++i)
  {
    rule.points[i] = {0.5 * (x[i] + 1.0), 0, 0};
    rule.weights[i] = scale * w[i];
  }
  return rule;
}

QuadratureRule make_quadrature(CellKind kind, int degree)
{
  if (degree < 0)
    detail::fail(error_kind::invalid_argument, "negative quadrature degree");
  const int n = points_for_degree(degree);

  QuadratureRule rule;
  switch (kind.shape)
  {
  case CellKind::Shape::interval:
    return gauss_legendre(n);
  case CellKind::Shape::triangle:
  {
    // Duffy: x = u (1 - v), y = v with the (1 - v) factor absorbed by a
    // Gauss-Jacobi rule in v.
    auto gu = gauss_legendre(n);
    auto gv = gauss_jacobi(1, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
      {
        double u = gu.points[i][0], v = gv.points[j][0];
        rule.points.push_back({u * (1.0 - v), v, 0});
        rule.weights.push_back(gu.weights[i] * gv.weights[j]);
      }
    return rule;
  }
  case CellKind::Shape::quadrilateral:
  {
    auto g = gauss_legendre(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
      {
        rule.points.push_back({g.points[i][0], g.points[j][0], 0});
        rule.weights.push_back(g.weights[i] * g.weights[j]);
      }
    return rule;
  }
  case CellKind::Shape::tetrahedron:
  {
    auto gu = gauss_legendre(n);
    auto gv = gauss_jacobi(1, n);
    auto gw = gauss_jacobi(2, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
        {
          double u = gu.points[i][0], v = gv.points[j][0],
                 w = gw.points[k][0];
          rule.points.push_back(
              {u * (1.0 - v) * (1.0 - w), v * (1.0 - w), w});
          rule.weights.push_back(gu.weights[i] * gv.weights[j]
                                 * gw.weights[k]);
        }
    return rule;
  }
  case CellKind::Shape::hexahedron:
  {
    auto g = gauss_legendre(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
        {
          rule.points.push_back(
              {g.points[i][0], g.points[j][0], g.points[k][0]});
          rule.weights.push_back(g.weights[i] * g.weights[j] * g.weights[k]);
        }
    return rule;
  }
  case CellKind::Shape::prism:
  {
    auto tri = make_quadrature(CellKind::triangle(), degree);
    auto g = gauss_legendre(n);
    for (std::size_t i = 0; i < tri.size(); ++i)
      for (int k = 0; k < n; ++k)
      {
        rule.points.push_back(
            {tri.points[i][0], tri.points[i][1], g.points[k][0]});
        rule.weights.push_back(tri.weights[i] * g.weights[k]);
      }
    return rule;
  }
  default:
    detail::fail(error_kind::invalid_argument,
                 "no quadrature for " + to_string(kind));
  }
}

} // namespace ciarlet
