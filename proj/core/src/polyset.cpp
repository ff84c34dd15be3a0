// Copyright (c) 2026 ciarlet authors
// SPDX-License-Identifier: MIT

#include "ciarlet/polyset.hpp"
#include "ciarlet/errors.hpp"
#include "ciarlet/quadrature.hpp"

#include <cmath>
#include <functional>

namespace ciarlet
{

namespace
{

// Index of the (p, q) / (p, q, r) member inside a degree-blocked simplex
// expansion set.
constexpr int idx2(int p, int q) { return (p + q + 1) * (p + q) / 2 + q; }
constexpr int idx3(int p, int q, int r)
{
  int s = p + q + r;
  return s * (s + 1) * (s + 2) / 6 + (q + r) * (q + r + 1) / 2 + r;
}

// Jacobi polynomial recurrence coefficients.
constexpr std::array<double, 3> jrc(int a, int n)
{
  double an = (a + 2 * n + 1) * (a + 2 * n + 2)
              / static_cast<double>(2 * (n + 1) * (a + n + 1));
  double bn = a * a * (a + 2 * n + 1)
              / static_cast<double>(2 * (n + 1) * (a + n + 1) * (a + 2 * n));
  double cn = n * (a + n) * (a + 2 * n + 2)
              / static_cast<double>((n + 1) * (a + n + 1) * (a + 2 * n));
  return {an, bn, cn};
}

// Legendre polynomials on [0, 1], orthonormal in L2: rows are members.
Eigen::MatrixXd tabulate_line(int degree, const Eigen::VectorXd& x)
{
  const int np = static_cast<int>(x.size());
  Eigen::MatrixXd P(degree + 1, np);
  Eigen::VectorXd X = 2.0 * x.array() - 1.0;
  P.row(0).setOnes();
  for (int p = 1; p <= degree; ++p)
  {
    double a = 1.0 - 1.0 / static_cast<double>(p);
    P.row(p) = X.transpose().array() * P.row(p - 1).array() * (a + 1.0);
    if (p > 1)
      P.row(p) -= P.row(p - 2) * a;
  }
  for (int p = 0; p <= degree; ++p)
    P.row(p) *= std::sqrt(2.0 * p + 1.0);
  return P;
}

// Orthonormal Dubiner-type set on the reference triangle.
Eigen::MatrixXd tabulate_triangle(int degree, const Eigen::MatrixXd& pts)
{
  const int np = static_cast<int>(pts.rows());
  const int m = (degree + 1) * (degree + 2) / 2;
  Eigen::MatrixXd P(m, np);

  Eigen::ArrayXd x = 2.0 * pts.col(0).array() - 1.0;
  Eigen::ArrayXd y = 2.0 * pts.col(1).array() - 1.0;
  Eigen::ArrayXd f3 = (1.0 - y).square() * 0.25;

  P.row(idx2(0, 0)).setOnes();
  for (int p = 1; p <= degree; ++p)
  {
    double a = (2.0 * p - 1.0) / p;
    P.row(idx2(p, 0)) = ((x + 0.5 * y + 0.5) * a
                         * P.row(idx2(p - 1, 0)).transpose().array())
                            .transpose();
    if (p > 1)
      P.row(idx2(p, 0)) -= (f3 * (a - 1.0)
                            * P.row(idx2(p - 2, 0)).transpose().array())
                               .transpose();
  }
  for (int p = 0; p < degree; ++p)
  {
    P.row(idx2(p, 1)) = ((y * (1.5 + p) + 0.5 + p)
                         * P.row(idx2(p, 0)).transpose().array())
                            .transpose();
    for (int q = 1; q < degree - p; ++q)
    {
      auto [a1, a2, a3] = jrc(2 * p + 1, q);
      P.row(idx2(p, q + 1))
          = ((y * a1 + a2) * P.row(idx2(p, q)).transpose().array())
                .transpose()
            - P.row(idx2(p, q - 1)) * a3;
    }
  }
  for (int p = 0; p <= degree; ++p)
    for (int q = 0; q <= degree - p; ++q)
      P.row(idx2(p, q)) *= std::sqrt((p + 0.5) * (p + q + 1.0)) * 2.0;
  return P;
}

// Orthonormal set on the reference tetrahedron.
Eigen::MatrixXd tabulate_tetrahedron(int degree, const Eigen::MatrixXd& pts)
{
  const int np = static_cast<int>(pts.rows());
  const int m = (degree + 1) * (degree + 2) * (degree + 3) / 6;
  Eigen::MatrixXd P(m, np);

  Eigen::ArrayXd x = 2.0 * pts.col(0).array() - 1.0;
  Eigen::ArrayXd y = 2.0 * pts.col(1).array() - 1.0;
  Eigen::ArrayXd z = 2.0 * pts.col(2).array() - 1.0;

  Eigen::ArrayXd f2 = (y + z).square() * 0.25;
  Eigen::ArrayXd f3 = (1.0 + 2.0 * y + z) * 0.5;
  Eigen::ArrayXd f4 = (1.0 - z) * 0.5;
  Eigen::ArrayXd f5 = f4 * f4;

  P.row(idx3(0, 0, 0)).setOnes();
  for (int p = 1; p <= degree; ++p)
  {
    double a = (2.0 * p - 1.0) / p;
    P.row(idx3(p, 0, 0)) = ((x + 0.5 * (y + z) + 1.0) * a
                            * P.row(idx3(p - 1, 0, 0)).transpose().array())
                               .transpose();
    if (p > 1)
      P.row(idx3(p, 0, 0)) -= (f2 * (a - 1.0)
                               * P.row(idx3(p - 2, 0, 0)).transpose().array())
                                  .transpose();
  }
  for (int p = 0; p < degree; ++p)
  {
    P.row(idx3(p, 1, 0)) = (((1.0 + y) * p + (2.0 + 3.0 * y + z) * 0.5)
                            * P.row(idx3(p, 0, 0)).transpose().array())
                               .transpose();
    for (int q = 1; q < degree - p; ++q)
    {
      auto [aq, bq, cq] = jrc(2 * p + 1, q);
      P.row(idx3(p, q + 1, 0))
          = ((f3 * aq + f4 * bq) * P.row(idx3(p, q, 0)).transpose().array())
                .transpose()
            - (f5 * cq * P.row(idx3(p, q - 1, 0)).transpose().array())
                  .transpose();
    }
  }
  for (int p = 0; p < degree; ++p)
    for (int q = 0; q < degree - p; ++q)
    {
      P.row(idx3(p, q, 1)) = (((1.0 + p + q) + z * (2.0 + p + q))
                              * P.row(idx3(p, q, 0)).transpose().array())
                                 .transpose();
    }
  for (int p = 0; p + 1 < degree; ++p)
    for (int q = 0; q < degree - p - 1; ++q)
      for (int r = 1; r < degree - p - q; ++r)
      {
        auto [ar, br, cr] = jrc(2 * p + 2 * q + 2, r);
        P.row(idx3(p, q, r + 1))
            = ((z * ar + br) * P.row(idx3(p, q, r)).transpose().array())
                  .transpose()
              - P.row(idx3(p, q, r - 1)) * cr;
      }

  const double root8 = std::sqrt(8.0);
  for (int p = 0; p <= degree; ++p)
    for (int q = 0; q <= degree - p; ++q)
      for (int r = 0; r <= degree - p - q; ++r)
        P.row(idx3(p, q, r))
            *= std::sqrt((p + 0.5) * (p + q + 1.0) * (p + q + r + 1.5))
               * root8;
  return P;
}

Eigen::MatrixXd points_matrix(const PointSet& points, int dim)
{
  Eigen::MatrixXd m(points.size(), dim);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (int c = 0; c < dim; ++c)
      m(static_cast<int>(i), c) = points.coords[i][c];
  return m;
}

} // namespace

bool point_in_cell(CellKind kind, const std::array<double, 3>& p, double tol)
{
  auto in01 = [tol](double t) { return t >= -tol && t <= 1.0 + tol; };
  switch (kind.shape)
  {
  case CellKind::Shape::interval:
    return in01(p[0]);
  case CellKind::Shape::triangle:
    return p[0] >= -tol && p[1] >= -tol && p[0] + p[1] <= 1.0 + tol;
  case CellKind::Shape::quadrilateral:
    return in01(p[0]) && in01(p[1]);
  case CellKind::Shape::tetrahedron:
    return p[0] >= -tol && p[1] >= -tol && p[2] >= -tol
           && p[0] + p[1] + p[2] <= 1.0 + tol;
  case CellKind::Shape::hexahedron:
    return in01(p[0]) && in01(p[1]) && in01(p[2]);
  case CellKind::Shape::prism:
    return p[0] >= -tol && p[1] >= -tol && p[0] + p[1] <= 1.0 + tol
           && in01(p[2]);
  case CellKind::Shape::polygon:
    return true; // no polynomial machinery on general polygons
  }
  return false;
}

void validate_points(CellKind kind, const PointSet& points, double tol)
{
  for (const auto& p : points.coords)
    if (!point_in_cell(kind, p, tol))
      detail::fail(error_kind::invalid_argument,
                   "point outside reference " + to_string(kind));
}

int expansion_dim(CellKind kind, int degree)
{
  const int d = degree;
  switch (kind.shape)
  {
  case CellKind::Shape::interval:
    return d + 1;
  case CellKind::Shape::triangle:
    return (d + 1) * (d + 2) / 2;
  case CellKind::Shape::quadrilateral:
    return (d + 1) * (d + 1);
  case CellKind::Shape::tetrahedron:
    return (d + 1) * (d + 2) * (d + 3) / 6;
  case CellKind::Shape::hexahedron:
    return (d + 1) * (d + 1) * (d + 1);
  case CellKind::Shape::prism:
    return (d + 1) * (d + 1) * (d + 2) / 2;
  default:
    detail::fail(error_kind::invalid_argument,
                 "no expansion set for " + to_string(kind));
  }
}

Eigen::MatrixXd tabulate_expansion_unchecked(CellKind kind, int degree,
                                             const PointSet& points)
{
  switch (kind.shape)
  {
  case CellKind::Shape::interval:
    return tabulate_line(degree, points_matrix(points, 1).col(0));
  case CellKind::Shape::triangle:
    return tabulate_triangle(degree, points_matrix(points, 2));
  case CellKind::Shape::tetrahedron:
    return tabulate_tetrahedron(degree, points_matrix(points, 3));
  case CellKind::Shape::quadrilateral:
  {
    auto m = points_matrix(points, 2);
    Eigen::MatrixXd px = tabulate_line(degree, m.col(0));
    Eigen::MatrixXd py = tabulate_line(degree, m.col(1));
    const int n1 = degree + 1;
    Eigen::MatrixXd P(n1 * n1, m.rows());
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n1; ++j)
        P.row(i * n1 + j) = px.row(i).array() * py.row(j).array();
    return P;
  }
  case CellKind::Shape::hexahedron:
  {
    auto m = points_matrix(points, 3);
    Eigen::MatrixXd px = tabulate_line(degree, m.col(0));
    Eigen::MatrixXd py = tabulate_line(degree, m.col(1));
    Eigen::MatrixXd pz = tabulate_line(degree, m.col(2));
    const int n1 = degree + 1;
    Eigen::MatrixXd P(n1 * n1 * n1, m.rows());
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n1; ++j)
        for (int k = 0; k < n1; ++k)
          P.row((i * n1 + j) * n1 + k) = px.row(i).array()
                                         * py.row(j).array()
                                         * pz.row(k).array();
    return P;
  }
  case CellKind::Shape::prism:
  {
    auto m = points_matrix(points, 3);
    Eigen::MatrixXd pt = tabulate_triangle(degree, m.leftCols(2));
    Eigen::MatrixXd pz = tabulate_line(degree, m.col(2));
    const int nt = (degree + 1) * (degree + 2) / 2;
    const int n1 = degree + 1;
    Eigen::MatrixXd P(nt * n1, m.rows());
    for (int i = 0; i < nt; ++i)
      for (int k = 0; k < n1; ++k)
        P.row(i * n1 + k) = pt.row(i).array() * pz.row(k).array();
    return P;
  }
  default:
    detail::fail(error_kind::invalid_argument,
                 "no expansion set for " + to_string(kind));
  }
}

Eigen::MatrixXd tabulate_expansion(CellKind kind, int degree,
                                   const PointSet& points)
{
  if (degree < 0)
    detail::fail(error_kind::invalid_argument, "negative degree");
  if (degree > max_expansion_degree)
    detail::fail(error_kind::unsupported_degree,
                 "expansion degree " + std::to_string(degree)
                     + " above conditioning cap "
                     + std::to_string(max_expansion_degree));
  return tabulate_expansion_unchecked(kind, degree, points);
}

Eigen::MatrixXd PolynomialSet::evaluate(const PointSet& points) const
{
  Eigen::MatrixXd E = tabulate_expansion_unchecked(cell, degree, points);
  const int ne = static_cast<int>(E.rows());
  const int np = static_cast<int>(E.cols());
  Eigen::MatrixXd values(dim_space, np * value_size);
  for (int c = 0; c < value_size; ++c)
  {
    Eigen::MatrixXd comp = coeffs.middleCols(c * ne, ne) * E;
    for (int p = 0; p < np; ++p)
      values.col(p * value_size + c) = comp.col(p);
  }
  return values;
}

Eigen::VectorXd project_onto_expansion(
    CellKind cell, int expansion_degree, int poly_degree,
    const std::function<double(const std::array<double, 3>&)>& f)
{
  auto rule = make_quadrature(cell, expansion_degree + poly_degree);
  PointSet pts{rule.points};
  Eigen::MatrixXd E = tabulate_expansion_unchecked(cell, expansion_degree, pts);
  Eigen::VectorXd fw(rule.size());
  for (std::size_t q = 0; q < rule.size(); ++q)
    fw(static_cast<int>(q)) = f(rule.points[q]) * rule.weights[q];
  return E * fw;
}

PolynomialSet scalar_span(CellKind cell, int degree)
{
  PolynomialSet set;
  set.cell = cell;
  set.degree = degree;
  set.value_size = 1;
  set.dim_space = expansion_dim(cell, degree);
  set.coeffs = Eigen::MatrixXd::Identity(set.dim_space, set.dim_space);
  return set;
}

namespace
{

double pow_i(double x, int e)
{
  double r = 1.0;
  for (int i = 0; i < e; ++i)
    r *= x;
  return r;
}

// Projects vector-valued generators given as monomial exponent/component
// lists onto the expansion set of the given degree.
struct VectorGenerator
{
  int component;
  std::array<int, 3> exponents;
  double scale = 1.0;
};

PolynomialSet span_from_generators(
    CellKind cell, int degree, int value_size,
    const std::vector<std::vector<VectorGenerator>>& members)
{
  const int ne = expansion_dim(cell, degree);
  PolynomialSet set;
  set.cell = cell;
  set.degree = degree;
  set.value_size = value_size;
  set.dim_space = static_cast<int>(members.size());
  set.coeffs = Eigen::MatrixXd::Zero(set.dim_space, value_size * ne);

  for (std::size_t m = 0; m < members.size(); ++m)
  {
    for (const auto& gen : members[m])
    {
      int total = gen.exponents[0] + gen.exponents[1] + gen.exponents[2];
      Eigen::VectorXd c = project_onto_expansion(
          cell, degree, total,
          [&gen](const std::array<double, 3>& p)
          {
            return gen.scale * pow_i(p[0], gen.exponents[0])
                   * pow_i(p[1], gen.exponents[1])
                   * pow_i(p[2], gen.exponents[2]);
          });
      set.coeffs.block(static_cast<int>(m), gen.component * ne, 1, ne)
          += c.transpose();
    }
  }

  // Members must be linearly independent.
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(set.coeffs);
  if (svd.rank() != set.dim_space)
    detail::fail(error_kind::degenerate_element,
                 "polynomial span has linearly dependent members");
  return set;
}

} // namespace

PolynomialSet vector_span(VectorFamily family, CellKind cell, int degree)
{
  using Gen = VectorGenerator;
  std::vector<std::vector<Gen>> members;

  if (family == VectorFamily::raviart_thomas
      && cell == CellKind::quadrilateral() && (degree == 1 || degree == 2))
  {
    const int k = degree;
    // x-components x^a y^b with a <= k, b <= k-1; y-components transposed.
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k - 1; ++b)
        members.push_back({Gen{0, {a, b, 0}}});
    for (int a = 0; a <= k - 1; ++a)
      for (int b = 0; b <= k; ++b)
        members.push_back({Gen{1, {a, b, 0}}});
    return span_from_generators(cell, degree, 2, members);
  }

  if (family == VectorFamily::raviart_thomas && cell == CellKind::triangle()
      && (degree == 1 || degree == 2))
  {
    const int k = degree;
    // [P_{k-1}]^2 plus x h for homogeneous h of degree k-1.
    for (int c = 0; c < 2; ++c)
      for (int a = 0; a + 0 <= k - 1; ++a)
        for (int b = 0; a + b <= k - 1; ++b)
          members.push_back({Gen{c, {a, b, 0}}});
    for (int a = 0; a <= k - 1; ++a)
    {
      int b = k - 1 - a;
      members.push_back(
          {Gen{0, {a + 1, b, 0}}, Gen{1, {a, b + 1, 0}}});
    }
    return span_from_generators(cell, degree, 2, members);
  }

  if (family == VectorFamily::nedelec1 && cell == CellKind::tetrahedron()
      && (degree == 1 || degree == 2))
  {
    const int k = degree;
    for (int c = 0; c < 3; ++c)
      for (int a = 0; a <= k - 1; ++a)
        for (int b = 0; a + b <= k - 1; ++b)
          for (int d = 0; a + b + d <= k - 1; ++d)
            members.push_back({Gen{c, {a, b, d}}});
    if (k == 1)
    {
      members.push_back({Gen{0, {0, 1, 0}}, Gen{1, {1, 0, 0}, -1.0}});
      members.push_back({Gen{0, {0, 0, 1}}, Gen{2, {1, 0, 0}, -1.0}});
      members.push_back({Gen{1, {0, 0, 1}}, Gen{2, {0, 1, 0}, -1.0}});
    }
    else
    {
      // Rotational complement of degree 2 (members with p . x = 0).
      members.push_back({Gen{0, {0, 0, 2}}, Gen{2, {1, 0, 1}, -1.0}});
      members.push_back({Gen{0, {1, 0, 1}}, Gen{2, {2, 0, 0}, -1.0}});
      members.push_back({Gen{0, {0, 1, 1}}, Gen{2, {1, 1, 0}, -1.0}});
      members.push_back({Gen{1, {0, 0, 2}}, Gen{2, {0, 1, 1}, -1.0}});
      members.push_back({Gen{1, {0, 1, 1}}, Gen{2, {0, 2, 0}, -1.0}});
      members.push_back({Gen{1, {1, 0, 1}}, Gen{2, {1, 1, 0}, -1.0}});
      members.push_back({Gen{0, {1, 1, 0}}, Gen{1, {2, 0, 0}, -1.0}});
      members.push_back({Gen{0, {0, 2, 0}}, Gen{1, {1, 1, 0}, -1.0}});
    }
    return span_from_generators(cell, degree, 3, members);
  }

  detail::fail(error_kind::unsupported_element,
               "unsupported vector span: " + to_string(cell) + " degree "
                   + std::to_string(degree));
}

PolynomialSet serendipity_span(CellKind cell, int degree)
{
  if (cell != CellKind::quadrilateral() && cell != CellKind::hexahedron())
    detail::fail(error_kind::unsupported_element,
                 "serendipity spans exist on quadrilateral/hexahedron");
  if (degree < 1 || degree > 5)
    detail::fail(error_kind::unsupported_element,
                 "serendipity degree out of range (1-5)");

  const int dim = cell == CellKind::hexahedron() ? 3 : 2;
  auto superlinear = [](const std::array<int, 3>& e)
  {
    int s = 0;
    for (int c = 0; c < 3; ++c)
      if (e[c] >= 2)
        s += e[c];
    return s;
  };

  std::vector<std::vector<VectorGenerator>> members;
  std::array<int, 3> e = {0, 0, 0};
  for (e[0] = 0; e[0] <= degree; ++e[0])
    for (e[1] = 0; e[1] <= degree; ++e[1])
      for (e[2] = 0; e[2] <= (dim == 3 ? degree : 0); ++e[2])
        if (superlinear(e) <= degree)
          members.push_back({VectorGenerator{0, e}});

  return span_from_generators(cell, degree, 1, members);
}

PolynomialSet dpc_span(int degree)
{
  std::vector<std::vector<VectorGenerator>> members;
  for (int total = 0; total <= degree; ++total)
    for (int a = total; a >= 0; --a)
      members.push_back({VectorGenerator{0, {a, total - a, 0}}});
  return span_from_generators(CellKind::quadrilateral(), degree, 1, members);
}

} // namespace ciarlet
