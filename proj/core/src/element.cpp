// Copyright (c) 2026 ciarlet authors
// SPDX-License-Identifier: MIT

#include "ciarlet/element.hpp"
#include "ciarlet/errors.hpp"
#include "ciarlet/quadrature.hpp"

#include <cmath>

namespace ciarlet
{

std::string to_string(Family family)
{
  switch (family)
  {
  case Family::lagrange:
    return "lagrange";
  case Family::raviart_thomas:
    return "raviart_thomas";
  case Family::nedelec1:
    return "nedelec1";
  case Family::serendipity:
    return "serendipity";
  }
  return "unknown";
}

Family family_from_string(const std::string& name)
{
  if (name == "lagrange")
    return Family::lagrange;
  if (name == "raviart_thomas" || name == "rt")
    return Family::raviart_thomas;
  if (name == "nedelec1" || name == "n1curl")
    return Family::nedelec1;
  if (name == "serendipity")
    return Family::serendipity;
  detail::fail(error_kind::invalid_argument, "unknown family: " + name);
}

Eigen::MatrixXd MomentSpace::evaluate(const PointSet& entity_points) const
{
  PolynomialSet as_set{entity_kind, degree, value_size,
                       static_cast<int>(coeffs.rows()), coeffs};
  return as_set.evaluate(entity_points);
}

namespace
{

using Vec3 = std::array<double, 3>;

Vec3 sub3(const Vec3& a, const Vec3& b)
{
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Vec3 unit(const Vec3& v)
{
  double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  return {v[0] / n, v[1] / n, v[2] / n};
}

// Chart built from an explicit vertex cycle (supports overridden tuples).
EntityChart chart_from_cycle(const CellTopology& topo,
                             const std::vector<int>& cycle, int dim)
{
  EntityChart chart;
  chart.entity_dim = dim;
  chart.origin = topo.vertices[cycle[0]];
  auto set_axis = [&](int v, int k)
  { chart.axes[k] = sub3(topo.vertices[v], chart.origin); };
  if (dim == topo.dim)
  {
    // Cell entity: identity frame.
    chart.origin = {0, 0, 0};
    chart.axes[0] = {1, 0, 0};
    chart.axes[1] = {0, 1, 0};
    return chart;
  }
  set_axis(cycle[1], 0);
  if (dim == 2)
    set_axis(cycle.size() == 4 ? cycle[3] : cycle[2], 1);
  return chart;
}

std::vector<int> entity_cycle(const CellTopology& topo, int dim, int index,
                              const EntityVertexOverrides& overrides)
{
  if (auto it = overrides.find({dim, index}); it != overrides.end())
    return it->second;
  return topo.sub_entity(dim, index);
}

// Interior equispaced lattice of an entity, in entity coordinates.
// Ordering: first coordinate fastest.
std::vector<std::array<double, 2>> interior_lattice_2(CellKind kind,
                                                      int degree)
{
  std::vector<std::array<double, 2>> pts;
  const double d = degree;
  if (kind == CellKind::interval())
  {
    for (int i = 1; i < degree; ++i)
      pts.push_back({i / d, 0});
  }
  else if (kind == CellKind::triangle())
  {
    for (int j = 1; j < degree; ++j)
      for (int i = 1; i + j < degree; ++i)
        pts.push_back({i / d, j / d});
  }
  else if (kind == CellKind::quadrilateral())
  {
    for (int j = 1; j < degree; ++j)
      for (int i = 1; i < degree; ++i)
        pts.push_back({i / d, j / d});
  }
  else
    detail::fail(error_kind::invalid_argument, "unsupported lattice entity");
  return pts;
}

// Interior lattice of a 3D cell in cell coordinates.
std::vector<Vec3> interior_lattice_cell(CellKind kind, int degree)
{
  std::vector<Vec3> pts;
  const double d = degree;
  if (kind == CellKind::tetrahedron())
  {
    for (int k = 1; k < degree; ++k)
      for (int j = 1; j + k < degree; ++j)
        for (int i = 1; i + j + k < degree; ++i)
          pts.push_back({i / d, j / d, k / d});
  }
  else if (kind == CellKind::hexahedron())
  {
    for (int k = 1; k < degree; ++k)
      for (int j = 1; j < degree; ++j)
        for (int i = 1; i < degree; ++i)
          pts.push_back({i / d, j / d, k / d});
  }
  else if (kind == CellKind::prism())
  {
    for (int k = 1; k < degree; ++k)
      for (int j = 1; j < degree; ++j)
        for (int i = 1; i + j < degree; ++i)
          pts.push_back({i / d, j / d, k / d});
  }
  return pts;
}

// Equispaced Lagrange weights of the given degree on [0, 1], expressed
// over the interval expansion set.
MomentSpace interval_lagrange_weights(int degree, DirectionMode mode)
{
  MomentSpace ms;
  ms.entity_kind = CellKind::interval();
  ms.mode = mode;
  ms.value_size = 1;
  ms.degree = degree;
  ms.weight_degree = degree;

  PointSet nodes;
  if (degree == 0)
    nodes.coords.push_back({0.5, 0, 0});
  else
    for (int i = 0; i <= degree; ++i)
      nodes.coords.push_back({static_cast<double>(i) / degree, 0, 0});

  Eigen::MatrixXd E
      = tabulate_expansion_unchecked(CellKind::interval(), degree, nodes);
  ms.coeffs = E.inverse();
  return ms;
}

// dPc weights on a quadrilateral: the nodal basis of a degree-m Lagrange
// space on a triangle, as polynomials over the quad expansion set.
MomentSpace dpc_lagrange_weights(int degree)
{
  MomentSpace ms;
  ms.entity_kind = CellKind::quadrilateral();
  ms.mode = DirectionMode::scalar;
  ms.value_size = 1;
  ms.degree = degree;
  ms.weight_degree = degree;

  PointSet nodes;
  if (degree == 0)
    nodes.coords.push_back({1.0 / 3.0, 1.0 / 3.0, 0});
  else
    for (int j = 0; j <= degree; ++j)
      for (int i = 0; i + j <= degree; ++i)
        nodes.coords.push_back({static_cast<double>(i) / degree,
                                static_cast<double>(j) / degree, 0});

  // Nodal coefficients over the triangle expansion, then re-expressed
  // over the quad expansion (the recurrences are polynomials, valid on
  // the whole square).
  Eigen::MatrixXd Etri = tabulate_expansion_unchecked(CellKind::triangle(),
                                                      degree, nodes);
  Eigen::MatrixXd Ctri = Etri.inverse();

  auto rule = make_quadrature(CellKind::quadrilateral(), 2 * degree + 2);
  PointSet qpts{rule.points};
  Eigen::MatrixXd Etri_q
      = tabulate_expansion_unchecked(CellKind::triangle(), degree, qpts);
  Eigen::MatrixXd Equad_q = tabulate_expansion_unchecked(
      CellKind::quadrilateral(), degree, qpts);
  Eigen::MatrixXd W = Ctri * Etri_q; // weight values at quad points
  for (std::size_t q = 0; q < rule.size(); ++q)
    W.col(static_cast<int>(q)) *= rule.weights[q];
  ms.coeffs = W * Equad_q.transpose();
  return ms;
}

// Constant tangent-frame pair on a face: weights (1,0) and (0,1) in the
// face frame.
MomentSpace face_tangent_weights(CellKind face_kind)
{
  MomentSpace ms;
  ms.entity_kind = face_kind;
  ms.mode = DirectionMode::face_tangent;
  ms.value_size = 2;
  ms.degree = 0;
  ms.weight_degree = 0;

  PointSet one{{{0.25, 0.25, 0}}};
  double c = tabulate_expansion_unchecked(face_kind, 0, one)(0, 0);
  ms.coeffs = Eigen::MatrixXd::Zero(2, 2);
  ms.coeffs(0, 0) = 1.0 / c;
  ms.coeffs(1, 1) = 1.0 / c;
  return ms;
}

// Interior weights for degree-2 Raviart-Thomas: first-kind Nedelec span
// on the quadrilateral, [P_0]^2 on the triangle. Fixed cell-coordinate
// vectors.
MomentSpace rt_interior_weights(CellKind cell)
{
  MomentSpace ms;
  ms.entity_kind = cell;
  ms.mode = DirectionMode::fixed_vector;
  ms.value_size = 2;
  ms.degree = 1;
  ms.weight_degree = 1;

  const int ne = expansion_dim(cell, 1);
  auto project_mono = [&](int comp, int ex, int ey)
  {
    return project_onto_expansion(cell, 1, ex + ey,
                                  [=](const Vec3& p)
                                  {
                                    double r = 1.0;
                                    for (int i = 0; i < ex; ++i)
                                      r *= p[0];
                                    for (int i = 0; i < ey; ++i)
                                      r *= p[1];
                                    return r;
                                  });
  };

  if (cell == CellKind::quadrilateral())
  {
    // span{(1,0), (y,0), (0,1), (0,x)}
    ms.coeffs = Eigen::MatrixXd::Zero(4, 2 * ne);
    ms.coeffs.block(0, 0, 1, ne) = project_mono(0, 0, 0).transpose();
    ms.coeffs.block(1, 0, 1, ne) = project_mono(0, 0, 1).transpose();
    ms.coeffs.block(2, ne, 1, ne) = project_mono(1, 0, 0).transpose();
    ms.coeffs.block(3, ne, 1, ne) = project_mono(1, 1, 0).transpose();
  }
  else
  {
    ms.degree = 0;
    ms.weight_degree = 0;
    const int n0 = expansion_dim(cell, 0);
    PointSet one{{{0.25, 0.25, 0}}};
    double c = tabulate_expansion_unchecked(cell, 0, one)(0, 0);
    ms.coeffs = Eigen::MatrixXd::Zero(2, 2 * n0);
    ms.coeffs(0, 0) = 1.0 / c;
    ms.coeffs(1, 1) = 1.0 / c;
  }
  return ms;
}

// Frame vectors pairing a moment space's weight components with the
// argument function, in cell coordinates.
std::vector<Vec3> moment_frame(const MomentSpace& ms, const EntityChart& chart,
                               int cell_dim)
{
  switch (ms.mode)
  {
  case DirectionMode::scalar:
    return {};
  case DirectionMode::tangent:
    return {unit(chart.axes[0])};
  case DirectionMode::normal:
  {
    Vec3 t = unit(chart.axes[0]);
    // 90 degree anticlockwise rotation of the edge direction (2D cells).
    return {{-t[1], t[0], 0}};
  }
  case DirectionMode::face_tangent:
    return {chart.axes[0], chart.axes[1]};
  case DirectionMode::fixed_vector:
  {
    std::vector<Vec3> frame = {{1, 0, 0}, {0, 1, 0}};
    if (cell_dim == 3)
      frame.push_back({0, 0, 1});
    frame.resize(cell_dim);
    return frame;
  }
  }
  return {};
}

struct Builder
{
  FiniteElement e;
  const EntityVertexOverrides* overrides;

  void add_point_eval(int dim, int index, const Vec3& p)
  {
    Functional f;
    f.kind = Functional::Kind::point_eval;
    f.entity = {dim, index};
    f.point = p;
    e.entity_dofs[dim][index].push_back(e.n_dofs());
    e.functionals.push_back(f);
  }

  void add_moments(int dim, int index, const MomentSpace& ms)
  {
    e.moment_spaces[{dim, index}] = ms;
    for (int w = 0; w < ms.size(); ++w)
    {
      Functional f;
      f.kind = Functional::Kind::integral_moment;
      f.entity = {dim, index};
      f.weight_index = w;
      f.mode = ms.mode;
      e.entity_dofs[dim][index].push_back(e.n_dofs());
      e.functionals.push_back(f);
    }
  }

  std::vector<int> cycle(int dim, int index) const
  {
    return entity_cycle(e.topo, dim, index, *overrides);
  }

  EntityChart chart(int dim, int index) const
  {
    return chart_from_cycle(e.topo, cycle(dim, index), dim);
  }
};

void build_lagrange(Builder& b, int degree)
{
  const CellTopology& topo = b.e.topo;
  for (int v = 0; v < topo.entity_counts[0]; ++v)
    b.add_point_eval(0, v, topo.vertices[v]);
  for (int d = 1; d < topo.dim; ++d)
  {
    for (int i = 0; i < topo.entity_counts[d]; ++i)
    {
      EntityChart chart = b.chart(d, i);
      CellKind ek = topo.sub_entity_kind(d, i);
      for (const auto& u : interior_lattice_2(ek, degree))
        b.add_point_eval(d, i, chart.to_cell(u));
    }
  }
  // Cell interior.
  if (topo.dim <= 2)
  {
    CellKind ck = topo.kind;
    if (topo.dim == 1)
    {
      for (const auto& u : interior_lattice_2(CellKind::interval(), degree))
        b.add_point_eval(1, 0, {u[0], 0, 0});
    }
    else
    {
      for (const auto& u : interior_lattice_2(ck, degree))
        b.add_point_eval(2, 0, {u[0], u[1], 0});
    }
  }
  else
  {
    for (const auto& p : interior_lattice_cell(topo.kind, degree))
      b.add_point_eval(3, 0, p);
  }
}

void build_raviart_thomas(Builder& b, int degree)
{
  const CellTopology& topo = b.e.topo;
  MomentSpace edge_ms = interval_lagrange_weights(degree - 1,
                                                  DirectionMode::normal);
  for (int i = 0; i < topo.entity_counts[1]; ++i)
    b.add_moments(1, i, edge_ms);
  if (degree == 2)
    b.add_moments(2, 0, rt_interior_weights(topo.kind));
}

void build_nedelec(Builder& b, int degree)
{
  const CellTopology& topo = b.e.topo;
  MomentSpace edge_ms = interval_lagrange_weights(degree - 1,
                                                  DirectionMode::tangent);
  for (int i = 0; i < topo.entity_counts[1]; ++i)
    b.add_moments(1, i, edge_ms);
  if (degree == 2)
  {
    for (int i = 0; i < topo.entity_counts[2]; ++i)
      b.add_moments(2, i, face_tangent_weights(topo.sub_entity_kind(2, i)));
  }
}

void build_serendipity(Builder& b, int degree)
{
  const CellTopology& topo = b.e.topo;
  for (int v = 0; v < topo.entity_counts[0]; ++v)
    b.add_point_eval(0, v, topo.vertices[v]);
  if (degree >= 2)
  {
    MomentSpace edge_ms = interval_lagrange_weights(degree - 2,
                                                    DirectionMode::scalar);
    for (int i = 0; i < topo.entity_counts[1]; ++i)
      b.add_moments(1, i, edge_ms);
  }
  if (degree >= 4)
  {
    MomentSpace face_ms = dpc_lagrange_weights(degree - 4);
    if (topo.dim == 3)
    {
      for (int i = 0; i < topo.entity_counts[2]; ++i)
        b.add_moments(2, i, face_ms);
    }
    else
      b.add_moments(2, 0, face_ms);
  }
  // Hexahedron interiors first appear at degree 6, above the supported
  // range.
}

// Evaluates functional i against every member of `polys`; one row per
// functional.
Eigen::MatrixXd dual_matrix(const FiniteElement& e, const PolynomialSet& polys)
{
  const int n = static_cast<int>(e.functionals.size());
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n, polys.dim_space);

  // Point evaluations, grouped for a single tabulation.
  std::vector<int> point_rows;
  PointSet pts;
  for (int i = 0; i < n; ++i)
  {
    const Functional& f = e.functionals[i];
    if (f.kind != Functional::Kind::integral_moment)
    {
      point_rows.push_back(i);
      pts.coords.push_back(f.point);
    }
  }
  if (!pts.coords.empty())
  {
    Eigen::MatrixXd V = polys.evaluate(pts);
    for (std::size_t r = 0; r < point_rows.size(); ++r)
    {
      const Functional& f = e.functionals[point_rows[r]];
      int p = static_cast<int>(r);
      if (f.kind == Functional::Kind::point_eval)
      {
        for (int j = 0; j < polys.dim_space; ++j)
          B(point_rows[r], j) = V(j, p * polys.value_size);
      }
      else
      {
        for (int j = 0; j < polys.dim_space; ++j)
        {
          double s = 0;
          for (int c = 0; c < polys.value_size; ++c)
            s += f.direction[c] * V(j, p * polys.value_size + c);
          B(point_rows[r], j) = s;
        }
      }
    }
  }

  // Integral moments, per entity.
  for (const auto& [key, ms] : e.moment_spaces)
  {
    auto chart_it = e.entity_charts.find(key);
    EntityChart chart = chart_it != e.entity_charts.end()
                            ? chart_it->second
                            : entity_chart(e.topo, key[0], key[1]);
    std::vector<Vec3> frame = moment_frame(ms, chart, e.topo.dim);

    auto rule = make_quadrature(ms.entity_kind,
                                polys.degree + ms.weight_degree + 2);
    PointSet epts{rule.points};
    PointSet cpts;
    for (const auto& u : rule.points)
      cpts.coords.push_back(chart.to_cell({u[0], u[1]}));

    Eigen::MatrixXd Wv = ms.evaluate(epts);          // weights
    Eigen::MatrixXd Pv = polys.evaluate(cpts);       // span members

    const auto& dofs = e.entity_dofs[key[0]][key[1]];
    for (int w = 0; w < ms.size(); ++w)
    {
      int row = dofs[w];
      for (int j = 0; j < polys.dim_space; ++j)
      {
        double s = 0;
        for (std::size_t q = 0; q < rule.size(); ++q)
        {
          int qi = static_cast<int>(q);
          double contrib = 0;
          if (ms.mode == DirectionMode::scalar)
            contrib = Wv(w, qi) * Pv(j, qi);
          else
          {
            for (int c = 0; c < ms.value_size; ++c)
            {
              double vdot = 0;
              for (int pc = 0; pc < polys.value_size; ++pc)
                vdot += frame[c][pc] * Pv(j, qi * polys.value_size + pc);
              contrib += Wv(w, qi * ms.value_size + c) * vdot;
            }
          }
          s += rule.weights[q] * contrib;
        }
        B(row, j) = s;
      }
    }
  }
  return B;
}

void check_supported(Family family, CellKind cell, int degree)
{
  auto ok = [&]() -> bool
  {
    switch (family)
    {
    case Family::lagrange:
      return (cell == CellKind::interval() || cell == CellKind::triangle()
              || cell == CellKind::quadrilateral()
              || cell == CellKind::tetrahedron()
              || cell == CellKind::hexahedron() || cell == CellKind::prism())
             && degree >= 1 && degree <= 10;
    case Family::raviart_thomas:
      return (cell == CellKind::triangle()
              || cell == CellKind::quadrilateral())
             && (degree == 1 || degree == 2);
    case Family::nedelec1:
      return cell == CellKind::tetrahedron() && (degree == 1 || degree == 2);
    case Family::serendipity:
      return (cell == CellKind::quadrilateral()
              || cell == CellKind::hexahedron())
             && degree >= 1 && degree <= 5;
    }
    return false;
  }();
  if (!ok)
    detail::fail(error_kind::unsupported_element,
                 "unsupported element: " + to_string(family) + " on "
                     + to_string(cell) + " degree "
                     + std::to_string(degree));
}

} // namespace

FiniteElement create_element_oriented(Family family, CellKind cell,
                                      int degree,
                                      const EntityVertexOverrides& overrides)
{
  check_supported(family, cell, degree);

  Builder b;
  b.overrides = &overrides;
  b.e.cell = cell;
  b.e.family = family;
  b.e.degree = degree;
  b.e.topo = make_topology(cell);
  b.e.entity_dofs.assign(4, {});
  for (int d = 0; d <= 3; ++d)
    b.e.entity_dofs[d].resize(b.e.topo.entity_counts[d]);

  switch (family)
  {
  case Family::lagrange:
    b.e.sobolev = Sobolev::H1;
    b.e.value_size = 1;
    b.e.span = scalar_span(cell, degree);
    build_lagrange(b, degree);
    break;
  case Family::raviart_thomas:
    b.e.sobolev = Sobolev::Hdiv;
    b.e.value_size = 2;
    b.e.span = vector_span(VectorFamily::raviart_thomas, cell, degree);
    build_raviart_thomas(b, degree);
    break;
  case Family::nedelec1:
    b.e.sobolev = Sobolev::Hcurl;
    b.e.value_size = 3;
    b.e.span = vector_span(VectorFamily::nedelec1, cell, degree);
    build_nedelec(b, degree);
    break;
  case Family::serendipity:
    b.e.sobolev = Sobolev::H1;
    b.e.value_size = 1;
    b.e.span = serendipity_span(cell, degree);
    build_serendipity(b, degree);
    break;
  }

  FiniteElement& e = b.e;
  if (e.n_dofs() != e.span.dim_space)
    detail::fail(error_kind::degenerate_element,
                 "functional count " + std::to_string(e.n_dofs())
                     + " does not match span dimension "
                     + std::to_string(e.span.dim_space));

  // Resolve charts for all edge/face/cell entities with the overrides
  // applied; the dual matrix and later re-evaluations use these.
  for (int d = 1; d <= e.topo.dim; ++d)
    for (int i = 0; i < e.topo.entity_counts[d]; ++i)
      e.entity_charts[{d, i}] = chart_from_cycle(
          e.topo, entity_cycle(e.topo, d, i, overrides), d);

  Eigen::MatrixXd B = dual_matrix(e, e.span);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(B);
  e.basis_coeffs = lu.solve(e.span.coeffs);
  double residual
      = (B * e.basis_coeffs - e.span.coeffs).norm() / e.span.coeffs.norm();
  if (!std::isfinite(residual) || residual > 1e-8)
    detail::fail(error_kind::degenerate_element,
                 "singular dual matrix for " + to_string(family) + " on "
                     + to_string(cell));
  return e;
}

FiniteElement create_element(Family family, CellKind cell, int degree)
{
  return create_element_oriented(family, cell, degree, {});
}

TabulatedBasis tabulate(const FiniteElement& element, const PointSet& points)
{
  for (const auto& p : points.coords)
    if (!point_in_cell(element.cell, p, 1e-12))
      detail::fail(error_kind::invalid_argument,
                   "tabulation point outside reference "
                       + to_string(element.cell));

  PolynomialSet basis{element.cell, element.span.degree, element.value_size,
                      element.n_dofs(), element.basis_coeffs};
  Eigen::MatrixXd V = basis.evaluate(points);

  TabulatedBasis tab;
  tab.n_dofs = element.n_dofs();
  tab.n_points = static_cast<int>(points.size());
  tab.value_size = element.value_size;
  tab.data.resize(static_cast<std::size_t>(tab.n_dofs) * tab.n_points
                  * tab.value_size);
  for (int i = 0; i < tab.n_dofs; ++i)
    for (int p = 0; p < tab.n_points; ++p)
      for (int c = 0; c < tab.value_size; ++c)
        tab(i, p, c) = V(i, p * tab.value_size + c);
  return tab;
}

Eigen::MatrixXd apply_functionals(const FiniteElement& element,
                                  const PolynomialSet& polys)
{
  return dual_matrix(element, polys);
}

std::pair<MomentSpace, EntityChart> moment_space(const FiniteElement& element,
                                                 int dim, int index)
{
  auto it = element.moment_spaces.find({dim, index});
  if (it == element.moment_spaces.end())
    detail::fail(error_kind::no_moments,
                 "entity (" + std::to_string(dim) + ", "
                     + std::to_string(index) + ") carries no moments");
  return {it->second, element.entity_charts.at({dim, index})};
}

} // namespace ciarlet
