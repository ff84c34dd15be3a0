// Copyright (c) 2026 ciarlet authors
// SPDX-License-Identifier: MIT

#include "ciarlet/topology.hpp"
#include "ciarlet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

namespace ciarlet
{

CellKind CellKind::polygon(int n)
{
  if (n < 3)
    detail::fail(error_kind::invalid_argument,
                 "polygon requires at least 3 vertices, got "
                     + std::to_string(n));
  if (n == 3)
    return triangle();
  if (n == 4)
    return quadrilateral();
  return {Shape::polygon, n};
}

std::string to_string(CellKind kind)
{
  switch (kind.shape)
  {
  case CellKind::Shape::interval:
    return "interval";
  case CellKind::Shape::triangle:
    return "triangle";
  case CellKind::Shape::quadrilateral:
    return "quadrilateral";
  case CellKind::Shape::tetrahedron:
    return "tetrahedron";
  case CellKind::Shape::hexahedron:
    return "hexahedron";
  case CellKind::Shape::prism:
    return "prism";
  case CellKind::Shape::polygon:
    return "polygon(" + std::to_string(kind.ngon) + ")";
  }
  return "unknown";
}

CellKind cell_kind_from_string(const std::string& name)
{
  if (name == "interval")
    return CellKind::interval();
  if (name == "triangle")
    return CellKind::triangle();
  if (name == "quadrilateral")
    return CellKind::quadrilateral();
  if (name == "tetrahedron")
    return CellKind::tetrahedron();
  if (name == "hexahedron")
    return CellKind::hexahedron();
  if (name == "prism")
    return CellKind::prism();
  detail::fail(error_kind::invalid_argument, "unknown cell kind: " + name);
}

int CellTopology::num_entities(int entity_dim) const
{
  if (entity_dim < 0 || entity_dim > 3)
    detail::fail(error_kind::invalid_argument, "entity dimension out of range");
  return entity_counts[entity_dim];
}

std::vector<int> CellTopology::sub_entity(int entity_dim, int index) const
{
  if (entity_dim < 0 || entity_dim > dim)
    detail::fail(error_kind::invalid_argument,
                 "entity dimension " + std::to_string(entity_dim)
                     + " invalid for " + to_string(kind));
  if (index < 0 || index >= entity_counts[entity_dim])
    detail::fail(error_kind::invalid_argument,
                 "entity index " + std::to_string(index) + " out of range");

  if (entity_dim == 0)
    return {index};
  if (entity_dim == dim)
  {
    std::vector<int> all(vertices.size());
    for (std::size_t i = 0; i < all.size(); ++i)
      all[i] = static_cast<int>(i);
    return all;
  }
  if (entity_dim == 1)
    return {edges[index][0], edges[index][1]};
  return faces[index];
}

CellKind CellTopology::sub_entity_kind(int entity_dim, int index) const
{
  if (entity_dim == dim)
    return kind;
  if (entity_dim == 1)
    return CellKind::interval();
  if (entity_dim == 2)
    return CellKind::polygon(static_cast<int>(sub_entity(2, index).size()));
  detail::fail(error_kind::invalid_argument,
               "sub-entity kind undefined for dimension "
                   + std::to_string(entity_dim));
}

namespace
{

CellTopology interval_topology()
{
  CellTopology t;
  t.kind = CellKind::interval();
  t.dim = 1;
  t.vertices = {{0, 0, 0}, {1, 0, 0}};
  t.entity_counts = {2, 1, 0, 0};
  return t;
}

CellTopology triangle_topology()
{
  CellTopology t;
  t.kind = CellKind::triangle();
  t.dim = 2;
  t.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  // Non-incident (UFC) order: edge i is opposite vertex i.
  t.edges = {{1, 2}, {0, 2}, {0, 1}};
  t.entity_counts = {3, 3, 1, 0};
  return t;
}

CellTopology quadrilateral_topology()
{
  CellTopology t;
  t.kind = CellKind::quadrilateral();
  t.dim = 2;
  t.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
  t.edges = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  t.entity_counts = {4, 4, 1, 0};
  return t;
}

CellTopology tetrahedron_topology()
{
  CellTopology t;
  t.kind = CellKind::tetrahedron();
  t.dim = 3;
  t.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  t.edges = {{2, 3}, {1, 3}, {1, 2}, {0, 3}, {0, 2}, {0, 1}};
  t.faces = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  t.entity_counts = {4, 6, 4, 1};
  return t;
}

CellTopology hexahedron_topology()
{
  CellTopology t;
  t.kind = CellKind::hexahedron();
  t.dim = 3;
  t.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0},
                {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
  t.edges = {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3},
             {2, 6}, {3, 7}, {4, 5}, {4, 6}, {5, 7}, {6, 7}};
  t.faces = {{0, 1, 3, 2}, {0, 1, 5, 4}, {0, 2, 6, 4},
             {1, 3, 7, 5}, {2, 3, 7, 6}, {4, 5, 7, 6}};
  t.entity_counts = {8, 12, 6, 1};
  return t;
}

CellTopology prism_topology()
{
  CellTopology t;
  t.kind = CellKind::prism();
  t.dim = 3;
  t.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0},
                {0, 0, 1}, {1, 0, 1}, {0, 1, 1}};
  t.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4},
             {2, 5}, {3, 4}, {3, 5}, {4, 5}};
  t.faces = {{0, 1, 2}, {0, 1, 4, 3}, {0, 2, 5, 3}, {1, 2, 5, 4}, {3, 4, 5}};
  t.entity_counts = {6, 9, 5, 1};
  return t;
}

CellTopology polygon_topology(int n)
{
  CellTopology t;
  t.kind = CellKind{CellKind::Shape::polygon, n};
  t.dim = 2;
  t.vertices.resize(n);
  for (int k = 0; k < n; ++k)
  {
    double a = 2.0 * std::numbers::pi * k / n;
    t.vertices[k] = {std::cos(a), std::sin(a), 0.0};
  }
  for (int k = 0; k < n; ++k)
  {
    int a = k, b = (k + 1) % n;
    t.edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(t.edges.begin(), t.edges.end());
  t.entity_counts = {n, n, 1, 0};
  return t;
}

} // namespace

CellTopology make_topology(CellKind kind)
{
  switch (kind.shape)
  {
  case CellKind::Shape::interval:
    return interval_topology();
  case CellKind::Shape::triangle:
    return triangle_topology();
  case CellKind::Shape::quadrilateral:
    return quadrilateral_topology();
  case CellKind::Shape::tetrahedron:
    return tetrahedron_topology();
  case CellKind::Shape::hexahedron:
    return hexahedron_topology();
  case CellKind::Shape::prism:
    return prism_topology();
  case CellKind::Shape::polygon:
    if (kind.ngon < 5)
      detail::fail(error_kind::invalid_argument,
                   "non-normalized polygon tag");
    return polygon_topology(kind.ngon);
  }
  detail::fail(error_kind::invalid_argument, "unknown cell kind");
}

std::vector<int> sub_entity_vertices(const CellTopology& topo, int dim,
                                     int index)
{
  return topo.sub_entity(dim, index);
}

std::vector<std::vector<int>> reference_symmetries(CellKind kind)
{
  CellTopology topo = make_topology(kind);
  const int nv = static_cast<int>(topo.vertices.size());

  std::set<std::array<int, 2>> edge_set(topo.edges.begin(), topo.edges.end());

  std::vector<int> perm(nv);
  for (int i = 0; i < nv; ++i)
    perm[i] = i;

  std::vector<std::vector<int>> symmetries;
  do
  {
    bool ok = true;
    for (const auto& e : topo.edges)
    {
      int a = perm[e[0]], b = perm[e[1]];
      if (!edge_set.contains({std::min(a, b), std::max(a, b)}))
      {
        ok = false;
        break;
      }
    }
    if (ok)
      symmetries.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return symmetries;
}

int count_reference_orderings(CellKind kind)
{
  if (kind != CellKind::triangle() && kind != CellKind::quadrilateral()
      && kind != CellKind::tetrahedron() && kind != CellKind::hexahedron())
    detail::fail(error_kind::invalid_argument,
                 "reference-ordering enumeration unsupported for "
                     + to_string(kind));

  CellTopology topo = make_topology(kind);
  const int nv = static_cast<int>(topo.vertices.size());
  const int ne = static_cast<int>(topo.edges.size());

  std::map<std::array<int, 2>, int> edge_index;
  for (int e = 0; e < ne; ++e)
    edge_index[topo.edges[e]] = e;

  // Precompute each symmetry's action on edge patterns: edge e maps to a
  // stored edge target(e), with a flip when the symmetry reverses the
  // stored vertex order.
  auto symmetries = reference_symmetries(kind);
  struct EdgeAction
  {
    int target;
    bool flip;
  };
  std::vector<std::vector<EdgeAction>> actions(symmetries.size());
  for (std::size_t g = 0; g < symmetries.size(); ++g)
  {
    actions[g].resize(ne);
    for (int e = 0; e < ne; ++e)
    {
      int a = symmetries[g][topo.edges[e][0]];
      int b = symmetries[g][topo.edges[e][1]];
      actions[g][e] = {edge_index.at({std::min(a, b), std::max(a, b)}),
                       a > b};
    }
  }

  // All low-to-high direction patterns achievable by relabeling vertices.
  std::set<std::uint32_t> patterns;
  std::vector<int> label(nv);
  for (int i = 0; i < nv; ++i)
    label[i] = i;
  do
  {
    std::uint32_t p = 0;
    for (int e = 0; e < ne; ++e)
      if (label[topo.edges[e][0]] > label[topo.edges[e][1]])
        p |= (1u << e);
    patterns.insert(p);
  } while (std::next_permutation(label.begin(), label.end()));

  // Orbit count under the symmetry group.
  std::set<std::uint32_t> seen;
  int classes = 0;
  for (std::uint32_t p : patterns)
  {
    if (seen.contains(p))
      continue;
    ++classes;
    for (const auto& act : actions)
    {
      std::uint32_t q = 0;
      for (int e = 0; e < ne; ++e)
      {
        bool bit = (p >> e) & 1u;
        if (bit != act[e].flip)
          q |= (1u << act[e].target);
      }
      seen.insert(q);
    }
  }
  return classes;
}

std::array<double, 3> EntityChart::to_cell(const std::array<double, 2>& u) const
{
  std::array<double, 3> x = origin;
  for (int c = 0; c < 3; ++c)
    x[c] += u[0] * axes[0][c] + (entity_dim > 1 ? u[1] * axes[1][c] : 0.0);
  return x;
}

std::array<double, 2> EntityChart::to_entity(const std::array<double, 3>& x) const
{
  // Normal-equation solve; exact for points in the entity's affine span.
  std::array<double, 3> d = {x[0] - origin[0], x[1] - origin[1],
                             x[2] - origin[2]};
  auto dot = [](const std::array<double, 3>& p, const std::array<double, 3>& q)
  { return p[0] * q[0] + p[1] * q[1] + p[2] * q[2]; };

  if (entity_dim == 1)
    return {dot(d, axes[0]) / dot(axes[0], axes[0]), 0.0};

  double a00 = dot(axes[0], axes[0]);
  double a01 = dot(axes[0], axes[1]);
  double a11 = dot(axes[1], axes[1]);
  double r0 = dot(d, axes[0]);
  double r1 = dot(d, axes[1]);
  double det = a00 * a11 - a01 * a01;
  return {(a11 * r0 - a01 * r1) / det, (a00 * r1 - a01 * r0) / det};
}

EntityChart entity_chart(const CellTopology& topo, int dim, int index)
{
  if (dim < 1 || dim > 2 || dim > topo.dim)
    detail::fail(error_kind::invalid_argument,
                 "entity charts exist for edges and faces only");

  std::vector<int> cycle = topo.sub_entity(dim, index);
  EntityChart chart;
  chart.entity_dim = dim;
  chart.origin = topo.vertices[cycle[0]];
  auto axis_to = [&](int v, int k)
  {
    for (int c = 0; c < 3; ++c)
      chart.axes[k][c] = topo.vertices[v][c] - chart.origin[c];
  };
  axis_to(cycle[1], 0);
  if (dim == 2)
  {
    // Quadrilateral cycles list corners in traversal order; the s-axis
    // corner is the cycle's last vertex. Triangle cycles use vertex 2.
    axis_to(cycle.size() == 4 ? cycle[3] : cycle[2], 1);
  }
  return chart;
}

std::array<double, 2> EntityMap2::apply(const std::array<double, 2>& u) const
{
  return {a[0][0] * u[0] + a[0][1] * u[1] + b[0],
          a[1][0] * u[0] + a[1][1] * u[1] + b[1]};
}

EntityMap2 EntityMap2::compose(const EntityMap2& inner) const
{
  EntityMap2 out;
  for (int i = 0; i < 2; ++i)
  {
    for (int j = 0; j < 2; ++j)
      out.a[i][j] = a[i][0] * inner.a[0][j] + a[i][1] * inner.a[1][j];
    out.b[i] = a[i][0] * inner.b[0] + a[i][1] * inner.b[1] + b[i];
  }
  return out;
}

EntityMap2 entity_rotation_map(CellKind entity_kind)
{
  EntityMap2 m;
  switch (entity_kind.shape)
  {
  case CellKind::Shape::interval:
    return m; // rotations do not exist on edges
  case CellKind::Shape::triangle:
    m.a = {{{0, 1}, {-1, -1}}};
    m.b = {0, 1};
    return m;
  case CellKind::Shape::quadrilateral:
    m.a = {{{0, 1}, {-1, 0}}};
    m.b = {0, 1};
    return m;
  default:
    detail::fail(error_kind::invalid_argument,
                 "no rotation self-map for " + to_string(entity_kind));
  }
}

EntityMap2 entity_rotation_map_inverse(CellKind entity_kind)
{
  EntityMap2 m;
  switch (entity_kind.shape)
  {
  case CellKind::Shape::interval:
    return m;
  case CellKind::Shape::triangle:
    m.a = {{{-1, -1}, {1, 0}}};
    m.b = {1, 0};
    return m;
  case CellKind::Shape::quadrilateral:
    m.a = {{{0, -1}, {1, 0}}};
    m.b = {1, 0};
    return m;
  default:
    detail::fail(error_kind::invalid_argument,
                 "no rotation self-map for " + to_string(entity_kind));
  }
}

EntityMap2 entity_reflection_map(CellKind entity_kind)
{
  EntityMap2 m;
  switch (entity_kind.shape)
  {
  case CellKind::Shape::interval:
    m.a = {{{-1, 0}, {0, 1}}};
    m.b = {1, 0};
    return m;
  case CellKind::Shape::triangle:
  case CellKind::Shape::quadrilateral:
    m.a = {{{0, 1}, {1, 0}}};
    m.b = {0, 0};
    return m;
  default:
    detail::fail(error_kind::invalid_argument,
                 "no reflection self-map for " + to_string(entity_kind));
  }
}

} // namespace ciarlet
