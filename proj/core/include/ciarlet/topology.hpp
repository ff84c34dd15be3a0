// Copyright (c) 2026 ciarlet authors
// SPDX-License-Identifier: MIT

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ciarlet
{

/// Reference cell shapes. polygon(n) is constructor sugar: n = 3 and n = 4
/// normalize to triangle and quadrilateral.
struct CellKind
{
  enum class Shape : std::uint8_t
  {
    interval,
    triangle,
    quadrilateral,
    tetrahedron,
    hexahedron,
    prism,
    polygon
  };

  Shape shape = Shape::interval;
  int ngon = 0; ///< vertex count, set only for Shape::polygon (n >= 5)

  static CellKind interval() { return {Shape::interval, 0}; }
  static CellKind triangle() { return {Shape::triangle, 0}; }
  static CellKind quadrilateral() { return {Shape::quadrilateral, 0}; }
  static CellKind tetrahedron() { return {Shape::tetrahedron, 0}; }
  static CellKind hexahedron() { return {Shape::hexahedron, 0}; }
  static CellKind prism() { return {Shape::prism, 0}; }
  /// polygon(3) and polygon(4) normalize; throws for n < 3.
  static CellKind polygon(int n);

  bool operator==(const CellKind& other) const = default;
  auto operator<=>(const CellKind& other) const = default;
};

std::string to_string(CellKind kind);
/// Parses "interval", "triangle", ..., "prism", "polygon". Throws on
/// unknown names.
CellKind cell_kind_from_string(const std::string& name);

/// Combinatorial description of a reference cell: vertex coordinates on the
/// unit reference cell, edges as vertex pairs, and (in 3D) faces as vertex
/// cycles. Simplex edges/faces follow the non-incident-vertex (UFC) order;
/// tensor-product cells order sub-entities lexicographically by incident
/// vertex tuple. Face cycles start at the face's lowest local vertex and
/// run toward its lower-indexed neighbour; that traversal is the reference
/// (unrotated, unreflected) state all orientation logic measures against.
struct CellTopology
{
  CellKind kind;
  int dim = 0;
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::vector<int>> faces; // cycles, 3D cells only
  std::array<int, 4> entity_counts = {0, 0, 0, 0};

  int num_entities(int entity_dim) const;

  /// Vertex cycle of a sub-entity: single vertex, edge pair, face cycle, or
  /// every vertex for the cell itself.
  std::vector<int> sub_entity(int entity_dim, int index) const;

  /// Cell kind of a sub-entity (vertex entities are not cells; dim >= 1).
  CellKind sub_entity_kind(int entity_dim, int index) const;
};

/// Builds the canonical reference topology for a cell kind.
CellTopology make_topology(CellKind kind);

/// Spec operation: vertex list of one sub-entity.
std::vector<int> sub_entity_vertices(const CellTopology& topo, int dim,
                                     int index);

/// Counts the distinct low-to-high edge-direction patterns a cell admits,
/// modulo the cell's spatial symmetry group. Brute force over all vertex
/// labelings. Supported: triangle, quadrilateral, tetrahedron, hexahedron.
int count_reference_orderings(CellKind kind);

/// Vertex permutations of the reference cell that preserve the edge set
/// (for the supported kinds these are exactly the spatial symmetries).
std::vector<std::vector<int>> reference_symmetries(CellKind kind);

// --- Entity coordinate machinery used by transforms and conformity ---

/// Affine map from a d-dimensional entity's reference coordinates into the
/// cell's reference coordinates: x = origin + t*axis0 (+ s*axis1).
struct EntityChart
{
  int entity_dim = 0;
  std::array<double, 3> origin = {0, 0, 0};
  std::array<std::array<double, 3>, 2> axes = {{{0, 0, 0}, {0, 0, 0}}};

  std::array<double, 3> to_cell(const std::array<double, 2>& u) const;
  /// Inverse of to_cell for points on the entity's affine span.
  std::array<double, 2> to_entity(const std::array<double, 3>& x) const;
};

EntityChart entity_chart(const CellTopology& topo, int dim, int index);

/// Affine self-map of an entity's reference coordinates, u -> A u + b.
struct EntityMap2
{
  std::array<std::array<double, 2>, 2> a = {{{1, 0}, {0, 1}}};
  std::array<double, 2> b = {0, 0};

  std::array<double, 2> apply(const std::array<double, 2>& u) const;
  EntityMap2 compose(const EntityMap2& inner) const; // this(inner(u))
};

/// One-step rotation of an entity's reference coordinates in the direction
/// that undoes a cycle-forward rotation (the quadrilateral instance is
/// (t,s) -> (s, 1-t)). Identity for intervals.
EntityMap2 entity_rotation_map(CellKind entity_kind);
/// Inverse of entity_rotation_map (cycle-forward rotation).
EntityMap2 entity_rotation_map_inverse(CellKind entity_kind);
/// Reflection fixing the cycle start: t -> 1-t on intervals, (t,s) -> (s,t)
/// on triangles and quadrilaterals.
EntityMap2 entity_reflection_map(CellKind entity_kind);

} // namespace ciarlet
