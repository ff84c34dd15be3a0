// Copyright (c) 2026 ciarlet authors
// SPDX-License-Identifier: MIT

#pragma once

#include "ciarlet/topology.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ciarlet
{

/// Unstructured mesh: vertices, and cells given by global vertex ids.
/// Mixed cell kinds are allowed as long as every cell has the same
/// topological dimension.
struct Mesh
{
  struct Cell
  {
    CellKind kind;
    std::vector<std::int64_t> v;
  };

  int gdim = 0;
  int tdim = -1; // -1 for an empty mesh
  std::vector<std::array<double, 3>> vertices;
  std::vector<Cell> cells;

  std::size_t num_cells() const { return cells.size(); }
};

/// Builds a mesh from its JSON document:
///   {"gdim": int, "vertices": [[x, y, ...], ...],
///    "cells": [{"kind": "triangle", "v": [0, 1, 2]}, ...]}
/// Validation failures carry the offending cell/field in the message.
Mesh load_mesh(const std::string& json_text);

/// Construct directly (tests, generated meshes). Runs the same validation.
Mesh make_mesh(int gdim, std::vector<std::array<double, 3>> vertices,
               std::vector<Mesh::Cell> cells);

/// Global numbering of dimension-`dim` mesh entities. Keys are sorted
/// global vertex tuples; indices are dense and assigned in first-encounter
/// order over cells.
struct EntityMap
{
  int dim = 0;
  int num_entities = 0;
  std::map<std::vector<std::int64_t>, int> key_to_index;
  std::vector<std::vector<int>> cell_entities; // [cell][local] -> global
};

EntityMap number_entities(const Mesh& mesh, int dim);

/// An interior facet (two cell/local-facet incidences) or a boundary facet.
struct FacetPair
{
  int cell_a = -1;
  int local_a = -1;
  int cell_b = -1;
  int local_b = -1;

  bool boundary() const { return cell_b < 0; }
};

/// Pairs every interior facet once and marks boundary facets. A facet
/// shared by three or more cells is an error (non-manifold mesh).
std::vector<FacetPair> facet_pairs(const Mesh& mesh);

} // namespace ciarlet
