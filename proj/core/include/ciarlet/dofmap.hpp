// Copyright (c) 2026 ciarlet authors
// SPDX-License-Identifier: MIT

#pragma once

#include "ciarlet/element.hpp"
#include "ciarlet/mesh.hpp"
#include "ciarlet/transform.hpp"

#include <map>
#include <vector>

namespace ciarlet
{

/// Global DOF map over a mesh. Global indices are dense; per cell, the
/// local order equals the element's DOF order. When every element's base
/// transformations are permutations, each entity block is pre-permuted by
/// the cell's composed entity permutation (permutation folding), so shared
/// DOFs land at the same geometric locations with no runtime transforms.
struct DofMap
{
  int num_dofs = 0;
  bool permutations_folded = false;
  std::vector<std::vector<int>> cell_dofs;

  std::vector<CellKind> cell_kinds;
  /// Element entity layouts per kind, for entity_block queries.
  std::map<CellKind, std::vector<std::vector<std::vector<int>>>> entity_layout;

  /// The cell's global DOFs on one entity, in cell-local slot order.
  std::vector<int> entity_block(int cell, int dim, int index) const;
};

/// Builds the DOF map. All cell kinds in the mesh must have an element;
/// elements of different kinds must carry identical DOF counts on shared
/// entity dimensions (mixed-mesh compatibility).
DofMap build_dofmap(const Mesh& mesh,
                    const std::map<CellKind, FiniteElement>& elements,
                    bool fold_permutations = true);

} // namespace ciarlet
