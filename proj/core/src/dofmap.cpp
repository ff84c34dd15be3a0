// Copyright (c) 2026 ciarlet authors
// SPDX-License-Identifier: MIT

#include "ciarlet/dofmap.hpp"
#include "ciarlet/errors.hpp"
#include "ciarlet/orientation.hpp"

#include <algorithm>

namespace ciarlet
{

std::vector<int> DofMap::entity_block(int cell, int dim, int index) const
{
  if (cell < 0 || cell >= static_cast<int>(cell_dofs.size()))
    detail::fail(error_kind::invalid_argument, "cell index out of range");
  const auto& layout = entity_layout.at(cell_kinds[cell]);
  if (dim < 0 || dim >= static_cast<int>(layout.size())
      || index >= static_cast<int>(layout[dim].size()) || index < 0)
    detail::fail(error_kind::invalid_argument, "entity index out of range");
  std::vector<int> block;
  for (int slot : layout[dim][index])
    block.push_back(cell_dofs[cell][slot]);
  return block;
}

DofMap build_dofmap(const Mesh& mesh,
                    const std::map<CellKind, FiniteElement>& elements,
                    bool fold_permutations)
{
  DofMap dm;
  if (mesh.num_cells() == 0)
    return dm;

  const int tdim = mesh.tdim;

  // Per-kind machinery: topologies, transformations, foldability.
  struct KindData
  {
    const FiniteElement* element;
    CellTopology topo;
    TransformSet transforms;
    bool foldable;
  };
  std::map<CellKind, KindData> kinds;
  for (const auto& cell : mesh.cells)
  {
    if (kinds.contains(cell.kind))
      continue;
    auto it = elements.find(cell.kind);
    if (it == elements.end())
      detail::fail(error_kind::mixed_mesh_mismatch,
                   "no element supplied for cell kind "
                       + to_string(cell.kind));
    KindData data;
    data.element = &it->second;
    data.topo = make_topology(cell.kind);
    data.transforms = compute_base_transformations(it->second);
    TransformClass cls = classify(data.transforms);
    data.foldable = cls == TransformClass::identity
                    || cls == TransformClass::permutation;
    kinds.emplace(cell.kind, std::move(data));
  }

  // Mixed-mesh compatibility: DOF counts per sub-entity dimension must
  // agree across kinds wherever entities can be shared. Edge counts must
  // match globally; face counts are compared per facet vertex count.
  for (int d = 0; d < tdim; ++d)
  {
    std::map<int, int> count_by_arity; // entity vertex count -> dof count
    for (const auto& [kind, data] : kinds)
    {
      for (int i = 0; i < data.topo.entity_counts[d]; ++i)
      {
        int arity = static_cast<int>(data.topo.sub_entity(d, i).size());
        int count
            = static_cast<int>(data.element->entity_dofs[d][i].size());
        auto [it, inserted] = count_by_arity.try_emplace(arity, count);
        if (!inserted && it->second != count)
          detail::fail(error_kind::mixed_mesh_mismatch,
                       "elements disagree on DOF count for dimension-"
                           + std::to_string(d) + " entities");
      }
    }
  }

  // Global entity numbering and per-entity DOF offsets, dimension by
  // dimension, then cell interiors.
  std::vector<EntityMap> entity_maps;
  for (int d = 0; d < tdim; ++d)
    entity_maps.push_back(number_entities(mesh, d));

  int next = 0;
  std::vector<std::vector<int>> entity_offsets(tdim);
  for (int d = 0; d < tdim; ++d)
  {
    std::vector<int> counts(entity_maps[d].num_entities, -1);
    for (std::size_t c = 0; c < mesh.num_cells(); ++c)
    {
      const KindData& data = kinds.at(mesh.cells[c].kind);
      for (int i = 0; i < data.topo.entity_counts[d]; ++i)
      {
        int g = entity_maps[d].cell_entities[c][i];
        int n = static_cast<int>(data.element->entity_dofs[d][i].size());
        if (counts[g] < 0)
          counts[g] = n;
        else if (counts[g] != n)
          detail::fail(error_kind::mixed_mesh_mismatch,
                       "shared entity with mismatched DOF counts");
      }
    }
    entity_offsets[d].resize(counts.size());
    for (std::size_t g = 0; g < counts.size(); ++g)
    {
      entity_offsets[d][g] = next;
      next += std::max(counts[g], 0);
    }
  }
  std::vector<int> interior_offsets(mesh.num_cells());
  for (std::size_t c = 0; c < mesh.num_cells(); ++c)
  {
    const KindData& data = kinds.at(mesh.cells[c].kind);
    interior_offsets[c] = next;
    next += static_cast<int>(data.element->entity_dofs[tdim][0].size());
  }
  dm.num_dofs = next;

  // Folding applies only when every kind is permutation-classified.
  bool fold = fold_permutations;
  for (const auto& [kind, data] : kinds)
    fold = fold && data.foldable;
  dm.permutations_folded = fold;

  // Write per-cell maps.
  dm.cell_dofs.resize(mesh.num_cells());
  dm.cell_kinds.resize(mesh.num_cells());
  for (const auto& [kind, data] : kinds)
    dm.entity_layout.emplace(kind, data.element->entity_dofs);

  for (std::size_t c = 0; c < mesh.num_cells(); ++c)
  {
    const auto& cell = mesh.cells[c];
    const KindData& data = kinds.at(cell.kind);
    const FiniteElement& e = *data.element;
    dm.cell_kinds[c] = cell.kind;
    dm.cell_dofs[c].assign(e.n_dofs(), -1);

    // Slot -> global in plain entity order.
    std::vector<int> plain(e.n_dofs(), -1);
    for (int d = 0; d < tdim; ++d)
    {
      for (int i = 0; i < data.topo.entity_counts[d]; ++i)
      {
        int g = entity_maps[d].cell_entities[c][i];
        const auto& slots = e.entity_dofs[d][i];
        for (std::size_t s = 0; s < slots.size(); ++s)
          plain[slots[s]] = entity_offsets[d][g] + static_cast<int>(s);
      }
    }
    {
      const auto& slots = e.entity_dofs[tdim][0];
      for (std::size_t s = 0; s < slots.size(); ++s)
        plain[slots[s]] = interior_offsets[c] + static_cast<int>(s);
    }

    if (!fold)
    {
      dm.cell_dofs[c] = plain;
      continue;
    }

    // Permutation folding: slot j receives the canonical DOF its data
    // would be moved to by the cell's composed transformation.
    OrientationInfo o = compute_orientation(data.topo, cell.v);
    if (o.is_identity())
    {
      dm.cell_dofs[c] = plain;
      continue;
    }
    Applier applier(data.transforms, o);
    std::vector<int> position = applier.composed_permutation();
    for (int j = 0; j < e.n_dofs(); ++j)
      dm.cell_dofs[c][j] = plain[position[j]];
  }
  return dm;
}

} // namespace ciarlet
