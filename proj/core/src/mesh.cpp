// Copyright (c) 2026 ciarlet authors
// SPDX-License-Identifier: MIT

#include "ciarlet/mesh.hpp"
#include "ciarlet/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace ciarlet
{

namespace
{

void validate(Mesh& mesh)
{
  const std::int64_t nv = static_cast<std::int64_t>(mesh.vertices.size());
  mesh.tdim = -1;
  for (std::size_t c = 0; c < mesh.cells.size(); ++c)
  {
    const auto& cell = mesh.cells[c];
    CellTopology topo = make_topology(cell.kind);
    std::string where = "cell " + std::to_string(c);
    if (cell.v.size() != topo.vertices.size())
      detail::fail(error_kind::invalid_mesh_file,
                   where + ": " + to_string(cell.kind) + " needs "
                       + std::to_string(topo.vertices.size())
                       + " vertices, got " + std::to_string(cell.v.size()));
    std::set<std::int64_t> seen;
    for (std::int64_t id : cell.v)
    {
      if (id < 0 || id >= nv)
        detail::fail(error_kind::invalid_mesh_file,
                     where + ": vertex id " + std::to_string(id)
                         + " out of range");
      if (!seen.insert(id).second)
        detail::fail(error_kind::invalid_mesh_file,
                     where + ": duplicate vertex id " + std::to_string(id));
    }
    if (mesh.tdim < 0)
      mesh.tdim = topo.dim;
    else if (mesh.tdim != topo.dim)
      detail::fail(error_kind::invalid_mesh_file,
                   where + ": mixed topological dimensions in one mesh");
  }
}

} // namespace

Mesh make_mesh(int gdim, std::vector<std::array<double, 3>> vertices,
               std::vector<Mesh::Cell> cells)
{
  Mesh mesh;
  mesh.gdim = gdim;
  mesh.vertices = std::move(vertices);
  mesh.cells = std::move(cells);
  validate(mesh);
  return mesh;
}

Mesh load_mesh(const std::string& json_text)
{
  nlohmann::json doc;
  try
  {
    doc = nlohmann::json::parse(json_text);
  }
  catch (const nlohmann::json::parse_error& e)
  {
    detail::fail(error_kind::invalid_mesh_file,
                 std::string("malformed JSON: ") + e.what());
  }

  Mesh mesh;
  try
  {
    mesh.gdim = doc.at("gdim").get<int>();
    if (mesh.gdim < 1 || mesh.gdim > 3)
      detail::fail(error_kind::invalid_mesh_file, "gdim must be 1, 2 or 3");
    for (const auto& v : doc.at("vertices"))
    {
      if (!v.is_array() || v.size() != static_cast<std::size_t>(mesh.gdim))
        detail::fail(error_kind::invalid_mesh_file,
                     "vertex " + std::to_string(mesh.vertices.size())
                         + ": expected " + std::to_string(mesh.gdim)
                         + " coordinates");
      std::array<double, 3> p = {0, 0, 0};
      for (std::size_t c = 0; c < v.size(); ++c)
        p[c] = v[c].get<double>();
      mesh.vertices.push_back(p);
    }
    for (const auto& jc : doc.at("cells"))
    {
      Mesh::Cell cell;
      std::string kind = jc.at("kind").get<std::string>();
      const auto& jv = jc.at("v");
      for (const auto& id : jv)
        cell.v.push_back(id.get<std::int64_t>());
      if (kind == "polygon")
        cell.kind = CellKind::polygon(static_cast<int>(cell.v.size()));
      else
        cell.kind = cell_kind_from_string(kind);
      mesh.cells.push_back(std::move(cell));
    }
  }
  catch (const nlohmann::json::exception& e)
  {
    detail::fail(error_kind::invalid_mesh_file,
                 std::string("mesh schema violation: ") + e.what());
  }
  catch (const error& e)
  {
    if (e.kind() == error_kind::invalid_argument)
      detail::fail(error_kind::invalid_mesh_file, e.what());
    throw;
  }

  validate(mesh);
  return mesh;
}

EntityMap number_entities(const Mesh& mesh, int dim)
{
  if (mesh.tdim >= 0 && dim >= mesh.tdim)
    detail::fail(error_kind::invalid_argument,
                 "number_entities expects dim < topological dimension");

  EntityMap map;
  map.dim = dim;
  map.cell_entities.resize(mesh.num_cells());
  for (std::size_t c = 0; c < mesh.num_cells(); ++c)
  {
    const auto& cell = mesh.cells[c];
    CellTopology topo = make_topology(cell.kind);
    const int n = topo.entity_counts[dim];
    map.cell_entities[c].resize(n);
    for (int i = 0; i < n; ++i)
    {
      std::vector<std::int64_t> key;
      for (int lv : topo.sub_entity(dim, i))
        key.push_back(cell.v[lv]);
      std::sort(key.begin(), key.end());
      auto [it, inserted] = map.key_to_index.try_emplace(key, map.num_entities);
      if (inserted)
        ++map.num_entities;
      map.cell_entities[c][i] = it->second;
    }
  }
  return map;
}

std::vector<FacetPair> facet_pairs(const Mesh& mesh)
{
  std::vector<FacetPair> pairs;
  if (mesh.tdim < 1)
    return pairs;

  const int fdim = mesh.tdim - 1;
  std::map<std::vector<std::int64_t>, int> facet_of_key; // key -> pair index
  for (std::size_t c = 0; c < mesh.num_cells(); ++c)
  {
    const auto& cell = mesh.cells[c];
    CellTopology topo = make_topology(cell.kind);
    for (int i = 0; i < topo.entity_counts[fdim]; ++i)
    {
      std::vector<std::int64_t> key;
      for (int lv : topo.sub_entity(fdim, i))
        key.push_back(cell.v[lv]);
      std::sort(key.begin(), key.end());
      auto it = facet_of_key.find(key);
      if (it == facet_of_key.end())
      {
        facet_of_key.emplace(key, static_cast<int>(pairs.size()));
        pairs.push_back({static_cast<int>(c), i, -1, -1});
      }
      else
      {
        FacetPair& p = pairs[it->second];
        if (!p.boundary())
          detail::fail(error_kind::non_manifold_mesh,
                       "facet shared by three or more cells");
        p.cell_b = static_cast<int>(c);
        p.local_b = i;
      }
    }
  }
  return pairs;
}

} // namespace ciarlet
