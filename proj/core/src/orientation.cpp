// Copyright (c) 2026 ciarlet authors
// SPDX-License-Identifier: MIT

#include "ciarlet/orientation.hpp"
#include "ciarlet/errors.hpp"

#include <algorithm>
#include <set>

namespace ciarlet
{

bool OrientationInfo::is_identity() const
{
  return std::none_of(edge_reflected.begin(), edge_reflected.end(),
                      [](bool b) { return b; })
         && std::none_of(face_reflected.begin(), face_reflected.end(),
                         [](bool b) { return b; })
         && std::all_of(face_rotations.begin(), face_rotations.end(),
                        [](int r) { return r == 0; });
}

OrientationInfo compute_orientation(const CellTopology& topo,
                                    std::span<const std::int64_t> gv)
{
  if (gv.size() != topo.vertices.size())
    detail::fail(error_kind::invalid_mesh_cell,
                 "cell has " + std::to_string(gv.size())
                     + " vertices, topology expects "
                     + std::to_string(topo.vertices.size()));
  std::set<std::int64_t> uniq(gv.begin(), gv.end());
  if (uniq.size() != gv.size())
    detail::fail(error_kind::invalid_mesh_cell,
                 "duplicate global vertex id in cell");

  OrientationInfo o;
  o.kind = topo.kind;
  o.edge_reflected.resize(topo.edges.size());
  for (std::size_t e = 0; e < topo.edges.size(); ++e)
    o.edge_reflected[e] = gv[topo.edges[e][0]] > gv[topo.edges[e][1]];

  if (topo.dim == 3)
  {
    o.face_rotations.resize(topo.faces.size());
    o.face_reflected.resize(topo.faces.size());
    for (std::size_t fi = 0; fi < topo.faces.size(); ++fi)
    {
      const auto& cycle = topo.faces[fi];
      const int m = static_cast<int>(cycle.size());
      int k = 0;
      for (int j = 1; j < m; ++j)
        if (gv[cycle[j]] < gv[cycle[k]])
          k = j;
      std::int64_t next = gv[cycle[(k + 1) % m]];
      std::int64_t prev = gv[cycle[(k + m - 1) % m]];
      bool reflected = prev < next;
      o.face_reflected[fi] = reflected;
      o.face_rotations[fi] = reflected ? k : (m - k) % m;
    }
  }
  return o;
}

namespace
{

int rotation_bits(int face_vertices)
{
  if (face_vertices <= 4)
    return 2;
  int bits = 0;
  while ((1 << bits) < face_vertices)
    ++bits;
  return bits;
}

} // namespace

int packed_bit_width(const CellTopology& topo)
{
  int width = static_cast<int>(topo.edges.size());
  for (const auto& f : topo.faces)
    width += 1 + rotation_bits(static_cast<int>(f.size()));
  return width;
}

std::uint64_t pack(const OrientationInfo& o)
{
  CellTopology topo = make_topology(o.kind);
  std::uint64_t bits = 0;
  int pos = 0;
  for (std::size_t e = 0; e < o.edge_reflected.size(); ++e, ++pos)
    if (o.edge_reflected[e])
      bits |= (std::uint64_t{1} << pos);
  for (std::size_t f = 0; f < topo.faces.size(); ++f)
  {
    if (o.face_reflected[f])
      bits |= (std::uint64_t{1} << pos);
    ++pos;
    int rb = rotation_bits(static_cast<int>(topo.faces[f].size()));
    bits |= (static_cast<std::uint64_t>(o.face_rotations[f]) << pos);
    pos += rb;
  }
  return bits;
}

OrientationInfo unpack(const CellTopology& topo, std::uint64_t bits)
{
  OrientationInfo o;
  o.kind = topo.kind;
  o.edge_reflected.resize(topo.edges.size());
  int pos = 0;
  for (std::size_t e = 0; e < topo.edges.size(); ++e, ++pos)
    o.edge_reflected[e] = (bits >> pos) & 1u;
  o.face_rotations.resize(topo.faces.size());
  o.face_reflected.resize(topo.faces.size());
  for (std::size_t f = 0; f < topo.faces.size(); ++f)
  {
    o.face_reflected[f] = (bits >> pos) & 1u;
    ++pos;
    int m = static_cast<int>(topo.faces[f].size());
    int rb = rotation_bits(m);
    int r = static_cast<int>((bits >> pos) & ((std::uint64_t{1} << rb) - 1));
    if (r >= m)
      detail::fail(error_kind::invalid_encoding,
                   "face rotation count " + std::to_string(r)
                       + " out of range");
    o.face_rotations[f] = r;
    pos += rb;
  }
  if (pos < 64 && (bits >> pos) != 0)
    detail::fail(error_kind::invalid_encoding,
                 "bits set outside the orientation layout");
  return o;
}

} // namespace ciarlet
