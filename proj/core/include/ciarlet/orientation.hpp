// Copyright (c) 2026 ciarlet authors
// SPDX-License-Identifier: MIT

#pragma once

#include "ciarlet/topology.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace ciarlet
{

/// Per-cell orientation data derived from global vertex numbers alone.
///
/// An edge is reflected when its global ids do not increase along the
/// reference direction. For each face, the canonical frame starts at the
/// corner with the lowest global id and runs toward its lower-numbered
/// neighbour; `rotations` counts how many times the face's rotation base
/// transformation must be applied (after `reflected` applications of the
/// reflection) to undo the cell's deviation from that frame.
struct OrientationInfo
{
  CellKind kind;
  std::vector<bool> edge_reflected;
  std::vector<int> face_rotations;
  std::vector<bool> face_reflected;

  bool is_identity() const;
};

OrientationInfo compute_orientation(const CellTopology& topo,
                                    std::span<const std::int64_t> global_vertices);

/// Packs orientation flags into a single integer. Bit layout, low to high:
/// one reflection bit per edge in edge order, then per face ascending one
/// reflection bit followed by the rotation count (2 bits for faces with up
/// to 4 vertices, ceil(log2(n)) bits for n-gon faces).
std::uint64_t pack(const OrientationInfo& o);

/// Inverse of pack. Throws invalid-encoding when bits outside the layout
/// are set or a rotation field exceeds its face's vertex count.
OrientationInfo unpack(const CellTopology& topo, std::uint64_t bits);

/// Number of bits the packed layout occupies for this cell.
int packed_bit_width(const CellTopology& topo);

} // namespace ciarlet
