// Copyright (c) 2026 ciarlet authors
// SPDX-License-Identifier: MIT

#pragma once

#include <stdexcept>
#include <string>

namespace ciarlet
{

/// Failure categories surfaced by the library. CLI maps all of these to
/// exit code 1; anything else is a usage or internal error.
enum class error_kind
{
  invalid_argument,
  unsupported_degree,
  unsupported_element,
  degenerate_element,
  non_closed_moment_space,
  invalid_mesh_cell,
  invalid_mesh_file,
  non_matching_facet,
  non_manifold_mesh,
  mixed_mesh_mismatch,
  invalid_encoding,
  degenerate_cell,
  no_moments,
};

class error : public std::runtime_error
{
public:
  error(error_kind kind, const std::string& msg)
      : std::runtime_error(msg), _kind(kind)
  {
  }

  error_kind kind() const noexcept { return _kind; }

private:
  error_kind _kind;
};

namespace detail
{
[[noreturn]] inline void fail(error_kind kind, const std::string& msg)
{
  throw error(kind, msg);
}
} // namespace detail

} // namespace ciarlet
