// Copyright (c) 2026 ciarlet authors
// SPDX-License-Identifier: MIT

#pragma once

#include "ciarlet/element.hpp"
#include "ciarlet/orientation.hpp"

#include <Eigen/Dense>
#include <vector>

namespace ciarlet
{

/// One entity-local block matrix acting on the DOFs of a single edge or
/// face. An edge's block describes reversing the edge; a face's pair of
/// blocks describe rotating and reflecting the face.
struct BaseTransformation
{
  enum class Kind
  {
    edge_reflection,
    face_rotation,
    face_reflection
  };

  std::array<int, 2> entity = {0, 0};
  Kind kind = Kind::edge_reflection;
  std::vector<int> dof_indices;
  Eigen::MatrixXd block;
};

enum class TransformClass
{
  identity,
  permutation,
  signed_permutation,
  general
};

std::string to_string(TransformClass c);

struct TransformSet
{
  CellKind cell;
  int n_dofs = 0;
  /// Canonical order: edges ascending, then per face rotation then
  /// reflection.
  std::vector<BaseTransformation> transformations;

  const BaseTransformation* find(int dim, int index,
                                 BaseTransformation::Kind kind) const;
};

/// Computes every base transformation of an element: one reflection per
/// edge, and a rotation/reflection pair per face of a 3D cell. Point
/// evaluation DOFs yield permutations induced by the entity's coordinate
/// self-map; integral moments yield the transposed interpolation matrix of
/// the pulled-back weight functions.
TransformSet compute_base_transformations(const FiniteElement& element);

/// identity / permutation / signed_permutation / general, with entries
/// snapped at 1e-12.
TransformClass classify(const TransformSet& ts);

/// Applies the composed transformation of one cell without forming the
/// full matrix: per reflected edge the edge block once, and per face the
/// reflection block (if flagged) followed by the rotation block the
/// required number of times.
class Applier
{
public:
  Applier(const TransformSet& ts, const OrientationInfo& orientation);

  bool is_identity() const;

  /// data <- M data, where rows index DOFs.
  void apply_rows(double* data, int n_dofs, int n_cols, long row_stride,
                  long col_stride) const;
  void apply_rows(Eigen::Ref<Eigen::MatrixXd> data) const;
  void apply_rows(TabulatedBasis& tab) const;

  /// data <- data M^T, where columns index DOFs.
  void apply_cols(Eigen::Ref<Eigen::MatrixXd> data) const;

  /// The composed permutation when every active block is a permutation:
  /// entry j is the row position DOF j's data moves to. Throws
  /// invalid-argument otherwise.
  std::vector<int> composed_permutation() const;

  /// Applier undoing this one (the inverse orientation path).
  void apply_rows_inverse(double* data, int n_dofs, int n_cols,
                          long row_stride, long col_stride) const;
  void apply_rows_inverse(Eigen::Ref<Eigen::MatrixXd> data) const;

private:
  struct Op
  {
    const BaseTransformation* transform;
    int times;
  };
  std::vector<Op> _ops;         // application order
  std::vector<Op> _inverse_ops; // application order of the inverse
  int _n_dofs = 0;
};

Applier cell_applier(const TransformSet& ts, const OrientationInfo& o);

} // namespace ciarlet
