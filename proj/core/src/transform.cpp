// Copyright (c) 2026 ciarlet authors
// SPDX-License-Identifier: MIT

#include "ciarlet/transform.hpp"
#include "ciarlet/errors.hpp"
#include "ciarlet/quadrature.hpp"

#include <cmath>

namespace ciarlet
{

std::string to_string(TransformClass c)
{
  switch (c)
  {
  case TransformClass::identity:
    return "identity";
  case TransformClass::permutation:
    return "permutation";
  case TransformClass::signed_permutation:
    return "signed_permutation";
  case TransformClass::general:
    return "general";
  }
  return "unknown";
}

const BaseTransformation* TransformSet::find(int dim, int index,
                                             BaseTransformation::Kind kind) const
{
  for (const auto& t : transformations)
    if (t.entity == std::array<int, 2>{dim, index} && t.kind == kind)
      return &t;
  return nullptr;
}

namespace
{

constexpr double match_tol = 1e-10;

// Permutation block for point-evaluation DOFs: DOF j's data moves to the
// slot whose reference point is gamma(q_j), where gamma is the entity
// coordinate map of the orientation state being undone.
Eigen::MatrixXd point_permutation_block(const FiniteElement& e,
                                        const std::vector<int>& dofs,
                                        const EntityChart& chart,
                                        const EntityMap2& gamma)
{
  const int n = static_cast<int>(dofs.size());
  std::vector<std::array<double, 2>> u(n);
  for (int i = 0; i < n; ++i)
    u[i] = chart.to_entity(e.functionals[dofs[i]].point);

  Eigen::MatrixXd block = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j)
  {
    std::array<double, 2> target = gamma.apply(u[j]);
    int hit = -1;
    for (int i = 0; i < n; ++i)
    {
      if (std::abs(u[i][0] - target[0]) < match_tol
          && std::abs(u[i][1] - target[1]) < match_tol)
      {
        hit = i;
        break;
      }
    }
    if (hit < 0)
      detail::fail(error_kind::degenerate_element,
                   "entity point set is not closed under its symmetry map");
    block(hit, j) = 1.0;
  }
  return block;
}

// Interpolation block for integral-moment DOFs: the weights are pulled
// back along the undo map S (with the frame Jacobian for tangent modes)
// and re-expanded in the moment space; the block is the transpose of that
// interpolation matrix.
Eigen::MatrixXd moment_interpolation_block(const MomentSpace& ms,
                                           const EntityMap2& pullback)
{
  auto rule = make_quadrature(ms.entity_kind, 2 * ms.weight_degree + 2);
  const int nq = static_cast<int>(rule.size());
  const int nw = ms.size();
  const int vs = ms.value_size;

  PointSet upts{rule.points};
  PointSet spts;
  spts.coords.resize(nq);
  for (int q = 0; q < nq; ++q)
  {
    auto s = pullback.apply({rule.points[q][0], rule.points[q][1]});
    spts.coords[q] = {s[0], s[1], 0};
  }

  Eigen::MatrixXd W_at_s = ms.evaluate(spts); // [nw x nq*vs]

  // Pulled-back weight values at the quadrature points.
  Eigen::MatrixXd Wt(nw, nq * vs);
  if (ms.mode == DirectionMode::scalar)
    Wt = W_at_s;
  else if (vs == 1)
  {
    // Edge tangent/normal weights flip with the edge direction.
    double factor = pullback.a[0][0];
    Wt = factor * W_at_s;
  }
  else
  {
    // Face-frame components transform by the Jacobian of the undo map.
    for (int w = 0; w < nw; ++w)
      for (int q = 0; q < nq; ++q)
        for (int c = 0; c < vs; ++c)
          Wt(w, q * vs + c) = pullback.a[c][0] * W_at_s(w, q * vs + 0)
                              + pullback.a[c][1] * W_at_s(w, q * vs + 1);
  }

  // Project onto the entity expansion to get coefficient rows.
  Eigen::MatrixXd E = tabulate_expansion_unchecked(ms.entity_kind, ms.degree,
                                                   upts);
  const int ne = static_cast<int>(E.rows());
  Eigen::MatrixXd Ct = Eigen::MatrixXd::Zero(nw, vs * ne);
  for (int c = 0; c < vs; ++c)
  {
    Eigen::MatrixXd comp(nw, nq);
    for (int w = 0; w < nw; ++w)
      for (int q = 0; q < nq; ++q)
        comp(w, q) = Wt(w, q * vs + c) * rule.weights[q];
    Ct.middleCols(c * ne, ne) = comp * E.transpose();
  }

  const Eigen::MatrixXd& C = ms.coeffs;
  Eigen::MatrixXd gram = C * C.transpose();
  Eigen::MatrixXd W = gram.ldlt().solve(C * Ct.transpose()).transpose();

  double residual = (Ct - W * C).cwiseAbs().maxCoeff();
  if (residual > 1e-9)
    detail::fail(error_kind::non_closed_moment_space,
                 "moment space is not closed under the entity symmetry "
                 "(residual "
                     + std::to_string(residual) + ")");
  return W.transpose();
}

BaseTransformation make_transformation(const FiniteElement& e, int dim,
                                       int index,
                                       BaseTransformation::Kind kind)
{
  BaseTransformation t;
  t.entity = {dim, index};
  t.kind = kind;
  t.dof_indices = e.entity_dofs[dim][index];

  CellKind ek = e.topo.sub_entity_kind(dim, index);
  const bool rotation = kind == BaseTransformation::Kind::face_rotation;

  bool has_moments = e.moment_spaces.contains({dim, index});
  if (!has_moments)
  {
    EntityChart chart = entity_chart(e.topo, dim, index);
    EntityMap2 gamma = rotation ? entity_rotation_map_inverse(ek)
                                : entity_reflection_map(ek);
    t.block = point_permutation_block(e, t.dof_indices, chart, gamma);
  }
  else
  {
    const MomentSpace& ms = e.moment_spaces.at({dim, index});
    EntityMap2 pullback = rotation ? entity_rotation_map(ek)
                                   : entity_reflection_map(ek);
    t.block = moment_interpolation_block(ms, pullback);
  }
  return t;
}

bool is_identity_block(const Eigen::MatrixXd& b, double tol)
{
  return (b - Eigen::MatrixXd::Identity(b.rows(), b.cols()))
             .cwiseAbs()
             .maxCoeff()
         <= tol;
}

// 0 = not a permutation, 1 = plain permutation, -1 = signed permutation.
int permutation_kind(const Eigen::MatrixXd& b, double tol)
{
  bool any_negative = false;
  for (int i = 0; i < b.rows(); ++i)
  {
    int hits = 0;
    for (int j = 0; j < b.cols(); ++j)
    {
      double v = b(i, j);
      if (std::abs(v) <= tol)
        continue;
      if (std::abs(v - 1.0) <= tol)
        ++hits;
      else if (std::abs(v + 1.0) <= tol)
      {
        ++hits;
        any_negative = true;
      }
      else
        return 0;
    }
    if (hits != 1)
      return 0;
  }
  for (int j = 0; j < b.cols(); ++j)
  {
    int hits = 0;
    for (int i = 0; i < b.rows(); ++i)
      if (std::abs(b(i, j)) > tol)
        ++hits;
    if (hits != 1)
      return 0;
  }
  return any_negative ? -1 : 1;
}

} // namespace

TransformSet compute_base_transformations(const FiniteElement& element)
{
  TransformSet ts;
  ts.cell = element.cell;
  ts.n_dofs = element.n_dofs();

  if (element.topo.dim >= 2)
  {
    for (int i = 0; i < element.topo.entity_counts[1]; ++i)
    {
      if (element.entity_dofs[1][i].empty())
        continue;
      ts.transformations.push_back(make_transformation(
          element, 1, i, BaseTransformation::Kind::edge_reflection));
    }
  }
  if (element.topo.dim == 3)
  {
    for (int i = 0; i < element.topo.entity_counts[2]; ++i)
    {
      if (element.entity_dofs[2][i].empty())
        continue;
      ts.transformations.push_back(make_transformation(
          element, 2, i, BaseTransformation::Kind::face_rotation));
      ts.transformations.push_back(make_transformation(
          element, 2, i, BaseTransformation::Kind::face_reflection));
    }
  }
  return ts;
}

TransformClass classify(const TransformSet& ts)
{
  constexpr double tol = 1e-12;
  bool all_identity = true;
  bool all_plain = true;
  for (const auto& t : ts.transformations)
  {
    if (!is_identity_block(t.block, tol))
      all_identity = false;
    int kind = permutation_kind(t.block, tol);
    if (kind == 0)
      return TransformClass::general;
    if (kind < 0)
      all_plain = false;
  }
  if (all_identity)
    return TransformClass::identity;
  return all_plain ? TransformClass::permutation
                   : TransformClass::signed_permutation;
}

Applier::Applier(const TransformSet& ts, const OrientationInfo& o)
    : _n_dofs(ts.n_dofs)
{
  if (o.kind != ts.cell)
    detail::fail(error_kind::invalid_argument,
                 "orientation cell kind does not match the element");

  for (std::size_t e = 0; e < o.edge_reflected.size(); ++e)
  {
    if (!o.edge_reflected[e])
      continue;
    if (const auto* t = ts.find(1, static_cast<int>(e),
                                BaseTransformation::Kind::edge_reflection))
    {
      _ops.push_back({t, 1});
      _inverse_ops.push_back({t, 1});
    }
  }
  CellTopology topo;
  if (!o.face_rotations.empty())
    topo = make_topology(ts.cell);
  for (std::size_t f = 0; f < o.face_rotations.size(); ++f)
  {
    const auto* rot = ts.find(2, static_cast<int>(f),
                              BaseTransformation::Kind::face_rotation);
    const auto* ref = ts.find(2, static_cast<int>(f),
                              BaseTransformation::Kind::face_reflection);
    if (!rot || !ref)
      continue;
    // Face rotation order = vertex count of the face.
    const int order = static_cast<int>(topo.faces[f].size());
    int r = o.face_rotations[f];
    bool refl = o.face_reflected[f];
    if (refl)
    {
      _ops.push_back({ref, 1});
    }
    if (r > 0)
      _ops.push_back({rot, r});
    // Inverse path: undo rotations first, then the reflection.
    if (r > 0)
      _inverse_ops.push_back({rot, (order - r) % order});
    if (refl)
      _inverse_ops.push_back({ref, 1});
  }
}

bool Applier::is_identity() const { return _ops.empty(); }

namespace
{

void apply_block(const BaseTransformation& t, int times, double* data,
                 int n_cols, long row_stride, long col_stride)
{
  const int nb = static_cast<int>(t.dof_indices.size());
  Eigen::MatrixXd gathered(nb, n_cols);
  for (int i = 0; i < nb; ++i)
  {
    const double* row = data + t.dof_indices[i] * row_stride;
    for (int c = 0; c < n_cols; ++c)
      gathered(i, c) = row[c * col_stride];
  }
  for (int k = 0; k < times; ++k)
    gathered = t.block * gathered;
  for (int i = 0; i < nb; ++i)
  {
    double* row = data + t.dof_indices[i] * row_stride;
    for (int c = 0; c < n_cols; ++c)
      row[c * col_stride] = gathered(i, c);
  }
}

} // namespace

void Applier::apply_rows(double* data, int n_dofs, int n_cols,
                         long row_stride, long col_stride) const
{
  if (n_dofs != _n_dofs)
    detail::fail(error_kind::invalid_argument,
                 "row count does not match the element DOF count");
  for (const auto& op : _ops)
    apply_block(*op.transform, op.times, data, n_cols, row_stride,
                col_stride);
}

void Applier::apply_rows(Eigen::Ref<Eigen::MatrixXd> data) const
{
  apply_rows(data.data(), static_cast<int>(data.rows()),
             static_cast<int>(data.cols()), 1, data.outerStride());
}

void Applier::apply_rows(TabulatedBasis& tab) const
{
  apply_rows(tab.data.data(), tab.n_dofs, tab.n_points * tab.value_size,
             static_cast<long>(tab.n_points) * tab.value_size, 1);
}

void Applier::apply_cols(Eigen::Ref<Eigen::MatrixXd> data) const
{
  if (static_cast<int>(data.cols()) != _n_dofs)
    detail::fail(error_kind::invalid_argument,
                 "column count does not match the element DOF count");
  // data <- data M^T: treat columns as the transformed axis.
  for (const auto& op : _ops)
    apply_block(*op.transform, op.times, data.data(),
                static_cast<int>(data.rows()), data.outerStride(), 1);
}

void Applier::apply_rows_inverse(double* data, int n_dofs, int n_cols,
                                 long row_stride, long col_stride) const
{
  if (n_dofs != _n_dofs)
    detail::fail(error_kind::invalid_argument,
                 "row count does not match the element DOF count");
  for (const auto& op : _inverse_ops)
    apply_block(*op.transform, op.times, data, n_cols, row_stride,
                col_stride);
}

void Applier::apply_rows_inverse(Eigen::Ref<Eigen::MatrixXd> data) const
{
  apply_rows_inverse(data.data(), static_cast<int>(data.rows()),
                     static_cast<int>(data.cols()), 1, data.outerStride());
}

std::vector<int> Applier::composed_permutation() const
{
  std::vector<int> position(_n_dofs);
  for (int i = 0; i < _n_dofs; ++i)
    position[i] = i;

  for (const auto& op : _ops)
  {
    const auto& t = *op.transform;
    const int nb = static_cast<int>(t.dof_indices.size());
    // Local permutation: data in local slot j moves to local slot lp[j].
    std::vector<int> lp(nb, -1);
    for (int j = 0; j < nb; ++j)
    {
      for (int i = 0; i < nb; ++i)
      {
        double v = t.block(i, j);
        if (std::abs(v) <= 1e-12)
          continue;
        if (std::abs(v - 1.0) > 1e-12 || lp[j] >= 0)
          detail::fail(error_kind::invalid_argument,
                       "composed_permutation on a non-permutation block");
        lp[j] = i;
      }
      if (lp[j] < 0)
        detail::fail(error_kind::invalid_argument,
                     "composed_permutation on a non-permutation block");
    }
    std::vector<int> global_to_local(_n_dofs, -1);
    for (int j = 0; j < nb; ++j)
      global_to_local[t.dof_indices[j]] = j;
    for (int d = 0; d < _n_dofs; ++d)
    {
      for (int k = 0; k < op.times; ++k)
      {
        int loc = global_to_local[position[d]];
        if (loc >= 0)
          position[d] = t.dof_indices[lp[loc]];
      }
    }
  }
  return position;
}

Applier cell_applier(const TransformSet& ts, const OrientationInfo& o)
{
  return Applier(ts, o);
}

} // namespace ciarlet
