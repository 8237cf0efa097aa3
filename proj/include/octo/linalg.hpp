#pragma once

#include <vector>

#include <Eigen/Dense>

#include "octo/scalar.hpp"

namespace octo {

template <FieldScalar S>
using DynMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <FieldScalar S>
using DynVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

/// Basis of the right nullspace of `a`.
///
/// Exact mode: reduced row echelon form, one basis vector per free column.
/// Real mode: right singular vectors whose singular value is at most
/// eps * max(1, sigma_max).
template <FieldScalar S>
std::vector<DynVector<S>> nullspace(const DynMatrix<S>& a);

/// Exact elimination on any field scalar, used as the reference route for the
/// SVD-based real nullspace.
template <FieldScalar S>
std::vector<DynVector<S>> rref_nullspace(DynMatrix<S> a, double pivot_tolerance);

}  // namespace octo
