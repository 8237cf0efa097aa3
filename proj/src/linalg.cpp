#include "octo/linalg.hpp"

#include <Eigen/SVD>

namespace octo {

template <FieldScalar S>
std::vector<DynVector<S>> rref_nullspace(DynMatrix<S> a, double pivot_tolerance) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    // Partial pivoting by magnitude; exact mode only needs a nonzero entry.
    Eigen::Index best = -1;
    double best_mag = 0.0;
    for (Eigen::Index i = r; i < rows; ++i) {
      double mag = ScalarTraits<S>::magnitude(a(i, c));
      if (a(i, c) != S(0) && mag > best_mag) {
        best = i;
        best_mag = mag;
      }
    }
    if (best < 0 || (!kIsExact<S> && best_mag <= pivot_tolerance)) continue;
    a.row(r).swap(a.row(best));
    S p = a(r, c);
    a.row(r) /= p;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == S(0)) continue;
      S factor = a(i, c);
      a.row(i) -= factor * a.row(r);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<DynVector<S>> basis;
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    DynVector<S> v = DynVector<S>::Zero(cols);
    v(free) = S(1);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
      v(pivot_cols[k]) = -a(static_cast<Eigen::Index>(k), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <>
std::vector<DynVector<Rational>> nullspace<Rational>(const DynMatrix<Rational>& a) {
  return rref_nullspace<Rational>(a, 0.0);
}

template <>
std::vector<DynVector<double>> nullspace<double>(const DynMatrix<double>& a) {
  const Eigen::Index cols = a.cols();
  // Pad to square so the full V factor is always available.
  DynMatrix<double> padded = DynMatrix<double>::Zero(std::max(a.rows(), cols), cols);
  padded.topRows(a.rows()) = a;
  Eigen::JacobiSVD<DynMatrix<double>> svd(padded, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
  const double threshold = real_epsilon() * std::max(1.0, sigma_max);
  std::vector<DynVector<double>> basis;
  for (Eigen::Index k = 0; k < cols; ++k) {
    if (sigma(k) <= threshold) basis.push_back(svd.matrixV().col(k));
  }
  return basis;
}

template std::vector<DynVector<double>> rref_nullspace<double>(DynMatrix<double>, double);
template std::vector<DynVector<Rational>> rref_nullspace<Rational>(DynMatrix<Rational>, double);

}  // namespace octo
