#ifndef KUP_LINALG_HPP
#define KUP_LINALG_HPP

#include <optional>
#include <vector>

#include "kup/scalar.hpp"

namespace kup {

/// Dense row-major matrix of Scalars for the exact linear solvers.
struct Mat {
  size_t rows = 0, cols = 0;
  std::vector<Scalar> a;

  Mat() = default;
  Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
  Scalar& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Scalar& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

/// In-place reduced row echelon form with the fixed pivot rule: first nonzero
/// entry in column order. Returns the pivot columns.
std::vector<size_t> rref(Mat& m);

/// Basis of the right nullspace of m (each vector has m.cols entries).
std::vector<std::vector<Scalar>> nullspace(const Mat& m);

/// One exact solution of m x = b, or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve(const Mat& m,
                                         const std::vector<Scalar>& b);

}  // namespace kup

#endif
