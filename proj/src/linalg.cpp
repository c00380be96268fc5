#include "kup/linalg.hpp"

namespace kup {

std::vector<size_t> rref(Mat& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
    size_t p = row;
    while (p < m.rows && m.at(p, col).is_zero()) ++p;
    if (p == m.rows) continue;
    if (p != row)
      for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
    Scalar inv = m.at(row, col).inverse();
    for (size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col);
      for (size_t j = col; j < m.cols; ++j)
        m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Scalar>> nullspace(const Mat& m) {
  Mat r = m;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols, Scalar(0));
    v[free] = Scalar(1);
    for (size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -r.at(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const Mat& m,
                                         const std::vector<Scalar>& b) {
  Mat aug(m.rows, m.cols + 1);
  for (size_t i = 0; i < m.rows; ++i) {
    for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  std::vector<Scalar> x(m.cols, Scalar(0));
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, m.cols);
  return x;
}

}  // namespace kup
