#include <random>

#include "doctest.h"
#include "kup/linalg.hpp"

using namespace kup;

namespace {

Mat random_mat(std::mt19937_64& rng, size_t r, size_t c) {
  std::uniform_int_distribution<int> d(-3, 3);
  Mat m(r, c);
  for (auto& x : m.a) x = Scalar(d(rng));
  return m;
}

std::vector<Scalar> mat_apply(const Mat& m, const std::vector<Scalar>& x) {
  std::vector<Scalar> y(m.rows, Scalar(0));
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) y[i] = y[i] + m.at(i, j) * x[j];
  return y;
}

bool all_zero(const std::vector<Scalar>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("rref on a known matrix") {
  // [[1,2,3],[2,4,7]] -> [[1,2,0],[0,0,1]], pivots {0,2}.
  Mat m(2, 3);
  m.at(0, 0) = Scalar(1), m.at(0, 1) = Scalar(2), m.at(0, 2) = Scalar(3);
  m.at(1, 0) = Scalar(2), m.at(1, 1) = Scalar(4), m.at(1, 2) = Scalar(7);
  auto pivots = rref(m);
  CHECK(pivots == std::vector<size_t>{0, 2});
  CHECK(m.at(0, 0) == Scalar(1));
  CHECK(m.at(0, 1) == Scalar(2));
  CHECK(m.at(0, 2) == Scalar(0));
  CHECK(m.at(1, 0) == Scalar(0));
  CHECK(m.at(1, 1) == Scalar(0));
  CHECK(m.at(1, 2) == Scalar(1));
}

TEST_CASE("nullspace of a known matrix") {
  // x + 2y + 3z = 0 has nullity 2.
  Mat m(1, 3);
  m.at(0, 0) = Scalar(1), m.at(0, 1) = Scalar(2), m.at(0, 2) = Scalar(3);
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns) CHECK(all_zero(mat_apply(m, v)));
}

TEST_CASE("solve on known systems") {
  Mat m(2, 2);
  m.at(0, 0) = Scalar(2), m.at(0, 1) = Scalar(1);
  m.at(1, 0) = Scalar(1), m.at(1, 1) = Scalar(3);
  auto x = solve(m, {Scalar(5), Scalar(10)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Scalar(1));
  CHECK((*x)[1] == Scalar(3));

  Mat s(2, 1);
  s.at(0, 0) = Scalar(1), s.at(1, 0) = Scalar(1);
  CHECK_FALSE(solve(s, {Scalar(0), Scalar(1)}).has_value());
}

TEST_CASE("randomized solve and nullspace consistency") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 6;
    Mat m = random_mat(rng, r, c);
    std::vector<Scalar> x(c);
    for (auto& v : x) v = Scalar(d(rng));
    auto b = mat_apply(m, x);
    auto sol = solve(m, b);
    REQUIRE(sol.has_value());
    CHECK(mat_apply(m, *sol) == b);

    Mat copy = m;
    size_t rank = rref(copy).size();
    auto ns = nullspace(m);
    CHECK(ns.size() == c - rank);
    for (const auto& v : ns) CHECK(all_zero(mat_apply(m, v)));
  }
}
