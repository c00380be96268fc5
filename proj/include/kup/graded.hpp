#ifndef KUP_GRADED_HPP
#define KUP_GRADED_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kup/scalar.hpp"

namespace kup {

/// Degree: an element of the finite abelian grading group, one entry per
/// cyclic factor, always reduced mod the factor orders.
using Degree = std::vector<int>;

/// G = Z/m_1 x ... x Z/m_k with componentwise addition.
struct GradingGroup {
  std::vector<int> orders;

  size_t rank() const { return orders.size(); }
  Degree zero() const { return Degree(orders.size(), 0); }
  Degree reduce(Degree d) const;
  Degree add(const Degree& a, const Degree& b) const;
  Degree negate(const Degree& a) const;
  bool operator==(const GradingGroup& o) const { return orders == o.orders; }
};

/// A bicharacter chi: G x G -> roots of unity, given on generators and
/// extended bimultiplicatively. Validated at construction:
/// chi(g,h)chi(h,g) = 1 and chi(e_i,.)^{m_i} = 1 on generators.
class Bicharacter {
 public:
  Bicharacter(const GradingGroup& group,
              std::vector<std::vector<Scalar>> generator_table);

  Scalar operator()(const Degree& g, const Degree& h) const;

 private:
  std::vector<std::vector<Scalar>> table_;
};

/// The ambient category: grading group plus symmetry bicharacter. Shared
/// immutably by all spaces and morphisms living in it.
struct Context {
  GradingGroup group;
  Bicharacter chi;

  Scalar koszul(const Degree& g, const Degree& h) const { return chi(g, h); }

  /// Ordinary vector spaces: trivial group, trivial symmetry.
  static std::shared_ptr<const Context> vect();
  /// Super vector spaces: Z/2 with chi(g,h) = (-1)^{gh}.
  static std::shared_ptr<const Context> super();
  static std::shared_ptr<const Context> make(
      GradingGroup g, std::vector<std::vector<Scalar>> generator_table);
};
using ContextPtr = std::shared_ptr<const Context>;

/// Finite-dimensional G-graded space: a degree per basis vector.
class GradedSpace {
 public:
  GradedSpace() = default;
  GradedSpace(ContextPtr ctx, std::vector<Degree> degrees);

  static GradedSpace unit(ContextPtr ctx);
  static GradedSpace line(ContextPtr ctx, Degree d);

  size_t dim() const { return degrees_.size(); }
  const Degree& degree(size_t i) const { return degrees_[i]; }
  const std::vector<Degree>& degrees() const { return degrees_; }
  const ContextPtr& context() const { return ctx_; }

  GradedSpace dual() const;  // degrees negated, same basis order

  bool operator==(const GradedSpace& o) const;
  bool operator!=(const GradedSpace& o) const { return !(*this == o); }

 private:
  ContextPtr ctx_;
  std::vector<Degree> degrees_;
};

GradedSpace tensor(const GradedSpace& x, const GradedSpace& y);

/// One column of a morphism matrix: sorted (row, coefficient) pairs, no zeros.
using SparseCol = std::vector<std::pair<uint32_t, Scalar>>;

/// Grading-preserving linear map, stored column-wise (sparse). Basis order of
/// tensor products is lexicographic with the left factor major everywhere.
class GradedMorphism {
 public:
  GradedMorphism() = default;
  GradedMorphism(GradedSpace src, GradedSpace dst);  // zero morphism
  GradedMorphism(GradedSpace src, GradedSpace dst,
                 std::vector<SparseCol> cols);

  static GradedMorphism identity(const GradedSpace& x);

  const GradedSpace& source() const { return src_; }
  const GradedSpace& target() const { return dst_; }
  const SparseCol& col(size_t j) const { return cols_[j]; }
  Scalar entry(size_t i, size_t j) const;

  /// Builder access: set entry then call normalize() once done.
  void set(size_t i, size_t j, Scalar v);
  void normalize();

  GradedMorphism operator*(const GradedMorphism& f) const;  // composition
  GradedMorphism operator+(const GradedMorphism& o) const;
  GradedMorphism operator-(const GradedMorphism& o) const;
  GradedMorphism scaled(const Scalar& s) const;

  bool operator==(const GradedMorphism& o) const;
  bool operator!=(const GradedMorphism& o) const { return !(*this == o); }

  /// Index of the first column where this and o differ, if any.
  std::optional<size_t> first_difference(const GradedMorphism& o) const;

  bool is_zero() const;

 private:
  void check_grading() const;
  GradedSpace src_, dst_;
  std::vector<SparseCol> cols_;
};

GradedMorphism tensor(const GradedMorphism& f, const GradedMorphism& g);

/// tau_{X,Y}: x (x) y -> chi(|x|,|y|) y (x) x.
GradedMorphism symmetry(const GradedSpace& x, const GradedSpace& y);

/// P_sigma on A^{(x)N}; sigma[i] is the (0-based) target position of factor i.
/// The coefficient on a homogeneous term is the Koszul sign, computed by
/// inversion counting.
GradedMorphism permutation_morphism(const GradedSpace& a,
                                    const std::vector<size_t>& sigma);

struct DualData {
  GradedSpace dual;
  GradedMorphism lev;    // X* (x) X -> 1
  GradedMorphism lcoev;  // 1 -> X (x) X*
  GradedMorphism rev;    // X (x) X* -> 1
  GradedMorphism rcoev;  // 1 -> X* (x) X
};
DualData dual_data(const GradedSpace& x);

Scalar trace(const GradedMorphism& f);
Scalar dim(const GradedSpace& x);

/// The unique s with f = s id_I on a one-dimensional I.
Scalar norm_on_invertible(const GradedMorphism& f);

/// sigma_I = chi(d, d) for the line at degree d; asserts sigma^2 = 1.
Scalar sigma_of(const GradedSpace& line);

}  // namespace kup

#endif
