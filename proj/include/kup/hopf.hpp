#ifndef KUP_HOPF_HPP
#define KUP_HOPF_HPP

#include <optional>
#include <string>
#include <vector>

#include "kup/graded.hpp"

namespace kup {

enum class Tri { unchecked, pass, fail };

struct AxiomReport {
  struct Item {
    std::string name;
    bool pass;
    std::optional<size_t> witness;  // offending source basis index
  };
  std::vector<Item> items;
  bool all_pass = false;
  bool involutory = false;
};

/// An involutory-Hopf-algebra candidate: the object and its five structure
/// morphisms, plus cached axiom-check results.
struct HopfAlgebraData {
  GradedSpace A;
  GradedMorphism mu;        // A (x) A -> A
  GradedMorphism eta;       // 1 -> A
  GradedMorphism delta;     // A -> A (x) A
  GradedMorphism eps;       // A -> 1
  GradedMorphism antipode;  // A -> A
  std::vector<std::string> basis_names;
  std::string spec;  // the CLI spec string this was built from, if any

  struct Flags {
    Tri algebra = Tri::unchecked;
    Tri coalgebra = Tri::unchecked;
    Tri bialgebra = Tri::unchecked;
    Tri antipode = Tri::unchecked;
    Tri involutory = Tri::unchecked;
  };
  mutable Flags flags;

  GradedSpace unit_object() const { return GradedSpace::unit(A.context()); }
  size_t dim() const { return A.dim(); }
  size_t basis_index(const std::string& name) const;
};

struct axiom_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Verifies every Hopf axiom by exact matrix equality and caches the results.
AxiomReport check_axioms(const HopfAlgebraData& h);

/// Requires the involutory flag to have been checked and passed.
void require_involutory(const HopfAlgebraData& h);

/// Iterated product mu_n: A^{(x)n} -> A, with mu_0 = eta, mu_1 = id.
GradedMorphism mu_n(const HopfAlgebraData& h, unsigned n);
/// Iterated coproduct Delta_n: A -> A^{(x)n}.
GradedMorphism delta_n(const HopfAlgebraData& h, unsigned n);

/// k[Z/n]: basis {1, t, ..., t^{n-1}}, trivially graded.
HopfAlgebraData build_group_algebra(unsigned n);

/// The 2n-dimensional super Hopf algebra on {t^k, th t^k} with t^n = 1,
/// th t = t th, th^2 = c (t^2 - 1), |t| = 0, |th| = 1.
HopfAlgebraData build_Hn(unsigned n, const Scalar& c);

/// The 4 n1 n2-dimensional super Hopf algebra on {th1^e1 th2^e2 t1^k t2^l}
/// with omega = zeta_d^r, d = gcd(n1, n2).
HopfAlgebraData build_Anomega(unsigned n1, unsigned n2, long r);

/// The dual Hopf algebra on the dual space (degrees negated).
HopfAlgebraData dual_hopf(const HopfAlgebraData& h);

/// Dual of an arbitrary morphism f: X -> Y, as Y* -> X* (plain transpose
/// through the left (co)evaluations).
GradedMorphism dual_morphism(const GradedMorphism& f);

/// Parses `group:<n>`, `hn:<n>:<c>`, `anomega:<n1>:<n2>:<r>`.
HopfAlgebraData parse_algebra_spec(const std::string& spec);

}  // namespace kup

#endif
