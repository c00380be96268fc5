#ifndef KUP_INTEGRALS_HPP
#define KUP_INTEGRALS_HPP

#include <string>
#include <utility>
#include <vector>

#include "kup/hopf.hpp"

namespace kup {

/// A left-integral / right-cointegral pair through a line I, normalized so
/// that lambda Lambda = id_I, with the distinguished morphisms and their
/// convolution orders.
struct IntegralData {
  GradedSpace I;
  GradedMorphism Lambda;  // I -> A, left integral
  GradedMorphism lambda;  // A -> I, right cointegral
  GradedMorphism g;       // 1 -> A, distinguished grouplike
  GradedMorphism alpha;   // A -> 1, distinguished algebra morphism
  unsigned m = 1;         // order of g
  unsigned n = 1;         // order of alpha
};

struct GoodPair {
  GradedSpace I;
  GradedMorphism phi;    // A -> I
  GradedMorphism Omega;  // I -> A
  Scalar sigma_I{1};
  Scalar nu{1};
  unsigned gamma = 1;
  GradedMorphism f;  // witness for the first base-point axiom
  GradedMorphism h;  // witness for the second base-point axiom
};

enum class Side { left, right };
enum class Kind { integral, cointegral };

/// One nonzero solution space of the defining equation, concentrated at a
/// single degree. Basis vectors are coordinates over the basis of A.
struct SolutionSpace {
  Degree degree;
  std::vector<std::vector<Scalar>> basis;
};

struct integral_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when the distinguished grouplike element fails to be central, which
/// the good-pair construction requires.
struct centrality_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Solves the defining equation degree by degree and returns every nonzero
/// solution space.
std::vector<SolutionSpace> solve_integrals(const HopfAlgebraData& h, Side side,
                                           Kind kind);

/// Requires the left-integral and right-cointegral spaces to be
/// one-dimensional at a single common degree (the operational surrogate for
/// universality), then normalizes and extracts g, alpha, m, n.
IntegralData build_integral_data(const HopfAlgebraData& h);

/// (g central, alpha central); for involutory algebras the two agree.
std::pair<bool, bool> check_centrality(const HopfAlgebraData& h,
                                       const IntegralData& d);

/// The averaged pair phi = (1/m) sum_k lambda mu (id (x) g^k),
/// Omega = (1/n) sum_l (alpha^l (x) id) Delta Lambda. Refuses with
/// centrality_error when g is not central; verifies all good-pair axioms and
/// nu = sigma_I before returning.
GoodPair build_good_pair(const HopfAlgebraData& h, const IntegralData& d);

struct GPReport {
  struct Item {
    std::string name;
    bool pass;
  };
  std::vector<Item> items;
  bool all_pass = false;
  Scalar sigma_I{1};
  Scalar nu{1};
  unsigned gamma = 1;
  bool found_f = false, found_h = false;
  GradedMorphism f, h;
};

/// Checks the five good-pair axioms. Witnesses f, h are used when supplied
/// and otherwise searched for by exact linear solving.
GPReport check_good_pair(const HopfAlgebraData& h, const GradedMorphism& phi,
                         const GradedMorphism& Omega,
                         const GradedMorphism* f_witness = nullptr,
                         const GradedMorphism* h_witness = nullptr);

struct LemmaReport {
  struct Item {
    std::string name;
    bool pass;
  };
  std::vector<Item> items;
  bool all_pass = false;
  bool g_central = false, alpha_central = false;
};

/// The six identities relating lambda, Lambda, g, alpha, S and sigma_I for an
/// involutory Hopf algebra; the last item is the centrality equivalence.
LemmaReport lemma_suite(const HopfAlgebraData& h, const IntegralData& d);

/// build_integral_data followed by build_good_pair.
GoodPair auto_good_pair(const HopfAlgebraData& h);

/// Text block serialization; round-trips bit-exactly through parse_good_pair.
std::string serialize_good_pair(const HopfAlgebraData& h, const GoodPair& gp);
GoodPair parse_good_pair(const HopfAlgebraData& h, const std::string& text);

/// Convolution power g^k (k >= 0) in Hom(1, A).
GradedMorphism convolution_power_grouplike(const HopfAlgebraData& h,
                                           const GradedMorphism& g, long k);
/// Convolution power alpha^k (k >= 0) in Hom(A, 1).
GradedMorphism convolution_power_algebra_morphism(const HopfAlgebraData& h,
                                                  const GradedMorphism& alpha,
                                                  long k);

}  // namespace kup

#endif
