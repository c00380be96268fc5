#ifndef KUP_ENGINE_HPP
#define KUP_ENGINE_HPP

#include <iosfwd>

#include "kup/heegaard.hpp"
#include "kup/integrals.hpp"

namespace kup {

struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The two factorizations of the diagram evaluation: apply the antipodes in
/// the lower order before permuting, or in the upper order after. Both give
/// the same morphism.
enum class KADOrder { antipodes_low, antipodes_up };

/// The full matrix of the diagram morphism A^{(x)g} -> A^{(x)g}, computed
/// column by column by sparse term propagation.
GradedMorphism evaluate_KAD(const HopfAlgebraData& h, const HeegaardDiagram& d,
                            KADOrder order = KADOrder::antipodes_low);

/// The scalar of phi^{(x)g} K_A(D) Omega^{(x)g} on the line I^{(x)g},
/// computed without materializing K_A(D). Optional per-stage term-count trace.
Scalar evaluate_upsilon(const HopfAlgebraData& h, const GoodPair& pair,
                        const HeegaardDiagram& d,
                        KADOrder order = KADOrder::antipodes_low,
                        std::ostream* trace = nullptr);

/// evaluate_upsilon raised to the pair's exponent gamma.
Scalar evaluate_invariant(const HopfAlgebraData& h, const GoodPair& pair,
                          const HeegaardDiagram& d,
                          KADOrder order = KADOrder::antipodes_low,
                          std::ostream* trace = nullptr);

/// Independent evaluation through explicit stage matrices (Kronecker rule on
/// flat indices, P_sigma as a signed permutation). Must agree with
/// evaluate_invariant. Throws budget_error when dim(A)^N exceeds max_entries.
Scalar dense_oracle(const HopfAlgebraData& h, const GoodPair& pair,
                    const HeegaardDiagram& d,
                    unsigned long max_entries = 1ul << 24);

/// 1 when sigma_I = nu = 1, else 2. Both inputs must square to 1.
unsigned gamma_exponent(const Scalar& sigma_I, const Scalar& nu);

}  // namespace kup

#endif
