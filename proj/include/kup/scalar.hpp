#ifndef KUP_SCALAR_HPP
#define KUP_SCALAR_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace kup {

/// Raised on malformed textual input (scalars, diagrams, specs).
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an arithmetic precondition is violated (division by zero,
/// mixing two distinct cyclotomic conductors, ...).
struct scalar_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The r-th cyclotomic polynomial, as integer coefficients c[0] + c[1] x + ...
/// Computed by exact division of x^r - 1 by the product of Phi_d over the
/// proper divisors d of r. Results are cached.
const std::vector<mpz_class>& cyclotomic_polynomial(unsigned r);

/// An exact element of Q (conductor 0) or of the cyclotomic field Q(zeta_r)
/// (conductor r >= 1), stored in the power basis {1, zeta, ..., zeta^{deg-1}}
/// with coefficients always reduced modulo Phi_r. Immutable in spirit: all
/// operations return fresh values.
class Scalar {
 public:
  Scalar() : conductor_(0), coeff_(1, mpq_class(0)) {}
  Scalar(long n) : conductor_(0), coeff_(1, mpq_class(n)) {}
  Scalar(const mpq_class& q) : conductor_(0), coeff_(1, q) {}
  Scalar(long num, long den);

  /// Element of Q(zeta_r) from power-basis coefficients (reduced on entry).
  static Scalar cyclotomic(unsigned r, std::vector<mpq_class> coeff);
  /// zeta_r^k.
  static Scalar root_of_unity(unsigned r, long k = 1);

  unsigned conductor() const { return conductor_; }
  bool is_rational() const { return conductor_ == 0; }
  const std::vector<mpq_class>& coefficients() const { return coeff_; }
  /// The rational value; throws unless the element is rational or lives in a
  /// degree-1 cyclotomic field.
  mpq_class rational_value() const;

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;
  Scalar pow(long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const;  // arbitrary total order (for maps)

  /// `a/b` for rationals, `[c0,c1,...]@r` for cyclotomic elements.
  std::string str() const;
  static Scalar parse(const std::string& text);

  /// Rational promoted into Q(zeta_r); identity on matching conductor.
  Scalar promoted(unsigned r) const;

 private:
  unsigned conductor_;
  std::vector<mpq_class> coeff_;
};

/// Exact field arithmetic dispatcher (the CLI-facing form of operator+ etc.).
enum class ScalarOp { add, sub, mul, div };
Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op);

}  // namespace kup

#endif
