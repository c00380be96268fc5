#include "kup/scalar.hpp"

#include <map>
#include <sstream>

namespace kup {

namespace {

// Polynomials are coefficient vectors, low degree first, over Q.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Exact division; remainder must be zero (callers guarantee it).
QPoly divide_exact(QPoly num, const QPoly& den) {
  trim(num);
  QPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0,
          mpq_class(0));
  while (num.size() >= den.size() && !num.empty()) {
    mpq_class c = num.back() / den.back();
    size_t shift = num.size() - den.size();
    q[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    trim(num);
  }
  if (!num.empty()) throw scalar_error("polynomial division not exact");
  return q;
}

// Remainder of p modulo a monic polynomial m.
QPoly mod(QPoly p, const QPoly& m) {
  trim(p);
  while (p.size() >= m.size()) {
    mpq_class c = p.back();  // m is monic
    size_t shift = p.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) p[shift + i] -= c * m[i];
    trim(p);
  }
  return p;
}

QPoly phi_as_qpoly(unsigned r) {
  const auto& z = cyclotomic_polynomial(r);
  QPoly p(z.size());
  for (size_t i = 0; i < z.size(); ++i) p[i] = mpq_class(z[i]);
  return p;
}

// Extended Euclid over Q[x]: returns (g, u) with u*a = g mod b, g = gcd.
std::pair<QPoly, QPoly> half_ext_gcd(QPoly a, QPoly b) {
  QPoly u{mpq_class(1)}, v{};
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a = q*b + r
    QPoly r = a;
    QPoly q(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, mpq_class(0));
    while (r.size() >= b.size() && !r.empty()) {
      mpq_class c = r.back() / b.back();
      size_t shift = r.size() - b.size();
      q[shift] += c;
      for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
      trim(r);
    }
    // w = u - q*v
    QPoly qv = mul(q, v);
    QPoly w(std::max(u.size(), qv.size()), mpq_class(0));
    for (size_t i = 0; i < u.size(); ++i) w[i] += u[i];
    for (size_t i = 0; i < qv.size(); ++i) w[i] -= qv[i];
    trim(w);
    a = b;
    b = r;
    u = v;
    v = w;
  }
  return {a, u};
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(unsigned r) {
  static std::map<unsigned, std::vector<mpz_class>> cache;
  if (r == 0) throw scalar_error("cyclotomic_polynomial: r must be >= 1");
  auto it = cache.find(r);
  if (it != cache.end()) return it->second;

  // x^r - 1 divided by the product of Phi_d over proper divisors d of r.
  QPoly num(r + 1, mpq_class(0));
  num[0] = -1;
  num[r] = 1;
  QPoly den{mpq_class(1)};
  for (unsigned d = 1; d < r; ++d)
    if (r % d == 0) den = mul(den, phi_as_qpoly(d));
  QPoly q = divide_exact(num, den);
  std::vector<mpz_class> z(q.size());
  for (size_t i = 0; i < q.size(); ++i) {
    if (q[i].get_den() != 1)
      throw scalar_error("cyclotomic_polynomial: non-integer coefficient");
    z[i] = q[i].get_num();
  }
  return cache.emplace(r, std::move(z)).first->second;
}

Scalar::Scalar(long num, long den) : conductor_(0), coeff_(1) {
  if (den == 0) throw scalar_error("zero denominator");
  coeff_[0] = mpq_class(num, den);
  coeff_[0].canonicalize();
}

Scalar Scalar::cyclotomic(unsigned r, std::vector<mpq_class> coeff) {
  if (r == 0) throw scalar_error("cyclotomic conductor must be >= 1");
  QPoly phi = phi_as_qpoly(r);
  size_t deg = phi.size() - 1;
  for (auto& c : coeff) c.canonicalize();
  QPoly reduced = mod(std::move(coeff), phi);
  reduced.resize(deg, mpq_class(0));
  Scalar s;
  s.conductor_ = r;
  s.coeff_ = std::move(reduced);
  return s;
}

Scalar Scalar::root_of_unity(unsigned r, long k) {
  if (r == 0) throw scalar_error("root_of_unity: r must be >= 1");
  long kk = ((k % (long)r) + (long)r) % (long)r;
  std::vector<mpq_class> c((size_t)kk + 1, mpq_class(0));
  c[(size_t)kk] = 1;
  return cyclotomic(r, std::move(c));
}

mpq_class Scalar::rational_value() const {
  if (conductor_ == 0) return coeff_[0];
  for (size_t i = 1; i < coeff_.size(); ++i)
    if (coeff_[i] != 0) throw scalar_error("scalar is not rational");
  return coeff_[0];
}

bool Scalar::is_zero() const {
  for (const auto& c : coeff_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_one() const {
  if (coeff_[0] != 1) return false;
  for (size_t i = 1; i < coeff_.size(); ++i)
    if (coeff_[i] != 0) return false;
  return true;
}

Scalar Scalar::promoted(unsigned r) const {
  if (conductor_ == r) return *this;
  if (conductor_ != 0)
    throw scalar_error("incompatible conductors " +
                       std::to_string(conductor_) + " and " +
                       std::to_string(r));
  if (r == 0) return *this;
  std::vector<mpq_class> c{coeff_[0]};
  return cyclotomic(r, std::move(c));
}

namespace {
unsigned common_conductor(const Scalar& a, const Scalar& b) {
  if (a.conductor() == b.conductor()) return a.conductor();
  if (a.conductor() == 0) return b.conductor();
  if (b.conductor() == 0) return a.conductor();
  throw scalar_error("incompatible conductors " +
                     std::to_string(a.conductor()) + " and " +
                     std::to_string(b.conductor()));
}
}  // namespace

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coeff_) c = -c;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  unsigned r = common_conductor(*this, o);
  Scalar a = promoted(r), b = o.promoted(r);
  for (size_t i = 0; i < a.coeff_.size(); ++i) a.coeff_[i] += b.coeff_[i];
  return a;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  unsigned r = common_conductor(*this, o);
  Scalar a = promoted(r), b = o.promoted(r);
  if (r == 0) {
    a.coeff_[0] *= b.coeff_[0];
    return a;
  }
  return cyclotomic(r, mul(a.coeff_, b.coeff_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw scalar_error("division by zero");
  if (conductor_ == 0) {
    Scalar r;
    r.coeff_[0] = 1 / coeff_[0];
    return r;
  }
  auto [g, u] = half_ext_gcd(coeff_, phi_as_qpoly(conductor_));
  // g is a nonzero constant (Phi_r is irreducible over Q).
  if (g.size() != 1) throw scalar_error("inverse: gcd not constant");
  for (auto& c : u) c /= g[0];
  return cyclotomic(conductor_, std::move(u));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? (unsigned long)(-e) : (unsigned long)e;
  Scalar acc(1);
  acc = acc.promoted(conductor_);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  unsigned r = common_conductor(*this, o);
  Scalar a = promoted(r), b = o.promoted(r);
  return a.coeff_ == b.coeff_;
}

bool Scalar::operator<(const Scalar& o) const {
  if (conductor_ != o.conductor_) return conductor_ < o.conductor_;
  for (size_t i = 0; i < coeff_.size(); ++i) {
    int c = cmp(coeff_[i], o.coeff_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string Scalar::str() const {
  if (conductor_ == 0) return coeff_[0].get_str();
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < coeff_.size(); ++i) {
    if (i) os << ',';
    os << coeff_[i].get_str();
  }
  os << "]@" << conductor_;
  return os.str();
}

namespace {
mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw parse_error("bad rational: '" + s + "'");
  if (q.get_den() == 0) throw parse_error("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}
}  // namespace

Scalar Scalar::parse(const std::string& text) {
  std::string s = text;
  // strip whitespace
  s.erase(0, s.find_first_not_of(" \t"));
  if (auto p = s.find_last_not_of(" \t"); p != std::string::npos)
    s.erase(p + 1);
  if (s.empty()) throw parse_error("empty scalar");
  if (s[0] == '[') {
    auto close = s.find(']');
    if (close == std::string::npos || close + 1 >= s.size() ||
        s[close + 1] != '@')
      throw parse_error("bad cyclotomic scalar: '" + text + "'");
    unsigned r = 0;
    try {
      r = (unsigned)std::stoul(s.substr(close + 2));
    } catch (...) {
      throw parse_error("bad conductor in '" + text + "'");
    }
    if (r == 0) throw parse_error("conductor must be >= 1");
    std::vector<mpq_class> coeff;
    std::string body = s.substr(1, close - 1);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) coeff.push_back(parse_rational(tok));
    if (coeff.empty()) throw parse_error("empty coefficient list");
    return cyclotomic(r, std::move(coeff));
  }
  return Scalar(parse_rational(s));
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op) {
  switch (op) {
    case ScalarOp::add: return a + b;
    case ScalarOp::sub: return a - b;
    case ScalarOp::mul: return a * b;
    case ScalarOp::div: return a / b;
  }
  throw scalar_error("bad op");
}

}  // namespace kup
