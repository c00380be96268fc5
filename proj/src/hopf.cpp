#include "kup/hopf.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace kup {

namespace {

// Sparse element of the algebra: basis index -> coefficient.
using Elt = std::map<size_t, Scalar>;
// Sparse element of A (x) A, indexed i*dim + j.
using Elt2 = std::map<size_t, Scalar>;
// Structure-constant product on basis monomials.
using BaseProduct = std::function<Elt(size_t, size_t)>;

void add_to(Elt& acc, size_t i, const Scalar& v) {
  auto it = acc.find(i);
  if (it == acc.end())
    acc.emplace(i, v);
  else
    it->second += v;
}

Elt mul_elt(const BaseProduct& prod, const Elt& a, const Elt& b) {
  Elt out;
  for (const auto& [i, v] : a)
    for (const auto& [j, w] : b)
      for (const auto& [k, c] : prod(i, j)) add_to(out, k, v * w * c);
  return out;
}

// Product on A (x) A with the Koszul sign of the middle swap.
Elt2 mul_elt2(const GradedSpace& A, const BaseProduct& prod, const Elt2& x,
              const Elt2& y) {
  size_t d = A.dim();
  const auto& ctx = *A.context();
  Elt2 out;
  for (const auto& [p1, v1] : x)
    for (const auto& [p2, v2] : y) {
      size_t i1 = p1 / d, j1 = p1 % d, i2 = p2 / d, j2 = p2 % d;
      Scalar sign = ctx.koszul(A.degree(j1), A.degree(i2));
      Elt left = prod(i1, i2);
      Elt right = prod(j1, j2);
      for (const auto& [a, ca] : left)
        for (const auto& [b, cb] : right)
          add_to(out, a * d + b, v1 * v2 * sign * ca * cb);
    }
  return out;
}

GradedMorphism morphism_from_columns(const GradedSpace& src,
                                     const GradedSpace& dst,
                                     const std::vector<Elt>& cols) {
  GradedMorphism m(src, dst);
  for (size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, v] : cols[j])
      if (!v.is_zero()) m.set(i, j, v);
  m.normalize();
  return m;
}

}  // namespace

size_t HopfAlgebraData::basis_index(const std::string& name) const {
  for (size_t i = 0; i < basis_names.size(); ++i)
    if (basis_names[i] == name) return i;
  throw parse_error("unknown basis monomial '" + name + "'");
}

AxiomReport check_axioms(const HopfAlgebraData& h) {
  const GradedSpace& A = h.A;
  GradedSpace unit = h.unit_object();
  GradedMorphism idA = GradedMorphism::identity(A);
  GradedMorphism id1 = GradedMorphism::identity(unit);
  GradedMorphism tau = symmetry(A, A);

  AxiomReport rep;
  auto check = [&rep](const std::string& name, const GradedMorphism& lhs,
                      const GradedMorphism& rhs) {
    auto diff = lhs.first_difference(rhs);
    rep.items.push_back({name, !diff.has_value(), diff});
    return !diff.has_value();
  };

  bool assoc = check("associativity", h.mu * tensor(h.mu, idA),
                     h.mu * tensor(idA, h.mu));
  bool lu = check("left unit", h.mu * tensor(h.eta, idA), idA);
  bool ru = check("right unit", h.mu * tensor(idA, h.eta), idA);
  h.flags.algebra = (assoc && lu && ru) ? Tri::pass : Tri::fail;

  bool coassoc = check("coassociativity", tensor(h.delta, idA) * h.delta,
                       tensor(idA, h.delta) * h.delta);
  bool lc = check("left counit", tensor(h.eps, idA) * h.delta, idA);
  bool rc = check("right counit", tensor(idA, h.eps) * h.delta, idA);
  h.flags.coalgebra = (coassoc && lc && rc) ? Tri::pass : Tri::fail;

  bool compat =
      check("bialgebra compatibility", h.delta * h.mu,
            tensor(h.mu, h.mu) * tensor(tensor(idA, tau), idA) *
                tensor(h.delta, h.delta));
  bool du = check("coproduct of unit", h.delta * h.eta, tensor(h.eta, h.eta));
  bool em = check("counit of product", h.eps * h.mu, tensor(h.eps, h.eps));
  bool eu = check("counit of unit", h.eps * h.eta, id1);
  h.flags.bialgebra = (compat && du && em && eu) ? Tri::pass : Tri::fail;

  GradedMorphism etaeps = h.eta * h.eps;
  bool al = check("antipode left", h.mu * tensor(h.antipode, idA) * h.delta,
                  etaeps);
  bool ar = check("antipode right", h.mu * tensor(idA, h.antipode) * h.delta,
                  etaeps);
  h.flags.antipode = (al && ar) ? Tri::pass : Tri::fail;

  bool invol = check("involutory", h.antipode * h.antipode, idA);
  h.flags.involutory = invol ? Tri::pass : Tri::fail;

  rep.all_pass = assoc && lu && ru && coassoc && lc && rc && compat && du &&
                 em && eu && al && ar && invol;
  rep.involutory = invol;
  return rep;
}

void require_involutory(const HopfAlgebraData& h) {
  if (h.flags.involutory == Tri::unchecked) check_axioms(h);
  if (h.flags.algebra != Tri::pass || h.flags.coalgebra != Tri::pass ||
      h.flags.bialgebra != Tri::pass || h.flags.antipode != Tri::pass ||
      h.flags.involutory != Tri::pass)
    throw axiom_error("Hopf algebra axioms (incl. involutory) not satisfied");
}

GradedMorphism mu_n(const HopfAlgebraData& h, unsigned n) {
  if (n == 0) return h.eta;
  GradedMorphism idA = GradedMorphism::identity(h.A);
  GradedMorphism m = idA;
  for (unsigned k = 2; k <= n; ++k) m = h.mu * tensor(m, idA);
  return m;
}

GradedMorphism delta_n(const HopfAlgebraData& h, unsigned n) {
  if (n == 0) return h.eps;
  GradedMorphism idA = GradedMorphism::identity(h.A);
  GradedMorphism d = idA;
  for (unsigned k = 2; k <= n; ++k) d = tensor(d, idA) * h.delta;
  return d;
}

HopfAlgebraData build_group_algebra(unsigned n) {
  if (n == 0) throw parse_error("group algebra: n must be >= 1");
  auto ctx = Context::vect();
  GradedSpace A(ctx, std::vector<Degree>(n, Degree{0}));
  GradedSpace unit = GradedSpace::unit(ctx);
  HopfAlgebraData h;
  h.A = A;
  h.spec = "group:" + std::to_string(n);
  auto tname = [](unsigned k) {
    if (k == 0) return std::string("1");
    if (k == 1) return std::string("t");
    return "t^" + std::to_string(k);
  };
  for (unsigned k = 0; k < n; ++k) h.basis_names.push_back(tname(k));

  GradedMorphism mu(tensor(A, A), A);
  for (unsigned k = 0; k < n; ++k)
    for (unsigned l = 0; l < n; ++l)
      mu.set((k + l) % n, k * n + l, Scalar(1));
  mu.normalize();
  h.mu = std::move(mu);

  GradedMorphism eta(unit, A);
  eta.set(0, 0, Scalar(1));
  eta.normalize();
  h.eta = std::move(eta);

  GradedMorphism delta(A, tensor(A, A));
  for (unsigned k = 0; k < n; ++k) delta.set(k * n + k, k, Scalar(1));
  delta.normalize();
  h.delta = std::move(delta);

  GradedMorphism eps(A, unit);
  for (unsigned k = 0; k < n; ++k) eps.set(0, k, Scalar(1));
  eps.normalize();
  h.eps = std::move(eps);

  GradedMorphism S(A, A);
  for (unsigned k = 0; k < n; ++k) S.set((n - k) % n, k, Scalar(1));
  S.normalize();
  h.antipode = std::move(S);
  return h;
}

HopfAlgebraData build_Hn(unsigned n, const Scalar& c) {
  if (n == 0) throw parse_error("hn: n must be >= 1");
  auto ctx = Context::super();
  unsigned dim = 2 * n;
  std::vector<Degree> deg(dim);
  for (unsigned e = 0; e < 2; ++e)
    for (unsigned k = 0; k < n; ++k) deg[e * n + k] = Degree{(int)e};
  GradedSpace A(ctx, std::move(deg));
  GradedSpace unit = GradedSpace::unit(ctx);

  HopfAlgebraData h;
  h.A = A;
  auto tname = [](unsigned k) {
    if (k == 0) return std::string("1");
    if (k == 1) return std::string("t");
    return "t^" + std::to_string(k);
  };
  for (unsigned k = 0; k < n; ++k) h.basis_names.push_back(tname(k));
  for (unsigned k = 0; k < n; ++k)
    h.basis_names.push_back(k == 0 ? "th" : "th*" + tname(k));

  auto idx = [n](unsigned e, unsigned k) { return e * n + k; };

  // th^{e1} t^{k1} * th^{e2} t^{k2}; th commutes with t, th^2 = c (t^2 - 1).
  GradedMorphism mu(tensor(A, A), A);
  for (unsigned e1 = 0; e1 < 2; ++e1)
    for (unsigned k1 = 0; k1 < n; ++k1)
      for (unsigned e2 = 0; e2 < 2; ++e2)
        for (unsigned k2 = 0; k2 < n; ++k2) {
          size_t col = idx(e1, k1) * dim + idx(e2, k2);
          unsigned ks = (k1 + k2) % n;
          if (e1 && e2) {
            if (!c.is_zero()) {
              mu.set(idx(0, (ks + 2) % n), col, c);
              mu.set(idx(0, ks), col, mu.entry(idx(0, ks), col) - c);
            }
          } else {
            mu.set(idx(e1 + e2, ks), col, Scalar(1));
          }
        }
  mu.normalize();
  h.mu = std::move(mu);

  GradedMorphism eta(unit, A);
  eta.set(idx(0, 0), 0, Scalar(1));
  eta.normalize();
  h.eta = std::move(eta);

  // Delta(t^k) = t^k (x) t^k;  Delta(th t^k) = t^{k+1} (x) th t^k + th t^k (x) t^k.
  GradedMorphism delta(A, tensor(A, A));
  for (unsigned k = 0; k < n; ++k) {
    delta.set(idx(0, k) * dim + idx(0, k), idx(0, k), Scalar(1));
    delta.set(idx(0, (k + 1) % n) * dim + idx(1, k), idx(1, k), Scalar(1));
    delta.set(idx(1, k) * dim + idx(0, k), idx(1, k), Scalar(1));
  }
  delta.normalize();
  h.delta = std::move(delta);

  GradedMorphism eps(A, unit);
  for (unsigned k = 0; k < n; ++k) eps.set(0, idx(0, k), Scalar(1));
  eps.normalize();
  h.eps = std::move(eps);

  // S(t^k) = t^{-k};  S(th t^k) = -th t^{-k-1}.
  GradedMorphism S(A, A);
  for (unsigned k = 0; k < n; ++k) {
    S.set(idx(0, (n - k) % n), idx(0, k), Scalar(1));
    S.set(idx(1, (2 * n - k - 1) % n), idx(1, k), Scalar(-1));
  }
  S.normalize();
  h.antipode = std::move(S);

  std::string cs = c.str();
  h.spec = "hn:" + std::to_string(n) + ":" + cs;
  return h;
}

HopfAlgebraData build_Anomega(unsigned n1, unsigned n2, long r) {
  if (n1 == 0 || n2 == 0) throw parse_error("anomega: n1, n2 must be >= 1");
  unsigned d = std::gcd(n1, n2);
  Scalar omega = d <= 2 ? Scalar(((r % 2) + 2) % 2 == 1 && d == 2 ? -1 : 1)
                        : Scalar::root_of_unity(d, r);
  auto ctx = Context::super();
  size_t dim = 4ull * n1 * n2;
  auto idx = [n1, n2](unsigned e1, unsigned e2, unsigned k, unsigned l) {
    return (((size_t)e1 * 2 + e2) * n1 + k) * n2 + l;
  };
  std::vector<Degree> deg(dim);
  std::vector<std::string> names(dim);
  for (unsigned e1 = 0; e1 < 2; ++e1)
    for (unsigned e2 = 0; e2 < 2; ++e2)
      for (unsigned k = 0; k < n1; ++k)
        for (unsigned l = 0; l < n2; ++l) {
          deg[idx(e1, e2, k, l)] = Degree{(int)((e1 + e2) % 2)};
          std::string nm;
          auto app = [&nm](const std::string& part) {
            if (!nm.empty()) nm += "*";
            nm += part;
          };
          if (e1) app("th1");
          if (e2) app("th2");
          if (k) app(k == 1 ? "t1" : "t1^" + std::to_string(k));
          if (l) app(l == 1 ? "t2" : "t2^" + std::to_string(l));
          if (nm.empty()) nm = "1";
          names[idx(e1, e2, k, l)] = nm;
        }
  GradedSpace A(ctx, std::move(deg));
  GradedSpace unit = GradedSpace::unit(ctx);

  auto decode = [n1, n2](size_t i, unsigned& e1, unsigned& e2, unsigned& k,
                         unsigned& l) {
    l = (unsigned)(i % n2);
    i /= n2;
    k = (unsigned)(i % n1);
    i /= n1;
    e2 = (unsigned)(i % 2);
    e1 = (unsigned)(i / 2);
  };

  // Normal-form product: move t-powers of the left factor across the theta
  // part of the right factor, then merge theta parts. Relations used:
  // t1 th2 = w th2 t1, t2 th1 = w^{-1} th1 t2, th1 th2 = -w th2 th1,
  // th_i^2 = 0.
  BaseProduct prod = [=](size_t i, size_t j) -> Elt {
    unsigned a1, a2, k1, l1, b1, b2, k2, l2;
    decode(i, a1, a2, k1, l1);
    decode(j, b1, b2, k2, l2);
    if (a1 + b1 > 1 || a2 + b2 > 1) return {};
    Scalar coeff = omega.pow((long)k1 * b2 - (long)l1 * b1);
    if (a2 && b1) coeff *= -omega.inverse();
    Elt out;
    out.emplace(idx(a1 + b1, a2 + b2, (k1 + k2) % n1, (l1 + l2) % n2),
                std::move(coeff));
    return out;
  };

  HopfAlgebraData h;
  h.A = A;
  h.basis_names = std::move(names);
  h.spec = "anomega:" + std::to_string(n1) + ":" + std::to_string(n2) + ":" +
           std::to_string(r);

  GradedMorphism mu(tensor(A, A), A);
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j)
      for (const auto& [k, v] : prod(i, j)) mu.set(k, i * dim + j, v);
  mu.normalize();
  h.mu = std::move(mu);

  GradedMorphism eta(unit, A);
  eta.set(idx(0, 0, 0, 0), 0, Scalar(1));
  eta.normalize();
  h.eta = std::move(eta);

  // Delta is an algebra morphism; build it multiplicatively from the
  // generator values Delta(th_i) = t_i (x) th_i + th_i (x) 1,
  // Delta(t_i) = t_i (x) t_i.
  std::vector<Elt> delta_cols(dim);
  Elt2 dth1{{idx(0, 0, 1 % n1, 0) * dim + idx(1, 0, 0, 0), Scalar(1)},
            {idx(1, 0, 0, 0) * dim + idx(0, 0, 0, 0), Scalar(1)}};
  Elt2 dth2{{idx(0, 0, 0, 1 % n2) * dim + idx(0, 1, 0, 0), Scalar(1)},
            {idx(0, 1, 0, 0) * dim + idx(0, 0, 0, 0), Scalar(1)}};
  for (size_t col = 0; col < dim; ++col) {
    unsigned e1, e2, k, l;
    decode(col, e1, e2, k, l);
    Elt2 acc{{idx(0, 0, 0, 0) * dim + idx(0, 0, 0, 0), Scalar(1)}};
    if (e1) acc = mul_elt2(A, prod, acc, dth1);
    if (e2) acc = mul_elt2(A, prod, acc, dth2);
    size_t tpart = idx(0, 0, k, l);
    Elt2 dt{{tpart * dim + tpart, Scalar(1)}};
    acc = mul_elt2(A, prod, acc, dt);
    delta_cols[col] = std::move(acc);
  }
  h.delta = morphism_from_columns(A, tensor(A, A), delta_cols);

  GradedMorphism eps(A, unit);
  for (unsigned k = 0; k < n1; ++k)
    for (unsigned l = 0; l < n2; ++l)
      eps.set(0, idx(0, 0, k, l), Scalar(1));
  eps.normalize();
  h.eps = std::move(eps);

  // Antipode: anti-multiplicative fold over the letters of the monomial,
  // S(x y) = chi(|x|,|y|) S(y) S(x), with S(t_i) = t_i^{-1} and
  // S(th_i) = -th_i t_i^{-1}.
  Elt s_th1{{idx(1, 0, (n1 - 1) % n1, 0), Scalar(-1)}};
  Elt s_th2{{idx(0, 1, 0, (n2 - 1) % n2), Scalar(-1)}};
  std::vector<Elt> s_cols(dim);
  for (size_t col = 0; col < dim; ++col) {
    unsigned e1, e2, k, l;
    decode(col, e1, e2, k, l);
    // Letters in monomial order with their degrees.
    std::vector<std::pair<Elt, int>> letters;
    if (e1) letters.push_back({s_th1, 1});
    if (e2) letters.push_back({s_th2, 1});
    Elt s_t{{idx(0, 0, (n1 - k) % n1, (n2 - l) % n2), Scalar(1)}};
    letters.push_back({s_t, 0});
    // Fold: S(l_1 ... l_m) = prod of chi-signs * S(l_m) ... S(l_1).
    Elt acc{{idx(0, 0, 0, 0), Scalar(1)}};
    int right_degree = 0;
    Scalar sign(1);
    for (size_t p = letters.size(); p-- > 0;) {
      // acc currently holds S(l_{p+1} ... l_m); prepend letter p:
      // S(l_p rest) = chi(|l_p|, |rest|) S(rest) S(l_p).
      acc = mul_elt(prod, acc, letters[p].first);
      if (letters[p].second == 1 && right_degree % 2 == 1) sign *= Scalar(-1);
      right_degree += letters[p].second;
    }
    if (!sign.is_one())
      for (auto& [i, v] : acc) v *= sign;
    s_cols[col] = std::move(acc);
  }
  h.antipode = morphism_from_columns(A, A, s_cols);
  return h;
}

GradedMorphism dual_morphism(const GradedMorphism& f) {
  GradedSpace src = f.target().dual();
  GradedSpace dst = f.source().dual();
  GradedMorphism out(src, dst);
  for (size_t j = 0; j < f.source().dim(); ++j)
    for (const auto& [i, v] : f.col(j)) out.set(j, i, v);
  out.normalize();
  return out;
}

HopfAlgebraData dual_hopf(const HopfAlgebraData& h) {
  const GradedSpace& A = h.A;
  size_t d = A.dim();
  GradedSpace As = A.dual();
  GradedSpace unit = h.unit_object();
  const auto& ctx = *A.context();

  HopfAlgebraData out;
  out.A = As;
  out.spec = h.spec.empty() ? "dual" : "dual(" + h.spec + ")";
  for (const auto& nm : h.basis_names) out.basis_names.push_back(nm + "*");

  // Pairing of A* (x) A* with A (x) A:
  // <f (x) g, a (x) b> = chi(|g|, |a|) f(a) g(b).
  GradedMorphism mu(tensor(As, As), As);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      size_t col = i * d + j;
      for (size_t x = 0; x < d; ++x) {
        Scalar v = h.delta.entry(i * d + j, x);
        if (v.is_zero()) continue;
        Scalar sign =
            ctx.koszul(ctx.group.negate(A.degree(j)), A.degree(i));
        mu.set(x, col, v * sign);
      }
    }
  mu.normalize();
  out.mu = std::move(mu);

  GradedMorphism eta(unit, As);
  for (size_t i = 0; i < d; ++i) {
    Scalar v = h.eps.entry(0, i);
    if (!v.is_zero()) eta.set(i, 0, v);
  }
  eta.normalize();
  out.eta = std::move(eta);

  GradedMorphism delta(As, tensor(As, As));
  for (size_t x = 0; x < d; ++x)
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) {
        Scalar v = h.mu.entry(x, i * d + j);
        if (v.is_zero()) continue;
        Scalar sign =
            ctx.koszul(ctx.group.negate(A.degree(j)), A.degree(i));
        delta.set(i * d + j, x, v * sign);
      }
  delta.normalize();
  out.delta = std::move(delta);

  GradedMorphism eps(As, unit);
  for (size_t i = 0; i < d; ++i) {
    Scalar v = h.eta.entry(i, 0);
    if (!v.is_zero()) eps.set(0, i, v);
  }
  eps.normalize();
  out.eps = std::move(eps);

  out.antipode = dual_morphism(h.antipode);
  return out;
}

HopfAlgebraData parse_algebra_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::istringstream is(spec);
  std::string tok;
  while (std::getline(is, tok, ':')) parts.push_back(tok);
  if (parts.empty()) throw parse_error("empty algebra spec");
  try {
    if (parts[0] == "group" && parts.size() == 2)
      return build_group_algebra((unsigned)std::stoul(parts[1]));
    if (parts[0] == "hn" && (parts.size() == 2 || parts.size() == 3)) {
      Scalar c = parts.size() == 3 ? Scalar::parse(parts[2]) : Scalar(0);
      return build_Hn((unsigned)std::stoul(parts[1]), c);
    }
    if (parts[0] == "anomega" && parts.size() == 4)
      return build_Anomega((unsigned)std::stoul(parts[1]),
                           (unsigned)std::stoul(parts[2]),
                           std::stol(parts[3]));
  } catch (const std::invalid_argument&) {
    throw parse_error("bad number in algebra spec '" + spec + "'");
  } catch (const std::out_of_range&) {
    throw parse_error("bad number in algebra spec '" + spec + "'");
  }
  throw parse_error("unknown algebra spec '" + spec + "'");
}

}  // namespace kup
