#include "kup/integrals.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "kup/linalg.hpp"

namespace kup {

namespace {

std::vector<Degree> distinct_degrees(const GradedSpace& A) {
  std::vector<Degree> out;
  for (const auto& d : A.degrees())
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  return out;
}

// Column vector of a 1 -> A or I -> A morphism.
std::vector<Scalar> column_of(const GradedMorphism& v) {
  std::vector<Scalar> out(v.target().dim(), Scalar(0));
  for (const auto& [i, c] : v.col(0)) out[i] = c;
  return out;
}

GradedMorphism vector_morphism(const GradedSpace& src, const GradedSpace& dst,
                               const std::vector<Scalar>& coords) {
  GradedMorphism m(src, dst);
  for (size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) m.set(i, 0, coords[i]);
  m.normalize();
  return m;
}

GradedMorphism functional_morphism(const GradedSpace& src,
                                   const GradedSpace& dst,
                                   const std::vector<Scalar>& coords) {
  GradedMorphism m(src, dst);
  for (size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) m.set(0, i, coords[i]);
  m.normalize();
  return m;
}

}  // namespace

std::vector<SolutionSpace> solve_integrals(const HopfAlgebraData& h, Side side,
                                           Kind kind) {
  const GradedSpace& A = h.A;
  size_t dim = A.dim();
  std::vector<SolutionSpace> out;
  for (const Degree& d : distinct_degrees(A)) {
    std::vector<size_t> support;
    for (size_t i = 0; i < dim; ++i)
      if (A.degree(i) == d) support.push_back(i);
    size_t u = support.size();

    // One equation row per (x, y) pair of basis indices of A.
    Mat sys(dim * dim, u);
    if (kind == Kind::integral) {
      // v with x v = eps(x) v (left) or v x = eps(x) v (right).
      for (size_t x = 0; x < dim; ++x) {
        Scalar ex = h.eps.entry(0, x);
        for (size_t c = 0; c < u; ++c) {
          size_t j = support[c];
          size_t col = side == Side::left ? x * dim + j : j * dim + x;
          for (const auto& [y, v] : h.mu.col(col))
            sys.at(x * dim + y, c) += v;
          if (!ex.is_zero()) sys.at(x * dim + j, c) -= ex;
        }
      }
    } else {
      // l with (l (x) id)Delta = l (x) eta (right) or
      // (id (x) l)Delta = eta (x) l (left).
      std::vector<Scalar> eta = column_of(h.eta);
      for (size_t x = 0; x < dim; ++x) {
        for (const auto& [p, v] : h.delta.col(x)) {
          size_t first = p / dim, second = p % dim;
          size_t li = kind == Kind::cointegral && side == Side::right
                          ? first
                          : second;
          size_t yi = side == Side::right ? second : first;
          for (size_t c = 0; c < u; ++c)
            if (support[c] == li) sys.at(x * dim + yi, c) += v;
        }
        for (size_t c = 0; c < u; ++c)
          if (support[c] == x)
            for (size_t y = 0; y < dim; ++y)
              if (!eta[y].is_zero()) sys.at(x * dim + y, c) -= eta[y];
      }
    }

    auto ns = nullspace(sys);
    if (ns.empty()) continue;
    SolutionSpace sol;
    sol.degree = d;
    for (auto& v : ns) {
      std::vector<Scalar> full(dim, Scalar(0));
      for (size_t c = 0; c < u; ++c) full[support[c]] = std::move(v[c]);
      sol.basis.push_back(std::move(full));
    }
    out.push_back(std::move(sol));
  }
  return out;
}

GradedMorphism convolution_power_grouplike(const HopfAlgebraData& h,
                                           const GradedMorphism& g, long k) {
  GradedMorphism base = k < 0 ? h.antipode * g : g;
  unsigned long times = k < 0 ? (unsigned long)(-k) : (unsigned long)k;
  GradedMorphism acc = h.eta;
  for (unsigned long i = 0; i < times; ++i) acc = h.mu * tensor(acc, base);
  return acc;
}

GradedMorphism convolution_power_algebra_morphism(const HopfAlgebraData& h,
                                                  const GradedMorphism& alpha,
                                                  long k) {
  GradedMorphism base = k < 0 ? alpha * h.antipode : alpha;
  unsigned long times = k < 0 ? (unsigned long)(-k) : (unsigned long)k;
  GradedMorphism acc = h.eps;
  for (unsigned long i = 0; i < times; ++i)
    acc = tensor(acc, base) * h.delta;
  return acc;
}

IntegralData build_integral_data(const HopfAlgebraData& h) {
  require_involutory(h);
  auto ints = solve_integrals(h, Side::left, Kind::integral);
  auto coints = solve_integrals(h, Side::right, Kind::cointegral);
  if (ints.size() != 1 || ints[0].basis.size() != 1)
    throw integral_error(
        "left-integral space is not one-dimensional at a single degree");
  if (coints.size() != 1 || coints[0].basis.size() != 1)
    throw integral_error(
        "right-cointegral space is not one-dimensional at a single degree");
  if (ints[0].degree != coints[0].degree)
    throw integral_error(
        "integral and cointegral live at different degrees; cannot normalize");

  const GradedSpace& A = h.A;
  IntegralData d;
  d.I = GradedSpace::line(A.context(), ints[0].degree);
  d.Lambda = vector_morphism(d.I, A, ints[0].basis[0]);

  std::vector<Scalar> lam = coints[0].basis[0];
  Scalar pairing(0);
  for (size_t i = 0; i < A.dim(); ++i)
    pairing += lam[i] * (i < ints[0].basis[0].size() ? ints[0].basis[0][i]
                                                     : Scalar(0));
  if (pairing.is_zero())
    throw integral_error("lambda Lambda = 0; cannot normalize");
  Scalar inv = pairing.inverse();
  for (auto& v : lam) v *= inv;
  d.lambda = functional_morphism(A, d.I, lam);

  // g from (id (x) lambda)Delta = g (x) lambda, read off at a pivot of lambda.
  size_t dim = A.dim();
  size_t piv = 0;
  while (piv < dim && lam[piv].is_zero()) ++piv;
  Scalar lam_inv = lam[piv].inverse();
  std::vector<Scalar> gvec(dim, Scalar(0));
  for (const auto& [p, v] : h.delta.col(piv)) {
    size_t y = p / dim, i = p % dim;
    if (!lam[i].is_zero()) gvec[y] += v * lam[i] * lam_inv;
  }
  GradedSpace unit = h.unit_object();
  d.g = vector_morphism(unit, A, gvec);
  GradedMorphism lhs_g = tensor(GradedMorphism::identity(A), d.lambda) * h.delta;
  if (lhs_g != tensor(d.g, d.lambda))
    throw integral_error("distinguished grouplike equation has no solution");

  // alpha from mu(Lambda (x) id) = Lambda (x) alpha at a pivot of Lambda.
  const std::vector<Scalar>& L = ints[0].basis[0];
  size_t lpiv = 0;
  while (lpiv < dim && L[lpiv].is_zero()) ++lpiv;
  Scalar L_inv = L[lpiv].inverse();
  std::vector<Scalar> avec(dim, Scalar(0));
  for (size_t x = 0; x < dim; ++x) {
    Scalar acc(0);
    for (size_t j = 0; j < dim; ++j)
      if (!L[j].is_zero()) acc += L[j] * h.mu.entry(lpiv, j * dim + x);
    avec[x] = acc * L_inv;
  }
  d.alpha = functional_morphism(A, unit, avec);
  GradedMorphism lhs_a = h.mu * tensor(d.Lambda, GradedMorphism::identity(A));
  if (lhs_a != tensor(d.Lambda, d.alpha))
    throw integral_error("distinguished algebra morphism equation fails");

  // Grouplike and algebra-morphism identities.
  if (h.delta * d.g != tensor(d.g, d.g) ||
      (h.eps * d.g) != GradedMorphism::identity(unit))
    throw integral_error("distinguished g is not grouplike");
  if (d.alpha * h.mu != tensor(d.alpha, d.alpha) ||
      (d.alpha * h.eta) != GradedMorphism::identity(unit))
    throw integral_error("distinguished alpha is not an algebra morphism");

  // Convolution orders, capped at dim(A)^2.
  size_t cap = dim * dim;
  GradedMorphism acc = d.g;
  d.m = 1;
  while (acc != h.eta) {
    acc = h.mu * tensor(acc, d.g);
    if (++d.m > cap) throw integral_error("order bound exceeded");
  }
  GradedMorphism acca = d.alpha;
  d.n = 1;
  while (acca != h.eps) {
    acca = tensor(acca, d.alpha) * h.delta;
    if (++d.n > cap) throw integral_error("order bound exceeded");
  }
  return d;
}

std::pair<bool, bool> check_centrality(const HopfAlgebraData& h,
                                       const IntegralData& d) {
  GradedMorphism idA = GradedMorphism::identity(h.A);
  bool gc = (h.mu * tensor(d.g, idA)) == (h.mu * tensor(idA, d.g));
  bool ac = (tensor(d.alpha, idA) * h.delta) ==
            (tensor(idA, d.alpha) * h.delta);
  return {gc, ac};
}

GPReport check_good_pair(const HopfAlgebraData& h, const GradedMorphism& phi,
                         const GradedMorphism& Omega,
                         const GradedMorphism* f_witness,
                         const GradedMorphism* h_witness) {
  const GradedSpace& A = h.A;
  size_t dim = A.dim();
  const GradedSpace& I = phi.target();
  if (I.dim() != 1 || Omega.source() != I)
    throw integral_error("good-pair checker needs a one-dimensional I");

  GPReport rep;
  rep.sigma_I = sigma_of(I);
  GradedMorphism idA = GradedMorphism::identity(A);
  GradedMorphism tau = symmetry(A, A);

  auto add = [&rep](const std::string& name, bool pass) {
    rep.items.push_back({name, pass});
    return pass;
  };

  bool gp1 = add("phi Omega = id_I", phi * Omega == GradedMorphism::identity(I));

  GradedMorphism H = tensor(h.mu, idA) * tensor(idA, h.delta);
  bool gp2 = add("splitting identity for phi",
                 tensor(phi, phi) * H == tensor(phi, phi)) &
             add("splitting identity for Omega",
                 H * tensor(Omega, Omega) == tensor(Omega, Omega));

  rep.nu = norm_on_invertible(phi * h.antipode * Omega);
  bool gp3 = add("phi S = nu phi", phi * h.antipode == phi.scaled(rep.nu)) &
             add("S Omega = nu Omega",
                 h.antipode * Omega == Omega.scaled(rep.nu));
  add("nu^2 = 1", (rep.nu * rep.nu).is_one());

  GradedMorphism phimu = phi * h.mu;
  GradedMorphism dOmega = h.delta * Omega;

  // Unknown entries of a grading-preserving endomorphism of A.
  std::vector<std::pair<size_t, size_t>> slots;
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j)
      if (A.degree(i) == A.degree(j)) slots.push_back({i, j});
  auto slot_index = [&slots](size_t i, size_t j) -> size_t {
    for (size_t s = 0; s < slots.size(); ++s)
      if (slots[s].first == i && slots[s].second == j) return s;
    return (size_t)-1;
  };

  bool gp4, gp5;
  if (f_witness) {
    rep.f = *f_witness;
    rep.found_f = true;
    gp4 = add("base-point axiom, upper",
              phimu * tau == phimu * tensor(rep.f, idA) &&
                  dOmega == tensor(rep.f, idA) * dOmega);
  } else {
    // Solve the two linear identities for f.
    // Rows: one per column (a,b) of phi mu tau, plus one per row (p,q) of
    // Delta Omega.
    GradedMorphism phimutau = phimu * tau;
    size_t nrows = dim * dim + dim * dim;
    Mat sys(nrows, slots.size());
    std::vector<Scalar> rhs(nrows, Scalar(0));
    for (size_t a = 0; a < dim; ++a)
      for (size_t b = 0; b < dim; ++b) {
        size_t row = a * dim + b;
        rhs[row] = phimutau.entry(0, a * dim + b);
        for (size_t i = 0; i < dim; ++i) {
          Scalar c = phimu.entry(0, i * dim + b);
          if (c.is_zero()) continue;
          size_t s = slot_index(i, a);
          if (s != (size_t)-1) sys.at(row, s) = c;
        }
      }
    for (size_t p = 0; p < dim; ++p)
      for (size_t q = 0; q < dim; ++q) {
        size_t row = dim * dim + p * dim + q;
        rhs[row] = dOmega.entry(p * dim + q, 0);
        for (size_t a = 0; a < dim; ++a) {
          Scalar c = dOmega.entry(a * dim + q, 0);
          if (c.is_zero()) continue;
          size_t s = slot_index(p, a);
          if (s != (size_t)-1) sys.at(row, s) = c;
        }
      }
    auto sol = solve(sys, rhs);
    if (sol) {
      GradedMorphism f(A, A);
      for (size_t s = 0; s < slots.size(); ++s)
        if (!(*sol)[s].is_zero())
          f.set(slots[s].first, slots[s].second, (*sol)[s]);
      f.normalize();
      rep.f = std::move(f);
      rep.found_f = true;
    }
    gp4 = add("base-point axiom, upper (witness found)", rep.found_f);
  }

  if (h_witness) {
    rep.h = *h_witness;
    rep.found_h = true;
    gp5 = add("base-point axiom, lower",
              tau * dOmega == tensor(idA, rep.h) * dOmega &&
                  phimu == phimu * tensor(idA, rep.h));
  } else {
    GradedMorphism taudO = tau * dOmega;
    size_t nrows = dim * dim + dim * dim;
    Mat sys(nrows, slots.size());
    std::vector<Scalar> rhs(nrows, Scalar(0));
    for (size_t p = 0; p < dim; ++p)
      for (size_t q = 0; q < dim; ++q) {
        size_t row = p * dim + q;
        rhs[row] = taudO.entry(p * dim + q, 0);
        for (size_t b = 0; b < dim; ++b) {
          Scalar c = dOmega.entry(p * dim + b, 0);
          if (c.is_zero()) continue;
          size_t s = slot_index(q, b);
          if (s != (size_t)-1) sys.at(row, s) = c;
        }
      }
    for (size_t a = 0; a < dim; ++a)
      for (size_t b = 0; b < dim; ++b) {
        size_t row = dim * dim + a * dim + b;
        rhs[row] = phimu.entry(0, a * dim + b);
        for (size_t j = 0; j < dim; ++j) {
          Scalar c = phimu.entry(0, a * dim + j);
          if (c.is_zero()) continue;
          size_t s = slot_index(j, b);
          if (s != (size_t)-1) sys.at(row, s) = c;
        }
      }
    auto sol = solve(sys, rhs);
    if (sol) {
      GradedMorphism hw(A, A);
      for (size_t s = 0; s < slots.size(); ++s)
        if (!(*sol)[s].is_zero())
          hw.set(slots[s].first, slots[s].second, (*sol)[s]);
      hw.normalize();
      rep.h = std::move(hw);
      rep.found_h = true;
    }
    gp5 = add("base-point axiom, lower (witness found)", rep.found_h);
  }

  rep.gamma = (rep.sigma_I.is_one() && rep.nu.is_one()) ? 1 : 2;
  rep.all_pass = gp1 && gp2 && gp3 && gp4 && gp5 &&
                 (rep.nu * rep.nu).is_one();
  return rep;
}

GoodPair build_good_pair(const HopfAlgebraData& h, const IntegralData& d) {
  auto [gc, ac] = check_centrality(h, d);
  if (gc != ac)
    throw integral_error("centrality of g and alpha disagree");
  if (!gc)
    throw centrality_error(
        "assumption (A5) violated: distinguished grouplike element is not "
        "central");

  GradedMorphism idA = GradedMorphism::identity(h.A);
  GoodPair gp;
  gp.I = d.I;

  GradedMorphism phi(tensor(h.A, h.unit_object()), d.I);
  for (unsigned k = 0; k < d.m; ++k) {
    GradedMorphism gk = convolution_power_grouplike(h, d.g, (long)k);
    GradedMorphism term = d.lambda * h.mu * tensor(idA, gk);
    phi = k == 0 ? term : phi + term;
  }
  gp.phi = phi.scaled(Scalar(1) / Scalar((long)d.m));

  GradedMorphism Omega(d.I, tensor(h.unit_object(), h.A));
  for (unsigned l = 0; l < d.n; ++l) {
    GradedMorphism al = convolution_power_algebra_morphism(h, d.alpha, (long)l);
    GradedMorphism term = tensor(al, idA) * h.delta * d.Lambda;
    Omega = l == 0 ? term : Omega + term;
  }
  gp.Omega = Omega.scaled(Scalar(1) / Scalar((long)d.n));

  gp.sigma_I = sigma_of(d.I);
  gp.f = tensor(d.alpha, idA) * h.delta;
  gp.h = h.mu * tensor(idA, d.g);

  GPReport rep = check_good_pair(h, gp.phi, gp.Omega, &gp.f, &gp.h);
  if (!rep.all_pass)
    throw integral_error("constructed pair fails a good-pair axiom");
  if (rep.nu != gp.sigma_I)
    throw integral_error("constructed pair has nu != sigma_I");
  gp.nu = rep.nu;
  gp.gamma = rep.gamma;
  return gp;
}

GoodPair auto_good_pair(const HopfAlgebraData& h) {
  return build_good_pair(h, build_integral_data(h));
}

LemmaReport lemma_suite(const HopfAlgebraData& h, const IntegralData& d) {
  LemmaReport rep;
  GradedMorphism idA = GradedMorphism::identity(h.A);
  GradedMorphism tau = symmetry(h.A, h.A);
  Scalar sigma = sigma_of(d.I);
  GradedSpace unit = h.unit_object();
  auto add = [&rep](const std::string& name, bool pass) {
    rep.items.push_back({name, pass});
  };

  bool a = true;
  for (long k = -3; k <= 3; ++k)
    for (long l = -3; l <= 3; ++l) {
      GradedMorphism ak = convolution_power_algebra_morphism(h, d.alpha, k);
      GradedMorphism gl = convolution_power_grouplike(h, d.g, l);
      a = a && (ak * gl == GradedMorphism::identity(unit));
    }
  add("alpha^k g^l = 1", a);

  GradedMorphism lmS = (d.lambda * h.antipode).scaled(sigma);
  add("lambda mu with g equals sigma lambda S",
      d.lambda * h.mu * tensor(idA, d.g) == lmS &&
          d.lambda * h.mu * tensor(d.g, idA) == lmS);

  GradedMorphism sLs = (h.antipode * d.Lambda).scaled(sigma);
  add("alpha against Delta Lambda equals sigma S Lambda",
      tensor(d.alpha, idA) * h.delta * d.Lambda == sLs &&
          tensor(idA, d.alpha) * h.delta * d.Lambda == sLs);

  add("lambda mu tau twists by alpha",
      d.lambda * h.mu * tau ==
          d.lambda * h.mu * tensor(tensor(d.alpha, idA) * h.delta, idA));

  add("tau Delta Lambda twists by g",
      tau * h.delta * d.Lambda ==
          tensor(idA, h.mu * tensor(idA, d.g)) * h.delta * d.Lambda);

  auto [gc, ac] = check_centrality(h, d);
  rep.g_central = gc;
  rep.alpha_central = ac;
  add("centrality equivalence", gc == ac);

  rep.all_pass = true;
  for (const auto& it : rep.items) rep.all_pass = rep.all_pass && it.pass;
  return rep;
}

std::string serialize_good_pair(const HopfAlgebraData& h, const GoodPair& gp) {
  std::ostringstream os;
  os << "goodpair v1\n";
  os << "algebra " << h.spec << "\n";
  os << "I_degree";
  for (int c : gp.I.degree(0)) os << " " << c;
  os << "\n";
  os << "nu " << gp.nu.str() << "\n";
  os << "gamma " << gp.gamma << "\n";
  auto emit = [&](const char* tag, const GradedMorphism& m, bool column) {
    os << tag;
    if (column) {
      for (const auto& [i, v] : m.col(0))
        os << " " << h.basis_names[i] << ":" << v.str();
    } else {
      for (size_t j = 0; j < m.source().dim(); ++j) {
        Scalar v = m.entry(0, j);
        if (!v.is_zero()) os << " " << h.basis_names[j] << ":" << v.str();
      }
    }
    os << "\n";
  };
  emit("phi", gp.phi, false);
  emit("Omega", gp.Omega, true);
  os << "end\n";
  return os.str();
}

GoodPair parse_good_pair(const HopfAlgebraData& h, const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "goodpair v1")
    throw parse_error("good pair file: missing 'goodpair v1' header");
  GoodPair gp;
  bool have_deg = false, have_phi = false, have_omega = false, ended = false;
  std::vector<std::pair<size_t, Scalar>> phi_terms, omega_terms;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "end") {
      ended = true;
      break;
    } else if (key == "algebra") {
      std::string spec;
      ls >> spec;
      if (!h.spec.empty() && spec != h.spec)
        throw parse_error("good pair file: algebra mismatch: file has '" +
                          spec + "', expected '" + h.spec + "'");
    } else if (key == "I_degree") {
      Degree deg;
      int c;
      while (ls >> c) deg.push_back(c);
      if (deg.size() != h.A.context()->group.rank())
        throw parse_error("good pair file: I_degree has wrong rank");
      gp.I = GradedSpace::line(h.A.context(),
                               h.A.context()->group.reduce(deg));
      have_deg = true;
    } else if (key == "nu") {
      std::string tok;
      ls >> tok;
      gp.nu = Scalar::parse(tok);
    } else if (key == "gamma") {
      unsigned gamma;
      if (!(ls >> gamma) || (gamma != 1 && gamma != 2))
        throw parse_error("good pair file: gamma must be 1 or 2");
      gp.gamma = gamma;
    } else if (key == "phi" || key == "Omega") {
      auto& terms = key == "phi" ? phi_terms : omega_terms;
      (key == "phi" ? have_phi : have_omega) = true;
      std::string tok;
      while (ls >> tok) {
        size_t colon = tok.rfind(':');
        if (colon == std::string::npos)
          throw parse_error("good pair file: bad term '" + tok + "'");
        size_t idx = h.basis_index(tok.substr(0, colon));
        terms.push_back({idx, Scalar::parse(tok.substr(colon + 1))});
      }
    } else {
      throw parse_error("good pair file: unknown key '" + key + "'");
    }
  }
  if (!ended) throw parse_error("good pair file: missing 'end'");
  if (!have_deg || !have_phi || !have_omega)
    throw parse_error("good pair file: missing I_degree, phi or Omega");
  GradedMorphism phi(h.A, gp.I);
  for (const auto& [j, v] : phi_terms) phi.set(0, j, v);
  phi.normalize();
  GradedMorphism Omega(gp.I, h.A);
  for (const auto& [i, v] : omega_terms) Omega.set(i, 0, v);
  Omega.normalize();
  gp.phi = std::move(phi);
  gp.Omega = std::move(Omega);
  gp.sigma_I = sigma_of(gp.I);
  return gp;
}

}  // namespace kup
