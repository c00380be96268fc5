#include "doctest.h"
#include "kup/hopf.hpp"

using namespace kup;

namespace {

const std::vector<std::string>& example_specs() {
  static const std::vector<std::string> specs = {
      "group:1",       "group:2",       "group:3",       "group:4",
      "hn:2:0",        "hn:2:1",        "hn:3:-1",       "anomega:2:2:0",
      "anomega:2:2:1", "anomega:1:2:0",
  };
  return specs;
}

}  // namespace

TEST_CASE("all example algebras and their duals satisfy the axioms") {
  for (const auto& spec : example_specs()) {
    CAPTURE(spec);
    HopfAlgebraData h = parse_algebra_spec(spec);
    AxiomReport ax = check_axioms(h);
    CHECK(ax.all_pass);
    CHECK(ax.involutory);
    CHECK(h.flags.involutory == Tri::pass);
    CHECK_NOTHROW(require_involutory(h));

    HopfAlgebraData d = dual_hopf(h);
    AxiomReport axd = check_axioms(d);
    CHECK(axd.all_pass);
    CHECK(axd.involutory);
  }
}

TEST_CASE("double dual is literally the original structure") {
  for (const std::string& spec : {"group:3", "hn:2:1", "anomega:2:2:1"}) {
    CAPTURE(spec);
    HopfAlgebraData h = parse_algebra_spec(spec);
    HopfAlgebraData dd = dual_hopf(dual_hopf(h));
    CHECK(dd.A == h.A);
    CHECK(dd.mu == h.mu);
    CHECK(dd.eta == h.eta);
    CHECK(dd.delta == h.delta);
    CHECK(dd.eps == h.eps);
    CHECK(dd.antipode == h.antipode);
  }
}

TEST_CASE("dual morphism is an exact transpose") {
  HopfAlgebraData h = parse_algebra_spec("hn:2:1");
  GradedMorphism st = dual_morphism(h.antipode);
  for (size_t i = 0; i < h.dim(); ++i)
    for (size_t j = 0; j < h.dim(); ++j)
      CHECK(st.entry(i, j) == h.antipode.entry(j, i));
  // Contravariant functoriality on an invertible morphism.
  CHECK(dual_morphism(h.antipode * h.antipode) ==
        dual_morphism(h.antipode) * dual_morphism(h.antipode));
}

TEST_CASE("iterated products and coproducts split") {
  for (const std::string& spec : {"group:3", "hn:2:1"}) {
    CAPTURE(spec);
    HopfAlgebraData h = parse_algebra_spec(spec);
    GradedMorphism idA = GradedMorphism::identity(h.A);
    CHECK(mu_n(h, 0) == h.eta);
    CHECK(mu_n(h, 1) == idA);
    CHECK(mu_n(h, 2) == h.mu);
    CHECK(delta_n(h, 0) == h.eps);
    CHECK(delta_n(h, 2) == h.delta);
    for (unsigned a = 1; a <= 3; ++a)
      for (unsigned b = 1; a + b <= 5; ++b) {
        CHECK(mu_n(h, a + b) == h.mu * tensor(mu_n(h, a), mu_n(h, b)));
        CHECK(delta_n(h, a + b) ==
              tensor(delta_n(h, a), delta_n(h, b)) * h.delta);
      }
  }
}

TEST_CASE("antipode is an anti-homomorphism") {
  for (const auto& spec : example_specs()) {
    CAPTURE(spec);
    HopfAlgebraData h = parse_algebra_spec(spec);
    GradedMorphism tau = symmetry(h.A, h.A);
    const GradedMorphism& S = h.antipode;
    CHECK(S * h.mu == h.mu * tensor(S, S) * tau);
    CHECK(h.delta * S == tau * tensor(S, S) * h.delta);
    CHECK(S * h.eta == h.eta);
    CHECK(h.eps * S == h.eps);
  }
}

TEST_CASE("a wrong antipode fails with the right witness") {
  HopfAlgebraData h = parse_algebra_spec("hn:2:1");
  h.antipode = GradedMorphism::identity(h.A);
  AxiomReport ax = check_axioms(h);
  CHECK_FALSE(ax.all_pass);
  CHECK(h.flags.antipode == Tri::fail);
  for (const auto& it : ax.items)
    if (it.name == "antipode left") {
      CHECK_FALSE(it.pass);
      REQUIRE(it.witness.has_value());
      // First offending column: the odd generator.
      CHECK(*it.witness == h.basis_index("th"));
    }
  // Checks run lazily, so the broken algebra is rejected here too.
  CHECK_THROWS_AS(require_involutory(h), axiom_error);
}

TEST_CASE("structure oracles for the small builders") {
  HopfAlgebraData g3 = build_group_algebra(3);
  size_t t = g3.basis_index("t");
  // t * t = t^2, Delta t = t (x) t, S t = t^2.
  CHECK(g3.mu.entry(g3.basis_index("t^2"), t * 3 + t) == Scalar(1));
  CHECK(g3.delta.entry(t * 3 + t, t) == Scalar(1));
  CHECK(g3.antipode.entry(g3.basis_index("t^2"), t) == Scalar(1));

  HopfAlgebraData h2 = build_Hn(2, Scalar(1));
  size_t th = h2.basis_index("th");
  size_t tt = h2.basis_index("t");
  size_t one = h2.basis_index("1");
  // th^2 = c (t^2 - 1) vanishes for n = 2 since t^2 = 1.
  for (size_t i = 0; i < h2.dim(); ++i)
    CHECK(h2.mu.entry(i, th * 4 + th) == Scalar(0));
  // th t = t th.
  for (size_t i = 0; i < h2.dim(); ++i)
    CHECK(h2.mu.entry(i, th * 4 + tt) == h2.mu.entry(i, tt * 4 + th));
  // Delta th = t (x) th + th (x) 1.
  CHECK(h2.delta.entry(tt * 4 + th, th) == Scalar(1));
  CHECK(h2.delta.entry(th * 4 + one, th) == Scalar(1));
  // S th = -th t^{-1} = -th t.
  CHECK(h2.antipode.entry(h2.basis_index("th*t"), th) == Scalar(-1));

  HopfAlgebraData a = build_Anomega(2, 2, 1);
  CHECK(a.dim() == 16);
  AxiomReport ax = check_axioms(a);
  CHECK(ax.all_pass);
}

TEST_CASE("algebra spec parsing") {
  CHECK(parse_algebra_spec("group:5").dim() == 5);
  CHECK(parse_algebra_spec("hn:3:2").dim() == 6);
  CHECK(parse_algebra_spec("anomega:1:2:0").dim() == 8);
  CHECK_THROWS_AS(parse_algebra_spec("nope:1"), parse_error);
  CHECK_THROWS_AS(parse_algebra_spec("group"), parse_error);
  CHECK_THROWS_AS(parse_algebra_spec("group:0"), parse_error);
  CHECK_THROWS_AS(parse_algebra_spec("group:x"), parse_error);
  CHECK(parse_algebra_spec("hn:2").dim() == 4);  // c defaults to 0
}
