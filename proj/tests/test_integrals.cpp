#include "doctest.h"
#include "kup/integrals.hpp"

using namespace kup;

namespace {

const std::vector<std::string>& good_specs() {
  // Every example whose auto good pair exists (central grouplike).
  static const std::vector<std::string> specs = {
      "group:1", "group:2", "group:3", "group:4",      "group:5",
      "hn:2:0",  "hn:2:1",  "hn:3:-1", "anomega:2:2:0"};
  return specs;
}

HopfAlgebraData checked(const std::string& spec) {
  HopfAlgebraData h = parse_algebra_spec(spec);
  REQUIRE(check_axioms(h).all_pass);
  return h;
}

}  // namespace

TEST_CASE("integral data satisfies the defining equations") {
  for (const auto& spec : good_specs()) {
    CAPTURE(spec);
    HopfAlgebraData h = checked(spec);
    IntegralData d = build_integral_data(h);
    GradedMorphism idA = GradedMorphism::identity(h.A);
    GradedMorphism idI = GradedMorphism::identity(d.I);

    // Lambda is a left integral, lambda a right cointegral, lambda Lambda = 1.
    CHECK(h.mu * tensor(idA, d.Lambda) == d.Lambda * tensor(h.eps, idI));
    CHECK(tensor(d.lambda, idA) * h.delta == tensor(idI, h.eta) * d.lambda);
    CHECK(d.lambda * d.Lambda == idI);

    // S Lambda is a right integral, lambda S a left cointegral.
    GradedMorphism SL = h.antipode * d.Lambda;
    GradedMorphism lS = d.lambda * h.antipode;
    CHECK(h.mu * tensor(SL, idA) == SL * tensor(idI, h.eps));
    CHECK(tensor(idA, lS) * h.delta == tensor(h.eta, idI) * lS);

    // g is grouplike, alpha an algebra morphism, with the stated orders.
    GradedMorphism id1 = GradedMorphism::identity(h.unit_object());
    CHECK(h.delta * d.g == tensor(d.g, d.g));
    CHECK(h.eps * d.g == id1);
    CHECK(d.alpha * h.mu == tensor(d.alpha, d.alpha));
    CHECK(d.alpha * h.eta == id1);
    CHECK(convolution_power_grouplike(h, d.g, d.m) == h.eta);
    CHECK(convolution_power_algebra_morphism(h, d.alpha, d.n) == h.eps);
    for (unsigned k = 1; k < d.m; ++k)
      CHECK(convolution_power_grouplike(h, d.g, k) != h.eta);
    for (unsigned k = 1; k < d.n; ++k)
      CHECK(convolution_power_algebra_morphism(h, d.alpha, k) != h.eps);
  }
}

TEST_CASE("group algebras are unimodular and counimodular") {
  for (unsigned n = 1; n <= 5; ++n) {
    HopfAlgebraData h = build_group_algebra(n);
    check_axioms(h);
    IntegralData d = build_integral_data(h);
    CHECK(d.g == h.eta);
    CHECK(d.alpha == h.eps);
    CHECK(d.m == 1);
    CHECK(d.n == 1);
    // Lambda is the sum over the group, up to the fixed normalization.
    GradedMorphism L = d.Lambda;
    Scalar c = L.entry(0, 0);
    CHECK_FALSE(c.is_zero());
    for (size_t i = 0; i < n; ++i) CHECK(L.entry(i, 0) == c);
  }
}

TEST_CASE("integral solution spaces are one-dimensional") {
  for (const auto& spec : good_specs()) {
    CAPTURE(spec);
    HopfAlgebraData h = checked(spec);
    for (Side s : {Side::left, Side::right})
      for (Kind k : {Kind::integral, Kind::cointegral}) {
        auto spaces = solve_integrals(h, s, k);
        REQUIRE(spaces.size() == 1);
        CHECK(spaces[0].basis.size() == 1);
      }
  }
}

TEST_CASE("lemma suite passes with centrality") {
  for (const auto& spec : good_specs()) {
    CAPTURE(spec);
    HopfAlgebraData h = checked(spec);
    IntegralData d = build_integral_data(h);
    LemmaReport rep = lemma_suite(h, d);
    for (const auto& it : rep.items) {
      CAPTURE(it.name);
      CHECK(it.pass);
    }
    CHECK(rep.all_pass);
    CHECK(rep.g_central);
    CHECK(rep.alpha_central);
    auto cent = check_centrality(h, d);
    CHECK(cent.first);
    CHECK(cent.second);
  }
}

TEST_CASE("non-central grouplike: refusal and matching lemma suite") {
  HopfAlgebraData h = checked("anomega:2:2:1");
  IntegralData d = build_integral_data(h);
  auto cent = check_centrality(h, d);
  CHECK_FALSE(cent.first);
  CHECK_FALSE(cent.second);
  CHECK_THROWS_AS(build_good_pair(h, d), centrality_error);
  CHECK_THROWS_AS(auto_good_pair(h), centrality_error);
  // The centrality equivalence holds with both sides false.
  LemmaReport rep = lemma_suite(h, d);
  CHECK(rep.all_pass);
  CHECK_FALSE(rep.g_central);
  CHECK_FALSE(rep.alpha_central);
}

TEST_CASE("auto good pairs pass all axioms with nu = sigma_I") {
  for (const auto& spec : good_specs()) {
    CAPTURE(spec);
    HopfAlgebraData h = checked(spec);
    GoodPair gp = auto_good_pair(h);
    GPReport rep = check_good_pair(h, gp.phi, gp.Omega, &gp.f, &gp.h);
    for (const auto& it : rep.items) {
      CAPTURE(it.name);
      CHECK(it.pass);
    }
    CHECK(rep.all_pass);
    CHECK(rep.nu == gp.nu);
    CHECK(gp.nu == gp.sigma_I);
    CHECK(gp.sigma_I == sigma_of(gp.I));
    CHECK(rep.gamma == gp.gamma);
    CHECK(gp.gamma == ((gp.sigma_I.is_one() && gp.nu.is_one()) ? 1u : 2u));

    // Witness search succeeds without supplied witnesses too.
    GPReport searched = check_good_pair(h, gp.phi, gp.Omega);
    CHECK(searched.all_pass);
    CHECK(searched.found_f);
    CHECK(searched.found_h);
  }
}

TEST_CASE("a scaled Omega is rejected") {
  HopfAlgebraData h = checked("hn:2:0");
  GoodPair gp = auto_good_pair(h);
  GPReport rep = check_good_pair(h, gp.phi, gp.Omega.scaled(Scalar(2)));
  CHECK_FALSE(rep.all_pass);
  REQUIRE_FALSE(rep.items.empty());
  CHECK(rep.items[0].name == "phi Omega = id_I");
  CHECK_FALSE(rep.items[0].pass);
}

TEST_CASE("good pair serialization round-trips bit-exactly") {
  for (const std::string& spec : {"group:4", "hn:2:1", "anomega:2:2:0"}) {
    CAPTURE(spec);
    HopfAlgebraData h = checked(spec);
    GoodPair gp = auto_good_pair(h);
    std::string text = serialize_good_pair(h, gp);
    GoodPair back = parse_good_pair(h, text);
    CHECK(back.phi == gp.phi);
    CHECK(back.Omega == gp.Omega);
    CHECK(back.nu == gp.nu);
    CHECK(back.sigma_I == gp.sigma_I);
    CHECK(back.gamma == gp.gamma);
    CHECK(serialize_good_pair(h, back) == text);
  }
}
