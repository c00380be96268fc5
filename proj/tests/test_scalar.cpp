#include <random>

#include "doctest.h"
#include "kup/scalar.hpp"

using namespace kup;

namespace {

std::string poly_str(const std::vector<mpz_class>& p) {
  std::string s;
  for (const auto& c : p) {
    if (!s.empty()) s += ",";
    s += c.get_str();
  }
  return s;
}

Scalar random_scalar(std::mt19937_64& rng, unsigned conductor) {
  auto smallint = [&rng] {
    return (long)std::uniform_int_distribution<int>(-5, 5)(rng);
  };
  if (conductor == 0) {
    long den = 0;
    while (den == 0) den = smallint();
    return Scalar(smallint(), den);
  }
  size_t deg = cyclotomic_polynomial(conductor).size() - 1;
  std::vector<mpq_class> c(deg);
  for (auto& q : c) q = mpq_class(smallint(), 3);
  return Scalar::cyclotomic(conductor, std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(poly_str(cyclotomic_polynomial(1)) == "-1,1");
  CHECK(poly_str(cyclotomic_polynomial(2)) == "1,1");
  CHECK(poly_str(cyclotomic_polynomial(4)) == "1,0,1");
  CHECK(poly_str(cyclotomic_polynomial(6)) == "1,-1,1");
  CHECK(poly_str(cyclotomic_polynomial(12)) == "1,0,-1,0,1");
}

TEST_CASE("rational arithmetic") {
  CHECK(Scalar(1, 3) + Scalar(1, 6) == Scalar(1, 2));
  CHECK(scalar_arith(Scalar(1, 3), Scalar(1, 6), ScalarOp::add) ==
        Scalar(1, 2));
  CHECK(Scalar(2) * Scalar(3, 4) == Scalar(3, 2));
  CHECK(Scalar(5).inverse() == Scalar(1, 5));
  CHECK(Scalar(-2).pow(3) == Scalar(-8));
  CHECK(Scalar(7).pow(0) == Scalar(1));
  CHECK(Scalar(2).pow(-2) == Scalar(1, 4));
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), scalar_error);
}

TEST_CASE("roots of unity reduce correctly") {
  Scalar z4 = Scalar::root_of_unity(4);
  CHECK(z4 * z4 == Scalar(-1).promoted(4));
  Scalar z6 = Scalar::root_of_unity(6);
  CHECK(z6.pow(3) == Scalar(-1).promoted(6));
  for (unsigned r = 1; r <= 12; ++r) {
    Scalar z = Scalar::root_of_unity(r);
    CHECK(z.pow(r).is_one());
    for (unsigned k = 1; k < r; ++k) CHECK_FALSE(z.pow(k).is_one());
  }
}

TEST_CASE("mixed conductors are rejected, rationals promote") {
  Scalar z4 = Scalar::root_of_unity(4);
  Scalar z3 = Scalar::root_of_unity(3);
  CHECK_THROWS_AS(z4 + z3, scalar_error);
  CHECK(z4 + Scalar(1) == Scalar(1) + z4);
  CHECK((z4 * Scalar(0)).is_zero());
}

TEST_CASE("field axioms on randomized triples") {
  std::mt19937_64 rng(7);
  for (unsigned conductor : {0u, 4u, 5u, 6u, 12u}) {
    for (int trial = 0; trial < 40; ++trial) {
      Scalar a = random_scalar(rng, conductor);
      Scalar b = random_scalar(rng, conductor);
      Scalar c = random_scalar(rng, conductor);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a - a == Scalar(0).promoted(conductor));
      if (!a.is_zero()) {
        CHECK((a * a.inverse()).is_one());
        CHECK(a / a == a * a.inverse());
      }
    }
  }
}

TEST_CASE("textual round trip is bit exact") {
  std::mt19937_64 rng(11);
  for (unsigned conductor : {0u, 3u, 8u, 12u}) {
    for (int trial = 0; trial < 30; ++trial) {
      Scalar a = random_scalar(rng, conductor);
      CHECK(Scalar::parse(a.str()) == a);
      CHECK(Scalar::parse(a.str()).str() == a.str());
    }
  }
  CHECK(Scalar::parse("-3/7") == Scalar(-3, 7));
  CHECK(Scalar::parse("[0,1]@4") == Scalar::root_of_unity(4));
  CHECK_THROWS_AS(Scalar::parse("zeta"), parse_error);
  CHECK_THROWS_AS(Scalar::parse("1/0"), parse_error);
}

TEST_CASE("total order is consistent") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    Scalar a = random_scalar(rng, 4);
    Scalar b = random_scalar(rng, 4);
    CHECK((a == b) == (!(a < b) && !(b < a)));
  }
}
