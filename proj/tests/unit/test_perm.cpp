#include <doctest.h>

#include <stdexcept>

#include <random>

#include "schinzel/perm.hpp"

using namespace schinzel;

namespace {

Perm random_perm(int degree, std::mt19937_64& rng) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i + 1;
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img));
}

}  // namespace

TEST_CASE("parse_perm basic cycles") {
  CHECK(Perm::parse("(1 2 3 4)", 4).images() == std::vector<int>{2, 3, 4, 1});
  CHECK(Perm::parse("(1 4)(2 3)", 4).images() == std::vector<int>{4, 3, 2, 1});
  CHECK(Perm::parse("", 3).images() == std::vector<int>{1, 2, 3});
  CHECK(Perm::parse("()", 3).is_identity());
}

TEST_CASE("parse_perm rejects malformed input") {
  CHECK_THROWS_AS(Perm::parse("(1 2)(2 3)", 3), std::invalid_argument);
  CHECK_THROWS_AS(Perm::parse("(1 5)", 4), std::invalid_argument);
  CHECK_THROWS_AS(Perm::parse("(1 2", 4), std::invalid_argument);
  CHECK_THROWS_AS(Perm::parse("1 2)", 4), std::invalid_argument);
}

TEST_CASE("compose applies left argument first") {
  Perm a = Perm::parse("(1 2)", 3);
  Perm b = Perm::parse("(2 3)", 3);
  CHECK(compose(a, b) == Perm::parse("(1 3 2)", 3));
  CHECK(compose(a, a.inverse()).is_identity());
}

TEST_CASE("operator* composes right-to-left") {
  Perm a = Perm::parse("(1 2)", 3);
  Perm b = Perm::parse("(2 3)", 3);
  // (a*b)(x) = a(b(x))
  CHECK((a * b)(3) == a(b(3)));
  CHECK(a * b == compose(b, a));
}

TEST_CASE("cycle_decomposition with fixed points") {
  CHECK(Perm::parse("(1 4)(2 3)", 4).cycles() ==
        std::vector<std::vector<int>>{{1, 4}, {2, 3}});
  CHECK(Perm(3).cycles() == std::vector<std::vector<int>>{{1}, {2}, {3}});
  CHECK(Perm::parse("(1 4 3 2)", 4).cycles() ==
        std::vector<std::vector<int>>{{1, 4, 3, 2}});
}

TEST_CASE("index") {
  CHECK(Perm::parse("(1 2 3 4)", 4).index() == 3);
  CHECK(Perm::parse("(1 4)(2 3)", 4).index() == 2);
  CHECK(Perm(7).index() == 0);
  // index = 0 only for the identity
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Perm p = random_perm(6, rng);
    CHECK((p.index() == 0) == p.is_identity());
    CHECK(p.index() <= 5);
  }
}

TEST_CASE("index is invariant under inverse and conjugation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Perm p = random_perm(7, rng);
    Perm c = random_perm(7, rng);
    CHECK(p.index() == p.inverse().index());
    CHECK(conjugate(p, c).index() == p.index());
    CHECK(conjugate(p, c) == c * p * c.inverse());
  }
}

TEST_CASE("associativity and neutral element") {
  std::mt19937_64 rng(13);
  Perm id(6);
  for (int trial = 0; trial < 100; ++trial) {
    Perm a = random_perm(6, rng), b = random_perm(6, rng), c = random_perm(6, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * id == a);
    CHECK(id * a == a);
  }
}

TEST_CASE("parse and cycle_string are mutually inverse on canonical output") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    Perm p = random_perm(8, rng);
    CHECK(Perm::parse(p.cycle_string(), 8) == p);
  }
  CHECK(Perm(5).cycle_string() == "()");
  CHECK(Perm::parse("(2 6)(3 5)", 8).cycle_string() == "(2 6)(3 5)");
}

TEST_CASE("order and n-cycle detection") {
  CHECK(Perm::parse("(1 2 3 4 5 6)", 6).order() == 6);
  CHECK(Perm::parse("(1 2)(3 4 5)", 6).order() == 6);
  CHECK(Perm::parse("(1 2 3 4 5 6)", 6).is_n_cycle());
  CHECK_FALSE(Perm::parse("(1 2)", 6).is_n_cycle());
  CHECK(Perm::parse("(1 2)(3 4 5)", 6).cycle_type() == std::vector<int>{3, 2, 1});
}
