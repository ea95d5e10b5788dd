#include <doctest.h>

#include <map>
#include <random>
#include <stdexcept>

#include "coxtoda/laurent.hpp"

using coxtoda::MultiLaurent;
using coxtoda::Rational;

namespace {

MultiLaurent random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<int> expo(-3, 3);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  const std::vector<std::string> pool = {"x", "y", "z"};
  MultiLaurent f;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    std::vector<std::pair<std::string, int>> factors;
    for (const auto& v : pool) {
      int e = expo(rng);
      if (e != 0) factors.push_back({v, e});
    }
    f += MultiLaurent::monomial(c, factors);
  }
  return f;
}

}  // namespace

TEST_CASE("ring operations and canonical form") {
  auto x = MultiLaurent::variable("x");
  auto y = MultiLaurent::variable("y");

  // (x + y)(x - y) = x^2 - y^2, oracle computed by hand.
  auto prod = (x + y) * (x - y);
  auto expected = x * x - y * y;
  CHECK(prod == expected);

  // Cancellation prunes unused variables: structural equality is
  // mathematical equality.
  auto f = x * y + MultiLaurent(1);
  auto g = f - x * y;
  CHECK(g == MultiLaurent(1));
  CHECK(g.variables().empty());
  CHECK(g.is_constant());
  CHECK(g.constant_value() == 1);

  CHECK((f - f).is_zero());
  CHECK(MultiLaurent().is_zero());
  CHECK((MultiLaurent() * f).is_zero());
}

TEST_CASE("monomial inverse and powers") {
  auto m = MultiLaurent::monomial(Rational(3, 2), {{"x", 2}, {"y", -1}});
  auto inv = m.inverse();
  CHECK(m * inv == MultiLaurent(1));
  CHECK(m.pow(0) == MultiLaurent(1));
  CHECK(m.pow(3) == m * m * m);
  CHECK(m.pow(-2) == inv * inv);

  auto x = MultiLaurent::variable("x");
  CHECK_THROWS_AS((x + MultiLaurent(1)).inverse(), std::domain_error);
  CHECK_THROWS_AS(MultiLaurent().inverse(), std::domain_error);
}

TEST_CASE("partial derivative") {
  // d/dx (x^2 y + x^-1) = 2 x y - x^-2, oracle by hand.
  auto x = MultiLaurent::variable("x");
  auto y = MultiLaurent::variable("y");
  auto f = x * x * y + x.inverse();
  auto expected = Rational(2) * (x * y) - MultiLaurent::variable("x", -2);
  CHECK(f.partial("x") == expected);
  CHECK(f.partial("y") == x * x);
  CHECK(f.partial("w").is_zero());
  CHECK(MultiLaurent(5).partial("x").is_zero());
}

TEST_CASE("coefficient extraction in one variable") {
  // f = 3 z^2 x + z^2 - 7 z^-1 y + 4.
  auto f = MultiLaurent::monomial(Rational(3), {{"z", 2}, {"x", 1}}) +
           MultiLaurent::variable("z", 2) +
           MultiLaurent::monomial(Rational(-7), {{"z", -1}, {"y", 1}}) +
           MultiLaurent(4);
  auto c2 = Rational(3) * MultiLaurent::variable("x") + MultiLaurent(1);
  CHECK(f.coeff_in("z", 2) == c2);
  CHECK(f.coeff_in("z", 0) == MultiLaurent(4));
  CHECK(f.coeff_in("z", -1) ==
        Rational(-7) * MultiLaurent::variable("y"));
  CHECK(f.coeff_in("z", 5).is_zero());
  CHECK(f.max_degree_in("z") == 2);
  CHECK(f.min_degree_in("z") == -1);
  CHECK(!f.uniform_degree_in("z").has_value());
  auto m = MultiLaurent::monomial(Rational(1), {{"z", 2}, {"x", 1}});
  CHECK(m.uniform_degree_in("z") == 2);
  CHECK(f.depends_on("z"));
  CHECK(!f.depends_on("w"));
}

TEST_CASE("evaluation") {
  // f = x^2 / y at (x, y) = (3, 2) -> 9/2.
  auto f = MultiLaurent::variable("x", 2) * MultiLaurent::variable("y", -1);
  std::map<std::string, Rational> pt = {{"x", 3}, {"y", 2}};
  CHECK(f.evaluate(pt) == Rational(9, 2));

  // Zero into a negative power is a domain error.
  pt["y"] = 0;
  CHECK_THROWS_AS(f.evaluate(pt), std::domain_error);

  // Zero into a nonnegative power is fine.
  pt = {{"x", 0}, {"y", 5}};
  CHECK(f.evaluate(pt) == 0);
}

TEST_CASE("string form and parse roundtrip") {
  auto f = MultiLaurent::monomial(Rational(3), {{"T0", 2}, {"S1", -1}}) +
           MultiLaurent::variable("Q");
  CHECK(MultiLaurent::parse(f.str()) == f);
  CHECK(MultiLaurent::parse("0").is_zero());
  CHECK(MultiLaurent::parse("-5/3") == MultiLaurent(Rational(-5, 3)));
  CHECK(MultiLaurent::parse("x^-2*y + 1 - x^-2*y") == MultiLaurent(1));
}

TEST_CASE("parse roundtrip property on random polynomials") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_poly(rng);
    CHECK(MultiLaurent::parse(f.str()) == f);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 25; ++trial) {
    auto f = random_poly(rng);
    auto g = random_poly(rng);
    auto h = random_poly(rng);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    // Leibniz rule for the partial derivative.
    CHECK((f * g).partial("x") ==
          f.partial("x") * g + f * g.partial("x"));
  }
}
