// Exact Laurent polynomial arithmetic: canonical rationals, the registry,
// ring identities, substitution, exponent ranges and serialization.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "icebox/laurent.hpp"

using namespace icebox;

TEST_CASE("rationals parse and print canonically") {
  CHECK(rat_from_string("3/4") == Rat(3, 4));
  CHECK(rat_from_string("-6/4") == Rat(-3, 2));
  CHECK(rat_to_string(rat_from_string("-6/4")) == "-3/2");
  CHECK(rat_from_string("7") == 7);
  CHECK(rat_to_string(Rat(0)) == "0");
  CHECK(rat_from_string("0/5") == 0);
  CHECK_THROWS_AS((void)rat_from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS((void)rat_from_string(""), std::invalid_argument);
}

TEST_CASE("the registry hands out stable indices") {
  IndetRegistry reg;
  CHECK(reg.add("x") == 0);
  CHECK(reg.add("y") == 1);
  CHECK(reg.add("x") == 0); // re-adding is a lookup
  CHECK(reg.size() == 2);
  CHECK(reg.index_of("y") == 1);
  CHECK(reg.index_of("z") == -1);
  CHECK(reg.require("x") == 0);
  CHECK_THROWS_AS((void)reg.require("z"), std::invalid_argument);
  CHECK(reg.name(1) == "y");
}

TEST_CASE("construction and classification") {
  IndetRegistry reg;
  int x = reg.add("x");
  int y = reg.add("y");

  LaurentPoly zero(&reg);
  CHECK(zero.is_zero());
  CHECK(zero.is_constant());
  CHECK(zero.constant_value() == 0);
  CHECK(zero.num_terms() == 0);

  LaurentPoly five = LaurentPoly::constant(&reg, 5);
  CHECK(five.is_constant());
  CHECK(five.is_monomial());
  CHECK(five.constant_value() == 5);

  LaurentPoly vx = LaurentPoly::var(&reg, x);
  CHECK(!vx.is_constant());
  CHECK(vx.is_monomial());
  CHECK_THROWS_AS((void)vx.constant_value(), std::domain_error);

  LaurentPoly mono = LaurentPoly::monomial(&reg, Rat(2, 3), {{x, 2}, {y, -1}});
  CHECK(mono.is_monomial());
  CHECK(mono.max_exponent(x) == 2);
  CHECK(mono.min_exponent(y) == -1);
  CHECK_THROWS_AS((void)LaurentPoly::monomial(&reg, 1, {{7, 1}}), std::invalid_argument);

  // adding a canceling term never leaves a zero coefficient behind
  LaurentPoly p = vx;
  p.add_term({1}, Rat(-1));
  CHECK(p.is_zero());
}

TEST_CASE("ring identities hold exactly") {
  IndetRegistry reg;
  int x = reg.add("x");
  int y = reg.add("y");
  LaurentPoly vx = LaurentPoly::var(&reg, x);
  LaurentPoly vy = LaurentPoly::var(&reg, y);
  LaurentPoly one = LaurentPoly::constant(&reg, 1);

  LaurentPoly a = vx + vy.scaled(Rat(1, 2));
  LaurentPoly b = vx * vy - one;
  LaurentPoly c = vy.pow(-2) + vx;

  CHECK((a + b) * c == a * c + b * c);
  CHECK(a - a == LaurentPoly(&reg));
  CHECK(a * b == b * a);
  CHECK((a * b) * c == a * (b * c));
  CHECK(-a == a.scaled(Rat(-1)));
  CHECK(a.pow(0) == one);
  CHECK(a.pow(3) == a * a * a);
  CHECK((vx * vx - vy * vy) == (vx - vy) * (vx + vy));

  LaurentPoly m = LaurentPoly::monomial(&reg, Rat(3), {{x, 2}, {y, -1}});
  CHECK(m * m.inverse() == one);
  CHECK(m.pow(-2) == m.inverse() * m.inverse());
  CHECK_THROWS_AS((void)a.inverse(), std::domain_error);
  CHECK_THROWS_AS((void)b.pow(-1), std::domain_error);

  IndetRegistry other;
  other.add("x");
  LaurentPoly foreign = LaurentPoly::var(&other, 0);
  CHECK_THROWS_AS((void)(vx + foreign), std::invalid_argument);
}

TEST_CASE("registration order does not leak into values") {
  IndetRegistry reg;
  int x = reg.add("x");
  LaurentPoly p = LaurentPoly::var(&reg, x, 3);
  int y = reg.add("y"); // registered after p was built
  LaurentPoly q = LaurentPoly::var(&reg, x, 3) + LaurentPoly::var(&reg, y) -
                  LaurentPoly::var(&reg, y);
  CHECK(p == q);
  CHECK(p.max_exponent(y) == 0);
  CHECK(p.min_exponent(y) == 0);
}

TEST_CASE("substitution is simultaneous and checks invertibility") {
  IndetRegistry reg;
  int x = reg.add("x");
  int y = reg.add("y");
  LaurentPoly vx = LaurentPoly::var(&reg, x);
  LaurentPoly vy = LaurentPoly::var(&reg, y);

  // swap x and y in one step
  LaurentPoly p = vx.pow(2) + vy.scaled(Rat(5));
  LaurentPoly swapped = p.substitute({{x, vy}, {y, vx}});
  CHECK(swapped == vy.pow(2) + vx.scaled(Rat(5)));

  // numeric specialization
  LaurentPoly q = vx * vy + vx;
  CHECK(q.substitute({{x, LaurentPoly::constant(&reg, 2)}}) ==
        vy.scaled(Rat(2)) + LaurentPoly::constant(&reg, 2));

  // a negatively occurring variable needs an invertible image
  LaurentPoly neg = vx.pow(-1) * vy;
  CHECK(neg.substitute({{x, vy.pow(2)}}) == vy.pow(-1));
  CHECK_THROWS_AS((void)neg.substitute({{x, vy + vx}}), std::domain_error);
  CHECK(neg.substitute({{y, vx}}) == LaurentPoly::constant(&reg, 1));

  CHECK_THROWS_AS((void)p.substitute({{9, vx}}), std::invalid_argument);

  LaurentPoly named = lp_substitute(p, {{"x", vy}});
  CHECK(named == vy.pow(2) + vy.scaled(Rat(5)));
  CHECK_THROWS_AS((void)lp_substitute(p, {{"nope", vy}}), std::invalid_argument);
}

TEST_CASE("exponent ranges scan all terms") {
  IndetRegistry reg;
  int x = reg.add("x");
  int y = reg.add("y");
  LaurentPoly p = LaurentPoly::var(&reg, x, 3) + LaurentPoly::var(&reg, x, -2) +
                  LaurentPoly::var(&reg, y);
  CHECK(p.max_exponent(x) == 3);
  CHECK(p.min_exponent(x) == -2);
  CHECK(p.max_exponent(y) == 1);
  CHECK(p.min_exponent(y) == 0); // the x-terms carry y^0
}

TEST_CASE("text and json forms are deterministic and round trip") {
  IndetRegistry reg;
  int x = reg.add("x");
  int y = reg.add("y");
  LaurentPoly p = LaurentPoly::var(&reg, x, 2) * LaurentPoly::var(&reg, y, -1) +
                  LaurentPoly::var(&reg, y).scaled(Rat(-1, 3)) +
                  LaurentPoly::constant(&reg, 4);
  CHECK(p.to_string() == LaurentPoly(p).to_string());
  CHECK(LaurentPoly::from_json(&reg, p.to_json()) == p);
  CHECK(LaurentPoly(&reg).to_string() == "0");
  CHECK(LaurentPoly::from_json(&reg, LaurentPoly(&reg).to_json()) == LaurentPoly(&reg));

  // another registry with the same names in a different order
  IndetRegistry other;
  other.add("y");
  other.add("x");
  LaurentPoly q = LaurentPoly::from_json(&other, p.to_json());
  CHECK(q.to_json()["terms"] != p.to_json()["terms"]); // exponents permuted
  CHECK(LaurentPoly::from_json(&reg, q.to_json()) == p); // but values agree

  nlohmann::json bad = p.to_json();
  bad["terms"][0]["exp"] = {1};
  CHECK_THROWS_AS((void)LaurentPoly::from_json(&reg, bad), std::invalid_argument);

  CHECK(lp_eq(lp_add(p, p), p.scaled(Rat(2))));
  CHECK(lp_eq(lp_mul(p, LaurentPoly::constant(&reg, 1)), p));
}
