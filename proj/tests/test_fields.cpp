#include <catch2/catch_amalgamated.hpp>

#include "lrtwist/fields.hpp"

using namespace lrtwist;

TEST_CASE("rational arithmetic is exact", "[fields]") {
  Rational a(1, 2), b(1, 3);
  CHECK((a + b).str() == "5/6");
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/6");
  CHECK((a / b).str() == "3/2");
  CHECK((-a).str() == "-1/2");
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(0).is_zero());
}

TEST_CASE("rationals stay in lowest terms with positive denominator", "[fields]") {
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(-4, -6).str() == "2/3");
}

TEST_CASE("rational inverse and division by zero", "[fields]") {
  CHECK(Rational(2, 3).inverse().str() == "3/2");
  CHECK_THROWS_AS(Rational(0).inverse(), field_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), field_error);
  CHECK_THROWS_AS(Rational(1, 0), field_error);
}

TEST_CASE("rational parsing round-trips and rejects junk", "[fields]") {
  for (const char* s : {"0", "-3", "5/6", "-22/7", "123456789123456789123456789/2"}) {
    Rational r = Rational::parse(s);
    CHECK(r.str() == s);
    CHECK(Rational::parse(r.str()) == r);
  }
  CHECK(Rational::parse("4/6").str() == "2/3");
  CHECK(Rational::parse(" +3 ").str() == "3");
  CHECK_THROWS_AS(Rational::parse("1/0"), field_error);
  CHECK_THROWS_AS(Rational::parse("abc"), field_error);
  CHECK_THROWS_AS(Rational::parse(""), field_error);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), field_error);
}

TEST_CASE("prime field arithmetic", "[fields]") {
  GFp f5(5);
  Fp two = f5.from_int(2);
  CHECK(two.inverse().value() == 3);
  CHECK((two * f5.from_int(3)).value() == 1);
  CHECK((f5.from_int(4) + f5.from_int(3)).value() == 2);
  CHECK((-f5.from_int(2)).value() == 3);
  CHECK((f5.from_int(1) - f5.from_int(3)).value() == 3);
  CHECK_THROWS_AS(f5.zero().inverse(), field_error);
  CHECK_THROWS_AS(f5.from_int(1) / f5.zero(), field_error);
}

TEST_CASE("prime field validates the modulus", "[fields]") {
  CHECK_NOTHROW(GFp(2));
  CHECK_NOTHROW(GFp(3));
  CHECK_NOTHROW(GFp(101));
  CHECK_THROWS_AS(GFp(1), field_error);
  CHECK_THROWS_AS(GFp(4), field_error);
  CHECK_THROWS_AS(GFp(91), field_error);  // 7·13
}

TEST_CASE("prime field parsing normalizes residues", "[fields]") {
  GFp f5(5);
  CHECK(f5.parse("7").value() == 2);
  CHECK(f5.parse("-3").value() == 2);
  CHECK(f5.parse("0").value() == 0);
  CHECK(f5.parse(f5.from_int(4).str()) == f5.from_int(4));
  CHECK_THROWS_AS(f5.parse("x"), field_error);
  CHECK_THROWS_AS(f5.parse(""), field_error);
}

TEST_CASE("mixed moduli are rejected", "[fields]") {
  GFp f3(3), f5(5);
  CHECK_THROWS_AS(f3.one() + f5.one(), field_error);
  CHECK(f3 != f5);
  CHECK(GFp(5) == f5);
}

TEST_CASE("field tags parse and dispatch", "[fields]") {
  CHECK(std::holds_alternative<QQ>(parse_field_tag("Q")));
  auto f = parse_field_tag("F5");
  REQUIRE(std::holds_alternative<GFp>(f));
  CHECK(std::get<GFp>(f).p() == 5);
  CHECK_THROWS_AS(parse_field_tag("F4"), field_error);
  CHECK_THROWS_AS(parse_field_tag("R"), field_error);
  CHECK_THROWS_AS(parse_field_tag("F"), field_error);
  std::string name = with_field("F7", [](auto k) { return k.name(); });
  CHECK(name == "F7");
}
