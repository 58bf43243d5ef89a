// Copyright (c) The pdescent authors. All rights reserved.
// Licensed under the Apache 2.0 License.
#include <doctest.h>

#include <random>

#include "pdescent/field.hpp"

using namespace pdescent;

namespace {

GQ q(const char* s) { return parse_gq(s); }

GQ random_gq(std::mt19937_64& rng) {
  auto r = [&] {
    long num = static_cast<long>(rng() % 41) - 20;
    long den = static_cast<long>(rng() % 9) + 1;
    return Rational(num, den);
  };
  // Rational(num, den) is not canonical until the GQ constructor runs.
  return GQ(r(), r());
}

}  // namespace

TEST_CASE("field operations on small examples") {
  CHECK(q("2+1i") * q("2-1i") == GQ(5));
  CHECK(q("1") / q("0+1i") == q("0-1i"));
  CHECK(q("1/2+1/3i") + q("1/2-1/3i") == GQ(1));
  CHECK(q("3/4") - q("3/4") == GQ(0));
  CHECK_THROWS_AS(q("1") / GQ(0), Error);
  try {
    (void)(q("1+1i") / GQ(0));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidOperand);
  }
}

TEST_CASE("conjugation and norm") {
  CHECK(conj(q("2+1i")) == q("2-1i"));
  CHECK(conj(GQ(3)) == GQ(3));
  CHECK(conj(q("0+5/7i")) == q("0-5/7i"));
  CHECK(norm(q("2+1i")) == 5);
  CHECK(norm(q("0+1i")) == 1);
  CHECK(norm(q("1/2+1/2i")) == Rational(1, 2));
  CHECK(norm(GQ(0)) == 0);
}

TEST_CASE("two_squares") {
  CHECK(two_squares(Rational(5)) == q("2+1i"));
  // 13 = N(3+2i), 17 = N(4+1i): (3+2i)/(4+i) = (14+5i)/17.
  CHECK(two_squares(Rational(13, 17)) == q("14/17+5/17i"));
  CHECK(norm(two_squares(Rational(13, 17))) == Rational(13, 17));
  CHECK(norm(two_squares(Rational(2))) == 2);
  CHECK(norm(two_squares(Rational(9, 4))) == Rational(9, 4));
  CHECK(norm(two_squares(Rational(1))) == 1);

  for (Rational bad : {Rational(3), Rational(1, 3), Rational(6), Rational(21, 5), Rational(0), Rational(-5)}) {
    CAPTURE(bad.get_str());
    try {
      (void)two_squares(bad);
      FAIL("expected not-a-norm");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotANorm);
    }
  }
}

TEST_CASE("parse and format") {
  CHECK(parse_gq("2+1i") == GQ(2, 1));
  CHECK(parse_gq("-3/4") == GQ(Rational(-3, 4)));
  CHECK(parse_gq("0-5/7i") == GQ(Rational(0), Rational(-5, 7)));
  CHECK(parse_gq("6/4") == GQ(Rational(3, 2)));
  CHECK(format_gq(GQ(Rational(1, 2), Rational(-1, 3))) == "1/2-1/3i");
  CHECK(format_gq(GQ(0, 5)) == "0+5i");
  CHECK(format_gq(GQ(-7)) == "-7");

  auto position_of = [](const char* text) -> std::optional<std::size_t> {
    try {
      (void)parse_gq(text);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
      return e.position();
    }
    return std::nullopt;
  };
  CHECK(position_of("1+i") == std::optional<std::size_t>(2));
  CHECK(position_of("") == std::optional<std::size_t>(0));
  CHECK(position_of("5i") == std::optional<std::size_t>(1));
  CHECK(position_of("1/0") == std::optional<std::size_t>(2));
  CHECK(position_of("1+2") == std::optional<std::size_t>(3));
  CHECK(position_of("1+2i ") == std::optional<std::size_t>(4));
  CHECK(position_of("--1") == std::optional<std::size_t>(1));
}

TEST_CASE("field properties on random operands") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    GQ x = random_gq(rng), y = random_gq(rng), z = random_gq(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(norm(x * y) == norm(x) * norm(y));
    CHECK(conj(x * y) == conj(x) * conj(y));
    CHECK(conj(conj(x)) == x);
    CHECK(parse_gq(format_gq(x)) == x);
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == GQ(1));
      CHECK((y / x) * x == y);
      Rational mu = norm(x);
      CHECK(norm(two_squares(mu)) == mu);
    }
  }
}
