#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "ks7/exactq.hpp"

using namespace ks7;

TEST_CASE("rat normalizes to reduced form with positive denominator") {
  CHECK(rat(4, 8).str() == "1/2");
  CHECK(rat(3, -6).str() == "-1/2");
  CHECK(rat(0, 7).num() == 0);
  CHECK(rat(0, 7).den() == 1);
  CHECK(rat(-10, -4) == rat(5, 2));
  CHECK_THROWS_AS(rat(1, 0), ks7::domain_error);
}

TEST_CASE("rational arithmetic") {
  CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
  CHECK(rat(1, 2) - rat(1, 3) == rat(1, 6));
  CHECK(rat(2, 3) * rat(9, 4) == rat(3, 2));
  CHECK(rat(2, 3) / rat(4, 9) == rat(3, 2));
  CHECK(-rat(1, 5) == rat(-1, 5));
  CHECK_THROWS_AS(rat(1, 2) / Rational(0), ks7::domain_error);
  CHECK(rat(-7, 2).floor() == -4);
  CHECK(rat(7, 2).floor() == 3);
  CHECK(rat(-6, 3).floor() == -2);
  CHECK(rat(1, 3) < rat(1, 2));
  CHECK(rat(-1, 2) < rat(-1, 3));
}

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("4/8") == rat(1, 2));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("5/1").str() == "5");
  CHECK_THROWS_AS(Rational::parse("1/"), parse_error);
  CHECK_THROWS_AS(Rational::parse("a/2"), parse_error);
  CHECK_THROWS_AS(Rational::parse("1/0"), ks7::domain_error);
}

TEST_CASE("big values stay exact") {
  const Integer big = Integer(1) << 200;
  const Rational r(big + 1, big);
  CHECK(r - Rational(1) == Rational(Integer(1), big));
  CHECK(qz(r) == qz(Rational(Integer(1), big)));
}

TEST_CASE("qz reduces into [0,1)") {
  CHECK(qz(rat(3, 2)).str() == "1/2");
  CHECK(qz(rat(-11, 672)).str() == "661/672");
  CHECK(rat(661, 672) + rat(11, 672) == Rational(1));
  CHECK(qz(Rational(5)).is_zero());
  CHECK(qz(rat(-1, 2)) == qz(rat(1, 2)));
  CHECK_THROWS_AS(QmodZ::parse("3/2"), parse_error);
  CHECK_THROWS_AS(QmodZ::parse("-1/2"), parse_error);
  CHECK(QmodZ::parse("1/6").rep() == rat(1, 6));
}

TEST_CASE("Q/Z group operations") {
  const QmodZ half = qz(rat(1, 2));
  CHECK(qz_add(half, half).is_zero());
  CHECK(qz_scale(qz(rat(1, 28)), 28).is_zero());
  CHECK(qz_eq(qz(rat(3, 2)), qz(rat(-1, 2))));
  CHECK(qz_sub(qz(rat(1, 3)), qz(rat(1, 2))) == qz(rat(5, 6)));
  CHECK(qz(rat(3, 28)).order() == 28);
  CHECK(qz_scale(qz(rat(1, 3)), -1) == qz(rat(2, 3)));
}

TEST_CASE("divides ignores the sign of the modulus") {
  CHECK(divides(-6, 12));
  CHECK_FALSE(divides(6, 4));
  CHECK(divides(0, 0));
  CHECK_FALSE(divides(0, 3));
  CHECK(divides(7, 0));
  CHECK(divides(-168, -336));
  CHECK(mod_floor(-1, 6) == 5);
  CHECK(mod_floor(-1, -6) == 5);
}

TEST_CASE("Q/Z properties on random rationals") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-100000, 100000);
  std::uniform_int_distribution<std::int64_t> den(1, 5000);
  const auto random_rat = [&] { return rat(num(rng), den(rng)); };
  for (int i = 0; i < 2000; ++i) {
    const Rational a = random_rat(), b = random_rat(), c = random_rat();
    // qz(a) == qz(b) iff a - b is an integer.
    CHECK((qz(a) == qz(b)) == (a - b).is_integer());
    CHECK(qz(a + Rational(num(rng))) == qz(a));
    // Canonical form is idempotent.
    CHECK(Rational(a.num(), a.den()) == a);
    // Abelian group laws.
    const QmodZ x = qz(a), y = qz(b), z = qz(c);
    CHECK(qz_add(qz_add(x, y), z) == qz_add(x, qz_add(y, z)));
    CHECK(qz_add(x, y) == qz_add(y, x));
    CHECK(x.rep() >= Rational(0));
    CHECK(x.rep() < Rational(1));
    // Scaling is repeated addition; the order annihilates.
    const int n = static_cast<int>(rng() % 12);
    QmodZ sum;
    for (int j = 0; j < n; ++j) sum = qz_add(sum, x);
    CHECK(qz_scale(x, n) == sum);
    CHECK(qz_scale(x, x.order()).is_zero());
  }
}
