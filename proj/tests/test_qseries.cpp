#include <doctest.h>

#include <random>

#include "testing/oracles.hpp"
#include "wpoint/errors.hpp"
#include "wpoint/level1.hpp"
#include "wpoint/qseries.hpp"

using namespace wpoint;

namespace {

QSeries s(std::initializer_list<long> c) { return QSeries::from_integers(std::vector<long>(c)); }

}  // namespace

TEST_SUITE("qseries") {
  TEST_CASE("add truncates to the common precision") {
    CHECK(add(s({1, 2, 0}), s({0, 3})) == s({1, 5}));
    const QSeries e4 = level1::eisenstein_e4(20).series;
    CHECK(add(e4, QSeries::zero(20)) == e4);
    CHECK(add(e4, Rational(-1) * e4) == QSeries::zero(20));
  }

  TEST_CASE("mul") {
    CHECK(mul(s({1, 1, 0}), s({1, -1, 0})) == s({1, 0, -1}));
    const QSeries d = level1::delta(10).series;
    const QSeries dd = mul(d, d);
    CHECK(dd.valuation() == 2);
    CHECK(dd[2] == 1);
    const QSeries a = s({3, -1, 4, 1, -5});
    CHECK(mul(a, QSeries::one(5)) == a);
    CHECK(mul(a, s({1, 0, 0})).prec() == 3);
  }

  TEST_CASE("mul on fractional coefficients matches the rational schoolbook product") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> ca(12), cb(12);
      std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
      for (std::size_t i = 0; i < 12; ++i) {
        ca[i] = Rational(num(rng), den(rng));
        cb[i] = Rational(num(rng), den(rng));
        ca[i].canonicalize();
        cb[i].canonicalize();
      }
      const QSeries a(ca), b(cb);
      const QSeries prod = a * b;
      for (std::size_t n = 0; n < 12; ++n) {
        Rational expect;
        for (std::size_t i = 0; i <= n; ++i) expect += ca[i] * cb[n - i];
        CHECK(prod[n] == expect);
      }
    }
  }

  TEST_CASE("q_derive") {
    CHECK(q_derive(s({1, 1, 1})) == s({0, 1, 2}));
    CHECK(q_derive(QSeries::one(6)) == QSeries::zero(6));
    // q_derive(Delta) = q - 48 q^2 + 756 q^3 from Delta = q - 24 q^2 + 252 q^3
    const QSeries dd = q_derive(level1::delta(4).series);
    CHECK(dd == s({0, 1, -48, 756}));
  }

  TEST_CASE("valuation") {
    CHECK(s({0, 0, 1, 0, 0, -4, -4}).valuation() == 2);
    CHECK_FALSE(QSeries::zero(10).valuation().has_value());
    CHECK(level1::delta(5).series.valuation() == 1);
  }

  TEST_CASE("pow") {
    const QSeries a = s({2, 3, 5});
    CHECK(pow(a, 0) == QSeries::one(3));
    CHECK(pow(s({1, 1, 0}), 2) == s({1, 2, 1}));
    const QSeries e4 = level1::eisenstein_e4(10).series;
    const QSeries e6 = level1::eisenstein_e6(10).series;
    const QSeries diff = pow(e4, 3) - pow(e6, 2);
    CHECK(diff.valuation() == 1);
    CHECK(diff[1] == 1728);
  }

  TEST_CASE("exact_div") {
    CHECK(exact_div(s({0, 0, 1, 1}), s({0, 1, 0, 0})) == s({0, 1, 1}));
    const QSeries d = level1::delta(20).series;
    const QSeries q = exact_div(pow(d, 3), d);
    CHECK(q.prec() == 19);
    CHECK(agree(q, pow(d, 2)));
    CHECK_THROWS_AS(exact_div(s({1, 2}), QSeries::zero(2)), DivisionByZeroSeries);
    CHECK_THROWS_AS(exact_div(s({0, 1, 0}), s({0, 0, 1})), ValuationError);
  }

  TEST_CASE("ring laws, derivation, valuation additivity on random series") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
      const QSeries a = testing::random_series(rng, 9);
      const QSeries b = testing::random_series(rng, 11, -5, 5, trial % 3);
      const QSeries c = testing::random_series(rng, 10, -5, 5, trial % 2);
      CHECK(agree((a + b) + c, a + (b + c)));
      CHECK(agree(a * (b + c), a * b + a * c));
      CHECK(a * b == b * a);
      CHECK(agree(q_derive(a * b), q_derive(a) * b + a * q_derive(b)));
      const auto va = a.valuation();
      const auto vb = b.valuation();
      if (va && vb && *va + *vb < 9) CHECK((a * b).valuation() == *va + *vb);
    }
  }

  TEST_CASE("exact_div round trip") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
      QSeries b = testing::random_series(rng, 12, -4, 4, trial % 4);
      if (b.vanishes()) continue;
      const QSeries a = b * testing::random_series(rng, 12);
      const QSeries c = exact_div(a, b);
      CHECK(c.prec() == 12 - *b.valuation());
      CHECK(agree(mul(b.truncated(c.prec()), c), a));
    }
  }

  TEST_CASE("rational parsing") {
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("17") == Rational(17));
    CHECK_FALSE(parse_rational("1/0"));
    CHECK_FALSE(parse_rational("1/-2"));
    CHECK_FALSE(parse_rational("abc"));
    CHECK_FALSE(parse_rational(""));
    CHECK_FALSE(parse_rational("1/"));
  }

  TEST_CASE("to_string") {
    CHECK(s({0, 1, -2, 0, 3}).to_string() == "q - 2*q^2 + 3*q^4 + O(q^5)");
    CHECK(QSeries::zero(3).to_string() == "0 + O(q^3)");
  }
}
