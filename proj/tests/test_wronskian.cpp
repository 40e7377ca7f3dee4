#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "testing/fixtures.hpp"
#include "testing/oracles.hpp"
#include "wpoint/errors.hpp"
#include "wpoint/level1.hpp"
#include "wpoint/weierstrass.hpp"
#include "wpoint/wronskian.hpp"

using namespace wpoint;

namespace {

QSeries poly(std::initializer_list<long> c, std::size_t prec) {
  std::vector<Rational> v(prec);
  std::size_t i = 0;
  for (long x : c) v.at(i++) = x;
  return QSeries(std::move(v));
}

std::vector<QSeries> level1_monomials(int t, std::size_t prec) {
  const QSeries a = pow(level1::eisenstein_e4(prec).series, 3);
  const QSeries b = pow(level1::eisenstein_e6(prec).series, 2);
  std::vector<QSeries> out;
  for (int u = t; u >= 0; --u) out.push_back(pow(a, u) * pow(b, t - u));
  return out;
}

}  // namespace

TEST_SUITE("wronskian") {
  TEST_CASE("weights") {
    CHECK(wronskian_weight(2, 12) == 26);
    CHECK(wronskian_weight(1, 10) == 10);
    CHECK(wronskian_weight(4, 36) == 156);
    CHECK(scalar_exponent(4) == 6);
    CHECK(scalar_exponent(1) == 0);
  }

  TEST_CASE("single input") {
    const QSeries f = poly({0, 1, -24, 252}, 6);
    const auto w = q_wronskian(std::vector{f}, 12);
    CHECK(w.series == f);
    CHECK(w.output_weight == 12);
    CHECK(w.scalar_exponent == 0);
  }

  TEST_CASE("small closed forms") {
    CHECK(agree(q_wronskian(std::vector{poly({1}, 8), poly({0, 1}, 8)}, 0).series, poly({0, 1}, 8)));
    // W_q(q, q^2) = q*2q^2 - q^2*q = q^3
    const auto w = q_wronskian(std::vector{poly({0, 1}, 8), poly({0, 0, 1}, 8)}, 0);
    CHECK(w.series.prec() >= 8);
    CHECK(agree(w.series, poly({0, 0, 0, 1}, 8)));
  }

  TEST_CASE("level-1 pair") {
    const std::size_t prec = 40;
    const auto e4 = level1::eisenstein_e4(prec).series;
    const auto e6 = level1::eisenstein_e6(prec).series;
    const auto d = level1::delta(prec).series;
    const auto w = q_wronskian(std::vector{pow(e4, 3), pow(e6, 2)}, 12);
    CHECK(w.output_weight == 26);
    CHECK(w.scalar_exponent == 1);
    CHECK(w.series.truncated(prec) == Rational(-1728) * d * pow(e4, 2) * e6);
  }

  TEST_CASE("level-1 t=2 lambda") {
    const std::size_t prec = 30;
    const auto fs = level1_monomials(2, prec);
    const auto w = q_wronskian(fs, 24);
    const auto e4 = level1::eisenstein_e4(prec).series;
    const auto e6 = level1::eisenstein_e6(prec).series;
    const auto d = level1::delta(prec).series;
    const Rational lambda = Rational(-2) * Rational(1728) * 1728 * 1728;
    CHECK(w.series.truncated(prec) == lambda * pow(d, 3) * pow(e4, 6) * pow(e6, 3));
  }

  TEST_CASE("agrees with the Leibniz oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t k = 1 + trial % 4;
      const std::size_t prec = 6 + trial % 5;
      std::vector<QSeries> fs;
      for (std::size_t j = 0; j < k; ++j) fs.push_back(testing::random_series(rng, prec, -3, 3, trial % 3));
      const QSeries expected = testing::leibniz_wronskian(fs);
      const auto w = q_wronskian(fs, 2);
      CHECK(w.series.prec() >= prec);
      CHECK(agree(w.series, expected));
    }
  }

  TEST_CASE("alternating and multilinear") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t k = 2 + trial % 3;
      const std::size_t prec = 8;
      std::vector<QSeries> fs;
      for (std::size_t j = 0; j < k; ++j) fs.push_back(testing::random_series(rng, prec));
      const QSeries w = q_wronskian(fs, 4).series.truncated(prec);

      auto swapped = fs;
      std::swap(swapped[0], swapped[k - 1]);
      CHECK(q_wronskian(swapped, 4).series.truncated(prec) == -w);

      const QSeries h = testing::random_series(rng, prec);
      auto left = fs, right = fs;
      right[0] = h;
      left[0] = Rational(3) * fs[0] + Rational(-2, 5) * h;
      const QSeries wr = q_wronskian(right, 4).series.truncated(prec);
      CHECK(q_wronskian(left, 4).series.truncated(prec) == Rational(3) * w + Rational(-2, 5) * wr);
    }
  }

  TEST_CASE("dependent inputs give zero") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      const QSeries a = testing::random_series(rng, 9);
      const QSeries b = testing::random_series(rng, 9);
      const auto w = q_wronskian(std::vector{a, b, Rational(2) * a - b}, 6);
      CHECK(w.series.vanishes());
      CHECK(w.series.prec() == 9);
    }
  }

  TEST_CASE("scaling the cusp valuation") {
    // multiplying every input by q^j multiplies W_q by q^{jk}
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 15; ++trial) {
      const std::size_t k = 2 + trial % 3;
      std::vector<QSeries> fs, shifted;
      for (std::size_t j = 0; j < k; ++j) {
        fs.push_back(testing::random_series(rng, 10));
        shifted.push_back(QSeries::monomial(2, 1, 12) * fs.back());
      }
      const QSeries w = q_wronskian(fs, 2).series;
      const QSeries ws = q_wronskian(shifted, 2).series;
      if (w.vanishes()) continue;
      CHECK(*ws.valuation() == *w.valuation() + 2 * k);
      CHECK(agree(ws, QSeries::monomial(2 * k, 1, 30) * w));
    }
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(q_wronskian(std::vector<QSeries>{}, 2), EmptyInput);
    CHECK_THROWS_AS(q_wronskian(std::vector{poly({1}, 2), poly({0, 1}, 2), poly({0, 0}, 2)}, 2), PrecisionError);
  }

  TEST_CASE("span_valuations") {
    const auto a = span_valuations(std::vector{poly({1}, 5), poly({0, 1}, 5), poly({0, 0, 1}, 5)});
    CHECK(a.valuations == std::vector<std::size_t>{0, 1, 2});
    CHECK(a.total == 3);
    const auto b = span_valuations(std::vector{poly({0, 1, 1}, 5), poly({0, 1}, 5)});
    CHECK(b.valuations == std::vector<std::size_t>{1, 2});
    CHECK(b.total == 3);
    try {
      span_valuations(std::vector{poly({0, 1}, 5), poly({0, 2}, 5)});
      FAIL("expected DependentInput");
    } catch (const DependentInput& e) {
      const std::string msg = e.what();
      CHECK(msg.find("dependent") != std::string::npos);
      CHECK(msg.find("precision") != std::string::npos);
    }
  }

  TEST_CASE("span_valuations of X_0(34) degree-2 monomials") {
    const auto basis = testing::load_level(34);
    std::vector<QSeries> fs;
    for (const auto& mono : monomials(basis, 4)) fs.push_back(mono.series);
    const auto sv = span_valuations(fs.size() > 6 ? std::span<const QSeries>(fs).first(6) : fs);
    CHECK(sv.valuations == std::vector<std::size_t>{2, 3, 4, 5, 6, 7});
    CHECK(sv.total == 27);
  }

  TEST_CASE("cusp order identity") {
    const auto c1 = cusp_order_identity_check(std::vector{poly({1}, 6), poly({0, 1}, 6)}, 0);
    CHECK(c1.lhs == 1);
    CHECK(c1.rhs == 1);
    CHECK(c1.holds);
    const auto c2 = cusp_order_identity_check(level1_monomials(1, 20), 12);
    CHECK(c2.lhs == 1);
    CHECK(c2.holds);
    const auto c3 = cusp_order_identity_check(level1_monomials(2, 20), 24);
    CHECK(c3.lhs == 3);
    CHECK(c3.rhs == 3);
    CHECK(c3.holds);
    CHECK_THROWS_AS(cusp_order_identity_check(std::vector{poly({0, 1}, 4), poly({0, 3}, 4)}, 2), PrecisionError);
  }

  TEST_CASE("cusp order identity on random span bases") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t k = 1 + trial % 4;
      std::vector<QSeries> fs;
      for (std::size_t j = 0; j < k; ++j) fs.push_back(testing::random_series(rng, 12, -4, 4, trial % 2));
      if (rank(RatMatrix::from_rows([&] {
            std::vector<std::vector<Rational>> r;
            for (const auto& f : fs) r.emplace_back(f.coeffs().begin(), f.coeffs().end());
            return r;
          }())) < k)
        continue;
      CHECK(cusp_order_identity_check(fs, 2).holds);
    }
  }

  TEST_CASE("elliptic_wronskian_order") {
    CHECK(elliptic_wronskian_order(1, 1, 1) == 1);
    CHECK(elliptic_wronskian_order(3, 2, 2) == 1);
    CHECK(elliptic_wronskian_order(9, 3, 3) == 2);
    CHECK(elliptic_wronskian_order(4, 2, 3) == 1);
    CHECK_THROWS_AS(elliptic_wronskian_order(1, 1, 0), DomainError);
  }

  TEST_CASE("Laplace and Bareiss determinants agree") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 1 + trial % 5;
      SeriesMatrix m(n);
      for (auto& row : m) {
        for (std::size_t j = 0; j < n; ++j) {
          QSeries s = testing::random_series(rng, 7);
          // unit constant terms make the unit-pivot elimination applicable
          s = s + QSeries::monomial(0, s[0] == 0 ? 1 : 0, 7);
          row.push_back(s);
        }
      }
      CHECK(series_det_laplace(m) == series_det_bareiss(m));
    }
    const SeriesMatrix nilpotent = {{poly({0, 1}, 4), poly({0, 2}, 4)}, {poly({0, 3}, 4), poly({0, 0, 1}, 4)}};
    CHECK_THROWS_AS(series_det_bareiss(nilpotent), PrecisionError);
    CHECK(series_det_laplace(nilpotent) == poly({0, 0, -6, 1}, 4));
  }
}
