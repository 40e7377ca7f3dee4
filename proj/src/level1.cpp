#include "wpoint/level1.hpp"

#include <string>

#include "wpoint/errors.hpp"
#include "wpoint/exactlinalg.hpp"

namespace wpoint::level1 {

Integer sigma(long n, unsigned k) {
  if (n <= 0) throw DomainError("sigma: n must be positive, got " + std::to_string(n));
  Integer total(0);
  Integer term;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), k);
    total += term;
    const long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(e), k);
      total += term;
    }
  }
  return total;
}

namespace {

Level1Form eisenstein(std::size_t prec, unsigned k, long scale, int weight) {
  std::vector<Rational> c(prec);
  if (prec > 0) c[0] = 1;
  for (std::size_t n = 1; n < prec; ++n) c[n] = Rational(sigma(static_cast<long>(n), k) * scale);
  return {QSeries(std::move(c)), weight};
}

}  // namespace

Level1Form eisenstein_e4(std::size_t prec) { return eisenstein(prec, 3, 240, 4); }

Level1Form eisenstein_e6(std::size_t prec) { return eisenstein(prec, 5, -504, 6); }

Level1Form delta(std::size_t prec) {
  const QSeries e4 = eisenstein_e4(prec).series;
  const QSeries e6 = eisenstein_e6(prec).series;
  QSeries d = pow(e4, 3) - pow(e6, 2);
  d *= Rational(1, 1728);
  return {std::move(d), 12};
}

QSeries delta_product_oracle(std::size_t prec) {
  if (prec == 0) return QSeries::zero(0);
  // prod (1 - q^n) modulo q^(prec-1), then shift by one.
  const std::size_t p = prec - 1;
  std::vector<Integer> eta(p);
  if (p > 0) eta[0] = 1;
  for (std::size_t n = 1; n < p; ++n) {
    for (std::size_t i = p; i-- > n;) eta[i] -= eta[i - n];
  }
  std::vector<Rational> base(p);
  for (std::size_t i = 0; i < p; ++i) base[i] = eta[i];
  const QSeries e24 = pow(QSeries(std::move(base)), 24);
  std::vector<Rational> out(prec);
  for (std::size_t i = 0; i < p; ++i) out[i + 1] = e24[i];
  return QSeries(std::move(out));
}

std::vector<MonomialExponent> m_basis(int m) {
  if (m < 0 || m % 2 != 0 || m == 2) {
    throw DomainError("m_basis: weight must be 0 or an even integer >= 4, got " + std::to_string(m));
  }
  std::vector<MonomialExponent> out;
  for (int alpha = m / 4; alpha >= 0; --alpha) {
    const int rest = m - 4 * alpha;
    if (rest % 6 == 0) out.push_back({static_cast<unsigned>(alpha), static_cast<unsigned>(rest / 6)});
  }
  return out;
}

long dim_m(int m) {
  if (m < 0 || m % 2 != 0) throw DomainError("dim_m: weight must be even and nonnegative, got " + std::to_string(m));
  return m % 12 == 2 ? m / 12 : m / 12 + 1;
}

Level1Form monomial(MonomialExponent e, std::size_t prec) {
  QSeries s = pow(eisenstein_e4(prec).series, e.alpha) * pow(eisenstein_e6(prec).series, e.beta);
  return {std::move(s), e.weight()};
}

std::vector<std::pair<MonomialExponent, Rational>> express_in_monomials(const Level1Form& f) {
  const long d = dim_m(f.weight);
  const std::size_t prec = f.series.prec();
  if (prec < static_cast<std::size_t>(d) + 1) {
    throw PrecisionError("express_in_monomials: need at least " + std::to_string(d + 1) +
                         " coefficients for weight " + std::to_string(f.weight) + ", have " + std::to_string(prec));
  }
  if (d == 0) {
    if (!f.series.vanishes()) throw NotInSpace("express_in_monomials: M_2 is zero but the form is not");
    return {};
  }

  const auto exps = m_basis(f.weight);
  std::vector<QSeries> basis;
  basis.reserve(exps.size());
  for (const auto& e : exps) basis.push_back(monomial(e, prec).series);

  const auto n = static_cast<std::size_t>(d);
  RatMatrix a(n, n);
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t col = 0; col < n; ++col) a(row, col) = basis[col][row];
  }
  const auto coeffs = solve(a, f.series.coeffs().first(n));

  QSeries fit = QSeries::zero(prec);
  for (std::size_t i = 0; i < n; ++i) fit = fit + coeffs[i] * basis[i];
  for (std::size_t k = n; k < prec; ++k) {
    if (fit[k] != f.series[k]) {
      throw NotInSpace("express_in_monomials: residual at q^" + std::to_string(k) + " is nonzero; not a weight " +
                       std::to_string(f.weight) + " level-1 form at precision " + std::to_string(prec));
    }
  }

  std::vector<std::pair<MonomialExponent, Rational>> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(exps[i], coeffs[i]);
  return out;
}

}  // namespace wpoint::level1
