#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wpoint/rational.hpp"

namespace wpoint {

/// Truncated power series sum_{n < prec} a_n q^n with exact rational coefficients.
///
/// The series is known modulo q^prec; coefficients at or beyond prec are unknown,
/// never zero. Every operation computes the precision it can guarantee and stores
/// it with the result. Instances are immutable.
class QSeries {
 public:
  QSeries() = default;
  /// Takes ownership of the coefficients of q^0 .. q^{n-1}; prec = n.
  explicit QSeries(std::vector<Rational> coeffs);

  static QSeries zero(std::size_t prec);
  static QSeries one(std::size_t prec);
  /// c * q^exponent, known modulo q^prec.
  static QSeries monomial(std::size_t exponent, const Rational& c, std::size_t prec);
  static QSeries from_integers(std::span<const long> coeffs);

  std::size_t prec() const noexcept { return coeffs_.size(); }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }

  /// Index of the first nonzero coefficient; nullopt when all stored
  /// coefficients vanish (the true valuation is then >= prec).
  std::optional<std::size_t> valuation() const;
  bool vanishes() const { return !valuation().has_value(); }

  QSeries truncated(std::size_t prec) const;
  /// True when every coefficient is an integer.
  bool integral() const;

  QSeries operator-() const;
  QSeries& operator*=(const Rational& c);

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }

  /// Exact equality: same precision and same coefficients.
  friend bool operator==(const QSeries& a, const QSeries& b) = default;

  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

QSeries add(const QSeries& a, const QSeries& b);
/// Schoolbook Cauchy product; result.prec = min(a.prec, b.prec).
QSeries mul(const QSeries& a, const QSeries& b);
/// The operator q d/dq: a_n -> n a_n.
QSeries q_derive(const QSeries& a);
QSeries pow(const QSeries& a, unsigned long e);
/// c with b*c = a; result.prec = min(a.prec, b.prec) - valuation(b).
QSeries exact_div(const QSeries& a, const QSeries& b);

/// Equality on the common guaranteed range min(a.prec, b.prec).
bool agree(const QSeries& a, const QSeries& b);

}  // namespace wpoint
