#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "wpoint/qseries.hpp"

namespace wpoint::level1 {

/// A modular form for SL_2(Z) given by its q-expansion.
struct Level1Form {
  QSeries series;
  int weight = 0;
};

/// E4^alpha * E6^beta, of weight 4 alpha + 6 beta.
struct MonomialExponent {
  unsigned alpha = 0;
  unsigned beta = 0;

  int weight() const { return static_cast<int>(4 * alpha + 6 * beta); }
  friend bool operator==(const MonomialExponent&, const MonomialExponent&) = default;
};

/// Sum of d^k over the positive divisors d of n. Throws DomainError for n <= 0.
Integer sigma(long n, unsigned k);

Level1Form eisenstein_e4(std::size_t prec);
Level1Form eisenstein_e6(std::size_t prec);
/// (E4^3 - E6^2) / 1728.
Level1Form delta(std::size_t prec);
/// q * prod_{n>=1} (1 - q^n)^24, an expansion of Delta independent of the Eisenstein series.
QSeries delta_product_oracle(std::size_t prec);

/// All (alpha, beta) with 4 alpha + 6 beta = m, by decreasing alpha.
/// m = 0 yields the constant monomial. Throws DomainError for odd, negative or m = 2.
std::vector<MonomialExponent> m_basis(int m);

/// dim M_m(SL_2(Z)) for even m >= 0.
long dim_m(int m);

/// E4^alpha E6^beta to the given precision.
Level1Form monomial(MonomialExponent e, std::size_t prec);

/// Coefficients of f in the m_basis monomials, solved on the first dim_m
/// coefficients and checked on every remaining stored coefficient.
/// Throws NotInSpace when the check fails, PrecisionError when f.prec <= dim_m.
std::vector<std::pair<MonomialExponent, Rational>> express_in_monomials(const Level1Form& f);

}  // namespace wpoint::level1
