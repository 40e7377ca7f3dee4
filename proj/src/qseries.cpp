#include "wpoint/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "wpoint/errors.hpp"

namespace wpoint {

namespace {

// Numerators after scaling by the common denominator.
std::vector<Integer> scaled_numerators(std::span<const Rational> coeffs, std::size_t n,
                                       const Integer& den) {
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& c = coeffs[i];
    if (c == 0) continue;
    out[i] = c.get_num() * (den / c.get_den());
  }
  return out;
}

}  // namespace

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
}

QSeries QSeries::zero(std::size_t prec) { return QSeries(std::vector<Rational>(prec)); }

QSeries QSeries::one(std::size_t prec) { return monomial(0, Rational(1), prec); }

QSeries QSeries::monomial(std::size_t exponent, const Rational& c, std::size_t prec) {
  std::vector<Rational> v(prec);
  if (exponent < prec) v[exponent] = c;
  return QSeries(std::move(v));
}

QSeries QSeries::from_integers(std::span<const long> coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return QSeries(std::move(v));
}

std::optional<std::size_t> QSeries::valuation() const {
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (coeffs_[n] != 0) return n;
  }
  return std::nullopt;
}

QSeries QSeries::truncated(std::size_t prec) const {
  if (prec >= coeffs_.size()) return *this;
  return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(prec)));
}

bool QSeries::integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QSeries& QSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  const std::size_t p = std::min(a.prec(), b.prec());
  std::vector<Rational> v(p);
  for (std::size_t i = 0; i < p; ++i) v[i] = a.coeffs_[i] + b.coeffs_[i];
  QSeries r;
  r.coeffs_ = std::move(v);
  return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  const std::size_t p = std::min(a.prec(), b.prec());
  std::vector<Rational> v(p);
  for (std::size_t i = 0; i < p; ++i) v[i] = a.coeffs_[i] - b.coeffs_[i];
  QSeries r;
  r.coeffs_ = std::move(v);
  return r;
}

// Integer convolution of the denominator-cleared operands; one division per output
// coefficient. Identical to the rational schoolbook product term by term.
QSeries operator*(const QSeries& a, const QSeries& b) {
  const std::size_t p = std::min(a.prec(), b.prec());
  const auto va = a.truncated(p).valuation();
  const auto vb = b.truncated(p).valuation();
  if (!va || !vb || *va + *vb >= p) return QSeries::zero(p);

  const Integer da = common_denominator(a.coeffs().first(p));
  const Integer db = common_denominator(b.coeffs().first(p));
  const auto an = scaled_numerators(a.coeffs(), p, da);
  const auto bn = scaled_numerators(b.coeffs(), p, db);

  std::vector<Integer> acc(p);
  for (std::size_t i = *va; i < p; ++i) {
    if (an[i] == 0) continue;
    for (std::size_t j = *vb; i + j < p; ++j) {
      if (bn[j] == 0) continue;
      mpz_addmul(acc[i + j].get_mpz_t(), an[i].get_mpz_t(), bn[j].get_mpz_t());
    }
  }
  const Integer den = da * db;
  std::vector<Rational> v(p);
  for (std::size_t n = 0; n < p; ++n) {
    if (acc[n] != 0) v[n] = Rational(acc[n], den);
  }
  return QSeries(std::move(v));
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    const Rational& c = coeffs_[n];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (n == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'q';
    if (n > 1) os << '^' << n;
  }
  if (first) os << '0';
  os << " + O(q^" << coeffs_.size() << ')';
  return os.str();
}

QSeries add(const QSeries& a, const QSeries& b) { return a + b; }

QSeries mul(const QSeries& a, const QSeries& b) { return a * b; }

QSeries q_derive(const QSeries& a) {
  std::vector<Rational> v(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t n = 0; n < v.size(); ++n) v[n] *= static_cast<unsigned long>(n);
  return QSeries(std::move(v));
}

QSeries pow(const QSeries& a, unsigned long e) {
  QSeries result = QSeries::one(a.prec());
  QSeries base = a;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

QSeries exact_div(const QSeries& a, const QSeries& b) {
  const auto vb = b.valuation();
  if (!vb) {
    throw DivisionByZeroSeries("exact_div: divisor vanishes to its full precision O(q^" +
                               std::to_string(b.prec()) + ")");
  }
  const auto va = a.valuation();
  if (va && *va < *vb) {
    throw ValuationError("exact_div: valuation of divisor (" + std::to_string(*vb) +
                         ") exceeds valuation of dividend (" + std::to_string(*va) + ")");
  }
  const std::size_t common = std::min(a.prec(), b.prec());
  if (common < *vb) {
    throw PrecisionError("exact_div: dividend precision below divisor valuation");
  }
  const std::size_t p = common - *vb;
  const auto num = a.coeffs().subspan(*vb);
  const auto den = b.coeffs().subspan(*vb);
  const Rational inv_lead = 1 / den[0];

  std::vector<Rational> c(p);
  Rational acc;
  for (std::size_t n = 0; n < p; ++n) {
    acc = num[n];
    for (std::size_t j = 1; j <= n; ++j) {
      if (den[j] != 0 && c[n - j] != 0) acc -= den[j] * c[n - j];
    }
    c[n] = acc * inv_lead;
  }
  return QSeries(std::move(c));
}

bool agree(const QSeries& a, const QSeries& b) {
  const std::size_t p = std::min(a.prec(), b.prec());
  for (std::size_t n = 0; n < p; ++n) {
    if (a[n] != b[n]) return false;
  }
  return true;
}

}  // namespace wpoint
