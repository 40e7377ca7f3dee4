#include "wpoint/wronskian.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "wpoint/errors.hpp"
#include "wpoint/exactlinalg.hpp"

namespace wpoint {

long wronskian_weight(long k, long m) { return k * (m + k - 1); }

long scalar_exponent(long k) { return k * (k - 1) / 2; }

namespace {

constexpr std::size_t kLaplaceMaxSize = 8;

std::size_t common_precision(std::span<const QSeries> fs) {
  std::size_t p = fs.front().prec();
  for (const auto& f : fs) p = std::min(p, f.prec());
  return p;
}

RatMatrix coefficient_matrix(std::span<const QSeries> fs, std::size_t prec) {
  RatMatrix m(fs.size(), prec);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t n = 0; n < prec; ++n) m(i, n) = fs[i][n];
  }
  return m;
}

std::size_t matrix_precision(const SeriesMatrix& m) {
  std::size_t p = m.front().front().prec();
  for (const auto& row : m) {
    for (const auto& e : row) p = std::min(p, e.prec());
  }
  return p;
}

void require_square(const SeriesMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw ShapeError("series determinant: matrix is not square");
  }
}

}  // namespace

QSeries series_det_laplace(const SeriesMatrix& m) {
  require_square(m);
  const std::size_t k = m.size();
  if (k == 0) return QSeries::one(0);
  if (k > 20) throw ShapeError("series_det_laplace: size " + std::to_string(k) + " too large for subset memoization");
  const std::size_t prec = matrix_precision(m);

  // minors[mask] = det of the last popcount(mask) rows restricted to the columns in mask.
  std::vector<QSeries> minors(std::size_t{1} << k);
  minors[0] = QSeries::one(prec);
  for (std::size_t size = 1; size <= k; ++size) {
    const std::size_t row = k - size;
    for (std::size_t mask = 1; mask < minors.size(); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
      QSeries acc = QSeries::zero(prec);
      std::size_t position = 0;
      for (std::size_t col = 0; col < k; ++col) {
        if ((mask >> col & 1U) == 0) continue;
        const QSeries& sub = minors[mask & ~(std::size_t{1} << col)];
        if (!m[row][col].vanishes() && !sub.vanishes()) {
          QSeries term = m[row][col].truncated(prec) * sub;
          acc = position % 2 == 0 ? acc + term : acc - term;
        }
        ++position;
      }
      minors[mask] = std::move(acc);
    }
  }
  return minors.back();
}

QSeries series_det_bareiss(const SeriesMatrix& input) {
  require_square(input);
  const std::size_t k = input.size();
  if (k == 0) return QSeries::one(0);
  const std::size_t prec = matrix_precision(input);

  SeriesMatrix a(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& e : input[i]) a[i].push_back(e.truncated(prec));
  }

  bool negate = false;
  QSeries prev = QSeries::one(prec);
  for (std::size_t s = 0; s + 1 < k; ++s) {
    std::size_t p = s;
    while (p < k && (prec == 0 || a[p][s][0] == 0)) ++p;
    if (p == k) {
      throw PrecisionError("series_det_bareiss: no pivot with nonzero constant term in column " + std::to_string(s));
    }
    if (p != s) {
      std::swap(a[p], a[s]);
      negate = !negate;
    }
    for (std::size_t i = s + 1; i < k; ++i) {
      for (std::size_t j = s + 1; j < k; ++j) {
        a[i][j] = exact_div(a[s][s] * a[i][j] - a[i][s] * a[s][j], prev);
      }
    }
    prev = a[s][s];
  }
  QSeries det = a[k - 1][k - 1];
  return negate ? -det : det;
}

WronskianOutput q_wronskian(std::span<const QSeries> fs, long m) {
  if (fs.empty()) throw EmptyInput("q_wronskian: no input series");
  const std::size_t k = fs.size();
  const std::size_t prec = common_precision(fs);
  if (prec < k) {
    throw PrecisionError("q_wronskian: common precision " + std::to_string(prec) + " is below the number of inputs " +
                         std::to_string(k));
  }

  WronskianOutput out;
  out.input_count = k;
  out.input_weight = m;
  out.output_weight = wronskian_weight(static_cast<long>(k), m);
  out.scalar_exponent = scalar_exponent(static_cast<long>(k));

  const EchelonResult ech = echelon_reduce(coefficient_matrix(fs, prec));
  if (ech.rank < k) {
    out.series = QSeries::zero(prec);
    return out;
  }

  const auto& vals = ech.pivots;
  const std::size_t tail = prec - vals.back();
  std::size_t shift = 0;
  for (auto v : vals) shift += v;

  // Column j, row i: (q d/dq)^i g_j divided by q^{v_j}, i.e. coefficient n is
  // (n + v_j)^i g_j[n + v_j].
  SeriesMatrix normalized(k, std::vector<QSeries>(k));
  Integer power;
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Rational> c(tail);
      for (std::size_t n = 0; n < tail; ++n) {
        const Rational& g = ech.echelon(j, n + vals[j]);
        if (g == 0) continue;
        mpz_ui_pow_ui(power.get_mpz_t(), n + vals[j], i);
        c[n] = g * power;
      }
      normalized[i][j] = QSeries(std::move(c));
    }
  }
  const QSeries det = k <= kLaplaceMaxSize ? series_det_laplace(normalized) : series_det_bareiss(normalized);
  const Rational scale = 1 / det_bareiss(ech.transform);

  std::vector<Rational> w(shift + tail);
  for (std::size_t n = 0; n < tail; ++n) {
    if (det[n] != 0) w[shift + n] = det[n] * scale;
  }
  out.series = QSeries(std::move(w));
  return out;
}

SpanValuations span_valuations(std::span<const QSeries> fs) {
  if (fs.empty()) throw EmptyInput("span_valuations: no input series");
  const std::size_t prec = common_precision(fs);
  const auto ech = echelon_reduce(coefficient_matrix(fs, prec), {.track_transform = false});
  if (ech.rank < fs.size()) {
    throw DependentInput("span_valuations: rank " + std::to_string(ech.rank) + " < " + std::to_string(fs.size()) +
                         " at precision " + std::to_string(prec) +
                         "; the inputs are linearly dependent or the precision is insufficient");
  }
  SpanValuations out;
  out.valuations = ech.pivots;
  for (auto v : out.valuations) out.total += v;
  return out;
}

CuspOrderCheck cusp_order_identity_check(std::span<const QSeries> fs, long m) {
  const auto w = q_wronskian(fs, m);
  const auto v = w.series.valuation();
  if (!v) {
    throw PrecisionError("cusp_order_identity_check: Wronskian vanishes modulo q^" + std::to_string(w.series.prec()) +
                         "; inputs dependent or precision insufficient");
  }
  const auto span = span_valuations(fs);
  return {*v, span.total, *v == span.total};
}

Rational elliptic_wronskian_order(long span_total, long k, long e) {
  if (e < 1) throw DomainError("elliptic_wronskian_order: elliptic order must be >= 1, got " + std::to_string(e));
  if (k < 1) throw DomainError("elliptic_wronskian_order: need at least one form");
  Rational r(span_total - scalar_exponent(k), e);
  r.canonicalize();
  return r;
}

}  // namespace wpoint
