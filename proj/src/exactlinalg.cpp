#include "wpoint/exactlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "wpoint/errors.hpp"

namespace wpoint {

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw ShapeError("RatMatrix: row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                       " entries, expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = rows[r][c];
      m(r, c).canonicalize();
    }
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw ShapeError("RatMatrix product: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                     " times " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  RatMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

namespace {

struct WorkRow {
  std::vector<Integer> values;
  std::vector<Integer> transform;
  std::size_t origin = 0;
  std::size_t lead = 0;  // == values.size() for a zero row
};

std::size_t leading_column(const std::vector<Integer>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) return i;
  }
  return v.size();
}

void divide_exact(std::vector<Integer>& v, const Integer& d) {
  for (auto& x : v) {
    if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  }
}

void reduce_joint_content(WorkRow& row) {
  Integer g = content(row.values);
  if (g == 1) return;
  for (const auto& x : row.transform) {
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    divide_exact(row.values, g);
    divide_exact(row.transform, g);
  }
}

// out = a*x - b*y, elementwise.
void cross_combine(std::vector<Integer>& x, const std::vector<Integer>& y, const Integer& a, const Integer& b) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) x[i] *= a;
    if (y[i] != 0) mpz_submul(x[i].get_mpz_t(), b.get_mpz_t(), y[i].get_mpz_t());
  }
}

}  // namespace

EchelonResult echelon_reduce(const RatMatrix& m, EchelonOptions options) {
  const std::size_t nrows = m.rows();
  const std::size_t ncols = m.cols();
  const bool track = options.track_transform;

  std::vector<WorkRow> rows(nrows);
  for (std::size_t r = 0; r < nrows; ++r) {
    auto src = m.row(r);
    const Integer den = common_denominator(src);
    WorkRow& w = rows[r];
    w.values.resize(ncols);
    for (std::size_t c = 0; c < ncols; ++c) {
      if (src[c] != 0) w.values[c] = src[c].get_num() * (den / src[c].get_den());
    }
    if (track) {
      w.transform.resize(nrows);
      w.transform[r] = den;
    }
    w.origin = r;
    w.lead = leading_column(w.values);
  }

  auto by_leading_zeros = [](const WorkRow& a, const WorkRow& b) {
    return a.lead != b.lead ? a.lead < b.lead : a.origin < b.origin;
  };

  std::vector<std::pair<Integer, Integer>> multipliers(nrows);
  for (;;) {
    std::sort(rows.begin(), rows.end(), by_leading_zeros);

    // Multipliers are fixed from the sorted state before any row is modified.
    std::vector<std::size_t> targets;
    for (std::size_t i = 1; i < nrows; ++i) {
      const std::size_t c = rows[i].lead;
      if (c < ncols && c == rows[i - 1].lead) {
        Integer a = rows[i - 1].values[c];
        Integer b = rows[i].values[c];
        Integer g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
        multipliers[i] = {std::move(a), std::move(b)};
        targets.push_back(i);
      }
    }
    if (targets.empty()) break;

    // Walk backwards so each predecessor is still in its pre-pass state.
    for (auto it = targets.rbegin(); it != targets.rend(); ++it) {
      const std::size_t i = *it;
      const auto& [a, b] = multipliers[i];
      cross_combine(rows[i].values, rows[i - 1].values, a, b);
      if (track) cross_combine(rows[i].transform, rows[i - 1].transform, a, b);
      if (track) {
        reduce_joint_content(rows[i]);
      } else {
        const Integer g = content(rows[i].values);
        if (g > 1) divide_exact(rows[i].values, g);
      }
      rows[i].lead = leading_column(rows[i].values);
    }
  }

  EchelonResult result;
  result.echelon = RatMatrix(nrows, ncols);
  result.transform = RatMatrix(track ? nrows : 0, track ? nrows : 0);
  for (std::size_t r = 0; r < nrows; ++r) {
    WorkRow& w = rows[r];
    const bool nonzero = w.lead < ncols;
    // Canonical scale: content 1 and positive leading entry, taken on the echelon
    // row when nonzero and on the relation (transform row) otherwise.
    const std::vector<Integer>& basis = nonzero ? w.values : w.transform;
    Integer g = content(basis);
    if (g == 0) g = 1;
    const std::size_t lead = leading_column(basis);
    if (lead < basis.size() && basis[lead] < 0) g = -g;
    for (std::size_t c = 0; c < ncols; ++c) {
      if (w.values[c] != 0) result.echelon(r, c) = Rational(w.values[c], g);
      result.echelon(r, c).canonicalize();
    }
    if (track) {
      for (std::size_t c = 0; c < nrows; ++c) {
        if (w.transform[c] != 0) {
          result.transform(r, c) = Rational(w.transform[c], g);
          result.transform(r, c).canonicalize();
        }
      }
    }
    if (nonzero) {
      result.pivots.push_back(w.lead);
      ++result.rank;
    }
  }
  return result;
}

std::size_t rank(const RatMatrix& m) { return echelon_reduce(m, {.track_transform = false}).rank; }

Rational det_bareiss(const RatMatrix& m) {
  if (m.rows() != m.cols()) {
    throw ShapeError("det_bareiss: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);

  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Integer scale(1);
  for (std::size_t r = 0; r < n; ++r) {
    auto src = m.row(r);
    const Integer den = common_denominator(src);
    scale *= den;
    for (std::size_t c = 0; c < n; ++c) {
      if (src[c] != 0) a[r][c] = src[c].get_num() * (den / src[c].get_den());
    }
  }

  int sign = 1;
  Integer prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return Rational(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k];
        mpz_submul(t.get_mpz_t(), a[i][k].get_mpz_t(), a[k][j].get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational det(a[n - 1][n - 1] * sign, scale);
  det.canonicalize();
  return det;
}

std::vector<Rational> solve(const RatMatrix& a, std::span<const Rational> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) {
    throw ShapeError("solve: expected square system with matching right-hand side");
  }
  RatMatrix w(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) w(r, c) = a(r, c);
    w(r, n) = b[r];
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && w(p, k) == 0) ++p;
    if (p == n) throw DomainError("solve: matrix is singular");
    if (p != k) {
      for (std::size_t c = k; c <= n; ++c) std::swap(w(k, c), w(p, c));
    }
    const Rational inv = 1 / w(k, k);
    for (std::size_t c = k; c <= n; ++c) w(k, c) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || w(r, k) == 0) continue;
      const Rational f = w(r, k);
      for (std::size_t c = k; c <= n; ++c) w(r, c) -= f * w(k, c);
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = w(r, n);
  return x;
}

}  // namespace wpoint
