#pragma once

// Test-only reference computations. None of these call into the echelon,
// Wronskian, or determinant code they are used to check.

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "wpoint/exactlinalg.hpp"
#include "wpoint/qseries.hpp"

namespace wpoint::testing {

/// det[(q d/dq)^i f_j] by the Leibniz permutation sum on the raw truncated
/// series, at the common input precision.
QSeries leibniz_wronskian(std::span<const QSeries> fs);

/// Cofactor expansion along the first row.
Rational cofactor_det(const RatMatrix& m);

/// Pivot columns from textbook Gauss-Jordan elimination over the rationals.
std::vector<std::size_t> gauss_jordan_pivots(const RatMatrix& m);

/// Sum of d^k over d = 1..n dividing n, by trial division.
Integer sigma_by_trial(long n, unsigned k);

/// Coefficientwise product of (1 - q^n)^24 expansions by repeated
/// multiplication by (1 - q^n), 24 times each.
QSeries eta24_shifted(std::size_t prec);

QSeries random_series(std::mt19937_64& rng, std::size_t prec, int lo = -5, int hi = 5, std::size_t min_valuation = 0);
RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo = -4, int hi = 4,
                        bool fractions = false);
/// Random invertible n x n rational matrix (unit lower times unit upper, scaled).
RatMatrix random_invertible(std::mt19937_64& rng, std::size_t n);

}  // namespace wpoint::testing
