#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wpoint/qseries.hpp"

namespace wpoint {

/// The q-Wronskian det[(q d/dq)^i f_j] of k forms of weight m.
///
/// The holomorphic Wronskian equals (2 pi i / h)^{scalar_exponent} times this
/// series; the scalar is recorded by its exponent only.
struct WronskianOutput {
  QSeries series;
  std::size_t input_count = 0;
  long input_weight = 0;
  long output_weight = 0;
  long scalar_exponent = 0;
};

/// The k distinct valuations attained in the span of k independent series.
struct SpanValuations {
  std::vector<std::size_t> valuations;
  std::size_t total = 0;
};

struct CuspOrderCheck {
  std::size_t lhs = 0;  // valuation of the q-Wronskian
  std::size_t rhs = 0;  // sum of span valuations
  bool holds = false;
};

using SeriesMatrix = std::vector<std::vector<QSeries>>;

/// k(m + k - 1).
long wronskian_weight(long k, long m);
/// k(k - 1)/2.
long scalar_exponent(long k);

/// Computes W_q(fs) exactly.
///
/// All inputs are truncated to their common precision P. Inputs dependent modulo
/// q^P give the zero series O(q^P). Otherwise the inputs are first brought to
/// echelon form g = T f with valuations v_1 < ... < v_k, and
///   W_q(f) = q^{sum v} det[(q d/dq + v_j)^i (g_j / q^{v_j})] / det T,
/// whose determinant is a unit known modulo q^{P - v_k}. The returned precision
/// sum(v) + P - v_k is never below P.
/// Throws EmptyInput for no inputs and PrecisionError when P < k.
WronskianOutput q_wronskian(std::span<const QSeries> fs, long m);

/// Pivot columns of the echelon form of the coefficient matrix.
/// Throws DependentInput when the rank is below the number of inputs.
SpanValuations span_valuations(std::span<const QSeries> fs);

/// valuation(W_q(fs)) against the sum of span valuations.
/// Throws PrecisionError when the Wronskian vanishes to its full stored precision.
CuspOrderCheck cusp_order_identity_check(std::span<const QSeries> fs, long m);

/// (span_total - k(k-1)/2) / e: the order of the Wronskian at an elliptic point of
/// order e, given the summed local valuations of the span there.
Rational elliptic_wronskian_order(long span_total, long k, long e);

/// Determinant of a square matrix of series by Laplace expansion along rows,
/// memoized over column subsets. Precision is the minimum entry precision.
QSeries series_det_laplace(const SeriesMatrix& m);

/// Fraction-free elimination with row pivoting on entries whose constant term is
/// nonzero, so every exact division is by a unit. Throws PrecisionError when no
/// unit pivot exists in some column.
QSeries series_det_bareiss(const SeriesMatrix& m);

}  // namespace wpoint
