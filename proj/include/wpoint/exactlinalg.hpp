#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wpoint/rational.hpp"

namespace wpoint {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  /// Rows must all have the same length; throws ShapeError otherwise.
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return std::span<const Rational>(entries_).subspan(r * cols_, cols_);
  }
  std::vector<Rational> row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
  }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct EchelonResult {
  /// Nonzero rows first with strictly increasing pivots, zero rows last.
  RatMatrix echelon;
  /// transform * input == echelon; rows of zero echelon rows are linear relations.
  RatMatrix transform;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

struct EchelonOptions {
  bool track_transform = true;
};

/// Row echelon form by repeated sorting and integral cancellation.
///
/// Rows are cleared of denominators and sorted by their number of leading zeros
/// (ties by original input row). Every row whose leading column equals that of its
/// predecessor is replaced by a*row - b*pred, with a, b the two leading entries
/// divided by their gcd, all rows of one pass using the pre-pass predecessors.
/// Passes repeat until all leading columns are distinct. A row and its transform
/// row are divided by their joint content after each cancellation; at the end every
/// nonzero row is divided by its content and given a positive leading entry.
EchelonResult echelon_reduce(const RatMatrix& m, EchelonOptions options = {});

std::size_t rank(const RatMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination after clearing
/// row denominators. Throws ShapeError for non-square input.
Rational det_bareiss(const RatMatrix& m);

/// Unique solution x of a x = b for square nonsingular a.
/// Throws ShapeError on mismatched shapes and DomainError when a is singular.
std::vector<Rational> solve(const RatMatrix& a, std::span<const Rational> b);

}  // namespace wpoint
