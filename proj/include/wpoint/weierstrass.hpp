#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wpoint/qseries.hpp"
#include "wpoint/surface.hpp"

namespace wpoint {

/// A labeled q-expansion at the cusp at infinity.
struct ModularFormRecord {
  std::string label;
  QSeries series;
  int weight = 2;
  std::string level;
  long cusp_width = 1;
};

/// A basis f_0 .. f_{g-1} of S_2(Gamma) given by q-expansions of equal precision.
struct CuspBasis {
  std::string level_label;
  std::vector<ModularFormRecord> forms;

  std::size_t genus() const noexcept { return forms.size(); }
  std::size_t prec() const noexcept { return forms.empty() ? 0 : forms.front().series.prec(); }
  std::vector<QSeries> series() const;
  /// Throws ValidationError unless every form has weight 2 and the common precision.
  void validate() const;
};

struct Monomial {
  std::vector<unsigned> exponents;  // alpha_0 .. alpha_{g-1}
  QSeries series;
};

enum class Verdict { NotWeierstrass, Weierstrass, SpanNotGuaranteed };

std::string_view to_string(Verdict v);

struct WeierstrassReport {
  int m = 0;
  long expected_dim = 0;  // t = dim S^H_m
  std::size_t monomial_count = 0;
  std::size_t rank = 0;
  std::vector<std::size_t> gap_sequence;
  Verdict verdict = Verdict::SpanNotGuaranteed;
  /// Empty when the monomials are not known to span S^H_m.
  std::optional<bool> is_weierstrass;
  long criterion_bound = 0;  // m/2 + m(g-1)
  std::vector<std::vector<unsigned>> exponents;
  /// Nonzero echelon rows, known to the window precision.
  std::vector<QSeries> rows;
  /// combinations[i][j]: coefficient of monomial j in rows[i].
  std::vector<std::vector<Rational>> combinations;
};

struct WeierstrassOptions {
  HyperellipticStatus hyperelliptic_status = HyperellipticStatus::NotHyperelliptic;
  /// Whether the status above is known; an unknown status is treated like
  /// a hyperelliptic curve (the span may be proper).
  bool status_known = true;
  /// Raise HyperellipticUnsupported instead of flagging a possibly proper span.
  bool require_full_span = false;
};

struct WronskianCriterion {
  std::size_t order = 0;
  long bound = 0;
  bool is_weierstrass = false;
};

/// All exponent vectors of length g summing to d, lexicographically decreasing.
std::vector<std::vector<unsigned>> monomial_exponents(std::size_t g, unsigned d);

/// binom(g + d - 1, d).
std::size_t monomial_count(std::size_t g, unsigned d);

/// m/2 + m(g-1) + 1: the coefficients q^0 .. q^{m/2 + m(g-1)} that decide the gap sequence.
std::size_t required_precision(std::size_t g, int m);

/// Degree-m/2 products of the basis, truncated to the basis precision.
/// Throws PrecisionError below required_precision(g, m).
std::vector<Monomial> monomials(const CuspBasis& basis, int m);

/// Decides whether the cusp at infinity is an m/2-Weierstrass point from the leading
/// exponents of an echelon basis of the degree-m/2 monomials.
WeierstrassReport weierstrass_test(const CuspBasis& basis, int m, const SurfaceSignature& sig,
                                   const WeierstrassOptions& options = {});

/// Nonzero echelon rows of the degree-m/2 monomials, at the window precision
/// required_precision(g, m): a basis of their span with distinct valuations.
std::vector<QSeries> monomial_span_basis(const CuspBasis& basis, int m);

/// dim of the span of the degree-m/2 monomials.
std::size_t subspace_dimension(const CuspBasis& basis, int m);

/// Order of the q-Wronskian of an echelon basis of S^H_m at infinity against
/// 1 + t(m - 1 + t)/2. Requires t >= 2.
WronskianCriterion wronskian_criterion(std::span<const QSeries> basis_of_sh, int m);

}  // namespace wpoint
