#pragma once

#include <filesystem>
#include <string_view>
#include <tuple>
#include <vector>

#include "wpoint/weierstrass.hpp"

namespace wpoint::testing {

std::filesystem::path fixture_path(std::string_view name);

/// Bundled basis of S_2(Gamma_0(n)).
CuspBasis load_level(long n);

/// One displayed echelon row of a worked example: a combination of
/// degree-2 monomials f_i f_j and its printed q-expansion.
struct GoldenRow {
  std::vector<std::tuple<Rational, std::size_t, std::size_t>> combination;
  std::vector<std::pair<std::size_t, Rational>> terms;

  QSeries expansion(std::size_t prec) const;
  QSeries evaluate(const CuspBasis& basis, std::size_t prec) const;
};

std::vector<GoldenRow> load_golden(std::string_view name);

/// True when a == c * b for some nonzero rational c, on the common precision.
bool proportional(const QSeries& a, const QSeries& b);

}  // namespace wpoint::testing
