#include "testing/fixtures.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

#include "wpoint/basis_io.hpp"

namespace wpoint::testing {

std::filesystem::path fixture_path(std::string_view name) {
  return std::filesystem::path(WPOINT_FIXTURE_DIR) / std::string(name);
}

CuspBasis load_level(long n) { return load_basis(fixture_path("g0n" + std::to_string(n) + "_s2.qexp")); }

QSeries GoldenRow::expansion(std::size_t prec) const {
  std::vector<Rational> c(prec);
  for (const auto& [e, v] : terms) {
    if (e < prec) c[e] = v;
  }
  return QSeries(std::move(c));
}

QSeries GoldenRow::evaluate(const CuspBasis& basis, std::size_t prec) const {
  QSeries total = QSeries::zero(prec);
  for (const auto& [c, i, j] : combination) {
    const QSeries prod = basis.forms.at(i).series.truncated(prec) * basis.forms.at(j).series.truncated(prec);
    total = total + c * prod;
  }
  return total;
}

namespace {

Rational rational_or_throw(const std::string& s) {
  auto r = parse_rational(s);
  if (!r) throw std::runtime_error("golden: bad rational " + s);
  return *r;
}

}  // namespace

std::vector<GoldenRow> load_golden(std::string_view name) {
  std::istringstream in(read_text_file(fixture_path(std::string("golden/") + std::string(name))));
  std::vector<GoldenRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    const auto bar = line.find('|');
    if (bar == std::string::npos) throw std::runtime_error("golden: missing '|' in " + line);
    GoldenRow row;
    std::istringstream lhs(line.substr(0, bar));
    std::istringstream rhs(line.substr(bar + 1));
    std::string tok;
    while (lhs >> tok) {
      const auto colon = tok.find(':');
      const auto dot = tok.find('.', colon);
      row.combination.emplace_back(rational_or_throw(tok.substr(0, colon)),
                                   std::stoul(tok.substr(colon + 1, dot - colon - 1)), std::stoul(tok.substr(dot + 1)));
    }
    while (rhs >> tok) {
      const auto colon = tok.find(':');
      row.terms.emplace_back(std::stoul(tok.substr(0, colon)), rational_or_throw(tok.substr(colon + 1)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool proportional(const QSeries& a, const QSeries& b) {
  const std::size_t p = std::min(a.prec(), b.prec());
  const auto va = a.truncated(p).valuation();
  const auto vb = b.truncated(p).valuation();
  if (!va || !vb || *va != *vb) return false;
  const Rational c = a[*va] / b[*vb];
  for (std::size_t n = 0; n < p; ++n) {
    if (a[n] != c * b[n]) return false;
  }
  return true;
}

}  // namespace wpoint::testing
