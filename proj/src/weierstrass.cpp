#include "wpoint/weierstrass.hpp"

#include <algorithm>
#include <string>

#include "wpoint/errors.hpp"
#include "wpoint/exactlinalg.hpp"
#include "wpoint/wronskian.hpp"

namespace wpoint {

std::vector<QSeries> CuspBasis::series() const {
  std::vector<QSeries> out;
  out.reserve(forms.size());
  for (const auto& f : forms) out.push_back(f.series);
  return out;
}

void CuspBasis::validate() const {
  const std::size_t p = prec();
  for (const auto& f : forms) {
    if (f.weight != 2) throw ValidationError("basis form " + f.label + " has weight " + std::to_string(f.weight));
    if (f.series.prec() != p) {
      throw ValidationError("basis form " + f.label + " has precision " + std::to_string(f.series.prec()) +
                            ", expected " + std::to_string(p));
    }
  }
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::NotWeierstrass:
      return "not Weierstrass";
    case Verdict::Weierstrass:
      return "Weierstrass";
    case Verdict::SpanNotGuaranteed:
      return "span not guaranteed";
  }
  return "?";
}

namespace {

void require_weight(int m) {
  if (m < 2 || m % 2 != 0) throw DomainError("weight must be even and >= 2, got " + std::to_string(m));
}

void exponents_rec(std::size_t g, unsigned remaining, std::vector<unsigned>& cur,
                   std::vector<std::vector<unsigned>>& out) {
  const std::size_t i = cur.size();
  if (i + 1 == g) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (unsigned a = remaining + 1; a-- > 0;) {
    cur.push_back(a);
    exponents_rec(g, remaining - a, cur, out);
    cur.pop_back();
  }
}

// Products built along the exponent order, reusing the longest already computed
// prefix product f_0^{a_0} ... f_i^{a_i}.
std::vector<Monomial> build_monomials(const std::vector<QSeries>& fs, unsigned degree) {
  const auto exps = monomial_exponents(fs.size(), degree);
  const std::size_t prec = fs.front().prec();
  std::vector<Monomial> out;
  out.reserve(exps.size());

  std::vector<std::vector<QSeries>> powers(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    powers[i].push_back(QSeries::one(prec));
    for (unsigned e = 1; e <= degree; ++e) powers[i].push_back(powers[i].back() * fs[i]);
  }

  std::vector<unsigned> prev_exps;
  std::vector<QSeries> prefix;  // prefix[i] = prod_{j <= i} f_j^{a_j}
  for (const auto& e : exps) {
    std::size_t same = 0;
    while (same < prev_exps.size() && prev_exps[same] == e[same]) ++same;
    prefix.resize(same);
    for (std::size_t i = same; i < e.size(); ++i) {
      const QSeries& p = powers[i][e[i]];
      if (i == 0) {
        prefix.push_back(p);
      } else if (e[i] == 0) {
        prefix.push_back(prefix.back());
      } else {
        prefix.push_back(prefix.back() * p);
      }
    }
    out.push_back({e, prefix.back()});
    prev_exps = e;
  }
  return out;
}

}  // namespace

std::vector<std::vector<unsigned>> monomial_exponents(std::size_t g, unsigned d) {
  std::vector<std::vector<unsigned>> out;
  if (g == 0) return out;
  std::vector<unsigned> cur;
  exponents_rec(g, d, cur, out);
  return out;
}

std::size_t monomial_count(std::size_t g, unsigned d) {
  if (g == 0) return 0;
  // binom(g + d - 1, d) by the multiplicative formula; every partial product is integral.
  Integer c(1);
  for (unsigned i = 1; i <= d; ++i) {
    c *= static_cast<unsigned long>(g - 1 + i);
    c /= i;
  }
  return c.get_ui();
}

std::size_t required_precision(std::size_t g, int m) {
  require_weight(m);
  if (g < 1) throw DomainError("required_precision: genus must be >= 1");
  return static_cast<std::size_t>(m / 2) + static_cast<std::size_t>(m) * (g - 1) + 1;
}

std::vector<Monomial> monomials(const CuspBasis& basis, int m) {
  require_weight(m);
  basis.validate();
  if (basis.genus() == 0) throw DomainError("monomials: empty basis");
  const std::size_t need = required_precision(basis.genus(), m);
  if (basis.prec() < need) {
    throw PrecisionError("monomials: basis precision " + std::to_string(basis.prec()) + " < required " +
                         std::to_string(need) + " for genus " + std::to_string(basis.genus()) + ", m = " +
                         std::to_string(m));
  }
  return build_monomials(basis.series(), static_cast<unsigned>(m / 2));
}

namespace {

struct Reduction {
  std::vector<Monomial> monomials;
  EchelonResult echelon;
  std::size_t window = 0;
};

Reduction reduce_monomials(const CuspBasis& basis, int m, bool track) {
  require_weight(m);
  basis.validate();
  if (basis.genus() == 0) throw DomainError("empty basis");
  const std::size_t window = required_precision(basis.genus(), m);
  if (basis.prec() < window) {
    throw PrecisionError("basis precision " + std::to_string(basis.prec()) + " < required " + std::to_string(window) +
                         " for genus " + std::to_string(basis.genus()) + ", m = " + std::to_string(m));
  }
  std::vector<QSeries> truncated;
  for (const auto& f : basis.forms) truncated.push_back(f.series.truncated(window));

  Reduction r;
  r.window = window;
  r.monomials = build_monomials(truncated, static_cast<unsigned>(m / 2));
  RatMatrix mat(r.monomials.size(), window);
  for (std::size_t i = 0; i < r.monomials.size(); ++i) {
    for (std::size_t n = 0; n < window; ++n) mat(i, n) = r.monomials[i].series[n];
  }
  r.echelon = echelon_reduce(mat, {.track_transform = track});
  return r;
}

}  // namespace

WeierstrassReport weierstrass_test(const CuspBasis& basis, int m, const SurfaceSignature& sig,
                                   const WeierstrassOptions& options) {
  require_weight(m);
  sig.validate();
  if (sig.genus < 2) {
    throw DomainError("weierstrass_test: genus " + std::to_string(sig.genus) +
                      " has no m/2-Weierstrass points; genus >= 2 required");
  }
  if (static_cast<std::size_t>(sig.genus) != basis.genus()) {
    throw ValidationError("weierstrass_test: signature genus " + std::to_string(sig.genus) + " but basis has " +
                          std::to_string(basis.genus()) + " forms");
  }

  Reduction red = reduce_monomials(basis, m, true);
  const auto& ech = red.echelon;

  WeierstrassReport rep;
  rep.m = m;
  rep.expected_dim = dim_s_h(sig, m);
  rep.monomial_count = red.monomials.size();
  rep.rank = ech.rank;
  rep.gap_sequence = ech.pivots;
  rep.criterion_bound = m / 2 + m * (sig.genus - 1);
  for (const auto& mono : red.monomials) rep.exponents.push_back(mono.exponents);
  for (std::size_t i = 0; i < ech.rank; ++i) {
    rep.rows.emplace_back(ech.echelon.row_vector(i));
    rep.combinations.push_back(ech.transform.row_vector(i));
  }

  const auto t = static_cast<std::size_t>(rep.expected_dim);
  if (rep.rank > t) {
    throw ValidationError("weierstrass_test: monomial rank " + std::to_string(rep.rank) + " exceeds dim S^H_" +
                          std::to_string(m) + " = " + std::to_string(t) + "; basis and signature are inconsistent");
  }
  if (rep.rank < t) {
    const bool hyperelliptic =
        !options.status_known || options.hyperelliptic_status == HyperellipticStatus::Hyperelliptic;
    if (!hyperelliptic) {
      throw RankDeficit("weierstrass_test: monomial rank " + std::to_string(rep.rank) + " < dim S^H_" +
                        std::to_string(m) + " = " + std::to_string(t) +
                        " on a non-hyperelliptic curve; the basis data is wrong");
    }
    if (options.require_full_span) {
      throw HyperellipticUnsupported("weierstrass_test: monomials span only " + std::to_string(rep.rank) + " of " +
                                     std::to_string(t) + " dimensions of S^H_" + std::to_string(m) +
                                     " on a hyperelliptic curve");
    }
    rep.verdict = Verdict::SpanNotGuaranteed;
    return rep;
  }

  bool consecutive = true;
  for (std::size_t u = 0; u < t; ++u) {
    if (rep.gap_sequence[u] != u + static_cast<std::size_t>(m / 2)) consecutive = false;
  }
  rep.is_weierstrass = !consecutive;
  rep.verdict = consecutive ? Verdict::NotWeierstrass : Verdict::Weierstrass;
  return rep;
}

std::vector<QSeries> monomial_span_basis(const CuspBasis& basis, int m) {
  const Reduction red = reduce_monomials(basis, m, false);
  std::vector<QSeries> rows;
  for (std::size_t i = 0; i < red.echelon.rank; ++i) rows.emplace_back(red.echelon.echelon.row_vector(i));
  return rows;
}

std::size_t subspace_dimension(const CuspBasis& basis, int m) { return reduce_monomials(basis, m, false).echelon.rank; }

WronskianCriterion wronskian_criterion(std::span<const QSeries> basis_of_sh, int m) {
  require_weight(m);
  const std::size_t t = basis_of_sh.size();
  if (t < 2) {
    throw DomainError("wronskian_criterion: need dim S^H_m >= 2 (genus >= 2), got " + std::to_string(t));
  }
  const auto w = q_wronskian(basis_of_sh, m);
  const auto order = w.series.valuation();
  if (!order) {
    throw PrecisionError("wronskian_criterion: Wronskian vanishes modulo q^" + std::to_string(w.series.prec()));
  }
  const auto tl = static_cast<long>(t);
  WronskianCriterion out;
  out.order = *order;
  out.bound = 1 + tl * (m - 1 + tl) / 2;
  out.is_weierstrass = static_cast<long>(*order) >= out.bound;
  return out;
}

}  // namespace wpoint
