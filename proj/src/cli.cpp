#include "wpoint/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "wpoint/basis_io.hpp"
#include "wpoint/errors.hpp"
#include "wpoint/level1.hpp"
#include "wpoint/surface.hpp"
#include "wpoint/weierstrass.hpp"
#include "wpoint/wronskian.hpp"

namespace wpoint {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<long> parse_level(std::string_view s) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

std::string render_signature(const SurfaceSignature& sig) {
  std::ostringstream os;
  os << "g=" << sig.genus << " t=" << sig.cusp_count << " e=[";
  for (std::size_t i = 0; i < sig.elliptic_orders.size(); ++i) os << (i ? "," : "") << sig.elliptic_orders[i];
  os << ']';
  return os.str();
}

void row(std::ostream& out, std::string_view key, const auto& value) {
  out << "  " << std::left << std::setw(18) << key << value << '\n';
}

std::string monomial_name(const std::vector<unsigned>& exps, const CuspBasis& basis) {
  std::string s;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += basis.forms[i].label;
    if (exps[i] > 1) s += '^' + std::to_string(exps[i]);
  }
  return s.empty() ? "1" : s;
}

std::string render_combination(const std::vector<Rational>& coeffs, const std::vector<std::vector<unsigned>>& exps,
                               const CuspBasis& basis) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const Rational& c = coeffs[j];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << mag.get_str() << '*';
    os << monomial_name(exps[j], basis);
  }
  if (first) os << '0';
  return os.str();
}

int run_signature(long n, std::ostream& out) {
  const auto inv = gamma0_invariants(n);
  out << "Gamma_0(" << n << ")\n";
  row(out, "index", inv.index);
  row(out, "genus", inv.signature.genus);
  row(out, "cusps", inv.signature.cusp_count);
  row(out, "nu2", inv.nu2);
  row(out, "nu3", inv.nu3);
  row(out, "signature", render_signature(inv.signature));
  row(out, "hyperelliptic", to_string(inv.hyperelliptic_status));
  return kExitOk;
}

int run_dims(const std::string& target, int m, std::ostream& out) {
  SurfaceSignature sig;
  std::string name;
  if (auto n = parse_level(target)) {
    sig = gamma0_invariants(*n).signature;
    name = "Gamma_0(" + target + ")";
  } else {
    sig = parse_signature(read_text_file(target));
    name = target;
  }
  const std::string ms = std::to_string(m);
  out << name << "  " << render_signature(sig) << "  m = " << m << '\n';
  row(out, "dim S_" + ms, dim_cusp_forms(sig, m));
  row(out, "dim M_" + ms, dim_modular_forms(sig, m));
  row(out, "dim S^H_" + ms, dim_s_h(sig, m));
  row(out, "deg div", deg_div(sig, m).get_str());
  row(out, "deg c'", deg_c_prime(sig, m));
  row(out, "deg c", deg_c(sig, m));
  if (m >= 4) row(out, "bound holds", weierstrass_bound_holds(sig, m) ? "yes" : "no");
  return kExitOk;
}

std::string lambda_text(const Rational& lambda, long s) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 1728, static_cast<unsigned long>(s));
  const Rational ratio = lambda / Rational(p);
  std::string text = lambda.get_str();
  if (ratio.get_den() == 1) text += " = " + ratio.get_str() + " * 1728^" + std::to_string(s);
  return text;
}

int run_level1_verify(int tmax, std::size_t prec, std::ostream& out) {
  using namespace level1;
  if (tmax < 1) throw UsageError("--tmax must be >= 1");
  bool ok = true;
  const QSeries e4 = eisenstein_e4(prec).series;
  const QSeries e6 = eisenstein_e6(prec).series;
  const QSeries d = delta(prec).series;

  {
    const std::vector<QSeries> pair = {pow(e4, 3), pow(e6, 2)};
    const QSeries w = q_wronskian(pair, 12).series;
    const QSeries rhs = Rational(-1728) * (d * pow(e4, 2) * e6);
    const bool first = agree(w, rhs);
    // d/dq f = (q d/dq f) / q
    const QSeries de4 = exact_div(q_derive(e4), QSeries::monomial(1, 1, prec));
    const QSeries de6 = exact_div(q_derive(e6), QSeries::monomial(1, 1, prec));
    const QSeries lhs2 = Rational(2) * (e4 * de6) - Rational(3) * (e6 * de4);
    const QSeries rhs2 = Rational(-1728) * exact_div(d, QSeries::monomial(1, 1, prec));
    const bool second = agree(lhs2, rhs2);
    ok = ok && first && second;
    out << "W_q(E4^3, E6^2) = -1728*Delta*E4^2*E6          " << (first ? "ok" : "FAILED") << '\n';
    out << "2*E4*dE6/dq - 3*E6*dE4/dq = -1728*Delta/q      " << (second ? "ok" : "FAILED") << '\n';
  }

  for (int t = 1; t <= tmax; ++t) {
    const int m = 12 * t;
    std::vector<QSeries> fs;
    for (const auto& e : m_basis(m)) fs.push_back(monomial(e, prec).series);
    const auto k = static_cast<long>(fs.size());
    const auto w = q_wronskian(fs, m);
    const long s = static_cast<long>(t) * (t + 1) / 2;
    const auto v = w.series.valuation();
    const bool order_ok = v && static_cast<long>(*v) == s;

    const QSeries quotient = exact_div(w.series, pow(d, static_cast<unsigned long>(s)));
    const int weight = static_cast<int>(w.output_weight - 12 * s);
    const auto parts = express_in_monomials({quotient, weight});
    const MonomialExponent target{static_cast<unsigned>(t * (t + 1)), static_cast<unsigned>(s)};
    std::optional<Rational> lambda;
    bool shape_ok = true;
    for (const auto& [e, c] : parts) {
      if (e == target) {
        lambda = c;
      } else if (c != 0) {
        shape_ok = false;
      }
    }
    shape_ok = shape_ok && lambda && *lambda != 0;
    ok = ok && order_ok && shape_ok;
    out << "t=" << t << "  k=" << k << "  weight " << w.output_weight << "  ord W_q = " << (v ? std::to_string(*v) : "inf")
        << "  W_q/Delta^" << s << " in M_" << weight << ": ";
    if (shape_ok) {
      out << "lambda(" << t << ") = " << lambda_text(*lambda, s) << "  ok\n";
    } else {
      out << "not a multiple of E4^" << target.alpha << "*E6^" << target.beta << "  FAILED\n";
    }
  }
  return ok ? kExitOk : kExitFailure;
}

std::vector<QSeries> wronskian_inputs(const CuspBasis& basis, int weight, int file_weight) {
  if (weight == file_weight) return basis.series();
  if (file_weight == 2 && weight > 2 && weight % 2 == 0) return monomial_span_basis(basis, weight);
  throw UsageError("--weight must equal the file weight, or be an even weight > 2 for a weight-2 basis");
}

int run_wronskian(const std::string& path, std::optional<int> weight, std::ostream& out) {
  const BasisFile file = parse_basis_file(read_text_file(path));
  const int m = weight.value_or(file.weight);
  std::vector<QSeries> fs;
  CuspBasis basis;
  if (m == file.weight) {
    for (const auto& f : file.forms) fs.emplace_back(f.coeffs);
  } else {
    basis = to_cusp_basis(file);
    fs = wronskian_inputs(basis, m, file.weight);
  }
  const auto w = q_wronskian(fs, m);
  out << "level " << file.level_label << ", " << fs.size() << " series of weight " << m;
  if (m != file.weight) out << " (echelon basis of degree-" << m / 2 << " monomials)";
  out << '\n';
  row(out, "output weight", w.output_weight);
  row(out, "scalar exponent", w.scalar_exponent);
  const auto v = w.series.valuation();
  row(out, "ord_q W_q", v ? std::to_string(*v) : "> " + std::to_string(w.series.prec() - 1) + " (vanishes)");
  if (!v) {
    out << "inputs are dependent at this precision\n";
    return kExitFailure;
  }
  const auto span = span_valuations(fs);
  row(out, "span valuations", join(span.valuations));
  row(out, "span total", span.total);
  const bool holds = *v == span.total;
  row(out, "cusp identity", holds ? "holds" : "FAILS");
  return holds ? kExitOk : kExitFailure;
}

int run_weierstrass(const std::string& path, int m, std::optional<long> level, bool strict, std::ostream& out) {
  const CuspBasis basis = load_basis(path);
  if (!level) level = parse_level(basis.level_label);
  if (!level) throw UsageError("level label '" + basis.level_label + "' is not numeric; pass --level");
  const auto inv = gamma0_invariants(*level);
  WeierstrassOptions opts;
  opts.hyperelliptic_status = inv.hyperelliptic_status;
  opts.require_full_span = strict;
  const auto rep = weierstrass_test(basis, m, inv.signature, opts);

  out << "X_0(" << *level << ")  genus " << inv.signature.genus << "  m = " << m << "  ("
      << to_string(inv.hyperelliptic_status) << ")\n";
  row(out, "monomials", std::to_string(rep.monomial_count) + " of degree " + std::to_string(m / 2));
  row(out, "dim S^H_" + std::to_string(m), rep.expected_dim);
  row(out, "rank", rep.rank);
  row(out, "window", "q^0 .. q^" + std::to_string(rep.criterion_bound));
  row(out, "gap sequence", join(rep.gap_sequence));
  const std::string level_name = std::to_string(m / 2) + "-Weierstrass point";
  switch (rep.verdict) {
    case Verdict::NotWeierstrass:
      row(out, "verdict", "NOT a " + level_name);
      break;
    case Verdict::Weierstrass:
      row(out, "verdict", "IS a " + level_name);
      break;
    case Verdict::SpanNotGuaranteed:
      row(out, "verdict", "SPAN_NOT_GUARANTEED (monomials span " + std::to_string(rep.rank) + " of " +
                              std::to_string(rep.expected_dim) + " dimensions)");
      break;
  }
  bool ok = true;
  if (rep.is_weierstrass && rep.rows.size() >= 2) {
    const auto wc = wronskian_criterion(rep.rows, m);
    const bool agrees = wc.is_weierstrass == *rep.is_weierstrass;
    ok = agrees;
    row(out, "wronskian order", std::to_string(wc.order) + " (bound " + std::to_string(wc.bound) + "), " +
                                    (agrees ? "agrees" : "DISAGREES"));
  }
  out << "echelon rows:\n";
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    out << "  [" << i + 1 << "] " << rep.rows[i].to_string() << '\n';
    out << "      = " << render_combination(rep.combinations[i], rep.exponents, basis) << '\n';
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-expansion engine for Wronskians and higher-order Weierstrass points of modular curves",
               args.empty() ? "wpoint" : args.front()};
  app.require_subcommand(1);

  long sig_level = 0;
  auto* sig_cmd = app.add_subcommand("signature", "Gamma_0(N) index, cusps, elliptic points, genus");
  sig_cmd->add_option("N", sig_level, "level")->required();

  std::string dims_target;
  int dims_weight = 0;
  auto* dims_cmd = app.add_subcommand("dims", "dimension and divisor-degree formulas");
  dims_cmd->add_option("target", dims_target, "level N or signature file")->required();
  dims_cmd->add_option("m", dims_weight, "even weight")->required();

  int tmax = 3;
  std::size_t l1_prec = 80;
  auto* level1_cmd = app.add_subcommand("level1", "SL_2(Z) Wronskian identities");
  level1_cmd->require_subcommand(1);
  auto* verify_cmd = level1_cmd->add_subcommand("verify", "check the Wronskians of (E4^3)^u (E6^2)^(t-u)");
  verify_cmd->add_option("--tmax", tmax, "largest t")->capture_default_str();
  verify_cmd->add_option("--prec", l1_prec, "q-expansion precision")->capture_default_str();

  std::string wr_path;
  std::optional<int> wr_weight;
  auto* wr_cmd = app.add_subcommand("wronskian", "q-Wronskian valuation and span valuations of a basis file");
  wr_cmd->add_option("basisfile", wr_path)->required()->check(CLI::ExistingFile);
  wr_cmd->add_option("--weight", wr_weight, "input weight; above 2, use degree-m/2 monomials of the basis");

  std::string ws_path;
  int ws_weight = 0;
  std::optional<long> ws_level;
  bool ws_strict = false;
  auto* ws_cmd = app.add_subcommand("weierstrass", "decide whether infinity is an m/2-Weierstrass point of X_0(N)");
  ws_cmd->add_option("basisfile", ws_path)->required()->check(CLI::ExistingFile);
  ws_cmd->add_option("--weight", ws_weight, "even weight m")->required();
  ws_cmd->add_option("--level", ws_level, "level N (default: the file's LEVEL label)");
  ws_cmd->add_flag("--strict-span", ws_strict, "fail instead of flagging a possibly proper monomial span");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("wpoint");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (sig_cmd->parsed()) return run_signature(sig_level, out);
    if (dims_cmd->parsed()) return run_dims(dims_target, dims_weight, out);
    if (verify_cmd->parsed()) return run_level1_verify(tmax, l1_prec, out);
    if (wr_cmd->parsed()) return run_wronskian(wr_path, wr_weight, out);
    if (ws_cmd->parsed()) return run_weierstrass(ws_path, ws_weight, ws_level, ws_strict, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace wpoint
