#include "wpoint/rational.hpp"

#include <cctype>

namespace wpoint {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den)) return std::nullopt;
  }
  std::string_view digits = num;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) return std::nullopt;

  Integer n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  Integer d(1);
  if (!den.empty()) {
    d = Integer(std::string(den), 10);
    if (d == 0) return std::nullopt;
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Integer common_denominator(std::span<const Rational> values) {
  Integer l(1);
  for (const auto& v : values) {
    if (v.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return l;
}

Integer content(std::span<const Integer> values) {
  Integer g(0);
  for (const auto& v : values) {
    if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

}  // namespace wpoint
