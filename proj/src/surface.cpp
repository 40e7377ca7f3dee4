#include "wpoint/surface.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "wpoint/errors.hpp"

namespace wpoint {

void SurfaceSignature::validate() const {
  if (genus < 0) throw DomainError("signature: negative genus");
  if (cusp_count < 0) throw DomainError("signature: negative cusp count");
  for (long e : elliptic_orders) {
    if (e < 2) throw DomainError("signature: elliptic order " + std::to_string(e) + " < 2");
  }
}

SurfaceSignature sl2z_signature() { return {0, 1, {2, 3}}; }

std::string_view to_string(HyperellipticStatus s) {
  switch (s) {
    case HyperellipticStatus::GenusBelowTwo:
      return "genus < 2";
    case HyperellipticStatus::Hyperelliptic:
      return "hyperelliptic";
    case HyperellipticStatus::NotHyperelliptic:
      return "not hyperelliptic";
  }
  return "?";
}

namespace {

void require_weight(int m, int min_weight) {
  if (m % 2 != 0 || m < min_weight) {
    throw DomainError("weight must be even and >= " + std::to_string(min_weight) + ", got " + std::to_string(m));
  }
}

}  // namespace

long dim_cusp_forms(const SurfaceSignature& sig, int m) {
  require_weight(m, 2);
  sig.validate();
  if (m == 2) return sig.genus;
  const long half = m / 2;
  long d = (m - 1) * (sig.genus - 1) + (half - 1) * sig.cusp_count;
  // floor((m/2)(1 - 1/e)) = floor(half (e-1) / e), all terms nonnegative.
  for (long e : sig.elliptic_orders) d += half * (e - 1) / e;
  return d;
}

long dim_modular_forms(const SurfaceSignature& sig, int m) {
  const long s = dim_cusp_forms(sig, m);
  if (m == 2 && sig.cusp_count >= 1) return s + sig.cusp_count - 1;
  return s + sig.cusp_count;
}

Rational deg_div(const SurfaceSignature& sig, int m) {
  require_weight(m, 2);
  sig.validate();
  Rational inner(sig.cusp_count);
  for (long e : sig.elliptic_orders) inner += Rational(e - 1, e);
  Rational d = Rational(m * (sig.genus - 1)) + Rational(m / 2) * inner;
  d.canonicalize();
  return d;
}

long deg_c_prime(const SurfaceSignature& sig, int m) {
  require_weight(m, 2);
  if (m == 2 && sig.cusp_count == 0) return 2 * (sig.genus - 1);
  return dim_modular_forms(sig, m) + sig.genus - 1;
}

long deg_c(const SurfaceSignature& sig, int m) {
  require_weight(m, 2);
  sig.validate();
  if (m == 2) return 2 * (sig.genus - 1);
  return dim_cusp_forms(sig, m) + sig.genus - 1;
}

long dim_s_h(const SurfaceSignature& sig, int m) {
  require_weight(m, 2);
  sig.validate();
  if (sig.genus == 0) return 0;
  if (m == 2) return sig.genus;
  if (sig.genus == 1) return 1;
  return (m - 1) * (sig.genus - 1);
}

bool weierstrass_bound_holds(const SurfaceSignature& sig, int m) {
  require_weight(m, 4);
  const long lhs = m / 2 + m * (sig.genus - 1);
  return lhs <= dim_cusp_forms(sig, m) - sig.genus;
}

namespace {

std::vector<long> prime_divisors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

long euler_phi(long n) {
  long r = n;
  for (long p : prime_divisors(n)) r = r / p * (p - 1);
  return r;
}

// Kronecker symbol (-1|p) for a prime p.
long legendre_minus_one(long p) {
  if (p == 2) return 0;
  return p % 4 == 1 ? 1 : -1;
}

// Kronecker symbol (-3|p) for a prime p.
long legendre_minus_three(long p) {
  if (p == 3) return 0;
  return p % 3 == 1 ? 1 : -1;
}

// Levels of genus >= 2 whose X_0(N) is not hyperelliptic, below 72; every N >= 72 is
// non-hyperelliptic as well (Ogg).
constexpr std::array<long, 25> kNonHyperellipticBelow72 = {34, 38, 42, 43, 44, 45, 51, 52, 53, 54, 55, 56, 57,
                                                           58, 60, 61, 62, 63, 64, 65, 66, 67, 68, 69, 70};

}  // namespace

HyperellipticStatus gamma0_hyperelliptic_status(long n, long genus) {
  if (genus < 2) return HyperellipticStatus::GenusBelowTwo;
  if (n >= 72) return HyperellipticStatus::NotHyperelliptic;
  const bool listed = std::find(kNonHyperellipticBelow72.begin(), kNonHyperellipticBelow72.end(), n) !=
                      kNonHyperellipticBelow72.end();
  return listed ? HyperellipticStatus::NotHyperelliptic : HyperellipticStatus::Hyperelliptic;
}

Gamma0Invariants gamma0_invariants(long n) {
  if (n <= 0) throw DomainError("gamma0_invariants: level must be positive, got " + std::to_string(n));
  const auto primes = prime_divisors(n);

  long index = n;
  for (long p : primes) index = index / p * (p + 1);

  long nu2 = 0;
  if (n % 4 != 0) {
    nu2 = 1;
    for (long p : primes) nu2 *= 1 + legendre_minus_one(p);
  }
  long nu3 = 0;
  if (n % 9 != 0) {
    nu3 = 1;
    for (long p : primes) nu3 *= 1 + legendre_minus_three(p);
  }
  long cusps = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d == 0) cusps += euler_phi(std::gcd(d, n / d));
  }
  // 12 g = 12 + index - 3 nu2 - 4 nu3 - 6 cusps
  const long twelve_g = 12 + index - 3 * nu2 - 4 * nu3 - 6 * cusps;
  const long genus = twelve_g / 12;

  Gamma0Invariants inv;
  inv.level = n;
  inv.index = index;
  inv.nu2 = nu2;
  inv.nu3 = nu3;
  inv.signature.genus = genus;
  inv.signature.cusp_count = cusps;
  inv.signature.elliptic_orders.assign(static_cast<std::size_t>(nu2), 2);
  inv.signature.elliptic_orders.insert(inv.signature.elliptic_orders.end(), static_cast<std::size_t>(nu3), 3);
  inv.hyperelliptic_status = gamma0_hyperelliptic_status(n, genus);
  return inv;
}

}  // namespace wpoint
