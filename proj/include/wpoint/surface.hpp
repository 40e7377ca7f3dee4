#pragma once

#include <string_view>
#include <vector>

#include "wpoint/rational.hpp"

namespace wpoint {

/// Genus, number of inequivalent cusps, and elliptic orders of a Fuchsian group's
/// compactified quotient. All dimension and degree formulas take one of these.
struct SurfaceSignature {
  long genus = 0;
  long cusp_count = 0;
  std::vector<long> elliptic_orders;

  /// Throws DomainError if genus or cusp_count is negative or any order is < 2.
  void validate() const;
  friend bool operator==(const SurfaceSignature&, const SurfaceSignature&) = default;
};

/// Signature of SL_2(Z): genus 0, one cusp, elliptic points of orders 2 and 3.
SurfaceSignature sl2z_signature();

enum class HyperellipticStatus { GenusBelowTwo, Hyperelliptic, NotHyperelliptic };

std::string_view to_string(HyperellipticStatus s);

struct Gamma0Invariants {
  long level = 0;
  long index = 0;
  long nu2 = 0;
  long nu3 = 0;
  SurfaceSignature signature;
  HyperellipticStatus hyperelliptic_status = HyperellipticStatus::GenusBelowTwo;
};

long dim_cusp_forms(const SurfaceSignature& sig, int m);
long dim_modular_forms(const SurfaceSignature& sig, int m);
/// Degree of the divisor of a nonzero weight-m form.
Rational deg_div(const SurfaceSignature& sig, int m);
long deg_c_prime(const SurfaceSignature& sig, int m);
long deg_c(const SurfaceSignature& sig, int m);
/// dim S^H_m, the cusp forms whose differentials are holomorphic m/2-differentials.
long dim_s_h(const SurfaceSignature& sig, int m);
/// m/2 + m(g-1) <= dim S_m - g, evaluated literally. Requires m >= 4.
bool weierstrass_bound_holds(const SurfaceSignature& sig, int m);

Gamma0Invariants gamma0_invariants(long n);

/// Ogg's classification for levels of genus >= 2; GenusBelowTwo otherwise.
HyperellipticStatus gamma0_hyperelliptic_status(long n, long genus);

}  // namespace wpoint
