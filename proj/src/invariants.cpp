#include "hypell/invariants.hpp"

#include <cassert>

namespace hypell {

SurfaceInvariants canres_invariants(const BranchConfig& config) {
  config.validate();
  const long long k = config.k;
  const long long l = config.l;

  Rational chi = Rational(1) + Rational((k - 2) * (l - 2), 4) -
                 Rational(config.spectrum.sum_r_rm2(), 8);
  Rational k2_canres =
      Rational((k - 4) * (l - 4)) - Rational(config.spectrum.sum_rm2_sq(), 2);

  if (!chi.is_integer())
    throw NonIntegralInvariant("chi is not integral: " + chi.str());
  if (!k2_canres.is_integer())
    throw NonIntegralInvariant("K^2_canres is not integral: " + k2_canres.str());

  SurfaceInvariants inv;
  inv.chi = chi.as_integer();
  inv.k2_canres = k2_canres.as_integer();
  inv.k2_min = inv.k2_canres + config.t;
  inv.genus = config.genus();
  inv.delta = inv.k2_min - 3 * inv.chi;
  return inv;
}

std::pair<long long, long long> rito_GH(long long k, long long chi, long long k2_min,
                                        long long t) {
  const long long d = 4 * chi + t - k2_min;
  const long long G = -2 * k + d + 8;
  const long long H = 2 * k * k - k * (d + 8) + 16 * chi + 2 * t - 2 * k2_min;
  return {G, H};
}

bool rito_identity_check(const BranchConfig& config, const SurfaceInvariants& inv) {
  auto [G, H] = rito_GH(config.k, inv.chi, inv.k2_min, config.t);
  return config.spectrum.sum_rm2_kmrm2(config.k) == H &&
         2 * config.l == G + config.spectrum.sum_rm2();
}

Rational thm2_b_residual(const BranchConfig& config, const SurfaceInvariants& inv) {
  if (config.spectrum.r_max() > 8)
    throw OutOfRegime("thm2_b_residual requires r_i <= 8, got r_max = " +
                      std::to_string(config.spectrum.r_max()));

  const long long k = config.k;
  const long long l = config.l;
  Rational rhs = Rational(15 + inv.k2_canres - 3 * inv.chi) -
                 Rational((k - 10) * (l - 10), 4);

  long long counts_lhs = config.spectrum.n4() + config.spectrum.n6();
  // With r_i in {2,4,6,8}, (1/8) sum (r_i-2)(8-r_i) counts exactly N4+N6.
  assert(Rational(config.spectrum.sum_rm2_8mr(), 8) == Rational(counts_lhs));

  return Rational(counts_lhs) - rhs;
}

Rational thm2_c_chi(long long k, long long l, long long n4, long long n6, long long n8) {
  return Rational(1) + Rational((k - 2) * (l - 2), 4) -
         Rational(n4 + 3 * n6 + 6 * n8);
}

RuledModel plane_to_ruled(long long degree, long long mult) {
  if (mult < 0) throw PreconditionViolated("mult must be >= 0");
  if ((degree - mult) % 2 != 0)
    throw ParityMismatch("degree and mult must have the same parity");
  return RuledModel{degree - mult, (degree + mult) / 2, 1};
}

}  // namespace hypell
