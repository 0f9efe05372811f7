#pragma once

#include <utility>

#include "hypell/types.hpp"

namespace hypell {

// Exact invariants of the canonical resolution and minimal model:
//   chi        = 1 + (k-2)(l-2)/4 - sum r_i(r_i-2)/8
//   K^2_canres = (k-4)(l-4) - sum (r_i-2)^2 / 2
//   K^2_min    = K^2_canres + t
// Throws NonIntegralInvariant when either closed form is fractional.
SurfaceInvariants canres_invariants(const BranchConfig& config);

// The two scalars G, H of the double-cover identities:
//   H = 2k^2 - k(4chi + t - K^2 + 8) + 16chi + 2t - 2K^2
//   G = -2k + 4chi + t - K^2 + 8
std::pair<long long, long long> rito_GH(long long k, long long chi, long long k2_min,
                                        long long t);

// True iff   sum (r_i-2)(k-r_i-2) = H   and   2l = G + sum (r_i-2)   hold
// exactly for the given config/invariants pair.
bool rito_identity_check(const BranchConfig& config, const SurfaceInvariants& inv);

// (N4+N6) minus the right-hand side of
//   N4+N6 = 15 + K^2_canres - 3chi - (k-10)(l-10)/4.
// Zero signals consistency. Requires r_i <= 8 for all i (OutOfRegime
// otherwise); in that regime the (N4,N6,N8) form and the spectrum form
// (1/8) sum (r_i-2)(8-r_i) coincide and both are evaluated.
Rational thm2_b_residual(const BranchConfig& config, const SurfaceInvariants& inv);

// chi = 1 + (k-2)(l-2)/4 - N4 - 3 N6 - 6 N8, exact.
Rational thm2_c_chi(long long k, long long l, long long n4, long long n6, long long n8);

// Pencil through a point of multiplicity mult on a degree-`degree` plane
// branch curve: blow up the point, land on F_1 with k = degree - mult,
// l = (degree + mult)/2. mult and degree must share parity.
struct RuledModel {
  long long k;
  long long l;
  long long e;  // always 1
};
RuledModel plane_to_ruled(long long degree, long long mult);

}  // namespace hypell
