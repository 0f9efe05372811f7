#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypell/types.hpp"

namespace hypell {

// One labelled k-bound from the genus-bound case analysis. Rational bounds
// carry the exact value; square-root bounds stay symbolic as p + sqrt(q) and
// are only ever compared through the integer predicate (x-p)^2 <= q.
struct CaseBound {
  std::string label;
  bool is_sqrt = false;
  Rational value;        // rational form only
  long long sqrt_p = 0;  // sqrt form only
  long long sqrt_q = 0;
  int assumed_t = 0;

  // Largest integer k satisfying the bound.
  long long floor_k() const {
    return is_sqrt ? sqrt_p + isqrt(sqrt_q) : value.floor();
  }
};

struct KBoundReport {
  std::vector<CaseBound> cases;
  long long max_even_k = 0;  // largest even k allowed by the weakest case
  long long genus_cap = 0;   // (max_even_k - 2) / 2
};

// Floor of max{ -1 + 8chi/(4chi-K^2-6), 1 + (8chi-16)/(4chi-K^2-6),
//               1 + 8chi/(4chi-K^2-3), (3 + sqrt(1+8chi))/2 }.
// Requires k2 < 4chi - 6.
long long genus_bound(long long chi, long long k2);

// All twelve per-case k-bounds with their minimal t substituted, plus the
// even-k cap and the genus cap it implies. Requires k2 < 4chi - 6.
KBoundReport k_bound_cases(long long chi, long long k2);

// The same case bound evaluated at an arbitrary t >= the case's floor;
// used to check monotonicity in t. Square-root cases are t-independent.
Rational case_bound_at_t(const std::string& label, long long chi, long long k2,
                         long long t);

// P1 = (2l - G)(k - r_m - 2) - H
long long p1(long long l, long long r_m, long long G, long long H, long long k);
// P2 = (2l - G)((r_m-4)(k-r_m) + (r_m-2)(k-r_m-2)) - H(2 r_m - 6)
long long p2(long long l, long long r_m, long long G, long long H, long long k);

enum class LemmaVariant { a, b };

// Variant a:  2l <= G + H/(k - r_m - 2)
// Variant b:  2l <= G + H (2r_m - 6) / ((r_m-4)(k-r_m) + (r_m-2)(k-r_m-2)),
// both decided by exact cross-multiplication. Requires k > 8 and a positive
// denominator.
bool lemma_check(const BranchConfig& config, const SurfaceInvariants& inv,
                 LemmaVariant variant);

struct MainpropResult {
  bool inequality_holds = false;
  std::optional<bool> side_constraint_ok;  // case d only: n <= j + 7
};

// The displayed inequality of one case of the k-bound proposition. Labels:
// a, b, c1, c2, c3, d, e1, e2, f1, f2, g1, g2. Case d needs j and n.
MainpropResult mainprop_inequality(const std::string& case_label, long long chi,
                                   long long k2, long long t, long long k,
                                   std::optional<long long> j = std::nullopt,
                                   std::optional<long long> n = std::nullopt);

// Largest even multiplicity consistent with the applicable caps:
// min{8 (deep regime), k/2+2 or k/2+1 by k mod 4, l-k/2+2}; 0 when the cap
// falls below 2.
long long r_max_cap(long long k, long long l, bool deep_regime);

// (k-12)(l-12) <= 29 - 6 N8, valid in the regime 32 <= chi <= 53.
bool eq2_check(long long k, long long l, long long n8, long long chi);

}  // namespace hypell
