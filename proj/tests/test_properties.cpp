#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <random>

#include "hypell/bounds.hpp"
#include "hypell/enumerator.hpp"
#include "hypell/invariants.hpp"

using namespace hypell;

namespace {

// Draws random branch configs with even r_i below the multiplicity cap and
// integral invariants. Fixed seed: the suites are reproducible.
struct ConfigGen {
  std::mt19937 rng{20260824};

  long long uniform(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
  }

  std::optional<std::pair<BranchConfig, SurfaceInvariants>> try_draw() {
    BranchConfig c;
    c.k = 2 * uniform(3, 15);  // even k in [6, 30]
    c.l = uniform(c.k / 2, 3 * c.k);
    c.t = uniform(0, 12);
    long long cap = r_max_cap(c.k, c.l, false);
    std::vector<long long> rs;
    long long n = uniform(0, 5);
    for (long long i = 0; i < n && cap >= 2; ++i) rs.push_back(2 * uniform(1, cap / 2));
    c.spectrum = SingularitySpectrum(std::move(rs));
    try {
      auto inv = canres_invariants(c);
      return std::make_pair(c, inv);
    } catch (const NonIntegralInvariant&) {
      return std::nullopt;
    }
  }

  std::pair<BranchConfig, SurfaceInvariants> draw() {
    for (;;) {
      if (auto p = try_draw()) return *p;
    }
  }
};

}  // namespace

TEST_CASE("oracle consistency: both double-cover equations hold on 10^4 configs") {
  ConfigGen gen;
  int checked = 0;
  while (checked < 10000) {
    auto [c, inv] = gen.draw();
    // (a) 2kl = -48 + 12l + 12k - 8chi + 4K^2 - 4t + sum (r_i-2)(r_i-4)
    long long lhs_a = 2 * c.k * c.l;
    long long rhs_a = -48 + 12 * c.l + 12 * c.k - 8 * inv.chi + 4 * inv.k2_min -
                      4 * c.t + c.spectrum.sum_rm2_rm4();
    REQUIRE(lhs_a == rhs_a);
    // (b) 2k + 2l = 8 + 4chi + t - K^2 + sum (r_i-2)
    long long lhs_b = 2 * c.k + 2 * c.l;
    long long rhs_b =
        8 + 4 * inv.chi + c.t - inv.k2_min + c.spectrum.sum_rm2();
    REQUIRE(lhs_b == rhs_b);
    REQUIRE(rito_identity_check(c, inv));
    ++checked;
  }
}

TEST_CASE("linear combinations: residual of eqq1 is [alpha + (k-10) beta]/8, "
          "eqq2 is beta + eqq1") {
  // Evaluated on deliberately inconsistent tuples, so the relation is checked
  // as an identity of polynomials rather than 0 = 0.
  ConfigGen gen;
  for (int i = 0; i < 2000; ++i) {
    auto [c, inv] = gen.draw();
    long long chi = inv.chi + gen.uniform(-3, 3);
    long long k2 = inv.k2_min + gen.uniform(-3, 3);
    long long t = c.t;

    auto [G, H] = rito_GH(c.k, chi, k2, t);
    Rational alpha = Rational(c.spectrum.sum_rm2_kmrm2(c.k) - H);
    Rational beta = Rational(2 * c.l - G - c.spectrum.sum_rm2());
    Rational eqq1 =
        Rational(c.spectrum.sum_rm2_8mr(), 8) -
        (Rational(15 + k2 - t - 3 * chi) - Rational((c.k - 10) * (c.l - 10), 4));
    Rational eqq2 = Rational(1) + Rational((c.k - 2) * (c.l - 2), 4) -
                    Rational(c.spectrum.sum_r_rm2(), 8) - Rational(chi);

    REQUIRE(eqq1 == (alpha + Rational(c.k - 10) * beta) / Rational(8));
    REQUIRE(eqq2 == beta + eqq1);
  }
}

TEST_CASE("negligible r=2 entries are neutral on random configs") {
  ConfigGen gen;
  for (int i = 0; i < 500; ++i) {
    auto [c, inv] = gen.draw();
    BranchConfig padded = c;
    auto rs = c.spectrum.r_list();
    rs.insert(rs.end(), gen.uniform(1, 4), 2);
    padded.spectrum = SingularitySpectrum(std::move(rs));
    auto pinv = canres_invariants(padded);
    REQUIRE(pinv.chi == inv.chi);
    REQUIRE(pinv.k2_canres == inv.k2_canres);
    REQUIRE(rito_identity_check(padded, pinv));
  }
}

TEST_CASE("rito identities break under every unit perturbation") {
  ConfigGen gen;
  for (int i = 0; i < 500; ++i) {
    auto [c, inv] = gen.draw();
    for (int s : {-1, 1}) {
      SurfaceInvariants chi_p = inv;
      chi_p.chi += s;
      REQUIRE_FALSE(rito_identity_check(c, chi_p));
      SurfaceInvariants k2_p = inv;
      k2_p.k2_min += s;
      REQUIRE_FALSE(rito_identity_check(c, k2_p));
      BranchConfig l_p = c;
      l_p.l += s;
      REQUIRE_FALSE(rito_identity_check(l_p, inv));
      if (c.t + s >= 0) {
        BranchConfig t_p = c;
        t_p.t += s;
        REQUIRE_FALSE(rito_identity_check(t_p, inv));
      }
    }
  }
}

TEST_CASE("lemma a) soundness and the P1 reformulation") {
  ConfigGen gen;
  int checked = 0;
  while (checked < 10000) {
    auto [c, inv] = gen.draw();
    if (c.k <= 8) continue;
    long long r_m = std::max<long long>(c.spectrum.r_max(), 2);
    if (c.k - r_m - 2 <= 0) continue;
    bool ok = lemma_check(c, inv, LemmaVariant::a);
    REQUIRE(ok);
    auto [G, H] = rito_GH(c.k, inv.chi, inv.k2_min, c.t);
    REQUIRE(ok == (p1(c.l, r_m, G, H, c.k) <= 0));
    ++checked;
  }
}

TEST_CASE("exact sqrt predicate matches the symbolic bound") {
  for (long long n = 0; n <= 3000; ++n) {
    long long g_pred = (3 + isqrt(1 + 8 * n)) / 2;
    for (long long g = 2; g <= g_pred + 3; ++g) {
      bool via_pred = (2 * g - 3) * (2 * g - 3) <= 1 + 8 * n;
      CHECK(via_pred == (g <= g_pred));
    }
  }
}

TEST_CASE("theorem bound never exceeds the proof's genus cap") {
  for (long long chi = 1; chi <= 100; ++chi)
    for (long long k2 = 1; k2 < 4 * chi - 6; ++k2)
      REQUIRE(genus_bound(chi, k2) <= k_bound_cases(chi, k2).genus_cap);
}
