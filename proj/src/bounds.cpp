#include "hypell/bounds.hpp"

#include <algorithm>
#include <array>

#include "hypell/invariants.hpp"

namespace hypell {

namespace {

void require_denominators(long long chi, long long k2) {
  if (k2 >= 4 * chi - 6)
    throw PreconditionViolated("requires K^2 < 4*chi - 6 (chi=" + std::to_string(chi) +
                               ", K^2=" + std::to_string(k2) + ")");
}

// Rational case bounds have the shape  offset + num / (4chi + t - K^2 + dden).
struct CaseForm {
  const char* label;
  long long offset;
  long long num_16chi_add;  // numerator = 16 chi + this
  long long dden;
  int t_floor;
  bool is_sqrt;
};

constexpr std::array<CaseForm, 12> kCaseForms = {{
    {"a", 0, -16, -8, 2, false},
    {"b", 0, 0, -8, 2, false},
    {"c", 4, 0, -4, 1, false},
    {"c2", 4, -4, -5, 2, false},
    {"c3", 4, -16, 2, 1, false},
    {"d", 4, -32, -6, 0, false},
    {"e1", 0, 0, 0, 0, true},
    {"e2", 4, 0, 0, 0, false},
    {"f1", 2, -16, -2, 1, false},
    {"f2", 2, -16, -8, 2, false},
    {"g1", 0, 0, 0, 0, true},
    {"g2", 2, -16, 0, 0, false},
}};

Rational eval_case(const CaseForm& f, long long chi, long long k2, long long t) {
  const long long den = 4 * chi + t - k2 + f.dden;
  if (den <= 0) throw PreconditionViolated("case bound denominator is not positive");
  return Rational(f.offset) + Rational(16 * chi + f.num_16chi_add, den);
}

long long floor_even(long long x) { return x - (((x % 2) + 2) % 2); }

}  // namespace

long long genus_bound(long long chi, long long k2) {
  require_denominators(chi, k2);
  const long long d6 = 4 * chi - k2 - 6;
  const long long d3 = 4 * chi - k2 - 3;

  long long best = (Rational(-1) + Rational(8 * chi, d6)).floor();
  best = std::max(best, (Rational(1) + Rational(8 * chi - 16, d6)).floor());
  best = std::max(best, (Rational(1) + Rational(8 * chi, d3)).floor());
  // g <= (3 + sqrt(1+8chi))/2  <=>  (2g-3)^2 <= 1+8chi for g >= 2
  best = std::max(best, (3 + isqrt(1 + 8 * chi)) / 2);
  return best;
}

KBoundReport k_bound_cases(long long chi, long long k2) {
  require_denominators(chi, k2);
  KBoundReport rep;
  long long max_k = 0;
  for (const auto& f : kCaseForms) {
    CaseBound cb;
    cb.label = f.label;
    cb.assumed_t = f.t_floor;
    if (f.is_sqrt) {
      cb.is_sqrt = true;
      cb.sqrt_p = 5;
      cb.sqrt_q = 1 + 8 * chi;
    } else {
      cb.value = eval_case(f, chi, k2, f.t_floor);
    }
    max_k = std::max(max_k, cb.floor_k());
    rep.cases.push_back(std::move(cb));
  }
  rep.max_even_k = floor_even(max_k);
  rep.genus_cap = (rep.max_even_k - 2) / 2;
  return rep;
}

Rational case_bound_at_t(const std::string& label, long long chi, long long k2,
                         long long t) {
  for (const auto& f : kCaseForms) {
    if (label != f.label) continue;
    if (f.is_sqrt) throw UnknownCase("case " + label + " is a sqrt bound, not rational");
    if (t < f.t_floor)
      throw PreconditionViolated("case " + label + " assumes t >= " +
                                 std::to_string(f.t_floor));
    return eval_case(f, chi, k2, t);
  }
  throw UnknownCase("unknown case label: " + label);
}

long long p1(long long l, long long r_m, long long G, long long H, long long k) {
  return (2 * l - G) * (k - r_m - 2) - H;
}

long long p2(long long l, long long r_m, long long G, long long H, long long k) {
  return (2 * l - G) * ((r_m - 4) * (k - r_m) + (r_m - 2) * (k - r_m - 2)) -
         H * (2 * r_m - 6);
}

bool lemma_check(const BranchConfig& config, const SurfaceInvariants& inv,
                 LemmaVariant variant) {
  const long long k = config.k;
  if (k <= 8) throw PreconditionViolated("lemma_check requires k > 8");
  const long long r_m = std::max<long long>(config.spectrum.r_max(), 2);
  auto [G, H] = rito_GH(k, inv.chi, inv.k2_min, config.t);
  if (variant == LemmaVariant::a) {
    if (k - r_m - 2 <= 0)
      throw PreconditionViolated("lemma a) requires k - r_m - 2 > 0");
    return p1(config.l, r_m, G, H, k) <= 0;
  }
  if (r_m < 4) throw PreconditionViolated("lemma b) requires r_m >= 4");
  const long long den = (r_m - 4) * (k - r_m) + (r_m - 2) * (k - r_m - 2);
  if (den <= 0) throw PreconditionViolated("lemma b) requires a positive denominator");
  return p2(config.l, r_m, G, H, k) <= 0;
}

MainpropResult mainprop_inequality(const std::string& c, long long chi, long long k2,
                                   long long t, long long k,
                                   std::optional<long long> j,
                                   std::optional<long long> n) {
  const long long d = 4 * chi + t - k2;
  auto need_t = [&](long long floor) {
    if (t < floor)
      throw PreconditionViolated("case " + c + " assumes t >= " + std::to_string(floor));
  };
  MainpropResult res;
  if (c == "a") {
    need_t(2);
    res.inequality_holds = (d - 8) * k <= 16 * chi - 16;
  } else if (c == "b") {
    need_t(2);
    res.inequality_holds = (d - 8) * k * k - 16 * chi * k + 32 * chi <= 0;
  } else if (c == "c1") {
    need_t(1);
    res.inequality_holds = (d - 4) * k * k + (-48 * chi - 8 * t + 8 * k2 + 32) * k +
                               160 * chi + 16 * t - 16 * k2 - 96 <=
                           0;
  } else if (c == "c2") {
    need_t(1);
    res.inequality_holds = (d + 2) * k <= 32 * chi + 4 * t - 4 * k2 - 8;
  } else if (c == "c3") {
    need_t(2);
    res.inequality_holds = (d - 5) * k * k + (-48 * chi - 8 * t + 8 * k2 + 44) * k +
                               160 * chi + 16 * t - 16 * k2 - 128 <=
                           0;
  } else if (c == "d") {
    if (!j || !n) throw PreconditionViolated("case d requires j and n");
    if (*j < 0 || *n < 0) throw PreconditionViolated("case d requires j, n >= 0");
    res.inequality_holds =
        (d + 8 + 2 * *j - 2 * *n) * k <= 32 * chi + 4 * t - 4 * k2 - 8 * *n;
    res.side_constraint_ok = *n <= *j + 7;
  } else if (c == "e1" || c == "g1") {
    // k <= 5 + sqrt(1+8chi)  <=>  (k-5)^2 <= 1+8chi for k > 5
    res.inequality_holds = k <= 5 || (k - 5) * (k - 5) <= 1 + 8 * chi;
  } else if (c == "e2") {
    res.inequality_holds = d * k <= 32 * chi + 4 * t - 4 * k2;
  } else if (c == "f1") {
    need_t(1);
    res.inequality_holds = (d - 2) * k <= 24 * chi + 2 * t - 2 * k2 - 20;
  } else if (c == "f2") {
    need_t(2);
    res.inequality_holds = (d - 8) * k * k + (-32 * chi - 4 * t + 4 * k2 + 48) * k +
                               80 * chi + 4 * t - 4 * k2 - 96 <=
                           0;
  } else if (c == "g2") {
    res.inequality_holds = (d - 6) * k <= 24 * chi + 2 * t - 2 * k2 - 28;
  } else {
    throw UnknownCase("unknown mainprop case: " + c);
  }
  return res;
}

long long r_max_cap(long long k, long long l, bool deep_regime) {
  if (k % 2 != 0) throw ParityMismatch("r_max_cap requires even k");
  long long cap = (k % 4 == 0) ? k / 2 + 2 : k / 2 + 1;
  cap = std::min(cap, l - k / 2 + 2);
  if (deep_regime) cap = std::min<long long>(cap, 8);
  cap = floor_even(cap);
  return cap < 2 ? 0 : cap;
}

bool eq2_check(long long k, long long l, long long n8, long long chi) {
  if (chi < 32 || chi > 53)
    throw PreconditionViolated("eq2_check applies only for 32 <= chi <= 53");
  return (k - 12) * (l - 12) <= 29 - 6 * n8;
}

}  // namespace hypell
