// Acceptance suite: runs every top-level criterion and prints one PASS/FAIL
// line per criterion. Exits non-zero if any criterion fails.
//
// Usage: acceptance <path-to-cli> <path-to-reference-csv>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypell/bounds.hpp"
#include "hypell/enumerator.hpp"
#include "hypell/invariants.hpp"
#include "hypell/reference.hpp"

using json = nlohmann::json;
using namespace hypell;

namespace {

std::string g_cli;
std::string g_reference;
int g_failures = 0;

struct CmdResult {
  int exit_code;
  std::string output;
};

CmdResult run_cli(const std::string& args) {
  std::string cmd = g_cli + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, "popen failed"};
  std::string out;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
  int status = pclose(pipe);
  int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << " " << name << ": " << detail
            << "\n";
  if (!pass) ++g_failures;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// 1. GOLDEN TABLE
void criterion_golden_table() {
  auto r = run_cli("table --g-range 5..10 --delta-range -16..-7 --compare-reference "
                   "--reference " + g_reference);
  bool pass = r.exit_code == 0 && contains(r.output, "60 cells, 0 differences");
  report(1, "golden table", pass,
         pass ? "all 60 cells of the reference table reproduced"
              : "exit=" + std::to_string(r.exit_code) + " output:\n" + r.output);
}

// 2. SHARPNESS REMARK
void criterion_sharpness() {
  auto chk = run_cli("check --k 12 --l 12 --n6 7 --t 0 --format json");
  auto bnd = run_cli("bound --chi 5 --k2 8");
  bool pass = chk.exit_code == 0 && bnd.exit_code == 0;
  std::string detail;
  try {
    auto j = json::parse(chk.output);
    auto& inv = j["invariants"];
    pass = pass && inv["chi"] == 5 && inv["k2_min"] == 8 && inv["genus"] == 5 &&
           inv["delta"] == -7;
    pass = pass && contains(bnd.output, "g <= 5");
    detail = "chi=5 K^2=8 g=5 delta=-7 and genus bound 5";
  } catch (const std::exception& e) {
    pass = false;
    detail = std::string("parse error: ") + e.what();
  }
  report(2, "sharpness remark", pass, detail);
}

// 3. EXISTENCE CROSS-CHECKS
void criterion_existence() {
  auto ref = load_reference_csv(g_reference);
  int checked = 0, failed = 0;
  std::ostringstream bad;
  for (const auto& e : ref) {
    if (!e.max_chi) continue;
    BranchConfig c;
    c.k = 2 * e.g + 2;
    if (e.surface == "P2") {
      long long mult = e.singularity == "(3,3)" ? 2 : 0;
      auto m = plane_to_ruled(*e.l_or_degree, mult);
      if (m.k != c.k) {
        ++failed;
        bad << " (g=" << e.g << "," << e.delta << "): converted k mismatch";
        continue;
      }
      c.l = m.l;
      c.e = m.e;
    } else {
      c.l = *e.l_or_degree;
      c.e = e.surface == "F0" ? 0 : (e.surface == "F1" ? 1 : 2);
    }
    if (e.singularity == "(3,3)")
      c.spectrum = SingularitySpectrum({2, 4});
    else if (e.singularity == "(4)")
      c.spectrum = SingularitySpectrum({4});
    // t per the conditions: 1 for a (3,3)-point, 2 when l = k/2 (branch
    // through the F_1 section), 1 for the F_2 model with l = k-2, else 0.
    if (e.singularity == "(3,3)")
      c.t = 1;
    else if (c.l == c.k / 2)
      c.t = 2;
    else if (e.surface == "F2")
      c.t = 1;
    else
      c.t = 0;

    ++checked;
    try {
      auto inv = canres_invariants(c);
      auto fe = feasible_models(c.k, c.l);
      bool ok = inv.chi == *e.max_chi && inv.delta == e.delta &&
                rito_identity_check(c, inv) && thm2_b_residual(c, inv).is_zero() &&
                conditions_check(c.k, c.l, c.t, c.spectrum.n4(), c.spectrum.n6(),
                                 c.spectrum.n8())
                    .empty() &&
                std::find(fe.begin(), fe.end(), *c.e) != fe.end();
      if (!ok) {
        ++failed;
        bad << " (g=" << e.g << "," << e.delta << "): chi=" << inv.chi
            << " expected " << *e.max_chi;
      }
    } catch (const std::exception& ex) {
      ++failed;
      bad << " (g=" << e.g << "," << e.delta << "): " << ex.what();
    }
  }
  report(3, "existence cross-checks", failed == 0,
         std::to_string(checked) + " construction entries checked" +
             (failed ? ", failures:" + bad.str() : ""));
}

// Shared random-config generator for criteria 4 and 5.
struct Gen {
  std::mt19937 rng{987654321};
  long long uniform(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
  }
  std::optional<std::pair<BranchConfig, SurfaceInvariants>> draw() {
    BranchConfig c;
    c.k = 2 * uniform(3, 15);
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
};

// 4. ORACLE IDENTITY SUITE
void criterion_oracle() {
  Gen gen;
  int checked = 0, failures = 0;
  while (checked < 10000) {
    auto p = gen.draw();
    if (!p) continue;
    auto& [c, inv] = *p;
    ++checked;
    long long rhs_a = -48 + 12 * c.l + 12 * c.k - 8 * inv.chi + 4 * inv.k2_min -
                      4 * c.t + c.spectrum.sum_rm2_rm4();
    long long rhs_b = 8 + 4 * inv.chi + c.t - inv.k2_min + c.spectrum.sum_rm2();
    if (2 * c.k * c.l != rhs_a || 2 * c.k + 2 * c.l != rhs_b) ++failures;
    if (!rito_identity_check(c, inv)) ++failures;

    // eqq1 = [alpha + (k-10) beta]/8 and eqq2 = beta + eqq1, evaluated as
    // residuals on a perturbed (hence inconsistent) tuple.
    long long chi = inv.chi + gen.uniform(-2, 2);
    long long k2 = inv.k2_min + gen.uniform(-2, 2);
    auto [G, H] = rito_GH(c.k, chi, k2, c.t);
    Rational alpha(c.spectrum.sum_rm2_kmrm2(c.k) - H);
    Rational beta(2 * c.l - G - c.spectrum.sum_rm2());
    Rational eqq1 =
        Rational(c.spectrum.sum_rm2_8mr(), 8) -
        (Rational(15 + k2 - c.t - 3 * chi) - Rational((c.k - 10) * (c.l - 10), 4));
    Rational eqq2 = Rational(1) + Rational((c.k - 2) * (c.l - 2), 4) -
                    Rational(c.spectrum.sum_r_rm2(), 8) - Rational(chi);
    if (eqq1 != (alpha + Rational(c.k - 10) * beta) / Rational(8)) ++failures;
    if (eqq2 != beta + eqq1) ++failures;
  }
  report(4, "oracle identity suite", failures == 0,
         std::to_string(checked) + " random configs, " + std::to_string(failures) +
             " failures");
}

// 5. LEMMA SOUNDNESS SUITE
void criterion_lemma() {
  Gen gen;
  int checked = 0, failures = 0;
  while (checked < 10000) {
    auto p = gen.draw();
    if (!p || p->first.k <= 8) continue;
    auto& [c, inv] = *p;
    long long r_m = std::max<long long>(c.spectrum.r_max(), 2);
    if (c.k - r_m - 2 <= 0) continue;
    ++checked;
    bool ok = lemma_check(c, inv, LemmaVariant::a);
    auto [G, H] = rito_GH(c.k, inv.chi, inv.k2_min, c.t);
    if (!ok) ++failures;
    if (ok != (p1(c.l, r_m, G, H, c.k) <= 0)) ++failures;
  }
  report(5, "lemma soundness suite", failures == 0,
         std::to_string(checked) + " configs with k > 8, " + std::to_string(failures) +
             " counterexamples");
}

// 6. THEOREM 1 CONSISTENCY
void criterion_theorem1() {
  int failures = 0;
  for (long long chi = 1; chi <= 100; ++chi)
    for (long long k2 = 1; k2 < 4 * chi - 6; ++k2)
      if (genus_bound(chi, k2) > k_bound_cases(chi, k2).genus_cap) ++failures;

  auto bnd = run_cli("bound --chi 46 --k2 128");
  auto enu = run_cli("enumerate --g 11 --delta -10");
  bool cli_ok = bnd.exit_code == 0 && contains(bnd.output, "g <= 11") &&
                enu.exit_code == 0 && contains(enu.output, "EMPTY");
  report(6, "theorem 1 consistency", failures == 0 && cli_ok,
         "grid failures=" + std::to_string(failures) +
             ", bound(46,128)=11 and cell (11,-10) EMPTY: " +
             (cli_ok ? "yes" : "no"));
}

// 7. CAP-WIDENING STABILITY
void criterion_cap_widening() {
  auto base = max_chi_table(5, 10, -16, -7);
  auto wide = max_chi_table(5, 10, -16, -7, 20, 20);
  int diffs = 0;
  for (long long g = 5; g <= 10; ++g)
    for (long long d = -16; d <= -7; ++d)
      if (base.at(g, d) != wide.at(g, d)) ++diffs;
  report(7, "cap-widening stability", diffs == 0,
         "t_max=20, n4_max=20 changed " + std::to_string(diffs) + " cells");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <cli-path> <reference-csv>\n";
    return 2;
  }
  g_cli = argv[1];
  g_reference = argv[2];

  criterion_golden_table();
  criterion_sharpness();
  criterion_existence();
  criterion_oracle();
  criterion_lemma();
  criterion_theorem1();
  criterion_cap_widening();

  if (g_failures) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
