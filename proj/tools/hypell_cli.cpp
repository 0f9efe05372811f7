#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypell/bounds.hpp"
#include "hypell/enumerator.hpp"
#include "hypell/invariants.hpp"
#include "hypell/reference.hpp"

using json = nlohmann::json;
using namespace hypell;

#ifndef HYPELL_DEFAULT_REFERENCE
#define HYPELL_DEFAULT_REFERENCE "data/theorem3_reference.csv"
#endif

namespace {

// Two-decimal truncation of a positive rational, computed without floats.
// Display only; exact values are always printed alongside.
std::string approx2(const Rational& r) {
  long long hundredths = (r * Rational(100)).floor();
  std::ostringstream os;
  os << hundredths / 100 << "." << std::setw(2) << std::setfill('0')
     << hundredths % 100;
  return os.str();
}

std::string approx2_sqrt(long long p, long long q) {
  // floor(100 * (p + sqrt(q))) = 100 p + floor(sqrt(10000 q))
  long long hundredths = 100 * p + isqrt(10000 * q);
  std::ostringstream os;
  os << hundredths / 100 << "." << std::setw(2) << std::setfill('0')
     << hundredths % 100;
  return os.str();
}

std::string bound_str(const CaseBound& cb) {
  if (cb.is_sqrt)
    return std::to_string(cb.sqrt_p) + "+sqrt(" + std::to_string(cb.sqrt_q) + ") ~" +
           approx2_sqrt(cb.sqrt_p, cb.sqrt_q);
  return cb.value.str() + " ~" + approx2(cb.value);
}

struct RangePair {
  long long lo, hi;
};

RangePair parse_range(const std::string& s) {
  auto pos = s.find("..");
  if (pos == std::string::npos)
    throw CLI::ValidationError("range must have the form a..b: " + s);
  RangePair r{std::stoll(s.substr(0, pos)), std::stoll(s.substr(pos + 2))};
  if (r.lo > r.hi) throw CLI::ValidationError("range must satisfy a <= b: " + s);
  return r;
}

json candidate_json(const Candidate& c) {
  return json{{"k", c.k},     {"l", c.l},           {"t", c.t},
              {"n4", c.n4},   {"n6", c.n6},         {"n8", c.n8},
              {"chi", c.chi}, {"k2_min", c.k2_min}, {"feasible_e", c.feasible_e}};
}

json rational_json(const Rational& r) {
  if (r.is_integer()) return json(r.as_integer());
  return json(r.str());
}

int cmd_bound(long long chi, long long k2, bool cases, const std::string& format) {
  long long g = genus_bound(chi, k2);
  if (format == "json") {
    json out{{"chi", chi}, {"k2", k2}, {"genus_bound", g}};
    if (cases) {
      auto rep = k_bound_cases(chi, k2);
      json arr = json::array();
      for (const auto& cb : rep.cases) {
        json jc{{"label", cb.label}, {"assumed_t", cb.assumed_t}};
        if (cb.is_sqrt) {
          jc["bound_p"] = cb.sqrt_p;
          jc["bound_q_or_null"] = cb.sqrt_q;
        } else {
          jc["bound_p"] = cb.value.str();
          jc["bound_q_or_null"] = nullptr;
        }
        arr.push_back(jc);
      }
      out["cases"] = arr;
      out["max_even_k"] = rep.max_even_k;
      out["genus_cap"] = rep.genus_cap;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "g <= " << g << "\n";
    if (cases) {
      auto rep = k_bound_cases(chi, k2);
      for (const auto& cb : rep.cases)
        std::cout << "  " << cb.label << ": k <= " << bound_str(cb)
                  << " (t >= " << cb.assumed_t << ")\n";
      std::cout << "  max even k = " << rep.max_even_k
                << ", genus cap = " << rep.genus_cap << "\n";
    }
  }
  return 0;
}

int cmd_check(BranchConfig config, const std::string& format) {
  config.validate();
  auto inv = canres_invariants(config);
  auto [G, H] = rito_GH(config.k, inv.chi, inv.k2_min, config.t);
  bool identity_ok = rito_identity_check(config, inv);

  std::optional<Rational> residual;
  if (config.spectrum.r_max() <= 8) residual = thm2_b_residual(config, inv);

  bool conditions_applicable = config.k >= 12;
  std::vector<Condition> violated;
  if (conditions_applicable)
    violated = conditions_check(config.k, config.l, config.t, config.spectrum.n4(),
                                config.spectrum.n6(), config.spectrum.n8());
  auto fe = feasible_models(config.k, config.l);

  if (format == "json") {
    json jconf{{"k", config.k}, {"l", config.l}, {"t", config.t},
               {"r_list", config.spectrum.r_list()}};
    jconf["e"] = config.e ? json(*config.e) : json(nullptr);
    json jviol = json::array();
    for (auto c : violated) jviol.push_back(to_string(c));
    json out{
        {"config", jconf},
        {"invariants",
         {{"chi", inv.chi},
          {"k2_canres", inv.k2_canres},
          {"k2_min", inv.k2_min},
          {"genus", inv.genus},
          {"delta", inv.delta}}},
        {"rito", {{"G", G}, {"H", H}, {"identity_ok", identity_ok}}},
        {"thm2",
         {{"residual", residual ? rational_json(*residual) : json(nullptr)},
          {"conditions_applicable", conditions_applicable},
          {"conditions_violated", jviol}}},
        {"feasible_e", fe}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "config: k=" << config.k << " l=" << config.l << " t=" << config.t
              << " r_list=[";
    for (size_t i = 0; i < config.spectrum.r_list().size(); ++i)
      std::cout << (i ? "," : "") << config.spectrum.r_list()[i];
    std::cout << "]\n";
    std::cout << "chi=" << inv.chi << " k2_canres=" << inv.k2_canres
              << " k2_min=" << inv.k2_min << " genus=" << inv.genus
              << " delta=" << inv.delta << "\n";
    std::cout << "G=" << G << " H=" << H
              << " rito identities: " << (identity_ok ? "PASS" : "FAIL") << "\n";
    if (residual)
      std::cout << "thm2 b) residual: " << residual->str() << "\n";
    else
      std::cout << "thm2 b) residual: out of regime (r_max > 8)\n";
    if (!conditions_applicable) {
      std::cout << "conditions: not applicable (k < 12)\n";
    } else if (violated.empty()) {
      std::cout << "conditions: OK\n";
    } else {
      std::cout << "conditions violated:";
      for (auto c : violated) std::cout << " " << to_string(c);
      std::cout << "\n";
    }
    std::cout << "feasible e: [";
    for (size_t i = 0; i < fe.size(); ++i) std::cout << (i ? "," : "") << fe[i];
    std::cout << "]\n";
  }
  return 0;
}

int cmd_enumerate(const CellQuery& q, const std::string& format) {
  auto res = enumerate_cell(q);
  if (format == "json") {
    json out{{"query",
              {{"g", q.g},
               {"delta", q.delta},
               {"mode", q.mode == Mode::max ? "max" : "all"}}},
             {"max_chi", res.max_chi ? json(*res.max_chi) : json(nullptr)}};
    json arr = json::array();
    for (const auto& c : res.witnesses) arr.push_back(candidate_json(c));
    out["witnesses"] = arr;
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "k,l,t,n4,n6,n8,chi,k2_min\n";
    for (const auto& c : res.witnesses)
      std::cout << c.k << "," << c.l << "," << c.t << "," << c.n4 << "," << c.n6 << ","
                << c.n8 << "," << c.chi << "," << c.k2_min << "\n";
  } else {
    if (!res.max_chi) {
      std::cout << "EMPTY\n";
    } else {
      std::cout << "max chi = " << *res.max_chi << "\n";
      for (const auto& c : res.witnesses)
        std::cout << "  (l=" << c.l << ",t=" << c.t << ",N4=" << c.n4 << ",N6=" << c.n6
                  << ",N8=" << c.n8 << ") chi=" << c.chi << " k2=" << c.k2_min << "\n";
    }
  }
  return 0;
}

int cmd_table(const RangePair& gr, const RangePair& dr, bool compare,
              const std::string& reference_path, const std::string& format) {
  auto table = max_chi_table(gr.lo, gr.hi, dr.lo, dr.hi);
  auto cell_str = [&](long long g, long long d) {
    const auto& c = table.at(g, d);
    return c ? std::to_string(*c) : std::string();
  };

  if (format == "json") {
    json rows = json::array();
    for (long long g = gr.lo; g <= gr.hi; ++g) {
      json row{{"g", g}};
      json cells = json::array();
      for (long long d = dr.hi; d >= dr.lo; --d) {
        const auto& c = table.at(g, d);
        cells.push_back(c ? json(*c) : json(nullptr));
      }
      row["cells"] = cells;
      rows.push_back(row);
    }
    json out{{"g_range", {gr.lo, gr.hi}},
             {"delta_range_desc", {dr.hi, dr.lo}},
             {"rows", rows}};
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "g";
    for (long long d = dr.hi; d >= dr.lo; --d) std::cout << "," << d;
    std::cout << "\n";
    for (long long g = gr.lo; g <= gr.hi; ++g) {
      std::cout << g;
      for (long long d = dr.hi; d >= dr.lo; --d) std::cout << "," << cell_str(g, d);
      std::cout << "\n";
    }
  } else {
    std::cout << "K^2-3chi";
    for (long long d = dr.hi; d >= dr.lo; --d) std::cout << "\t" << d;
    std::cout << "\n";
    for (long long g = gr.lo; g <= gr.hi; ++g) {
      std::cout << "g=" << g;
      for (long long d = dr.hi; d >= dr.lo; --d) {
        auto s = cell_str(g, d);
        std::cout << "\t" << (s.empty() ? "." : s);
      }
      std::cout << "\n";
    }
  }

  if (compare) {
    auto ref = load_reference_csv(reference_path);
    long long compared = 0;
    auto diffs = compare_to_reference(table, ref, &compared);
    std::cout << compared << " cells, " << diffs.size() << " differences\n";
    for (const auto& d : diffs)
      std::cout << "  (g=" << d.g << ", delta=" << d.delta
                << "): computed=" << (d.computed ? std::to_string(*d.computed) : "EMPTY")
                << " reference="
                << (d.reference ? std::to_string(*d.reference) : "EMPTY") << "\n";
    if (!diffs.empty()) return 2;
  }
  return 0;
}

int cmd_convert(long long degree, long long mult, const std::string& format) {
  auto m = plane_to_ruled(degree, mult);
  long long g = (m.k - 2) / 2;
  if (format == "json") {
    json out{{"degree", degree}, {"mult", mult}, {"k", m.k},
             {"l", m.l},         {"e", m.e},     {"g", g}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "k=" << m.k << " l=" << m.l << " e=" << m.e << " g=" << g << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants, genus bounds and branch-curve enumeration for "
               "hyperelliptic fibrations on double covers of ruled surfaces"};
  app.require_subcommand(1);

  // bound
  auto* bound = app.add_subcommand("bound", "Genus bound from (chi, K^2)");
  long long b_chi = 1, b_k2 = 0;
  bool b_cases = false;
  std::string b_format = "text";
  bound->add_option("--chi", b_chi, "chi(O_S)")->required();
  bound->add_option("--k2", b_k2, "K_S^2")->required();
  bound->add_flag("--cases", b_cases, "also print the per-case k bounds");
  bound->add_option("--format", b_format, "text|json")->default_str("text");

  // check
  auto* check = app.add_subcommand("check", "Full invariant report for one config");
  long long c_k = 0, c_l = 0, c_t = 0, c_n4 = 0, c_n6 = 0, c_n8 = 0;
  std::optional<long long> c_e;
  std::string c_rlist;
  std::string c_format = "text";
  check->add_option("--k", c_k, "fibre degree k (even)")->required();
  check->add_option("--l", c_l, "class coordinate l")->required();
  check->add_option("--t", c_t, "blow-down count t")->default_val(0);
  check->add_option("--n4", c_n4, "number of r=4 points");
  check->add_option("--n6", c_n6, "number of r=6 points");
  check->add_option("--n8", c_n8, "number of r=8 points");
  check->add_option("--rlist", c_rlist, "comma-separated multiplicities r_i");
  check->add_option("--e", c_e, "Hirzebruch index (advisory)");
  check->add_option("--format", c_format, "text|json")->default_str("text");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate one (g, delta) cell");
  CellQuery q;
  std::string e_mode = "max";
  std::string e_format = "text";
  enumerate->add_option("--g", q.g, "minimal genus g")->required();
  enumerate->add_option("--delta", q.delta, "K^2 - 3chi")->required();
  enumerate->add_option("--mode", e_mode, "max|all")->default_str("max");
  enumerate->add_option("--t-max", q.t_max, "t search cap")->default_val(11);
  enumerate->add_option("--n4-max", q.n4_max, "N4 search cap")->default_val(11);
  enumerate->add_option("--format", e_format, "text|json|csv")->default_str("text");

  // table
  auto* tablecmd = app.add_subcommand("table", "Maximal-chi table over ranges");
  std::string t_grange = "5..10", t_drange = "-16..-7";
  bool t_compare = false;
  std::string t_reference = HYPELL_DEFAULT_REFERENCE;
  std::string t_format = "text";
  tablecmd->add_option("--g-range", t_grange, "genus range a..b")->required();
  tablecmd->add_option("--delta-range", t_drange, "delta range a..b")->required();
  tablecmd->add_flag("--compare-reference", t_compare,
                     "compare against the published table fixture");
  tablecmd->add_option("--reference", t_reference, "path to the fixture CSV");
  tablecmd->add_option("--format", t_format, "text|json|csv")->default_str("text");

  // convert
  auto* convert = app.add_subcommand("convert", "Plane branch curve to ruled model");
  long long v_degree = 0, v_mult = 0;
  std::string v_format = "text";
  convert->add_option("--degree", v_degree, "plane curve degree")->required();
  convert->add_option("--mult", v_mult, "multiplicity of the pencil base point")
      ->default_val(0);
  convert->add_option("--format", v_format, "text|json")->default_str("text");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*bound) return cmd_bound(b_chi, b_k2, b_cases, b_format);
    if (*check) {
      BranchConfig config;
      config.k = c_k;
      config.l = c_l;
      config.t = c_t;
      config.e = c_e;
      if (!c_rlist.empty()) {
        if (check->count("--n4") || check->count("--n6") || check->count("--n8")) {
          std::cerr << "error: --rlist conflicts with --n4/--n6/--n8\n";
          return 1;
        }
        std::vector<long long> rs;
        std::stringstream ss(c_rlist);
        std::string tok;
        while (std::getline(ss, tok, ',')) rs.push_back(std::stoll(tok));
        config.spectrum = SingularitySpectrum(std::move(rs));
      } else {
        config.spectrum = SingularitySpectrum::from_counts(c_n4, c_n6, c_n8);
      }
      return cmd_check(std::move(config), c_format);
    }
    if (*enumerate) {
      if (e_mode != "max" && e_mode != "all") {
        std::cerr << "error: --mode must be max or all\n";
        return 1;
      }
      q.mode = e_mode == "all" ? Mode::all : Mode::max;
      return cmd_enumerate(q, e_format);
    }
    if (*tablecmd)
      return cmd_table(parse_range(t_grange), parse_range(t_drange), t_compare,
                       t_reference, t_format);
    if (*convert) return cmd_convert(v_degree, v_mult, v_format);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
