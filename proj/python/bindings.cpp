#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypell/bounds.hpp"
#include "hypell/enumerator.hpp"
#include "hypell/invariants.hpp"

namespace py = pybind11;
using namespace hypell;

namespace {

BranchConfig make_config(long long k, long long l, std::vector<long long> r_list,
                         long long t, std::optional<long long> e) {
  BranchConfig c;
  c.k = k;
  c.l = l;
  c.spectrum = SingularitySpectrum(std::move(r_list));
  c.t = t;
  c.e = e;
  c.validate();
  return c;
}

py::dict candidate_dict(const Candidate& c) {
  py::dict d;
  d["k"] = c.k;
  d["l"] = c.l;
  d["t"] = c.t;
  d["n4"] = c.n4;
  d["n6"] = c.n6;
  d["n8"] = c.n8;
  d["chi"] = c.chi;
  d["k2_min"] = c.k2_min;
  d["feasible_e"] = c.feasible_e;
  return d;
}

}  // namespace

PYBIND11_MODULE(_hypell, m) {
  m.doc() = "Exact invariants, genus bounds and branch-curve enumeration for "
            "hyperelliptic fibrations on double covers of ruled surfaces";

  py::register_exception<NonIntegralInvariant>(m, "NonIntegralInvariant",
                                               PyExc_ValueError);
  py::register_exception<PreconditionViolated>(m, "PreconditionViolated",
                                               PyExc_ValueError);
  py::register_exception<ParityMismatch>(m, "ParityMismatch", PyExc_ValueError);
  py::register_exception<OutOfRegime>(m, "OutOfRegime", PyExc_ValueError);
  py::register_exception<UnknownCase>(m, "UnknownCase", PyExc_ValueError);

  py::class_<BranchConfig>(m, "BranchConfig")
      .def(py::init(&make_config), py::arg("k"), py::arg("l"),
           py::arg("r_list") = std::vector<long long>{}, py::arg("t") = 0,
           py::arg("e") = std::nullopt)
      .def_readonly("k", &BranchConfig::k)
      .def_readonly("l", &BranchConfig::l)
      .def_readonly("t", &BranchConfig::t)
      .def_property_readonly(
          "r_list", [](const BranchConfig& c) { return c.spectrum.r_list(); })
      .def_property_readonly("genus", &BranchConfig::genus);

  py::class_<SurfaceInvariants>(m, "SurfaceInvariants")
      .def_readonly("chi", &SurfaceInvariants::chi)
      .def_readonly("k2_canres", &SurfaceInvariants::k2_canres)
      .def_readonly("k2_min", &SurfaceInvariants::k2_min)
      .def_readonly("genus", &SurfaceInvariants::genus)
      .def_readonly("delta", &SurfaceInvariants::delta);

  m.def("canres_invariants", &canres_invariants, py::arg("config"));
  m.def("rito_GH", &rito_GH, py::arg("k"), py::arg("chi"), py::arg("k2_min"),
        py::arg("t"));
  m.def("rito_identity_check", &rito_identity_check, py::arg("config"),
        py::arg("inv"));
  m.def(
      "thm2_b_residual",
      [](const BranchConfig& c, const SurfaceInvariants& inv) {
        Rational r = thm2_b_residual(c, inv);
        return std::make_pair(r.num(), r.den());
      },
      py::arg("config"), py::arg("inv"),
      "Residual of the N4+N6 balance as a (numerator, denominator) pair");
  m.def(
      "thm2_c_chi",
      [](long long k, long long l, long long n4, long long n6, long long n8) {
        Rational r = thm2_c_chi(k, l, n4, n6, n8);
        return std::make_pair(r.num(), r.den());
      },
      py::arg("k"), py::arg("l"), py::arg("n4"), py::arg("n6"), py::arg("n8"));
  m.def(
      "plane_to_ruled",
      [](long long degree, long long mult) {
        auto r = plane_to_ruled(degree, mult);
        return std::make_tuple(r.k, r.l, r.e);
      },
      py::arg("degree"), py::arg("mult"));

  m.def("genus_bound", &genus_bound, py::arg("chi"), py::arg("k2"));
  m.def(
      "k_bound_cases",
      [](long long chi, long long k2) {
        auto rep = k_bound_cases(chi, k2);
        py::list cases;
        for (const auto& cb : rep.cases) {
          py::dict d;
          d["label"] = cb.label;
          d["assumed_t"] = cb.assumed_t;
          if (cb.is_sqrt) {
            d["bound_p"] = cb.sqrt_p;
            d["bound_q"] = cb.sqrt_q;
          } else {
            d["bound"] = std::make_pair(cb.value.num(), cb.value.den());
          }
          cases.append(d);
        }
        py::dict out;
        out["cases"] = cases;
        out["max_even_k"] = rep.max_even_k;
        out["genus_cap"] = rep.genus_cap;
        return out;
      },
      py::arg("chi"), py::arg("k2"));
  m.def("r_max_cap", &r_max_cap, py::arg("k"), py::arg("l"), py::arg("deep_regime"));

  m.def(
      "conditions_check",
      [](long long k, long long l, long long t, long long n4, long long n6,
         long long n8) {
        std::vector<std::string> out;
        for (auto c : conditions_check(k, l, t, n4, n6, n8))
          out.push_back(to_string(c));
        return out;
      },
      py::arg("k"), py::arg("l"), py::arg("t"), py::arg("n4"), py::arg("n6"),
      py::arg("n8"));
  m.def("feasible_models", &feasible_models, py::arg("k"), py::arg("l"));
  m.def(
      "enumerate_cell",
      [](long long g, long long delta, const std::string& mode, long long t_max,
         long long n4_max) {
        CellQuery q;
        q.g = g;
        q.delta = delta;
        q.mode = mode == "all" ? Mode::all : Mode::max;
        q.t_max = t_max;
        q.n4_max = n4_max;
        auto res = enumerate_cell(q);
        py::dict out;
        out["max_chi"] = res.max_chi ? py::cast(*res.max_chi) : py::none();
        py::list ws;
        for (const auto& w : res.witnesses) ws.append(candidate_dict(w));
        out["witnesses"] = ws;
        return out;
      },
      py::arg("g"), py::arg("delta"), py::arg("mode") = "max",
      py::arg("t_max") = 11, py::arg("n4_max") = 11);
  m.def(
      "max_chi_table",
      [](long long g_lo, long long g_hi, long long d_lo, long long d_hi) {
        auto t = max_chi_table(g_lo, g_hi, d_lo, d_hi);
        py::dict out;
        for (long long g = g_lo; g <= g_hi; ++g) {
          py::list row;
          for (long long d = d_hi; d >= d_lo; --d) {
            const auto& c = t.at(g, d);
            row.append(c ? py::cast(*c) : py::none());
          }
          out[py::cast(g)] = row;
        }
        return out;
      },
      py::arg("g_lo"), py::arg("g_hi"), py::arg("delta_lo"), py::arg("delta_hi"));
}
