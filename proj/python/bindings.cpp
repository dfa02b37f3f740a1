#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "levelrank/abacus.hpp"
#include "levelrank/affine.hpp"
#include "levelrank/blocks.hpp"
#include "levelrank/errors.hpp"
#include "levelrank/gln.hpp"
#include "levelrank/json_io.hpp"
#include "levelrank/partition.hpp"

namespace py = pybind11;
using namespace levelrank;

namespace {

using Parts = std::vector<int>;
using Components = std::vector<Parts>;
using Charged = std::pair<Components, std::vector<int>>;

Multipartition to_multi(const Components& comps) {
  std::vector<Partition> out;
  for (const auto& c : comps) out.emplace_back(c);
  return Multipartition(std::move(out));
}

Components from_multi(const Multipartition& mp) {
  Components out;
  for (const auto& c : mp.components()) out.push_back(c.parts());
  return out;
}

ChargedMultipartition to_charged(const Components& comps, const std::vector<int>& charges) {
  return {to_multi(comps), charges};
}

Charged from_charged(const ChargedMultipartition& cm) { return {from_multi(cm.components), cm.charges}; }

std::vector<Parts> parts_of(const std::vector<Partition>& ps) {
  std::vector<Parts> out;
  for (const auto& p : ps) out.push_back(p.parts());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Partitions, abaci and level-rank duality checks";

  static py::exception<LimitError> limit_error(mod, "LimitError", PyExc_RuntimeError);
  static py::exception<TheoremViolation> theorem_violation(mod, "TheoremViolation", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const LimitError& e) {
      py::set_error(limit_error, e.what());
    } catch (const TheoremViolation& e) {
      py::set_error(theorem_violation, e.what());
    }
  });

  mod.def("parse_partition", [](const std::string& text) { return parse_partition(text).parts(); });
  mod.def("hook_lengths", [](const Parts& p) { return hook_lengths(Partition(p)); });
  mod.def("is_core", [](const Parts& p, int m) { return is_core(Partition(p), m); });
  mod.def("conjugate", [](const Parts& p) { return conjugate(Partition(p)).parts(); });
  mod.def("enum_partitions", [](int n) { return parts_of(enum_partitions(n)); });

  mod.def("beta_set", [](const Parts& p, int charge, int lo, int hi) {
    return beta_set(Partition(p), charge).beads_in(lo, hi);
  }, py::arg("partition"), py::arg("charge"), py::arg("lo"), py::arg("hi"),
     "Beads of the beta-set in [lo, hi], ascending.");
  mod.def("m_core", [](const Parts& p, int m) { return m_core(Partition(p), m).parts(); });
  mod.def("m_quotient", [](const Parts& p, int m, int charge) {
    return from_multi(m_quotient(Partition(p), m, charge));
  }, py::arg("partition"), py::arg("m"), py::arg("charge") = 0);
  mod.def("big_upsilon", [](int m, const Parts& p, int charge) {
    return from_charged(big_upsilon(m, Partition(p), charge));
  });
  mod.def("big_upsilon_ml", [](int l, int m, const Components& comps, const std::vector<int>& charges) {
    return from_charged(big_upsilon_ml(l, m, to_charged(comps, charges)));
  });
  mod.def("render_abacus", [](const Components& comps, const std::vector<int>& charges, bool glyph) {
    return render_abacus(Abacus::from_charged(to_charged(comps, charges)),
                         glyph ? AbacusStyle::kGlyphs : AbacusStyle::kLabels);
  }, py::arg("components"), py::arg("charges"), py::arg("glyph") = false);

  mod.def("act_on_charges", [](const std::string& w, const std::vector<int>& charges) {
    return act_on_charges(parse_affine(w), charges);
  });
  mod.def("act_on_charged", [](const std::string& w, const Components& comps, const std::vector<int>& charges) {
    return from_charged(act_on_charged(parse_affine(w), to_charged(comps, charges)));
  });

  mod.def("block_key", [](const Components& comps, const std::vector<int>& charges, int e) {
    return json(block_key(to_charged(comps, charges), e)).dump();
  });

  mod.def("hc_series", [](int n, int m, const Parts& mu) { return parts_of(hc_series(n, m, Partition(mu))); });
  mod.def("series_intersection", [](int n, int l, const Parts& lambda, int m, const Parts& mu) {
    return parts_of(series_intersection(n, l, Partition(lambda), m, Partition(mu)));
  });
  mod.def("chi", [](const Parts& rho, int m, const Parts& mu) {
    return from_charged(chi(Partition(rho), m, Partition(mu)));
  });
  mod.def("effective_charge", [](int l, int m, const Parts& mu) { return effective_charge(l, m, Partition(mu)); });

  mod.def("verify_duality_json", [](int n, int l, const Parts& lambda, int m, const Parts& mu, int shift_bound,
                                    const std::optional<std::string>& w_l, const std::optional<std::string>& w_m) {
    std::optional<std::pair<AffinePermutation, AffinePermutation>> witnesses;
    if (w_l.has_value() != w_m.has_value()) throw ParseError("give both witnesses or neither");
    if (w_l) witnesses = std::make_pair(parse_affine(*w_l), parse_affine(*w_m));
    DualityReport report;
    {
      py::gil_scoped_release release;
      report = verify_duality(n, l, Partition(lambda), m, Partition(mu), shift_bound, witnesses);
    }
    return json(report).dump();
  });
  mod.def("verify_uglov_json", [](int l, int m, int k_max, int window) {
    UglovReport report;
    {
      py::gil_scoped_release release;
      report = verify_uglov(l, m, k_max, window);
    }
    json out = uglov_summary(report);
    out["instances"] = report.instances;
    return out.dump();
  });
}
