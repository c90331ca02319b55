#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "k3inv/curves.hpp"
#include "k3inv/moduli.hpp"
#include "k3inv/mukai.hpp"
#include "k3inv/registry.hpp"
#include "k3inv/series.hpp"
#include "k3inv/surfaces.hpp"
#include "k3inv/wps.hpp"

namespace py = pybind11;

namespace {

// arbitrary-precision values cross into python as true ints
py::int_ to_py(const k3inv::Integer& value) {
  PyObject* obj = PyLong_FromString(value.to_string().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::list series_coeffs(const k3inv::series::TruncatedSeries& s) {
  py::list out;
  for (int d = 0; d <= s.truncation_order(); ++d) out.append(to_py(s.coefficient(d)));
  return out;
}

k3inv::moduli::LocusDescriptor make_locus(const std::string& family, long long g, long long k,
                                          long long h, long long a) {
  using k3inv::moduli::LocusDescriptor;
  if (family == "gonal") return LocusDescriptor::gonal(g, k);
  if (family == "elliptic_cover") return LocusDescriptor::elliptic_cover(g, k);
  if (family == "genus_h_cover") return LocusDescriptor::genus_h_cover(g, k, h);
  if (family == "hyperelliptic_H") return LocusDescriptor::hyperelliptic(g, a, h);
  if (family == "bielliptic_E") return LocusDescriptor::bielliptic(g, k);
  if (family == "genus2_D") return LocusDescriptor::genus2_cover(g, k);
  if (family == "moduli_M") return LocusDescriptor::moduli_space(g);
  if (family == "K3_pairs") return LocusDescriptor::k3_pairs(g);
  throw std::invalid_argument("unknown locus family: " + family);
}

}  // namespace

PYBIND11_MODULE(k3inv, m) {
  m.doc() = "exact integer invariants of K3 curves, weighted complete intersections "
            "and scroll geometry, with a verified claims registry";

  // series
  m.def("binomial",
        [](long long n, long long k) { return to_py(k3inv::series::binomial(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("h_proj", [](int n, long long k) { return to_py(k3inv::series::h_proj(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("series_one_over_products",
        [](const std::vector<int>& weights, int truncation) {
          return series_coeffs(k3inv::series::one_over_products(weights, truncation));
        },
        py::arg("weights"), py::arg("truncation"),
        "coefficients of prod 1/(1 - t^w) for degrees 0..truncation");
  m.def("series_ratio",
        [](const std::vector<int>& degrees, const std::vector<int>& weights, int truncation) {
          return series_coeffs(k3inv::series::ratio(degrees, weights, truncation));
        },
        py::arg("degrees"), py::arg("weights"), py::arg("truncation"),
        "coefficients of prod(1 - t^d) / prod(1 - t^w) for degrees 0..truncation");

  // weighted complete intersections
  m.def("section_count",
        [](const std::vector<int>& weights, const std::vector<int>& degrees, int mm) {
          return to_py(k3inv::wps::section_count({weights, degrees}, mm));
        },
        py::arg("weights"), py::arg("degrees"), py::arg("m"));
  m.def("canonical_weight",
        [](const std::vector<int>& weights, const std::vector<int>& degrees) {
          return k3inv::wps::canonical_weight({weights, degrees});
        },
        py::arg("weights"), py::arg("degrees"));
  m.def("fano_index",
        [](const std::vector<int>& weights, const std::vector<int>& degrees, int mm) {
          return k3inv::wps::fano_index({weights, degrees}, mm);
        },
        py::arg("weights"), py::arg("degrees"), py::arg("m"));
  m.def("universal_extension",
        [](int g1, int k) {
          const auto& c = k3inv::wps::extension_case(g1, k);
          auto s = k3inv::wps::universal_extension_check(c);
          py::dict out;
          out["label"] = c.label;
          out["dim"] = s.dimension;
          out["index"] = s.index;
          out["target"] = s.target;
          return out;
        },
        py::arg("g1"), py::arg("k"));
  m.def("extension_cases", [] {
    py::list out;
    for (const auto& c : k3inv::wps::extension_catalog()) out.append(py::make_tuple(c.g1, c.k));
    return out;
  });

  // curves
  m.def("k3_curve_genus",
        [](long long g1, long long k) { return to_py(k3inv::curves::k3_curve_genus(g1, k)); },
        py::arg("g1"), py::arg("k"));
  m.def("ci_curve_genus",
        [](int n, const std::vector<int>& degrees) {
          return to_py(k3inv::curves::ci_curve_genus(n, degrees));
        },
        py::arg("n"), py::arg("degrees"));
  m.def("clifford_general",
        [](long long g1, long long k) { return to_py(k3inv::curves::clifford_general(g1, k)); },
        py::arg("g1"), py::arg("k"));
  m.def("clifford_restriction",
        [](long long g1, long long k, long long l) {
          return to_py(k3inv::curves::clifford_restriction(g1, k, l));
        },
        py::arg("g1"), py::arg("k"), py::arg("l"));
  m.def("exceptional_low", &k3inv::curves::exceptional_low, py::arg("g1"), py::arg("k"));
  m.def("max_k_for_genus", &k3inv::curves::max_k_for_genus, py::arg("g1"), py::arg("bound"));
  m.def("rr_h0",
        [](long long deg, long long g, long long h1) {
          return to_py(k3inv::curves::rr_h0(deg, g, h1));
        },
        py::arg("deg"), py::arg("g"), py::arg("h1") = 0);
  m.def("serre_h1",
        [](long long deg, long long g, long long h0) {
          return to_py(k3inv::curves::serre_h1(deg, g, h0));
        },
        py::arg("deg"), py::arg("g"), py::arg("h0"));
  m.def("h0_nonspecial",
        [](long long deg, long long g) { return to_py(k3inv::curves::h0_nonspecial(deg, g)); },
        py::arg("deg"), py::arg("g"));
  m.def("clifford_h0_bound",
        [](long long deg) { return to_py(k3inv::curves::clifford_h0_bound(deg)); },
        py::arg("deg"));
  m.def("castelnuovo_genus",
        [](long long d, long long r) { return to_py(k3inv::curves::castelnuovo_genus(d, r)); },
        py::arg("d"), py::arg("r"));
  m.def("theta_degree",
        [](long long g, long long k) { return to_py(k3inv::curves::theta_degree(g, k)); },
        py::arg("g"), py::arg("k"));
  m.def("expected_theta_codim",
        [](long long g1) { return to_py(k3inv::curves::expected_theta_codim(g1)); },
        py::arg("g1"));

  // surfaces
  m.def("hirzebruch_intersect",
        [](int n, long long a1, long long b1, long long a2, long long b2) {
          return k3inv::surfaces::intersect({a1, b1, n}, {a2, b2, n});
        },
        py::arg("n"), py::arg("a1"), py::arg("b1"), py::arg("a2"), py::arg("b2"));
  m.def("hirzebruch_h0",
        [](int n, long long a, long long b) { return to_py(k3inv::surfaces::h0({a, b, n})); },
        py::arg("n"), py::arg("a"), py::arg("b"));
  m.def("hirzebruch_pa",
        [](int n, long long a, long long b) {
          return to_py(k3inv::surfaces::arithmetic_genus({a, b, n}));
        },
        py::arg("n"), py::arg("a"), py::arg("b"));
  m.def("quadric_h0",
        [](long long a, long long b) { return to_py(k3inv::surfaces::quadric_h0(a, b)); },
        py::arg("a"), py::arg("b"));
  m.def("quadric_pa",
        [](long long a, long long b) { return to_py(k3inv::surfaces::quadric_genus(a, b)); },
        py::arg("a"), py::arg("b"));
  m.def("delpezzo_h0",
        [](int degree, long long mm) { return to_py(k3inv::surfaces::del_pezzo_h0(degree, mm)); },
        py::arg("degree"), py::arg("m"));
  m.def("geometric_genus",
        [](long long pa, long long nodes, long long cusps, long long triple_points) {
          return to_py(k3inv::surfaces::geometric_genus(
              k3inv::Integer(pa), {nodes, cusps, triple_points}));
        },
        py::arg("pa"), py::arg("nodes") = 0, py::arg("cusps") = 0, py::arg("triple_points") = 0);
  m.def("aut_dim", [](const std::string& kind) { return k3inv::surfaces::aut_dim(kind); },
        py::arg("kind"));

  // moduli
  m.def("locus_dim",
        [](const std::string& family, long long g, long long k, long long h, long long a) {
          return k3inv::moduli::locus_dim(make_locus(family, g, k, h, a));
        },
        py::arg("family"), py::arg("g"), py::arg("k") = 0, py::arg("h") = 0, py::arg("a") = 0);
  m.def("remarkable_difference", &k3inv::moduli::remarkable_difference, py::arg("g1"));
  m.def("fibre_dim_ci",
        [](int g1, int k) { return k3inv::moduli::fibre_dim_ci(g1, k).value; },
        py::arg("g1"), py::arg("k"));
  m.def("fibre_dim_parts",
        [](int g1, int k) {
          py::list out;
          for (const auto& part : k3inv::moduli::fibre_dim_ci(g1, k).parts)
            out.append(py::make_tuple(part.label, part.value));
          return out;
        },
        py::arg("g1"), py::arg("k"));
  m.def("ideal_sheaf_h0",
        [](int n, const std::vector<int>& degrees, int h) {
          return to_py(k3inv::moduli::ideal_sheaf_h0(n, degrees, h));
        },
        py::arg("n"), py::arg("degrees"), py::arg("h"));

  // stored homogeneous-variety data and its identities
  m.def("mukai_record",
        [](int g1) {
          const auto& r = k3inv::mukai::record(g1);
          py::dict out;
          out["dim_group"] = r.dim_group;
          out["dim_rep"] = r.dim_rep;
          out["dim_variety"] = r.dim_variety;
          out["stabilizer_threshold"] = r.stabilizer_threshold;
          out["dim_lines_through_point"] = r.dim_lines_through_point;
          return out;
        },
        py::arg("g1"));
  m.def("grassmann_dim", &k3inv::mukai::grassmann_dim, py::arg("k"), py::arg("n"));
  m.def("moduli_map_check",
        [](int g1) {
          auto c = k3inv::mukai::moduli_map_check(g1);
          py::dict out;
          out["source_dim"] = c.source_dim;
          out["target_dim"] = c.target_dim;
          out["defect"] = c.defect;
          return out;
        },
        py::arg("g1"));
  m.def("ic_family_check",
        [](int g1) {
          auto c = k3inv::mukai::ic_family_check(g1);
          py::dict out;
          out["ic_dim"] = c.ic_dim;
          out["kc_dim"] = c.kc_dim;
          return out;
        },
        py::arg("g1"));
  m.def("cork_general", &k3inv::mukai::cork_general, py::arg("g1"));
  m.def("ribbon_space_dim", &k3inv::mukai::ribbon_space_dim, py::arg("g1"));

  // registry
  m.def("run_claims",
        [](const std::string& manifest_path, const std::vector<std::string>& prefixes) {
          auto manifest = k3inv::registry::Manifest::load_file(
              k3inv::registry::default_manifest_path(manifest_path));
          auto report = k3inv::registry::run_claims(manifest, prefixes);
          return k3inv::registry::emit_json(report);
        },
        py::arg("manifest") = std::string{}, py::arg("prefixes") = std::vector<std::string>{},
        "run the claims manifest and return the JSON report as a string");
}
