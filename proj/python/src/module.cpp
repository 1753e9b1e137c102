// Copyright 2026 The severi-census Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "severi/census.hpp"
#include "severi/cli.hpp"
#include "severi/errors.hpp"
#include "severi/json_io.hpp"
#include "severi/numerics.hpp"
#include "severi/triangulation.hpp"
#include "severi/tropical.hpp"

namespace py = pybind11;
using namespace severi;

namespace {

// Structured results cross the boundary as JSON text; the Python side
// decodes them, so both sides share one serialization.
std::string dump(const Json& j) { return j.dump(); }

LaurentPoly laurent(std::int64_t k, std::int64_t k_prime, const std::vector<Complex>& coeffs) {
  return LaurentPoly::make(k, k_prime, coeffs);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lattice censuses, kite triangulations and Laurent polynomial passports";

  static const py::handle severi_error = py::exception<Error>(m, "SeveriError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(severi_error.ptr(), (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def("run", [](const std::vector<std::string>& args) {
    const CommandResult r = run(args);
    return py::make_tuple(r.exit_code, dump(r.document()));
  }, py::arg("args"), "Run a CLI subcommand; returns (exit_code, JSON document).");

  m.def("general_lower_bound", [](const std::vector<std::pair<std::int64_t, std::int64_t>>& vertices,
                                  std::int64_t genus) {
    std::vector<IntPoint> pts;
    for (const auto& [x, y] : vertices) pts.push_back({x, y});
    return dump(to_json(general_lower_bound(normalize_polygon(pts), genus)));
  }, py::arg("vertices"), py::arg("genus"));

  m.def("kite_count", [](std::int64_t k, std::int64_t kp, std::int64_t genus) {
    return dump(to_json(kite_count(KiteSpec::make(k, kp), genus)));
  }, py::arg("k"), py::arg("k_prime"), py::arg("genus"));

  m.def("genus1_closed_form", [](std::int64_t k, std::int64_t kp) {
    return genus1_closed_form(KiteSpec::make(k, kp));
  }, py::arg("k"), py::arg("k_prime"));

  m.def("admissible_pairs", [](std::int64_t k, std::int64_t kp, std::int64_t genus) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (const auto& p : admissible_pairs(KiteSpec::make(k, kp), genus)) out.emplace_back(p.index, p.kappa);
    return out;
  }, py::arg("k"), py::arg("k_prime"), py::arg("genus"));

  m.def("kite_triangulation", [](std::int64_t k, std::int64_t kp, std::int64_t genus, std::int64_t index,
                                 std::int64_t kappa) {
    const Triangulation tri = kite_triangulation(KiteSpec::make(k, kp), genus, index, kappa);
    const TropicalCurve curve = dual_tropical_curve(tri);
    const CurveLattices lat = curve_lattices(curve, tri);
    return dump({{"triangulation", to_json(tri)},
                 {"curve", to_json(curve)},
                 {"lattices", {{"N", to_json(lat.n_gamma)}, {"M", to_json(lat.m_gamma)}}}});
  }, py::arg("k"), py::arg("k_prime"), py::arg("genus"), py::arg("index"), py::arg("kappa"));

  m.def("poly_roots", [](const std::vector<Complex>& coeffs) {
    std::vector<std::pair<Complex, int>> out;
    for (const auto& r : poly_roots(coeffs)) out.emplace_back(r.value, r.multiplicity);
    return out;
  }, py::arg("coeffs"), "Roots of sum coeffs[i] w^i with multiplicities.");

  m.def("passport", [](std::int64_t k, std::int64_t kp, const std::vector<Complex>& coeffs) {
    return passport(laurent(k, kp, coeffs)).partitions;
  }, py::arg("k"), py::arg("k_prime"), py::arg("coeffs"));

  m.def("expected_passport", [](std::int64_t d1, std::int64_t d2, std::int64_t k, std::int64_t kp) {
    return expected_passport(d1, d2, KiteSpec::make(k, kp)).partitions;
  }, py::arg("delta1"), py::arg("delta2"), py::arg("k"), py::arg("k_prime"));

  m.def("nodal_partition", [](std::int64_t k, std::int64_t kp, const std::vector<Complex>& coeffs, Complex a,
                              Complex b) {
    const NodalData n = nodal_partition(laurent(k, kp, coeffs), a, b);
    return py::dict(py::arg("delta1") = n.delta1, py::arg("delta2") = n.delta2, py::arg("kappa") = n.kappa,
                    py::arg("genus") = n.genus);
  }, py::arg("k"), py::arg("k_prime"), py::arg("coeffs"), py::arg("a"), py::arg("b"));

  m.def("chebyshev", [](std::int64_t n) { return chebyshev(n).coeffs; }, py::arg("n"),
        "Coefficients of T_n, constant term first.");
}
