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

#include "severi/json_io.hpp"

#include <fstream>
#include <sstream>

#include "severi/errors.hpp"

namespace severi {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::int64_t get_int(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
    bad(std::string("expected integer field '") + key + "'");
  return j.at(key).get<std::int64_t>();
}

const Json& get_array(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
    bad(std::string("expected array field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json point_to_json(IntPoint p) { return Json::array({p.x, p.y}); }

IntPoint point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    bad("expected an integer pair [x, y]");
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    bad("expected a complex number [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Complex parse_complex(const std::string& text) {
  std::istringstream in(text);
  double re = 0, im = 0;
  char comma = 0;
  if (!(in >> re)) bad("cannot parse complex number '" + text + "'");
  if (in >> comma) {
    if (comma != ',' || !(in >> im)) bad("cannot parse complex number '" + text + "'");
  }
  std::string rest;
  if (in >> rest) bad("trailing characters in complex number '" + text + "'");
  return {re, im};
}

Json to_json(const LatticePolygon& poly) {
  Json verts = Json::array();
  for (const auto& v : poly.vertices()) verts.push_back(point_to_json(v));
  return {{"vertices", verts}, {"offset", point_to_json(poly.offset())}};
}

LatticePolygon polygon_from_json(const Json& j) {
  const Json& list = j.is_array() ? j : get_array(j, "vertices");
  std::vector<IntPoint> pts;
  for (const auto& p : list) pts.push_back(point_from_json(p));
  if (j.is_array()) return normalize_polygon(pts);
  const IntPoint offset = j.contains("offset") ? point_from_json(j.at("offset")) : IntPoint{};
  if (offset == IntPoint{} && !pts.empty() && pts.front() != IntPoint{})
    return LatticePolygon::in_place(pts);
  for (auto& p : pts) p = p - offset;
  return normalize_polygon(pts);
}

Json to_json(const Sublattice& lat) {
  Json basis = Json::array();
  for (const auto& b : lat.basis()) basis.push_back(point_to_json(b));
  return {{"basis", basis}, {"index", lat.index()}};
}

Sublattice sublattice_from_json(const Json& j) {
  const Json& basis = get_array(j, "basis");
  std::vector<IntPoint> gens;
  for (const auto& b : basis) gens.push_back(point_from_json(b));
  return hnf_sublattice(gens);
}

Json to_json(const Census& census) {
  Json entries = Json::array();
  for (const auto& e : census.entries) {
    Json row = to_json(e.lattice);
    row["delta_M"] = e.delta_M;
    row["multiplicity"] = e.multiplicity;
    row["kappas"] = e.kappas;
    entries.push_back(std::move(row));
  }
  return {{"polygon", to_json(census.polygon)},
          {"genus", census.genus},
          {"entries", entries},
          {"total", census.total},
          {"irreducible", census.irreducible},
          {"warnings", census.warnings}};
}

Census census_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("polygon")) bad("census needs a polygon");
  Census c{polygon_from_json(j.at("polygon")), get_int(j, "genus"), {}, get_int(j, "total"), false, {}};
  if (j.contains("irreducible")) c.irreducible = j.at("irreducible").get<bool>();
  if (j.contains("warnings")) c.warnings = j.at("warnings").get<std::vector<std::string>>();
  for (const auto& e : get_array(j, "entries")) {
    CensusEntry entry;
    entry.lattice = sublattice_from_json(e);
    entry.index = get_int(e, "index");
    entry.delta_M = get_int(e, "delta_M");
    entry.multiplicity = get_int(e, "multiplicity");
    entry.kappas = get_array(e, "kappas").get<std::vector<std::int64_t>>();
    c.entries.push_back(std::move(entry));
  }
  return c;
}

Json to_json(const Triangulation& tri) {
  Json verts = Json::array(), tris = Json::array();
  for (const auto& v : tri.vertices) verts.push_back(point_to_json(v));
  for (const auto& t : tri.triangles) tris.push_back(Json::array({t[0], t[1], t[2]}));
  Json heights = nullptr;
  if (tri.heights) {
    heights = Json::array();
    for (const auto& h : *tri.heights) heights.push_back(to_fraction_string(h));
  }
  return {{"polygon", to_json(tri.polygon)},
          {"lattice", to_json(tri.lattice)},
          {"vertices", verts},
          {"triangles", tris},
          {"heights", heights},
          {"shift", point_to_json(tri.shift)}};
}

Triangulation triangulation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("polygon")) bad("triangulation needs a polygon");
  Triangulation tri{polygon_from_json(j.at("polygon")),
                    j.contains("lattice") ? sublattice_from_json(j.at("lattice")) : Sublattice{},
                    {}, {}, std::nullopt, {}};
  for (const auto& v : get_array(j, "vertices")) tri.vertices.push_back(point_from_json(v));
  for (const auto& t : get_array(j, "triangles")) {
    if (!t.is_array() || t.size() != 3) bad("triangle must list three vertex indices");
    Triangle tr{};
    for (int i = 0; i < 3; ++i) {
      if (!t[i].is_number_unsigned() || t[i].get<std::size_t>() >= tri.vertices.size())
        bad("triangle vertex index out of range");
      tr[i] = t[i].get<std::size_t>();
    }
    tri.triangles.push_back(tr);
  }
  if (j.contains("heights") && !j.at("heights").is_null()) {
    std::vector<Rational> h;
    for (const auto& s : get_array(j, "heights")) {
      if (!s.is_string()) bad("heights must be fraction strings");
      h.push_back(parse_fraction(s.get<std::string>()));
    }
    tri.heights = std::move(h);
  }
  if (j.contains("shift")) tri.shift = point_from_json(j.at("shift"));
  return tri;
}

Json to_json(const TropicalCurve& curve) {
  Json verts = Json::array(), edges = Json::array(), legs = Json::array();
  for (const auto& v : curve.vertices)
    verts.push_back(Json::array({to_fraction_string(v.x), to_fraction_string(v.y)}));
  for (const auto& e : curve.edges)
    edges.push_back({{"from", e.from},
                     {"to", e.to},
                     {"slope", point_to_json(e.slope)},
                     {"weight", e.weight},
                     {"m_weight", e.m_weight},
                     {"length", to_fraction_string(e.length)},
                     {"primal", Json::array({e.primal_a, e.primal_b})}});
  for (const auto& l : curve.legs)
    legs.push_back({{"from", l.from},
                    {"slope", point_to_json(l.slope)},
                    {"weight", l.weight},
                    {"m_weight", l.m_weight},
                    {"primal", Json::array({l.primal_a, l.primal_b})}});
  return {{"vertices", verts}, {"edges", edges}, {"legs", legs}, {"genus", curve.genus}};
}

Json to_json(const Passport& passport) {
  Json out = Json::array();
  for (const auto& p : passport.partitions) out.push_back(p);
  return out;
}

Json to_json(const LaurentPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs) coeffs.push_back(complex_to_json(c));
  return {{"k", p.k}, {"k_prime", p.k_prime}, {"coeffs", coeffs}};
}

LaurentPoly laurent_from_json(const Json& j) {
  const std::int64_t k = get_int(j, "k");
  const std::int64_t kp = get_int(j, "k_prime");
  std::vector<Complex> coeffs;
  for (const auto& c : get_array(j, "coeffs")) coeffs.push_back(complex_from_json(c));
  return LaurentPoly::make(k, kp, std::move(coeffs));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad("'" + path + "': " + e.what());
  }
}

}  // namespace severi
