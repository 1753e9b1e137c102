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

#include "severi/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "severi/census.hpp"
#include "severi/config.hpp"
#include "severi/errors.hpp"
#include "severi/svg.hpp"

namespace severi {

namespace {

struct Options {
  std::string polygon, poly, out, svg, config, lattice, a, b, format = "json";
  std::int64_t k = 0, kprime = 0, genus = 0, index = 0, kappa = 0, samples = 400;
  double tol_res = 0, tol_val = 0, tol_cluster = 0;
  std::map<std::string, CLI::Option*> given;

  bool has(const std::string& name) const { return given.at(name)->count() > 0; }
};

[[noreturn]] void usage(const std::string& msg) { throw Error(ErrorCode::UsageError, msg); }

void require(const Options& o, std::initializer_list<const char*> names) {
  for (const char* n : names)
    if (!o.has(n)) usage(std::string("missing required flag --") + n);
}

KiteSpec kite_from(const Options& o) {
  require(o, {"k", "kprime"});
  return KiteSpec::make(o.k, o.kprime);
}

Sublattice lattice_from(const std::string& text) {
  std::istringstream in(text);
  std::int64_t v[3];
  char sep;
  if (!(in >> v[0] >> sep >> v[1] >> sep >> v[2])) throw Error(ErrorCode::ParseError, "--lattice expects d1,c,d2");
  return Sublattice::from_hnf(v[0], v[1], v[2]);
}

Tolerances tolerances_from(const Options& o) {
  ToleranceOverrides f;
  if (o.has("tol-res")) f.res = o.tol_res;
  if (o.has("tol-val")) f.val = o.tol_val;
  if (o.has("tol-cluster")) f.cluster = o.tol_cluster;
  return resolve_tolerances(o.has("config") ? std::optional(o.config) : std::nullopt, f);
}

Triangulation build_triangulation(const Options& o) {
  require(o, {"genus"});
  if (o.has("polygon")) {
    const LatticePolygon poly = polygon_from_json(read_json_file(o.polygon));
    const Sublattice lat = o.has("lattice") ? lattice_from(o.lattice) : Sublattice{};
    return incremental_triangulation(poly, lat, o.genus);
  }
  const KiteSpec kite = kite_from(o);
  if (!o.has("index")) return incremental_triangulation(kite.polygon(), Sublattice{}, o.genus);
  if (o.index % 2 == 1) {
    require(o, {"kappa"});
    return kite_triangulation(kite, o.genus, o.index, o.kappa);
  }
  // Even index: the general construction on the kite lattice, with kappa
  // pinned to g + 1.
  const auto pairs = admissible_pairs(kite, o.genus);
  const auto it = std::find_if(pairs.begin(), pairs.end(), [&](const AdmissiblePair& p) {
    return p.index == o.index && (!o.has("kappa") || p.kappa == o.kappa);
  });
  if (it == pairs.end()) throw Error(ErrorCode::NotAdmissible, "(index, kappa) is not admissible");
  return incremental_triangulation(kite.polygon(), it->lattice, o.genus);
}

LaurentPoly poly_from(const Options& o) {
  require(o, {"poly"});
  return laurent_from_json(read_json_file(o.poly));
}

Json critical_json(const std::vector<CriticalDatum>& data) {
  Json out = Json::array();
  for (const auto& d : data)
    out.push_back({{"point", complex_to_json(d.point)},
                   {"multiplicity", d.multiplicity},
                   {"value", complex_to_json(d.value)}});
  return out;
}

Json dispatch(const std::string& cmd, const Options& o, std::vector<std::string>& artifacts) {
  if (cmd == "polygon-bound") {
    require(o, {"polygon", "genus"});
    return to_json(general_lower_bound(polygon_from_json(read_json_file(o.polygon)), o.genus));
  }
  if (cmd == "kite-count") {
    require(o, {"genus"});
    return to_json(kite_count(kite_from(o), o.genus));
  }
  if (cmd == "admissible") {
    require(o, {"genus"});
    Json pairs = Json::array();
    for (const auto& p : admissible_pairs(kite_from(o), o.genus)) {
      Json row = to_json(p.lattice);
      row["kappa"] = p.kappa;
      pairs.push_back(std::move(row));
    }
    return {{"k", o.k}, {"k_prime", o.kprime}, {"genus", o.genus}, {"pairs", pairs}};
  }
  if (cmd == "kite-sublattices") {
    const KiteSpec kite = kite_from(o);
    Json rows = Json::array();
    for (const auto& kl : kite_sublattices(kite)) rows.push_back(to_json(kl.lattice));
    return {{"k", o.k}, {"k_prime", o.kprime}, {"lattices", rows}};
  }
  if (cmd == "genus1-check") {
    const KiteSpec kite = kite_from(o);
    const std::int64_t closed = genus1_closed_form(kite);
    const std::int64_t enumerated = kite_count(kite, 1).total;
    return {{"closed_form", closed}, {"enumerated", enumerated}, {"match", closed == enumerated}};
  }
  if (cmd == "triangulate" || cmd == "dual-curve") {
    const Triangulation tri = build_triangulation(o);
    Json payload{{"triangulation", to_json(tri)},
                 {"interior_vertices", interior_vertex_count(tri)},
                 {"regular", tri.heights.has_value() && verify_heights(tri, *tri.heights)}};
    Figure fig;
    fig.triangulation = tri;
    if (cmd == "dual-curve") {
      const TropicalCurve curve = dual_tropical_curve(tri);
      const CurveLattices lat = curve_lattices(curve, tri);
      payload["curve"] = to_json(curve);
      payload["lattices"] = {{"N", to_json(lat.n_gamma)}, {"M", to_json(lat.m_gamma)}};
      payload["trivalent"] = is_trivalent(curve);
      payload["balanced"] = is_balanced(curve);
      fig.curve = curve;
    }
    if (o.has("svg")) {
      emit_svg(fig, o.svg);
      artifacts.push_back(o.svg);
    }
    return payload;
  }
  if (cmd == "signature") {
    require(o, {"a", "b"});
    const LaurentPoly p = poly_from(o);
    const Tolerances tol = tolerances_from(o);
    const NodalData n = nodal_partition(p, parse_complex(o.a), parse_complex(o.b), tol);
    return {{"delta1", n.delta1}, {"delta2", n.delta2}, {"kappa", n.kappa}, {"genus", n.genus},
            {"critical_points", critical_json(critical_data(p, tol))}};
  }
  if (cmd == "passport") {
    const LaurentPoly p = poly_from(o);
    const Tolerances tol = tolerances_from(o);
    return {{"degree", p.degree()},
            {"passport", to_json(passport(p, tol))},
            {"critical_points", critical_json(critical_data(p, tol))}};
  }
  if (cmd == "amoeba") {
    require(o, {"a", "b"});
    const LaurentPoly p = poly_from(o);
    const auto cloud = amoeba_sample(p, parse_complex(o.a), parse_complex(o.b), o.samples, tolerances_from(o));
    Json pts = Json::array();
    for (const auto& q : cloud) pts.push_back(Json::array({q.u, q.v}));
    if (o.has("svg")) {
      Figure fig;
      fig.amoeba = cloud;
      emit_svg(fig, o.svg);
      artifacts.push_back(o.svg);
    }
    return {{"samples", o.samples}, {"points", pts}};
  }
  usage("unknown subcommand '" + cmd + "'");
}

bool is_csv(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
}

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Human-readable rendering; not covered by the byte-stability guarantee.
std::string table(const Json& payload) {
  std::ostringstream out;
  for (const auto& [key, value] : payload.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << key << ":\n";
      std::vector<std::string> cols;
      for (const auto& [c, _] : value.front().items()) cols.push_back(c);
      out << " ";
      for (const auto& c : cols) out << ' ' << c;
      out << '\n';
      for (const auto& row : value) {
        out << " ";
        for (const auto& c : cols) out << ' ' << (row.contains(c) ? scalar(row.at(c)) : "-");
        out << '\n';
      }
    } else {
      out << key << ": " << scalar(value) << '\n';
    }
  }
  return out.str();
}

}  // namespace

Json CommandResult::document() const {
  return {{"status", ok ? "ok" : "error"}, {"payload", payload}, {"artifacts", artifacts}};
}

CommandResult run(const std::vector<std::string>& args) {
  CommandResult result;
  CLI::App app{"Component censuses of Severi varieties on toric surfaces", "severi-census"};
  app.require_subcommand(1);
  Options o;
  auto opt = [&](const std::string& name, auto& target, const std::string& help) {
    o.given[name] = app.add_option("--" + name, target, help);
  };
  opt("polygon", o.polygon, "JSON file with polygon vertices");
  opt("k", o.k, "kite parameter k");
  opt("kprime", o.kprime, "kite parameter k'");
  opt("genus", o.genus, "genus g");
  opt("index", o.index, "sublattice index r");
  opt("kappa", o.kappa, "signature kappa");
  opt("lattice", o.lattice, "sublattice in normal form d1,c,d2");
  opt("poly", o.poly, "JSON file with a Laurent polynomial");
  opt("a", o.a, "coefficient a as RE,IM");
  opt("b", o.b, "coefficient b as RE,IM");
  opt("samples", o.samples, "amoeba sample count");
  opt("tol-res", o.tol_res, "root residual tolerance");
  opt("tol-val", o.tol_val, "critical value tolerance");
  opt("tol-cluster", o.tol_cluster, "root clustering tolerance");
  opt("config", o.config, "JSON config file with tolerance keys");
  opt("out", o.out, "write the result document (or CSV for amoeba) to FILE");
  opt("svg", o.svg, "write an SVG figure to FILE");
  o.given["format"] = app.add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));

  const std::vector<std::pair<const char*, const char*>> commands{
      {"polygon-bound", "sublattice lower bound for a polygon"},
      {"kite-count", "weighted count of admissible kite sublattices"},
      {"admissible", "admissible (lattice, kappa) pairs of a kite"},
      {"kite-sublattices", "sublattices <(1,k),(0,r)> of a kite"},
      {"genus1-check", "genus-one count against the divisor formula"},
      {"triangulate", "convex triangulation with a height certificate"},
      {"dual-curve", "dual tropical curve and its lattices"},
      {"signature", "nodal partition of a/z + p(w) + bz"},
      {"passport", "ramification passport of a Laurent polynomial"},
      {"amoeba", "sample the amoeba of a/z + p(w) + bz"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    result.payload = {{"help", app.help()}};
    result.output = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.ok = false;
    result.exit_code = 2;
    result.payload = {{"code", std::string(to_string(ErrorCode::UsageError))}, {"message", e.what()}};
    result.output = result.document().dump(2) + "\n";
    return result;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    result.payload = dispatch(cmd, o, result.artifacts);
    if (o.has("out")) {
      if (cmd == "amoeba" && is_csv(o.out)) {
        std::ostringstream csv;
        csv << "u,v\n";
        for (const auto& p : result.payload.at("points")) csv << p[0].dump() << ',' << p[1].dump() << '\n';
        write_file(o.out, csv.str());
        result.artifacts.push_back(o.out);
      } else {
        result.artifacts.push_back(o.out);
        write_file(o.out, result.document().dump(2) + "\n");
      }
    }
  } catch (const Error& e) {
    result.ok = false;
    result.exit_code = e.code() == ErrorCode::UsageError ? 2 : 1;
    result.payload = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  } catch (const std::exception& e) {
    result.ok = false;
    result.exit_code = 1;
    result.payload = {{"code", "Internal"}, {"message", e.what()}};
  }
  result.output = o.format == "table" && result.ok ? table(result.payload) : result.document().dump(2) + "\n";
  return result;
}

}  // namespace severi
