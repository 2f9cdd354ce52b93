#pragma once

// JSON schemas for the CLI. Rationals serialize as plain integers when
// integral and as "p/q" strings otherwise; iteration orders are fixed so
// identical inputs always produce byte-identical output.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbipar/abgroup.hpp"
#include "orbipar/covers.hpp"
#include "orbipar/error.hpp"
#include "orbipar/finitegroup.hpp"
#include "orbipar/orbifold.hpp"
#include "orbipar/parabolic.hpp"
#include "orbipar/report.hpp"
#include "orbipar/reptheory.hpp"

namespace orbipar {

inline const Json& require_field(const Json& j, const std::string& key,
                                 const std::string& where) {
  check(j.is_object(), errc::bad_input, where + " must be a JSON object");
  auto it = j.find(key);
  check(it != j.end(), errc::bad_input, "missing field '" + key + "' in " + where);
  return *it;
}

inline Int int_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (...) {
      fail(errc::bad_input, where + ": not an integer");
    }
  }
  fail(errc::bad_input, where + ": expected an integer");
}

inline Json json_from_int(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return Json(v.convert_to<long long>());
  return Json(v.str());
}

inline Rat rat_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(Int(s));
      Int num(s.substr(0, slash));
      Int den(s.substr(slash + 1));
      check(den != 0, errc::bad_input, where + ": zero denominator");
      return Rat(num, den);
    } catch (const Error&) {
      throw;
    } catch (...) {
      fail(errc::bad_input, where + ": malformed rational '" + s + "'");
    }
  }
  fail(errc::bad_input, where + ": expected an integer or a \"p/q\" string");
}

inline Json json_from_rat(const Rat& r) {
  if (rat_den(r) == 1) return json_from_int(rat_num(r));
  return Json(rat_to_string(r));
}

inline Json json_from_qmodz(const QmodZ& w) { return json_from_rat(w.as_rat()); }

// ---- orbifold curves: {"genus":0,"points":[{"label":"0","r":2},...]} ----

inline OrbifoldCurve orbifold_from_json(const Json& j) {
  int genus = static_cast<int>(int_from_json(require_field(j, "genus", "orbifold"),
                                             "orbifold.genus").convert_to<long long>());
  std::vector<OrbifoldPoint> pts;
  const Json& points = require_field(j, "points", "orbifold");
  check(points.is_array(), errc::bad_input, "orbifold.points must be an array");
  for (const auto& p : points) {
    std::string label = require_field(p, "label", "orbifold point").get<std::string>();
    Int r = int_from_json(require_field(p, "r", "orbifold point"), "orbifold point order");
    check(r >= 1 && r <= 1000000, errc::bad_input, "root order out of range");
    pts.push_back({label, static_cast<std::uint32_t>(r.convert_to<std::uint64_t>())});
  }
  return OrbifoldCurve(genus, std::move(pts));
}

inline Json json_from_orbifold(const OrbifoldCurve& orb) {
  Json j;
  j["genus"] = orb.genus();
  Json pts = Json::array();
  for (const auto& p : orb.points()) {
    Json pj;
    pj["label"] = p.label;
    pj["r"] = p.order;
    pts.push_back(pj);
  }
  j["points"] = pts;
  return j;
}

// ---- abelian groups: {"generators":n,"relations":[[...]]} ----

inline FpAbelianGroup abgroup_from_json(const Json& j) {
  Int n = int_from_json(require_field(j, "generators", "abelian group"), "generators");
  check(n >= 0 && n <= 64, errc::bad_input, "generator count out of range");
  IntMat rel;
  const Json& rows = require_field(j, "relations", "abelian group");
  check(rows.is_array(), errc::bad_input, "relations must be an array");
  for (const auto& row : rows) {
    check(row.is_array(), errc::bad_input, "relation row must be an array");
    std::vector<Int> r;
    for (const auto& x : row) r.push_back(int_from_json(x, "relation entry"));
    rel.push_back(std::move(r));
  }
  return fp_group(static_cast<std::size_t>(n.convert_to<std::uint64_t>()), rel);
}

inline Json json_from_structure(const FpAbelianGroup& g) {
  Json j;
  j["free_rank"] = static_cast<std::uint64_t>(g.free_rank());
  Json f = Json::array();
  for (const auto& d : g.invariant_factors()) f.push_back(json_from_int(d));
  j["invariant_factors"] = f;
  j["structure"] = g.structure_string();
  return j;
}

// ---- finite groups ----
// {"type":"perm","degree":k,"gens":[[...]]} or
// {"type":"semidirect","A":{...},"H":{...},"action":[[[...]]]}

struct ParsedGroup {
  FiniteGroup group;
  std::optional<SemidirectProduct> semidirect;
};

inline ParsedGroup group_from_json(const Json& j, std::uint32_t order_cap = 10000) {
  std::string type = require_field(j, "type", "group").get<std::string>();
  if (type == "perm") {
    Int deg = int_from_json(require_field(j, "degree", "perm group"), "degree");
    check(deg >= 0 && deg <= 10000, errc::bad_input, "degree out of range");
    std::vector<std::vector<std::uint32_t>> gens;
    for (const auto& g : require_field(j, "gens", "perm group")) {
      std::vector<std::uint32_t> perm;
      for (const auto& x : g) {
        Int v = int_from_json(x, "permutation image");
        check(v >= 0 && v < deg, errc::bad_input, "permutation image out of range");
        perm.push_back(static_cast<std::uint32_t>(v.convert_to<std::uint64_t>()));
      }
      gens.push_back(std::move(perm));
    }
    ParsedGroup out;
    out.group = group_from_permutations(
        static_cast<std::uint32_t>(deg.convert_to<std::uint64_t>()), gens, order_cap);
    return out;
  }
  if (type == "semidirect") {
    FpAbelianGroup A = abgroup_from_json(require_field(j, "A", "semidirect"));
    ParsedGroup H = group_from_json(require_field(j, "H", "semidirect"), order_cap);
    std::vector<IntMat> action;
    for (const auto& mj : require_field(j, "action", "semidirect")) {
      IntMat m;
      for (const auto& row : mj) {
        std::vector<Int> r;
        for (const auto& x : row) r.push_back(int_from_json(x, "action entry"));
        m.push_back(std::move(r));
      }
      action.push_back(std::move(m));
    }
    ParsedGroup out;
    out.semidirect = semidirect_product(A, H.group, action);
    out.group = out.semidirect->group;
    return out;
  }
  fail(errc::bad_input, "unknown group type '" + type + "'");
}

// ---- covers: {"base":{...},"group":{...},"tuple":[...],"H":[...]} ----

struct ParsedCover {
  ParsedGroup group;
  TameCover cover;
};

inline ParsedCover cover_from_json(const Json& j, std::uint32_t order_cap = 10000) {
  ParsedCover out;
  out.group = group_from_json(require_field(j, "group", "cover"), order_cap);
  OrbifoldCurve base = orbifold_from_json(require_field(j, "base", "cover"));
  std::vector<std::uint32_t> tuple;
  for (const auto& x : require_field(j, "tuple", "cover")) {
    Int v = int_from_json(x, "tuple entry");
    check(v >= 0 && v < out.group.group.order(), errc::bad_input, "tuple entry out of range");
    tuple.push_back(static_cast<std::uint32_t>(v.convert_to<std::uint64_t>()));
  }
  std::vector<std::uint32_t> hgens;
  for (const auto& x : require_field(j, "H", "cover")) {
    Int v = int_from_json(x, "subgroup generator");
    check(v >= 0 && v < out.group.group.order(), errc::bad_input,
          "subgroup generator out of range");
    hgens.push_back(static_cast<std::uint32_t>(v.convert_to<std::uint64_t>()));
  }
  auto mono = validate_monodromy(base, out.group.group, tuple);
  out.cover = TameCover(mono, Subgroup(out.group.group, hgens));
  return out;
}

// ---- characters on subgroups: {"H":[...], "chi":{"<gen>":"1/3", ...}} ----

inline std::pair<Subgroup, Character1D> character_from_json(const FiniteGroup& G, const Json& hj,
                                                            const Json& chij,
                                                            const std::string& where) {
  std::vector<std::uint32_t> gens;
  check(hj.is_array(), errc::bad_input, where + ".H must be an array");
  for (const auto& x : hj) {
    Int v = int_from_json(x, where + ".H entry");
    check(v >= 0 && v < G.order(), errc::bad_input, where + ".H entry out of range");
    gens.push_back(static_cast<std::uint32_t>(v.convert_to<std::uint64_t>()));
  }
  Subgroup S(G, gens);
  std::vector<QmodZ> vals;
  for (auto g : S.generators()) {
    std::string key = std::to_string(g);
    if (chij.is_object() && chij.contains(key))
      vals.push_back(QmodZ::from_rat(rat_from_json(chij.at(key), where + ".chi[" + key + "]")));
    else
      vals.push_back(QmodZ());
  }
  return {S, Character1D(S, vals)};
}

// ---- bundle data ----

inline Json json_from_bundle(const ParabolicBundleData& d) {
  Json j;
  j["rank"] = d.rank;
  Json split = Json::array();
  for (const auto& a : d.splitting) split.push_back(json_from_int(a));
  j["splitting"] = split;
  Json w = Json::object();
  for (std::size_t i = 0; i < d.orbifold.point_count(); ++i) {
    Json ws = Json::array();
    for (const auto& x : d.weights[i]) ws.push_back(json_from_qmodz(x));
    w[d.orbifold.point(i).label] = ws;
  }
  j["weights"] = w;
  j["parabolic_degree"] = json_from_rat(d.par_degree());
  return j;
}

inline Json json_from_geometry(const CoverGeometry& geom) {
  Json j;
  j["degree"] = geom.degree;
  j["genus_upstairs"] = geom.genus;
  Json pts = Json::array();
  for (const auto& p : geom.points) {
    Json pj;
    pj["label"] = p.label;
    pj["over"] = static_cast<std::uint64_t>(p.base_index);
    pj["ell"] = p.ell;
    pj["s"] = p.s;
    pts.push_back(pj);
  }
  j["points"] = pts;
  return j;
}

}  // namespace orbipar
