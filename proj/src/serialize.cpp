#include "cy2/serialize.hpp"

#include <algorithm>
#include <regex>

namespace cy2 {

namespace {

Color parse_color(const std::string& s, const std::string& context) {
  if (s == "+" || s == "g" || s == "green") return Color::green;
  if (s == "-" || s == "r" || s == "red") return Color::red;
  throw InputError("unknown colour '" + s + "' in " + context);
}

int checked_int(const Json& j, const std::string& context) {
  if (!j.is_number_integer()) throw InputError("expected an integer in " + context);
  return j.get<int>();
}

IndecSet ids_from_json(const Json& j, std::size_t universe, const char* field) {
  if (!j.is_array()) throw InputError(std::string("field '") + field + "' must be an array");
  IndecSet out(universe);
  for (const Json& e : j) {
    const int id = checked_int(e, field);
    if (id < 0 || static_cast<std::size_t>(id) >= universe) {
      throw InputError(std::string("id ") + std::to_string(id) + " out of range in '" + field +
                       "'");
    }
    out.insert(id);
  }
  return out;
}

const Json& field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw InputError(std::string("record is missing '") + name + "'");
  return *it;
}

// Looks up a coordinate, falling back to the orbit of a concrete diagonal or arc.
int resolve(const CategoryTables& tables, int i, int j, std::optional<Color> color,
            const std::string& text) {
  const CategorySpec& spec = tables.spec();
  Coordinate c{i, j, color.has_value(), color.value_or(Color::green)};
  if (auto id = tables.find(c)) return *id;
  try {
    if (spec.family == Family::A) {
      if (color) throw InputError("type A has no coloured diameters");
      return tables.class_of(Diagonal::make(i, j, spec.polygon_size()));
    }
    const int u = spec.half();
    const bool is_diam = wrap_vertex(j - i, 2 * u) == u || wrap_vertex(i - j, 2 * u) == u;
    if (is_diam && !color) throw InputError("diameter needs a colour (+ or -)");
    if (!is_diam && color) throw InputError("only diameters carry a colour");
    return tables.class_of(is_diam ? ArcD::diameter(i, *color, u) : ArcD::pair(i, j, u));
  } catch (const std::invalid_argument& e) {
    throw InputError("bad element " + text + " for " + spec.name() + ": " + e.what());
  }
}

}  // namespace

Json to_json(const Diagonal& d) { return Json::array({d.first(), d.second()}); }

Json to_json(const DiagonalSet& u) {
  Json diags = Json::array();
  for (const Diagonal& d : u) diags.push_back(to_json(d));
  return {{"ngon", u.ngon()}, {"diagonals", diags}};
}

Json to_json(const ArcD& a) {
  if (a.is_diameter()) {
    return {{"diam", a.first()}, {"color", std::string(1, color_code(a.color()))}};
  }
  return {{"pair", Json::array({a.first(), a.second()})}};
}

Json to_json(const ArcSetD& u) {
  Json arcs = Json::array();
  for (const ArcD& a : u) arcs.push_back(to_json(a));
  return {{"u", u.half()}, {"arcs", arcs}};
}

Diagonal diagonal_from_json(const Json& j, int ngon) {
  if (!j.is_array() || j.size() != 2) throw InputError("diagonal must be [i, j]: " + j.dump());
  try {
    return Diagonal::make(checked_int(j[0], j.dump()), checked_int(j[1], j.dump()), ngon);
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

DiagonalSet diagonal_set_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("diagonal set must be an object");
  const int ngon = checked_int(field(j, "ngon"), "ngon");
  try {
    DiagonalSet out(ngon);
    for (const Json& d : field(j, "diagonals")) out.insert(diagonal_from_json(d, ngon));
    return out;
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

ArcD arc_from_json(const Json& j, int u) {
  try {
    if (j.is_object() && j.contains("pair")) {
      const Json& p = j["pair"];
      if (!p.is_array() || p.size() != 2) throw InputError("pair must be [i, j]: " + j.dump());
      return ArcD::pair(checked_int(p[0], j.dump()), checked_int(p[1], j.dump()), u);
    }
    if (j.is_object() && j.contains("diam")) {
      const Json& c = field(j, "color");
      if (!c.is_string()) throw InputError("colour must be a string: " + j.dump());
      return ArcD::diameter(checked_int(j["diam"], j.dump()),
                            parse_color(c.get<std::string>(), j.dump()), u);
    }
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  throw InputError("arc must be {\"pair\":[i,j]} or {\"diam\":i,\"color\":c}: " + j.dump());
}

Json ids_json(const IndecSet& x) { return x.ids(); }

Json labels_json(const CategoryTables& tables, const IndecSet& x) {
  Json out = Json::array();
  for (int id : x.ids()) out.push_back(label(tables.indec(id)));
  return out;
}

Json tables_to_json(const CategoryTables& tables) {
  const CategorySpec& spec = tables.spec();
  Json indecs = Json::array();
  for (const Indec& x : tables.indecs()) {
    Json rep = spec.family == Family::A ? to_json(tables.orbit_a(x.id)[0])
                                        : to_json(tables.orbit_d(x.id)[0]);
    indecs.push_back({{"id", x.id},
                      {"label", label(x)},
                      {"rep", rep},
                      {"level", x.level},
                      {"length", x.length},
                      {"rigid", x.rigid}});
  }
  Json ext = Json::array();
  Json hom = Json::array();
  for (std::size_t a = 0; a < tables.size(); ++a) {
    ext.push_back(tables.ext_row(static_cast<int>(a)).bitstring());
    hom.push_back(tables.hom_row(static_cast<int>(a)).bitstring());
  }
  Json out = {{"family", to_string(spec.family)},
              {"n", spec.n},
              {"t", spec.t},
              {"name", spec.name()},
              {"polygon", spec.polygon_size()},
              {"indecs", indecs},
              {"ext", ext},
              {"hom", hom},
              {"shift", Json(std::vector<int>(tables.shift_perm().begin(),
                                              tables.shift_perm().end()))}};
  if (spec.family == Family::A) {
    Json dims = Json::array();
    for (std::size_t a = 0; a < tables.size(); ++a) {
      std::vector<int> row;
      for (std::size_t b = 0; b < tables.size(); ++b) {
        row.push_back(tables.hom_dim(static_cast<int>(a), static_cast<int>(b)));
      }
      dims.push_back(row);
    }
    out["hom_dims"] = dims;
  }
  return out;
}

Json to_json(const WingDecomposition& w) {
  Json out = Json::array();
  for (const WingComponent& c : w) out.push_back({{"apex", c.apex}, {"members", ids_json(c.members)}});
  return out;
}

Json to_json(const HeartReport& h) {
  Json out = {{"core", ids_json(h.core)},
              {"num_simples", h.num_simples},
              {"zero", h.zero_heart()},
              {"catalog_note", h.catalog_note}};
  out["hom_matrix"] = h.hom_matrix ? Json(*h.hom_matrix) : Json(nullptr);
  out["algebra_dim"] = h.algebra_dim ? Json(*h.algebra_dim) : Json(nullptr);
  return out;
}

Json to_json(const TorsionPairRecord& r, const std::optional<HeartReport>& heart) {
  Json out = {{"x", ids_json(r.x)},
              {"y", ids_json(r.y)},
              {"core", ids_json(r.core)},
              {"t_structure", r.is_t_structure},
              {"x_all_rigid", r.x_all_rigid},
              {"y_all_rigid", r.y_all_rigid}};
  out["d1_case"] = r.d1_case ? Json(to_string(*r.d1_case)) : Json(nullptr);
  out["wings"] = r.wings ? to_json(*r.wings) : Json(nullptr);
  if (heart) out["heart"] = to_json(*heart);
  return out;
}

Json records_to_json(const std::vector<TorsionPairRecord>& records, const CategoryTables& tables,
                     bool hearts) {
  Json out = Json::array();
  for (const TorsionPairRecord& r : records) {
    out.push_back(hearts ? to_json(r, heart_report(r, tables)) : to_json(r));
  }
  return out;
}

std::vector<TorsionPairRecord> records_from_json(const Json& j, std::size_t universe) {
  if (!j.is_array()) throw InputError("records file must hold a JSON array");
  std::vector<TorsionPairRecord> out;
  for (const Json& e : j) {
    if (!e.is_object()) throw InputError("record must be an object: " + e.dump());
    TorsionPairRecord r;
    r.x = ids_from_json(field(e, "x"), universe, "x");
    r.y = ids_from_json(field(e, "y"), universe, "y");
    r.core = ids_from_json(field(e, "core"), universe, "core");
    r.is_t_structure = field(e, "t_structure").get<bool>();
    r.x_all_rigid = field(e, "x_all_rigid").get<bool>();
    r.y_all_rigid = field(e, "y_all_rigid").get<bool>();
    const Json& d1 = field(e, "d1_case");
    if (!d1.is_null()) {
      try {
        r.d1_case = parse_d1_case(d1.get<std::string>());
      } catch (const std::invalid_argument& ex) {
        throw InputError(ex.what());
      }
    }
    const Json& wings = field(e, "wings");
    if (!wings.is_null()) {
      WingDecomposition w;
      for (const Json& c : wings) {
        w.push_back({checked_int(field(c, "apex"), "apex"),
                     ids_from_json(field(c, "members"), universe, "members")});
      }
      r.wings = std::move(w);
    }
    out.push_back(std::move(r));
  }
  return out;
}

int element_from_json(const CategoryTables& tables, const Json& j) {
  const std::string text = j.dump();
  if (j.is_number_integer()) {
    const int id = j.get<int>();
    if (id < 0 || static_cast<std::size_t>(id) >= tables.size()) {
      throw InputError("id " + text + " out of range for " + tables.spec().name());
    }
    return id;
  }
  if (j.is_array() && (j.size() == 2 || j.size() == 3)) {
    std::optional<Color> color;
    if (j.size() == 3) {
      if (!j[2].is_string()) throw InputError("colour must be a string in " + text);
      color = parse_color(j[2].get<std::string>(), text);
    }
    return resolve(tables, checked_int(j[0], text), checked_int(j[1], text), color, text);
  }
  if (j.is_string()) {
    static const std::regex pattern(R"(\s*\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*([+\-gr]?)\s*\)?\s*)");
    const std::string s = j.get<std::string>();
    std::smatch m;
    if (!std::regex_match(s, m, pattern)) throw InputError("cannot parse element " + text);
    std::optional<Color> color;
    if (m[3].length() > 0) color = parse_color(m[3].str(), text);
    return resolve(tables, std::stoi(m[1].str()), std::stoi(m[2].str()), color, text);
  }
  if (j.is_object()) {
    if (tables.spec().family != Family::D) throw InputError("arc objects need family D: " + text);
    try {
      return tables.class_of(arc_from_json(j, tables.spec().half()));
    } catch (const InputError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw InputError("bad element " + text + ": " + e.what());
    }
  }
  throw InputError("cannot parse element " + text);
}

IndecSet set_from_json(const CategoryTables& tables, const Json& j) {
  if (!j.is_array()) throw InputError("set must be a JSON array: " + j.dump());
  IndecSet out(tables.size());
  for (const Json& e : j) out.insert(element_from_json(tables, e));
  return out;
}

IndecSet parse_set(const CategoryTables& tables, const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (!j.is_discarded()) return set_from_json(tables, j);
  // Bare labels: "(1,3),(1,5+)".
  static const std::regex item(R"(\(([^()]*)\))");
  Json labels = Json::array();
  for (std::sregex_iterator it(text.begin(), text.end(), item), end; it != end; ++it) {
    labels.push_back(it->str());
  }
  std::string stripped = std::regex_replace(text, item, "");
  stripped.erase(std::remove_if(stripped.begin(), stripped.end(),
                                [](char c) { return c == ',' || c == ' ' || c == '{' || c == '}'; }),
                 stripped.end());
  if (!stripped.empty()) throw InputError("cannot parse set '" + text + "'");
  return set_from_json(tables, labels);
}

}  // namespace cy2
