#include "factoriad/json_io.hpp"

#include <fstream>
#include <sstream>

#include "factoriad/arrowmonad.hpp"
#include "factoriad/freyd.hpp"
#include "json.hpp"

namespace factoriad {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse(const std::string& text, const std::string& origin) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw LoadError(origin + ": " + e.what());
  }
}

std::string want_string(const ordered_json& j, const std::string& where) {
  if (!j.is_string()) throw LoadError(where + ": expected a string");
  return j.get<std::string>();
}

}  // namespace

CatPtr load_category_json(const std::string& text, const std::string& origin) {
  ordered_json j = parse(text, origin);
  if (!j.is_object()) throw LoadError(origin + ": expected a JSON object");

  CategoryData data;
  if (!j.contains("objects") || !j["objects"].is_array())
    throw LoadError(origin + ": missing 'objects' array");
  for (std::size_t i = 0; i < j["objects"].size(); ++i) {
    const auto& o = j["objects"][i];
    if (o.is_string()) {
      data.objects.push_back(o.get<std::string>());
    } else if (o.is_object() && o.contains("name")) {
      data.objects.push_back(want_string(o["name"], origin + ": objects[" + std::to_string(i) + "].name"));
    } else {
      throw LoadError(origin + ": objects[" + std::to_string(i) + "]: expected a name");
    }
  }

  if (!j.contains("morphisms") || !j["morphisms"].is_array())
    throw LoadError(origin + ": missing 'morphisms' array");
  for (std::size_t i = 0; i < j["morphisms"].size(); ++i) {
    const auto& m = j["morphisms"][i];
    const std::string where = origin + ": morphisms[" + std::to_string(i) + "]";
    if (!m.is_object() || !m.contains("name") || !m.contains("dom") || !m.contains("cod"))
      throw LoadError(where + ": expected {name, dom, cod}");
    data.morphisms.push_back({want_string(m["name"], where + ".name"),
                              want_string(m["dom"], where + ".dom"),
                              want_string(m["cod"], where + ".cod")});
  }

  if (!j.contains("identities") || !j["identities"].is_object())
    throw LoadError(origin + ": missing 'identities' object");
  for (const auto& [obj, mor] : j["identities"].items())
    data.identities.push_back({obj, want_string(mor, origin + ": identities['" + obj + "']")});

  if (j.contains("composition")) {
    if (!j["composition"].is_array()) throw LoadError(origin + ": 'composition' must be an array");
    for (std::size_t i = 0; i < j["composition"].size(); ++i) {
      const auto& entry = j["composition"][i];
      const std::string where = origin + ": composition[" + std::to_string(i) + "]";
      if (!entry.is_array() || entry.size() != 3)
        throw LoadError(where + ": expected [g, f, composite]");
      data.composition.push_back({want_string(entry[0], where), want_string(entry[1], where),
                                  want_string(entry[2], where)});
    }
  }

  try {
    return make_category(data);
  } catch (const LoadError& e) {
    throw LoadError(origin + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path + ": cannot open file");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

CatPtr load_category_file(const std::string& path) {
  return load_category_json(read_file(path), path);
}

namespace {

ordered_json category_body(const FinCategory& c) {
  ordered_json j;
  j["objects"] = ordered_json::array();
  for (const auto& o : c.objects()) j["objects"].push_back(o);
  j["morphisms"] = ordered_json::array();
  for (int m = 0; m < c.morphism_count(); ++m) {
    ordered_json entry;
    entry["name"] = c.morphism_name(m);
    entry["dom"] = c.object_name(c.dom(m));
    entry["cod"] = c.object_name(c.cod(m));
    j["morphisms"].push_back(std::move(entry));
  }
  j["identities"] = ordered_json::object();
  for (int o = 0; o < c.object_count(); ++o)
    j["identities"][c.object_name(o)] = c.morphism_name(c.identity(o));
  j["composition"] = ordered_json::array();
  for (int g = 0; g < c.morphism_count(); ++g) {
    if (c.is_identity(g)) continue;
    for (int f = 0; f < c.morphism_count(); ++f) {
      if (c.is_identity(f) || !c.composable(g, f)) continue;
      int gf = c.compose(g, f);
      if (gf < 0) continue;
      j["composition"].push_back(
          ordered_json::array({c.morphism_name(g), c.morphism_name(f), c.morphism_name(gf)}));
    }
  }
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string emit_category(const FinCategory& c) { return dump(category_body(c)); }

std::string emit_arrow(const ArrowCat& a) {
  ordered_json j = category_body(*a.cat);
  const FinCategory& b = *a.base;
  ordered_json objects = ordered_json::array();
  for (int o = 0; o < a.cat->object_count(); ++o) {
    ordered_json entry;
    entry["name"] = a.cat->object_name(o);
    entry["of"] = b.morphism_name(a.object_of[o]);
    objects.push_back(std::move(entry));
  }
  j["objects"] = std::move(objects);
  for (int m = 0; m < a.cat->morphism_count(); ++m) {
    j["morphisms"][m]["top"] = b.morphism_name(a.top(m));
    j["morphisms"][m]["bottom"] = b.morphism_name(a.bottom(m));
  }
  return dump(j);
}

std::string emit_freyd(const FreydCat& f) {
  ordered_json j = category_body(*f.cat);
  const FinCategory& b = *f.base;
  ordered_json objects = ordered_json::array();
  for (int o = 0; o < f.cat->object_count(); ++o) {
    ordered_json entry;
    entry["name"] = f.cat->object_name(o);
    entry["of"] = b.morphism_name(f.object_of[o]);
    objects.push_back(std::move(entry));
  }
  j["objects"] = std::move(objects);
  for (int m = 0; m < f.cat->morphism_count(); ++m) {
    j["morphisms"][m]["diagonal"] = b.morphism_name(f.diag[m]);
    ordered_json reps = ordered_json::array();
    for (int r : f.reps[m])
      reps.push_back(ordered_json::array(
          {b.morphism_name(f.arrows.top(r)), b.morphism_name(f.arrows.bottom(r))}));
    j["morphisms"][m]["representatives"] = std::move(reps);
  }
  return dump(j);
}

FsData load_fs_json(const std::string& text, const std::string& origin) {
  ordered_json j = parse(text, origin);
  if (!j.is_object()) throw LoadError(origin + ": expected a JSON object");
  FsData fs;
  const bool plain = j.contains("E") || j.contains("M");
  const bool strict = j.contains("E0") || j.contains("M0");
  if (plain == strict)
    throw LoadError(origin + ": expected either {E, M} or {E0, M0}");
  fs.strict = strict;
  const char* lk = strict ? "E0" : "E";
  const char* rk = strict ? "M0" : "M";
  for (const char* key : {lk, rk}) {
    if (!j.contains(key) || !j[key].is_array())
      throw LoadError(origin + ": missing '" + std::string(key) + "' array");
    for (std::size_t i = 0; i < j[key].size(); ++i) {
      auto name = want_string(j[key][i], origin + ": " + key + "[" + std::to_string(i) + "]");
      (key == lk ? fs.left : fs.right).push_back(name);
    }
  }
  return fs;
}

FsData load_fs_file(const std::string& path) { return load_fs_json(read_file(path), path); }

std::string emit_fs(const FsData& fs) {
  ordered_json j;
  j[fs.strict ? "E0" : "E"] = fs.left;
  j[fs.strict ? "M0" : "M"] = fs.right;
  return dump(j);
}

ChoiceData load_choice_json(const std::string& text, const std::string& origin) {
  ordered_json j = parse(text, origin);
  if (!j.is_object()) throw LoadError(origin + ": expected a JSON object");
  ChoiceData data;
  for (const auto& [mor, triple] : j.items()) {
    const std::string where = origin + ": '" + mor + "'";
    if (!triple.is_object() || !triple.contains("e") || !triple.contains("mid") ||
        !triple.contains("m"))
      throw LoadError(where + ": expected {e, mid, m}");
    data[mor] = {want_string(triple["e"], where + ".e"), want_string(triple["mid"], where + ".mid"),
                 want_string(triple["m"], where + ".m")};
  }
  return data;
}

ChoiceData load_choice_file(const std::string& path) {
  return load_choice_json(read_file(path), path);
}

AlgebraData load_algebra_json(const std::string& text, const std::string& origin) {
  ordered_json j = parse(text, origin);
  if (!j.is_object()) throw LoadError(origin + ": expected a JSON object");
  AlgebraData data;
  if (!j.contains("monad")) throw LoadError(origin + ": missing 'monad'");
  data.monad = want_string(j["monad"], origin + ": monad");
  for (const char* key : {"on_objects", "on_morphisms"}) {
    if (!j.contains(key) || !j[key].is_object())
      throw LoadError(origin + ": missing '" + std::string(key) + "' object");
    auto& table = std::string(key) == "on_objects" ? data.on_objects : data.on_morphisms;
    for (const auto& [from, to] : j[key].items())
      table[from] = want_string(to, origin + ": " + key + "['" + from + "']");
  }
  if (j.contains("theta")) {
    if (!j["theta"].is_object()) throw LoadError(origin + ": 'theta' must be an object");
    data.has_theta = true;
    for (const auto& [from, to] : j["theta"].items())
      data.theta[from] = want_string(to, origin + ": theta['" + from + "']");
  }
  return data;
}

AlgebraData load_algebra_file(const std::string& path) {
  return load_algebra_json(read_file(path), path);
}

std::string emit_algebra(const AlgebraData& a) {
  ordered_json j;
  j["monad"] = a.monad;
  j["on_objects"] = ordered_json::object();
  for (const auto& [from, to] : a.on_objects) j["on_objects"][from] = to;
  j["on_morphisms"] = ordered_json::object();
  for (const auto& [from, to] : a.on_morphisms) j["on_morphisms"][from] = to;
  if (a.has_theta) {
    j["theta"] = ordered_json::object();
    for (const auto& [from, to] : a.theta) j["theta"][from] = to;
  }
  return dump(j);
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace factoriad
