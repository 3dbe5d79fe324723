#pragma once

// JSON documents for interpretations, candidate relations and knowledge bases.

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "fdl/bisim.hpp"
#include "fdl/interpretation.hpp"
#include "fdl/kb.hpp"
#include "fdl/parser.hpp"

namespace fdl {

using json = nlohmann::ordered_json;

/// Parses JSON, rejecting duplicate object keys (which nlohmann would
/// otherwise silently overwrite).
inline json parse_json(const std::string& text) {
  std::vector<std::set<std::string>> open;
  auto check = [&](int, json::parse_event_t ev, json& parsed) {
    switch (ev) {
      case json::parse_event_t::object_start: open.emplace_back(); break;
      case json::parse_event_t::object_end: open.pop_back(); break;
      case json::parse_event_t::key: {
        const auto& k = parsed.get_ref<const std::string&>();
        if (!open.back().insert(k).second) throw InputError("duplicate key \"" + k + "\"");
        break;
      }
      default: break;
    }
    return true;
  };
  try {
    return json::parse(text, check);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what(), e.byte == 0 ? InputError::npos : e.byte - 1);
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace detail {

inline const std::string& as_string(const json& j, const std::string& what) {
  if (!j.is_string()) throw InputError(what + " must be a string");
  return j.get_ref<const std::string&>();
}

inline void only_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& what) {
  if (!j.is_object()) throw InputError(what + " must be an object");
  for (const auto& [k, _] : j.items())
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; }))
      throw InputError("unexpected key \"" + k + "\" in " + what);
}

}  // namespace detail

/// Degrees are decimal or fraction strings; plain JSON numbers are accepted
/// through their shortest decimal rendering.
inline Degree degree_from_json(const json& j, const std::string& what) {
  std::string text;
  if (j.is_string()) text = j.get<std::string>();
  else if (j.is_number()) text = j.dump();
  else throw InputError(what + ": degree must be a string such as \"0.5\" or \"1/3\"");
  try {
    return Degree::parse(text);
  } catch (const InputError& e) {
    throw InputError(what + ": " + e.what());
  }
}

inline Interpretation interpretation_from_json(const json& doc) {
  detail::only_keys(doc, {"domain", "individuals", "concepts", "roles"}, "model document");
  if (!doc.contains("domain") || !doc["domain"].is_array()) throw InputError("model document needs a \"domain\" array");
  Labels dom;
  for (const auto& e : doc["domain"]) dom.push_back(detail::as_string(e, "domain element"));
  Interpretation m(dom);
  auto element = [&](const json& j, const std::string& what) {
    const std::string& e = detail::as_string(j, what);
    if (!m.contains(e)) throw InputError(what + " refers to unknown element '" + e + "'");
    return e;
  };

  if (doc.contains("individuals")) {
    if (!doc["individuals"].is_object()) throw InputError("\"individuals\" must be an object");
    for (const auto& [a, e] : doc["individuals"].items()) m.set_individual(a, element(e, "individual '" + a + "'"));
  }
  if (doc.contains("concepts")) {
    if (!doc["concepts"].is_object()) throw InputError("\"concepts\" must be an object");
    for (const auto& [a, vals] : doc["concepts"].items()) {
      if (!vals.is_object()) throw InputError("concept '" + a + "' must map elements to degrees");
      m.declare_concept(a);
      for (const auto& [e, d] : vals.items()) {
        std::string what = "concept '" + a + "' at '" + e + "'";
        if (!m.contains(e)) throw InputError(what + " refers to an unknown element");
        m.set_concept(a, e, degree_from_json(d, what));
      }
    }
  }
  if (doc.contains("roles")) {
    if (!doc["roles"].is_object()) throw InputError("\"roles\" must be an object");
    for (const auto& [r, edges] : doc["roles"].items()) {
      if (!edges.is_array()) throw InputError("role '" + r + "' must be a list of [from, to, degree] edges");
      m.declare_role(r);
      std::set<std::pair<std::string, std::string>> seen;
      for (const auto& edge : edges) {
        if (!edge.is_array() || edge.size() != 3)
          throw InputError("role '" + r + "': each edge must be [from, to, degree]");
        std::string x = element(edge[0], "role '" + r + "' edge source");
        std::string y = element(edge[1], "role '" + r + "' edge target");
        if (!seen.emplace(x, y).second) throw InputError("role '" + r + "': duplicate edge " + x + " -> " + y);
        m.set_role(r, x, y, degree_from_json(edge[2], "role '" + r + "' edge " + x + " -> " + y));
      }
    }
  }
  return m;
}

inline Interpretation load_interpretation(const std::string& text) { return interpretation_from_json(parse_json(text)); }
inline Interpretation load_interpretation_file(const std::string& path) {
  try {
    return load_interpretation(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.message(), e.position());
  }
}

/// Only nonzero degrees are written.
inline json to_json(const Interpretation& m) {
  json doc;
  doc["domain"] = m.domain();
  doc["individuals"] = json::object();
  for (const auto& [a, x] : m.individuals()) doc["individuals"][a] = m.domain()[x];
  doc["concepts"] = json::object();
  for (const auto& a : m.concept_names()) {
    json vals = json::object();
    for (std::size_t x = 0; x < m.size(); ++x)
      if (Degree d = m.concept_value(a, x); !d.is_zero()) vals[m.domain()[x]] = d.to_string();
    doc["concepts"][a] = vals;
  }
  doc["roles"] = json::object();
  for (const auto& r : m.role_names()) {
    json edges = json::array();
    for (std::size_t x = 0; x < m.size(); ++x)
      for (std::size_t y = 0; y < m.size(); ++y)
        if (Degree d = m.role_value(r, x, y); !d.is_zero())
          edges.push_back({m.domain()[x], m.domain()[y], d.to_string()});
    doc["roles"][r] = edges;
  }
  return doc;
}

inline CandidateRelation relation_from_json(const json& doc, const Interpretation& l, const Interpretation& r) {
  detail::only_keys(doc, {"mode", "entries"}, "relation document");
  Mode mode = doc.contains("mode") ? parse_mode(detail::as_string(doc["mode"], "\"mode\"")) : Mode::Fuzzy;
  FuzzyRelation z(l.domain(), r.domain());
  if (doc.contains("entries")) {
    if (!doc["entries"].is_array()) throw InputError("\"entries\" must be a list of [x, x', degree]");
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& e : doc["entries"]) {
      if (!e.is_array() || e.size() != 3) throw InputError("each relation entry must be [x, x', degree]");
      std::string x = detail::as_string(e[0], "relation row"), x2 = detail::as_string(e[1], "relation column");
      if (!l.contains(x)) throw InputError("relation row '" + x + "' is not in the left domain");
      if (!r.contains(x2)) throw InputError("relation column '" + x2 + "' is not in the right domain");
      if (!seen.emplace(x, x2).second) throw InputError("duplicate relation entry (" + x + ", " + x2 + ")");
      z.set(x, x2, degree_from_json(e[2], "relation entry (" + x + ", " + x2 + ")"));
    }
  }
  return CandidateRelation(std::move(z), mode);
}

inline json to_json(const CandidateRelation& z) {
  json doc;
  doc["mode"] = to_string(z.mode);
  doc["entries"] = json::array();
  for (std::size_t i = 0; i < z.z.row_count(); ++i)
    for (std::size_t j = 0; j < z.z.col_count(); ++j)
      if (!z.z(i, j).is_zero()) doc["entries"].push_back({z.z.rows()[i], z.z.cols()[j], z.z(i, j).to_string()});
  return doc;
}

inline KnowledgeBase kb_from_json(const json& doc) {
  detail::only_keys(doc, {"tbox", "abox"}, "knowledge-base document");
  KnowledgeBase kb;
  auto concept_at = [](const json& j, const std::string& what) {
    try {
      return parse_concept(detail::as_string(j, what));
    } catch (const InputError& e) {
      throw InputError(what + ": " + e.message(), e.position());
    }
  };
  auto need = [](const json& j, const char* key, const std::string& what) -> const json& {
    if (!j.contains(key)) throw InputError(what + " is missing \"" + key + "\"");
    return j[key];
  };
  if (doc.contains("tbox")) {
    if (!doc["tbox"].is_array()) throw InputError("\"tbox\" must be a list");
    std::size_t i = 0;
    for (const auto& g : doc["tbox"]) {
      std::string what = "tbox item " + std::to_string(i++);
      detail::only_keys(g, {"lhs", "rhs", "rel", "p"}, what);
      std::string rel = g.contains("rel") ? detail::as_string(g["rel"], what + " rel") : ">=";
      if (rel != ">=" && rel != ">") throw InputError(what + ": rel must be \">=\" or \">\"");
      Degree p = g.contains("p") ? degree_from_json(g["p"], what) : Degree::one();
      kb.tbox.emplace_back(concept_at(need(g, "lhs", what), what + " lhs"), concept_at(need(g, "rhs", what), what + " rhs"),
                           rel == ">", p);
    }
  }
  if (doc.contains("abox")) {
    if (!doc["abox"].is_array()) throw InputError("\"abox\" must be a list");
    std::size_t i = 0;
    for (const auto& f : doc["abox"]) {
      std::string what = "abox item " + std::to_string(i++);
      detail::only_keys(f, {"kind", "c", "r", "a", "b", "cmp", "p"}, what);
      std::string kind = detail::as_string(need(f, "kind", what), what + " kind");
      std::string a = detail::as_string(need(f, "a", what), what + " a");
      if (kind == "same" || kind == "distinct") {
        std::string b = detail::as_string(need(f, "b", what), what + " b");
        kb.abox.push_back(kind == "same" ? FuzzyAssertion::same(a, b) : FuzzyAssertion::distinct(a, b));
        continue;
      }
      Comparison cmp = parse_comparison(detail::as_string(need(f, "cmp", what), what + " cmp"));
      Degree p = degree_from_json(need(f, "p", what), what);
      if (kind == "concept") {
        kb.abox.push_back(FuzzyAssertion::of_concept(concept_at(need(f, "c", what), what + " c"), a, cmp, p));
      } else if (kind == "role") {
        RolePtr r;
        try {
          r = parse_role(detail::as_string(need(f, "r", what), what + " r"));
        } catch (const InputError& e) {
          throw InputError(what + " r: " + e.message(), e.position());
        }
        kb.abox.push_back(FuzzyAssertion::of_role(r, a, detail::as_string(need(f, "b", what), what + " b"), cmp, p));
      } else {
        throw InputError(what + ": kind must be concept, role, same or distinct");
      }
    }
  }
  return kb;
}

inline KnowledgeBase load_kb(const std::string& text) { return kb_from_json(parse_json(text)); }

}  // namespace fdl
