#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rank2ec/exceptional.hpp"
#include "rank2ec/falsify.hpp"
#include "rank2ec/root_system.hpp"
#include "rank2ec/search.hpp"
#include "rank2ec/steinberg.hpp"
#include "rank2ec/weight.hpp"

namespace rank2ec {

using Json = nlohmann::json;

/// Malformed input file or JSON that does not match a schema.  The message
/// carries a line/column diagnostic when the underlying parse failed.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Json to_json(Weight w) { return Json::array({w.a, w.b}); }

inline Weight weight_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw ParseError("expected a weight as a two-element integer array, got " + j.dump());
  return Weight{j[0].get<int>(), j[1].get<int>()};
}

inline Json weights_to_json(const std::vector<Weight>& ws) {
  Json arr = Json::array();
  for (Weight w : ws) arr.push_back(to_json(w));
  return arr;
}

inline std::vector<Weight> weights_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of weights");
  std::vector<Weight> out;
  for (const auto& e : j) out.push_back(weight_from_json(e));
  return out;
}

inline Json to_json(const Collection& c) {
  Json j;
  j["order"] = c.order == OrderKind::total ? "total" : "weak_bruhat";
  j["weights"] = weights_to_json(c.weights);
  if (c.order == OrderKind::weak_bruhat) j["weyl_index"] = c.weyl_words;
  return j;
}

inline Collection collection_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("expected a collection object");
  Collection c;
  if (!j.contains("order") || !j["order"].is_string())
    throw ParseError("collection: missing \"order\"");
  const std::string order = j["order"].get<std::string>();
  if (order == "total") {
    c.order = OrderKind::total;
  } else if (order == "weak_bruhat") {
    c.order = OrderKind::weak_bruhat;
  } else {
    throw ParseError("collection: unknown order '" + order + "'");
  }
  if (!j.contains("weights")) throw ParseError("collection: missing \"weights\"");
  c.weights = weights_from_json(j["weights"]);
  if (j.contains("weyl_index")) {
    const Json& wi = j["weyl_index"];
    if (!wi.is_array() || wi.size() != c.weights.size())
      throw ParseError("collection: weyl_index must align with weights");
    for (const auto& word : wi) {
      if (!word.is_array()) throw ParseError("collection: weyl_index entries must be arrays");
      std::vector<int> w;
      for (const auto& g : word) {
        if (!g.is_number_integer()) throw ParseError("collection: generator must be an integer");
        w.push_back(g.get<int>());
      }
      c.weyl_words.push_back(std::move(w));
    }
  }
  if (c.order == OrderKind::weak_bruhat && c.weyl_words.empty())
    throw ParseError("collection: weak_bruhat order requires weyl_index");
  return c;
}

/// Canonical byte form used for the bundled fixtures: compact JSON plus one
/// trailing newline, keys in sorted order.
inline std::string serialize_collection(const Collection& c) { return to_json(c).dump() + "\n"; }

inline Json to_json(const BasisState& st) {
  Json j;
  j["weights"] = weights_to_json(st.weights);
  Json log = Json::array();
  for (const auto& rec : st.log)
    log.push_back(Json{{"remove", to_json(rec.removed)},
                       {"add", to_json(rec.added)},
                       {"orbit_of", to_json(rec.orbit_of)}});
  j["log"] = log;
  return j;
}

inline Json to_json(const RootSystemData& rs) {
  Json j;
  j["kind"] = to_string(rs.kind);
  j["cartan_rows"] = Json::array({to_json(rs.simple_roots[0]), to_json(rs.simple_roots[1])});
  j["positive_roots"] = weights_to_json(rs.positive_roots);
  Json co = Json::array();
  for (const auto& f : rs.coroots) co.push_back(Json::array({f.u, f.v}));
  j["coroot_functionals"] = co;
  j["gram"] = Json::array({Json::array({to_string(rs.gram[0][0]), to_string(rs.gram[0][1])}),
                           Json::array({to_string(rs.gram[1][0]), to_string(rs.gram[1][1])})});
  j["rho"] = to_json(rs.rho);
  return j;
}

inline Json to_json(const SearchReport& rep, bool deterministic = false) {
  Json j;
  j["fact"] = rep.fact;
  j["candidates"] = rep.candidate_count;
  j["maximal_collections"] = rep.maximal_collection_count;
  j["max_length"] = rep.max_length;
  if (rep.line_root) j["line_root"] = to_json(*rep.line_root);
  Json v = Json::array();
  for (const auto& c : rep.violations) v.push_back(to_json(c));
  j["violations"] = v;
  j["elapsed_ms"] = deterministic ? 0 : static_cast<long long>(rep.elapsed.count());
  return j;
}

inline Json to_json(const FalsifierResult& res, bool deterministic = false) {
  Json j;
  j["lemma"] = res.lemma;
  j["radius_sq"] = to_string(res.radius_sq);
  j["instances_checked"] = res.instances_checked;
  if (res.counterexample) {
    j["counterexample"] = weights_to_json(*res.counterexample);
  } else {
    j["counterexample"] = nullptr;
  }
  if (res.mutated) j["mutated"] = true;
  if (res.extremal) j["extremal"] = to_string(*res.extremal);
  j["elapsed_ms"] = deterministic ? 0 : static_cast<long long>(res.elapsed.count());
  return j;
}

/// Reads a whole file; throws ParseError when it cannot be opened.
inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// JSON parse with a line/column diagnostic on failure.
inline Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min(text.size(), e.byte > 0 ? e.byte - 1 : 0);
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                     e.what());
  }
}

inline Collection load_collection_file(const std::string& path) {
  return collection_from_json(parse_json_text(read_file(path), path));
}

inline std::vector<Weight> load_weight_list_file(const std::string& path) {
  return weights_from_json(parse_json_text(read_file(path), path));
}

}  // namespace rank2ec
