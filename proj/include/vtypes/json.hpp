#pragma once

// JSON views of reports, fixtures and classifications (nlohmann/json).

#include <json.hpp>  // vendored nlohmann/json

#include "vtypes/classifier.hpp"
#include "vtypes/graph6.hpp"
#include "vtypes/search.hpp"
#include "vtypes/verifier.hpp"

namespace vtypes {

inline nlohmann::ordered_json to_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["claim"] = r.claim;
  j["n"] = r.n;
  j["found"] = r.found;
  j["expected"] = r.expected;
  j["witness_graph6"] = r.witness_graph6;
  j["scanned"] = r.scanned;
  j["millis"] = r.millis;
  j["pass"] = r.pass;
  return j;
}

inline VerifyReport report_from_json(const nlohmann::json& j) {
  VerifyReport r;
  r.claim = j.at("claim").get<std::string>();
  r.n = j.at("n").get<int>();
  r.found = j.at("found").get<long long>();
  r.expected = j.at("expected").get<long long>();
  r.witness_graph6 = j.at("witness_graph6").get<std::string>();
  r.scanned = j.at("scanned").get<std::uint64_t>();
  r.millis = j.at("millis").get<long long>();
  r.pass = j.at("pass").get<bool>();
  return r;
}

/// Fixture record in the on-disk layout: single-graph objectives store plain
/// values, the figure1 pair stores two-element arrays.
inline nlohmann::ordered_json to_json(const FixtureRecord& f) {
  nlohmann::ordered_json j;
  j["objective"] = f.objective;
  j["order"] = f.order;
  if (f.graph6.size() == 1) {
    j["graph6"] = f.graph6.front();
    j["achieved"] = f.achieved.front();
  } else {
    j["graph6"] = f.graph6;
    j["achieved"] = f.achieved;
  }
  j["generator_version"] = kFixtureGeneratorVersion;
  return j;
}

inline FixtureRecord fixture_from_json(const nlohmann::json& j) {
  FixtureRecord f;
  f.objective = j.at("objective").get<std::string>();
  f.order = j.at("order").get<int>();
  if (j.at("graph6").is_array()) {
    f.graph6 = j.at("graph6").get<std::vector<std::string>>();
    f.achieved = j.at("achieved").get<std::vector<int>>();
  } else {
    f.graph6 = {j.at("graph6").get<std::string>()};
    f.achieved = {j.at("achieved").get<int>()};
  }
  return f;
}

template <std::size_t W>
nlohmann::ordered_json classification_json(const BasicGraph<W>& g) {
  nlohmann::ordered_json j;
  j["graph6"] = emit_graph6(g);
  j["order"] = g.order();
  j["degree_sequence"] = degree_sequence(g);
  std::vector<std::string> types;
  for (auto t : classify_all(g)) types.emplace_back(short_name(t));
  j["types"] = types;
  const TypeTuple tt = type_tuple(g);
  j["tuple"] = tt.counts;
  j["pantypical"] = is_pantypical(tt);
  return j;
}

}  // namespace vtypes
