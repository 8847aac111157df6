#pragma once

// JSON rendering of Grothendieck-Witt classes and Euler tables.
//
// A class is written as
//   {"field": "Q", "hyperbolic": 2, "units": ["1", "1"], "rank": 6,
//    "discriminant": "-1", "signature": 2, "text": "2H + <1,1>"}
// with "signature" null when the field has no real embedding. Reading uses
// "field", "hyperbolic" and "units" only; the rest is derived.

#include <json.hpp>

#include "a1deg/grassmannian.hpp"
#include "a1deg/gw.hpp"
#include "a1deg/parse.hpp"

namespace a1deg {

template <ExactField K>
nlohmann::ordered_json to_json(const GWClass<K>& c) {
  const K& k = c.field();
  nlohmann::ordered_json j;
  j["field"] = k.descriptor().to_string();
  j["hyperbolic"] = c.hyperbolic();
  j["units"] = nlohmann::ordered_json::array();
  for (const auto& u : c.units()) j["units"].push_back(k.format(u));
  j["rank"] = c.rank();
  j["discriminant"] = k.format(c.discriminant());
  if (auto s = c.signature())
    j["signature"] = *s;
  else
    j["signature"] = nullptr;
  j["text"] = c.to_string();
  return j;
}

/// Rebuilds the class in the given field; the stored field must match it.
template <ExactField K>
GWClass<K> gw_from_json(const K& field, const nlohmann::ordered_json& j) {
  try {
    if (parse_field(j.at("field").get<std::string>()) != field.descriptor())
      fail(ErrorKind::FieldMismatch, "JSON class is over " + j.at("field").get<std::string>());
    std::vector<typename K::value_type> units;
    for (const auto& u : j.at("units")) units.push_back(parse_scalar(field, u.get<std::string>()));
    return simplify(field, units, j.at("hyperbolic").get<unsigned>());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("malformed class JSON: ") + e.what());
  }
}

/// Renders the text form of a JSON class over whichever field it names.
inline std::string render_json_class(const nlohmann::ordered_json& j) {
  try {
    auto d = parse_field(j.at("field").get<std::string>());
    return visit_field(d, [&](const auto& k) { return gw_from_json(k, j).to_string(); });
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("malformed class JSON: ") + e.what());
  }
}

inline nlohmann::ordered_json to_json(const std::vector<TableCell>& cells) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& c : cells) {
    nlohmann::ordered_json j;
    j["r"] = c.r;
    j["n"] = c.n;
    j["computed"] = c.computed.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(c.computed);
    j["closed_form"] = c.closed;
    j["error"] = c.error.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(c.error);
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace a1deg
