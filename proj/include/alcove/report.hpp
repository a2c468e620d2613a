#pragma once

#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "alcove/numeric.hpp"
#include "alcove/root_system.hpp"

namespace alcove {

using Json = nlohmann::json;  // object keys are kept sorted, so dumps are stable

// One machine-readable answer: the command that produced it, its inputs, a
// structured payload, and (where meaningful) a verification verdict.
struct Report {
  std::string command;
  Json input = Json::object();
  Json payload = Json::object();
  std::optional<bool> verified;
  std::optional<Json> failures;

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["input"] = input;
    j["payload"] = payload;
    if (verified) j["verified"] = *verified;
    if (failures) j["failures"] = *failures;
    return j;
  }
};

inline Json root_to_json(const Root& r) {
  Json a = Json::array();
  for (const auto& c : r.coeffs) a.push_back(to_ll(c));
  return a;
}

inline Json roots_to_json(const std::vector<Root>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(root_to_json(r));
  return a;
}

inline Json coweight_to_json(const Coweight& c) {
  Json a = Json::array();
  for (const auto& q : c.coords) a.push_back(rat_str(q));
  return a;
}

namespace detail {

inline void render_value(std::ostringstream& out, const Json& v, int indent);

inline void render_object(std::ostringstream& out, const Json& obj, int indent) {
  std::size_t width = 0;
  for (auto it = obj.begin(); it != obj.end(); ++it)
    width = std::max(width, it.key().size());
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool nested = it.value().is_object() ||
                  (it.value().is_array() && !it.value().empty() &&
                   (it.value()[0].is_object() || it.value()[0].is_array()));
    if (nested) {
      out << std::string(indent, ' ') << it.key() << "\n";
      render_value(out, it.value(), indent + 2);
    } else {
      out << std::string(indent, ' ') << it.key()
          << std::string(width - it.key().size(), ' ') << "  ";
      render_value(out, it.value(), 0);
      out << "\n";
    }
  }
}

inline void render_value(std::ostringstream& out, const Json& v, int indent) {
  if (v.is_object()) {
    render_object(out, v, indent);
  } else if (v.is_array()) {
    bool nested = !v.empty() && (v[0].is_object() || v[0].is_array());
    if (!nested) {
      out << v.dump();
    } else {
      for (std::size_t i = 0; i < v.size(); ++i) {
        out << std::string(indent, ' ') << "-\n";
        if (v[i].is_object())
          render_object(out, v[i], indent + 2);
        else
          out << std::string(indent + 2, ' ') << v[i].dump() << "\n";
      }
    }
  } else if (v.is_string()) {
    out << v.get<std::string>();
  } else {
    out << v.dump();
  }
}

}  // namespace detail

// Aligned plain-text rendering of a report, for eyeballing; the JSON form is
// the stable interface.
inline std::string render_table(const Report& rep) {
  std::ostringstream out;
  out << "command: " << rep.command << "\n";
  if (!rep.input.empty()) {
    out << "input:\n";
    detail::render_object(out, rep.input, 2);
  }
  out << "payload:\n";
  detail::render_object(out, rep.payload, 2);
  if (rep.verified) out << "verified: " << (*rep.verified ? "true" : "false") << "\n";
  if (rep.failures && !rep.failures->empty()) {
    out << "failures:\n";
    detail::render_value(out, *rep.failures, 2);
  }
  return out.str();
}

}  // namespace alcove
