#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "vbvr/core/digest.hpp"
#include "vbvr/core/error.hpp"

namespace vbvr {

using Json = nlohmann::json;

/// One 2-D coordinate parameter (grid cell, pixel position, ...).
struct Coord {
  double x = 0;
  double y = 0;
  friend bool operator==(const Coord&, const Coord&) = default;
};

/// Parameter values are scalars, enumerations (strings), coordinates, or
/// coordinate lists. The map keeps keys sorted, which *is* the canonical
/// ordering used for hashing and serialization.
using ParamValue = std::variant<std::int64_t, double, std::string, Coord, std::vector<Coord>>;

struct ParamAssignment {
  std::map<std::string, ParamValue> values;
  int difficulty_stratum = 0;

  friend bool operator==(const ParamAssignment&, const ParamAssignment&) = default;

  std::int64_t get_int(const std::string& k) const { return std::get<std::int64_t>(at(k)); }
  double get_double(const std::string& k) const { return std::get<double>(at(k)); }
  const std::string& get_str(const std::string& k) const { return std::get<std::string>(at(k)); }
  Coord get_coord(const std::string& k) const { return std::get<Coord>(at(k)); }
  const std::vector<Coord>& get_coords(const std::string& k) const {
    return std::get<std::vector<Coord>>(at(k));
  }
  bool has(const std::string& k) const { return values.count(k) != 0; }

 private:
  const ParamValue& at(const std::string& k) const {
    auto it = values.find(k);
    if (it == values.end()) throw InvalidParamError("missing parameter: " + k);
    return it->second;
  }
};

namespace detail {

inline void append_number(std::string& out, double v) {
  if (!std::isfinite(v)) throw InvalidParamError("non-finite parameter value");
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

inline void append_number(std::string& out, std::int64_t v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

inline void append_coord(std::string& out, const Coord& c) {
  out.push_back('[');
  append_number(out, c.x);
  out.push_back(',');
  append_number(out, c.y);
  out.push_back(']');
}

}  // namespace detail

/// Canonical byte encoding: sorted keys, shortest round-trip numbers,
/// insertion-order independent by construction. This string feeds the
/// duplicate hash and must never depend on library formatting defaults.
inline std::string canonical_encoding(const ParamAssignment& p) {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : p.values) {
    if (!first) out.push_back(',');
    first = false;
    out.push_back('"');
    out += key;  // keys are identifiers; no escaping needed
    out += "\":";
    std::visit(
        [&out](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, std::int64_t> || std::is_same_v<T, double>) {
            detail::append_number(out, v);
          } else if constexpr (std::is_same_v<T, std::string>) {
            out.push_back('"');
            out += v;
            out.push_back('"');
          } else if constexpr (std::is_same_v<T, Coord>) {
            detail::append_coord(out, v);
          } else {
            out.push_back('[');
            for (std::size_t i = 0; i < v.size(); ++i) {
              if (i > 0) out.push_back(',');
              detail::append_coord(out, v[i]);
            }
            out.push_back(']');
          }
        },
        value);
  }
  out += ",\"difficulty_stratum\":";
  detail::append_number(out, static_cast<std::int64_t>(p.difficulty_stratum));
  out.push_back('}');
  return out;
}

/// 128-bit duplicate key over the canonical encoding.
inline DuplicateKey hash_params(const ParamAssignment& p) {
  return digest128(canonical_encoding(p));
}

inline Json to_json(const Coord& c) { return Json::array({c.x, c.y}); }

inline Json to_json(const ParamAssignment& p) {
  Json j = Json::object();
  for (const auto& [key, value] : p.values) {
    std::visit(
        [&j, &key](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Coord>) {
            j[key] = to_json(v);
          } else if constexpr (std::is_same_v<T, std::vector<Coord>>) {
            Json arr = Json::array();
            for (const auto& c : v) arr.push_back(to_json(c));
            j[key] = arr;
          } else {
            j[key] = v;
          }
        },
        value);
  }
  j["difficulty_stratum"] = p.difficulty_stratum;
  return j;
}

/// Inverse of to_json. Arrays of two numbers load as Coord; arrays of such
/// arrays load as coordinate lists.
inline ParamAssignment params_from_json(const Json& j) {
  ParamAssignment p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const Json& v = it.value();
    if (key == "difficulty_stratum") {
      p.difficulty_stratum = v.get<int>();
    } else if (v.is_number_integer() || v.is_number_unsigned()) {
      p.values[key] = v.get<std::int64_t>();
    } else if (v.is_number_float()) {
      p.values[key] = v.get<double>();
    } else if (v.is_string()) {
      p.values[key] = v.get<std::string>();
    } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      p.values[key] = Coord{v[0].get<double>(), v[1].get<double>()};
    } else if (v.is_array()) {
      std::vector<Coord> cs;
      for (const auto& e : v) cs.push_back(Coord{e[0].get<double>(), e[1].get<double>()});
      p.values[key] = std::move(cs);
    } else {
      throw InvalidParamError("unsupported parameter json for key: " + key);
    }
  }
  return p;
}

}  // namespace vbvr
