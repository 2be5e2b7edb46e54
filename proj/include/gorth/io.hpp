#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gorth/errors.hpp"
#include "gorth/matrix.hpp"
#include "gorth/structures.hpp"

// Triple file format:
//   {"dim": n, "gram": [[rat, ...], ...], "xi": [[rat, ...], ...], "v0": [rat, ...]}
// with rat a string "p/q" or "p". Plain JSON integers are accepted on input.

namespace gorth::io {

namespace detail {

inline Rat rat_from_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw InputError(where + ": expected a rational string");
}

inline Vec vec_from_json(const nlohmann::json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) throw InputError(where + ": expected an array of length " + std::to_string(n));
  Vec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(rat_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

inline Mat mat_from_json(const nlohmann::json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) throw InputError(where + ": expected " + std::to_string(n) + " rows");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(vec_from_json(j[i], n, where + "[" + std::to_string(i) + "]"));
  return Mat::from_rows(rows);
}

inline std::string row_text(std::span<const Rat> r) {
  std::string s = "[";
  for (std::size_t j = 0; j < r.size(); ++j) s += (j ? ", \"" : "\"") + r[j].str() + "\"";
  return s + "]";
}

}  // namespace detail

inline Triple triple_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("triple: expected a JSON object");
  for (const char* key : {"dim", "gram", "xi", "v0"})
    if (!j.contains(key)) throw InputError(std::string("triple: missing field '") + key + "'");
  if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0)
    throw InputError("triple: 'dim' must be a positive integer");
  const auto n = j["dim"].get<std::size_t>();
  Mat gram = detail::mat_from_json(j["gram"], n, "gram");
  if (!gram.is_symmetric()) throw InputError("gram: not symmetric");
  return {SymForm(std::move(gram)), detail::mat_from_json(j["xi"], n, "xi"), detail::vec_from_json(j["v0"], n, "v0")};
}

inline Triple parse_triple(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return triple_from_json(j);
}

inline Triple read_triple(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_triple(buf.str());
}

/// Deterministic rendering: one matrix row per line, rationals as strings.
inline std::string to_json(const Triple& t) {
  std::string s = "{\n  \"dim\": " + std::to_string(t.dim()) + ",\n";
  auto matrix = [&](const char* name, const Mat& m) {
    s += std::string("  \"") + name + "\": [";
    for (std::size_t i = 0; i < m.rows(); ++i) s += (i ? ",\n    " : "\n    ") + detail::row_text(m.row(i));
    s += "\n  ],\n";
  };
  matrix("gram", t.form.gram());
  matrix("xi", t.xi);
  s += "  \"v0\": " + detail::row_text(t.v0) + "\n}\n";
  return s;
}

inline void write_triple(const Triple& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << to_json(t);
}

}  // namespace gorth::io
