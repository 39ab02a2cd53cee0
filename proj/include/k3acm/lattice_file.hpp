#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "k3acm/lattice.hpp"

namespace k3acm {

// Lattice interchange document:
//   { "name": "line", "gram": [[4,1],[1,-2]], "polarization": [1,0],
//     "search_bound_degree": 32 }
// Integers only; search_bound_degree is optional.

inline PolarizedK3Lattice lattice_from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object()) throw InputError("lattice document must be a JSON object");
    for (const char* key : {"name", "gram", "polarization"})
      if (!doc.contains(key)) throw InputError(std::string("lattice document is missing '") + key + "'");
    auto as_int = [](const nlohmann::json& v, const char* what) {
      if (!v.is_number_integer()) throw InputError(std::string(what) + " entries must be integers");
      return v.get<Int>();
    };
    IntMatrix gram;
    if (!doc["gram"].is_array()) throw InputError("'gram' must be an array of rows");
    for (const auto& row : doc["gram"]) {
      if (!row.is_array()) throw InputError("'gram' must be an array of rows");
      std::vector<Int> r;
      for (const auto& v : row) r.push_back(as_int(v, "gram"));
      gram.push_back(std::move(r));
    }
    if (!doc["polarization"].is_array()) throw InputError("'polarization' must be an array");
    std::vector<Int> pol;
    for (const auto& v : doc["polarization"]) pol.push_back(as_int(v, "polarization"));
    Int bound = PolarizedK3Lattice::kDefaultSearchBound;
    if (doc.contains("search_bound_degree")) bound = as_int(doc["search_bound_degree"], "search_bound_degree");
    if (!doc["name"].is_string()) throw InputError("'name' must be a string");
    return PolarizedK3Lattice(doc["name"].get<std::string>(), std::move(gram), DivisorClass(std::move(pol)), bound);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed lattice document: ") + e.what());
  }
}

inline nlohmann::ordered_json lattice_to_json(const PolarizedK3Lattice& lattice) {
  nlohmann::ordered_json doc;
  doc["name"] = lattice.name();
  doc["gram"] = lattice.gram();
  doc["polarization"] = std::vector<Int>(lattice.polarization().coords().begin(), lattice.polarization().coords().end());
  doc["search_bound_degree"] = lattice.search_bound_degree();
  return doc;
}

inline PolarizedK3Lattice parse_lattice(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("lattice file is not valid JSON: ") + e.what());
  }
  return lattice_from_json(doc);
}

/// Reads a lattice file without judging admissibility.
inline PolarizedK3Lattice read_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open lattice file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_lattice(buf.str());
}

/// Reads a lattice file and rejects it with the validator's report unless admissible.
inline PolarizedK3Lattice load_lattice_file(const std::string& path) {
  auto lattice = read_lattice_file(path);
  require_admissible(lattice);
  return lattice;
}

}  // namespace k3acm
