// Text and JSON formats: matrices, vectors, point lists, and the JSON
// encodings of subdivisions and chamber censuses.
#pragma once

#include "svc/chambers.hpp"
#include "svc/lattice.hpp"
#include "svc/subdivision.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace svc {

/// Accepts JSON {"rows": [[...], ...]}, the text form "m n" followed by m
/// rows of n integers, or a single line with rows separated by '@'.
IntMatrix parse_matrix(const std::string &text);

/// Columns of the parsed matrix.
Configuration parse_configuration(const std::string &text, std::string name = {});

IntVec parse_int_vector(const std::string &text);
/// Entries may be fractions "p/q".
RatVec parse_rat_vector(const std::string &text);

/// "x y, x y, ..." (commas or semicolons between points).
std::vector<IntPoint2> parse_points(const std::string &text);

nlohmann::json to_json(const IntVec &v);
nlohmann::json to_json(const RatVec &v);
nlohmann::json to_json(const IntMatrix &m);
/// Sorted list of 1-based index tuples.
nlohmann::json to_json(const Subdivision &s);
/// {"faces_by_edges": {"3": ..}, "mu": ..}
nlohmann::json census_json(const PlanarChamberComplex &pcc);

std::string read_file(const std::string &path);

}  // namespace svc
