#pragma once

#include <string>

#include "json.hpp"

#include "honeycomb/hexgrid.hpp"
#include "honeycomb/partition.hpp"

namespace honeycomb {

// Thrown for malformed input files; carries a line/column diagnostic.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

nlohmann::json polygon_to_json(const ConvexPolygon& poly);
ConvexPolygon polygon_from_json(const nlohmann::json& j, double tolerance = ConvexPolygon::kDefaultTolerance);

nlohmann::json hex_structure_to_json(const HexStructure& s);
HexStructure hex_structure_from_json(const nlohmann::json& j);

nlohmann::json partition_to_json(const ConvexPartitionResult& partition);

struct PartitionFile {
    ConvexPolygon container;
    std::vector<ConvexPolygon> cells;
};

PartitionFile partition_from_json(const nlohmann::json& j, double tolerance = ConvexPolygon::kDefaultTolerance);

// Parses text as JSON; on failure throws ParseError with "line L, column C".
nlohmann::json parse_json_text(const std::string& text, const std::string& origin);

// Reads a whole file; missing file throws ParseError.
std::string read_text_file(const std::string& path);

} // namespace honeycomb
