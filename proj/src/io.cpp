#include "honeycomb/io.hpp"

#include <fstream>
#include <sstream>

namespace honeycomb {

nlohmann::json polygon_to_json(const ConvexPolygon& poly) {
    nlohmann::json verts = nlohmann::json::array();
    for (const Point2& p : poly.vertices()) verts.push_back({p.x, p.y});
    return nlohmann::json{{"vertices", verts}};
}

ConvexPolygon polygon_from_json(const nlohmann::json& j, double tolerance) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw ParseError("polygon JSON needs a \"vertices\" array");
    std::vector<Point2> verts;
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw ParseError("polygon vertex must be a [x, y] number pair");
        verts.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    try {
        return ConvexPolygon(std::move(verts), tolerance);
    } catch (const Error& e) {
        throw ParseError(std::string("invalid polygon: ") + e.what());
    }
}

nlohmann::json hex_structure_to_json(const HexStructure& s) {
    nlohmann::json cells = nlohmann::json::array();
    for (const HexIndex& c : s.cells) cells.push_back({c.q, c.r});
    std::string kind = "free";
    if (s.kind == HexKind::KTriangle) kind = "k-triangle";
    if (s.kind == HexKind::Inner) kind = "inner";
    nlohmann::json out{{"cells", cells}, {"kind", kind}};
    if (s.kind == HexKind::KTriangle) out["rows"] = s.triangle_rows;
    return out;
}

HexStructure hex_structure_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array())
        throw ParseError("hex structure JSON needs a \"cells\" array");
    HexStructure s;
    for (const auto& c : j["cells"]) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
            !c[1].is_number_integer())
            throw ParseError("hex cell must be a [q, r] integer pair");
        s.cells.insert({c[0].get<int>(), c[1].get<int>()});
    }
    const std::string kind = j.value("kind", "free");
    if (kind == "k-triangle") {
        s.kind = HexKind::KTriangle;
        s.triangle_rows = j.value("rows", 0);
    } else if (kind == "inner") {
        s.kind = HexKind::Inner;
    } else {
        s.kind = HexKind::Free;
    }
    return s;
}

nlohmann::json partition_to_json(const ConvexPartitionResult& partition) {
    nlohmann::json cells = nlohmann::json::array();
    for (const ConvexPolygon& cell : partition.cells) cells.push_back(polygon_to_json(cell));
    return nlohmann::json{{"container", polygon_to_json(partition.container)},
                          {"cells", cells}};
}

PartitionFile partition_from_json(const nlohmann::json& j, double tolerance) {
    if (!j.is_object() || !j.contains("container") || !j.contains("cells") ||
        !j["cells"].is_array())
        throw ParseError("partition JSON needs \"container\" and \"cells\"");
    PartitionFile f{polygon_from_json(j["container"], tolerance), {}};
    for (const auto& c : j["cells"]) f.cells.push_back(polygon_from_json(c, tolerance));
    if (f.cells.empty()) throw ParseError("partition JSON has no cells");
    return f;
}

nlohmann::json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // Translate the byte offset into a line/column diagnostic.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::ostringstream msg;
        msg << origin << ": line " << line << ", column " << col << ": " << e.what();
        throw ParseError(msg.str());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace honeycomb
