#include "minkspace/gauge_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace minkspace {

namespace {

using nlohmann::json;

Mat parse_matrix(const json& j, const char* field) {
    if (!j.is_array() || j.empty())
        throw ValidationError(std::string(field) + ": must be a non-empty array of vectors");
    Mat m;
    for (const auto& row : j) {
        if (!row.is_array() || row.empty())
            throw ValidationError(std::string(field) + ": rows must be non-empty arrays of numbers");
        Vec v;
        for (const auto& x : row) {
            if (!x.is_number())
                throw ValidationError(std::string(field) + ": entries must be numbers");
            v.push_back(x.get<double>());
        }
        m.push_back(std::move(v));
    }
    return m;
}

Vec parse_vector(const json& j, const char* field) {
    if (!j.is_array() || j.empty())
        throw ValidationError(std::string(field) + ": must be a non-empty array of numbers");
    Vec v;
    for (const auto& x : j) {
        if (!x.is_number()) throw ValidationError(std::string(field) + ": entries must be numbers");
        v.push_back(x.get<double>());
    }
    return v;
}

}  // namespace

Gauge gauge_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("gauge file: invalid JSON (") + e.what() + ")");
    }
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw ValidationError("gauge file: requires a string \"type\" field");

    double scale = 1.0;
    if (j.contains("scale")) {
        if (!j["scale"].is_number())
            throw ValidationError("gauge file: \"scale\" must be a positive number");
        scale = j["scale"].get<double>();
    }

    const std::string type = j["type"].get<std::string>();
    if (type == "polytope_h") {
        if (!j.contains("normals")) throw ValidationError("polytope_h: missing \"normals\"");
        return Gauge::polytope_h(parse_matrix(j["normals"], "normals"), scale);
    }
    if (type == "polytope_v") {
        if (!j.contains("vertices")) throw ValidationError("polytope_v: missing \"vertices\"");
        return Gauge::polytope_v(parse_matrix(j["vertices"], "vertices"), scale);
    }
    if (type == "ellipsoid") {
        if (!j.contains("Q") || !j.contains("c"))
            throw ValidationError("ellipsoid: missing \"Q\" or \"c\"");
        return Gauge::ellipsoid(parse_matrix(j["Q"], "Q"), parse_vector(j["c"], "c"), scale);
    }
    throw ValidationError("gauge file: unknown type \"" + type +
                          "\" (expected polytope_h, polytope_v, or ellipsoid)");
}

Gauge load_gauge_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("gauge file: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return gauge_from_json(buf.str());
}

std::string gauge_to_json(const Gauge& g) {
    json j;
    switch (g.kind()) {
        case GaugeKind::PolytopeH:
            j["type"] = "polytope_h";
            j["normals"] = g.normals();
            break;
        case GaugeKind::PolytopeV:
            j["type"] = "polytope_v";
            j["vertices"] = g.vertices();
            break;
        case GaugeKind::Ellipsoid:
            j["type"] = "ellipsoid";
            j["Q"] = g.q();
            j["c"] = g.center();
            break;
    }
    if (g.scale() != 1.0) j["scale"] = g.scale();
    return j.dump();
}

}  // namespace minkspace
