#include "toriq/spec_input.hpp"

#include "toriq/errors.hpp"
#include "toriq/generators.hpp"

#include <json.hpp>

#include <regex>

namespace toriq {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& field, const std::string& what) {
    throw SchemaError("spec field '" + field + "': " + what, field);
}

void require_keys(const json& obj, const std::string& field,
                  const std::vector<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const std::string& k : allowed)
            if (it.key() == k) { known = true; break; }
        if (!known) schema_error(field.empty() ? it.key() : field + "." + it.key(),
                                 "unknown key");
    }
}

// Accepts integral JSON numbers and decimal strings; everything else is
// rejected so no float can sneak into the exact pipeline.
Int parse_int(const json& v, const std::string& field) {
    if (v.is_number_integer()) return Int(v.get<std::int64_t>());
    if (v.is_number_unsigned()) return Int(v.get<std::uint64_t>());
    if (v.is_string()) {
        static const std::regex digits("^-?[0-9]+$");
        const std::string s = v.get<std::string>();
        if (!std::regex_match(s, digits)) schema_error(field, "'" + s + "' is not an integer");
        return Int(s);
    }
    schema_error(field, "expected an integer, got " + std::string(v.type_name()));
}

std::size_t parse_size(const json& v, const std::string& field, std::size_t lo, std::size_t hi) {
    Int x = parse_int(v, field);
    if (x < Int(lo) || x > Int(hi))
        schema_error(field, "value " + x.str() + " outside [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
    return static_cast<std::size_t>(x.convert_to<unsigned long long>());
}

IntVector parse_int_array(const json& v, const std::string& field) {
    if (!v.is_array()) schema_error(field, "expected an array");
    IntVector out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(parse_int(v[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

PolytopeSpec::Inline parse_inline(const json& doc) {
    PolytopeSpec::Inline spec;
    spec.ambient_dim = parse_size(doc.at("ambient_dim"), "ambient_dim", 1, 64);
    const json& facets = doc.at("facets");
    if (!facets.is_array() || facets.empty()) schema_error("facets", "expected a nonempty array");
    for (std::size_t j = 0; j < facets.size(); ++j) {
        const std::string field = "facets[" + std::to_string(j) + "]";
        const json& f = facets[j];
        if (!f.is_object()) schema_error(field, "expected an object");
        require_keys(f, field, {"normal", "offset"});
        if (!f.contains("normal")) schema_error(field + ".normal", "missing");
        if (!f.contains("offset")) schema_error(field + ".offset", "missing");
        Facet facet;
        facet.normal = parse_int_array(f["normal"], field + ".normal");
        if (facet.normal.size() != spec.ambient_dim)
            schema_error(field + ".normal", "dimension " + std::to_string(facet.normal.size()) +
                                                ", expected " + std::to_string(spec.ambient_dim));
        bool zero = true;
        for (const Int& x : facet.normal)
            if (x != 0) zero = false;
        if (zero) schema_error(field + ".normal", "zero normal");
        facet.offset = parse_int(f["offset"], field + ".offset");
        spec.facets.push_back(std::move(facet));
    }
    return spec;
}

PolytopeSpec::Generator parse_generator(const json& g) {
    if (!g.is_object()) schema_error("generator", "expected an object");
    require_keys(g, "generator", {"name", "params"});
    if (!g.contains("name") || !g["name"].is_string())
        schema_error("generator.name", "expected a string");
    PolytopeSpec::Generator out;
    out.name = g["name"].get<std::string>();
    const json params = g.contains("params") ? g["params"] : json::object();
    if (!params.is_object()) schema_error("generator.params", "expected an object");

    if (out.name == "simplex") {
        require_keys(params, "generator.params", {"dim", "m"});
        if (!params.contains("dim")) schema_error("generator.params.dim", "missing");
        if (!params.contains("m")) schema_error("generator.params.m", "missing");
        out.dim = parse_size(params["dim"], "generator.params.dim", 1, 16);
        out.m = parse_int(params["m"], "generator.params.m");
        if (out.m < 1) schema_error("generator.params.m", "must be >= 1");
    } else if (out.name == "box") {
        require_keys(params, "generator.params", {"sides"});
        if (!params.contains("sides")) schema_error("generator.params.sides", "missing");
        out.sides = parse_int_array(params["sides"], "generator.params.sides");
        if (out.sides.empty() || out.sides.size() > 16)
            schema_error("generator.params.sides", "need between 1 and 16 sides");
        for (const Int& s : out.sides)
            if (s < 1) schema_error("generator.params.sides", "sides must be >= 1");
    } else if (out.name == "hirzebruch") {
        require_keys(params, "generator.params", {"a", "b"});
        if (!params.contains("a")) schema_error("generator.params.a", "missing");
        if (!params.contains("b")) schema_error("generator.params.b", "missing");
        out.a = parse_int(params["a"], "generator.params.a");
        out.b = parse_int(params["b"], "generator.params.b");
        if (out.a < 1) schema_error("generator.params.a", "must be >= 1");
        if (out.b <= out.a) schema_error("generator.params.b", "must exceed a");
    } else {
        schema_error("generator.name", "unknown generator '" + out.name + "'");
    }
    return out;
}

}  // namespace

PolytopeSpec parse_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // recover line/column from the byte offset
        std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
        offset = std::min(offset, text.size());
        int line = 1, col = 1;
        for (std::size_t i = 0; i < offset; ++i) {
            if (text[i] == '\n') { ++line; col = 1; }
            else ++col;
        }
        throw ParseError("invalid JSON at line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ": " + e.what(),
                         line, col);
    }

    if (!doc.is_object()) schema_error("", "top level must be an object");
    PolytopeSpec spec;
    if (doc.contains("generator")) {
        require_keys(doc, "", {"generator"});
        spec.generator = parse_generator(doc["generator"]);
    } else {
        require_keys(doc, "", {"ambient_dim", "facets"});
        if (!doc.contains("ambient_dim")) schema_error("ambient_dim", "missing");
        if (!doc.contains("facets")) schema_error("facets", "missing");
        spec.inline_spec = parse_inline(doc);
    }
    return spec;
}

HalfspacePolytope realize(const PolytopeSpec& spec) {
    if (spec.inline_spec)
        return build_polytope(spec.inline_spec->ambient_dim, spec.inline_spec->facets);
    const PolytopeSpec::Generator& g = *spec.generator;
    if (g.name == "simplex") return make_simplex(g.dim, g.m);
    if (g.name == "box") return make_box(g.sides);
    if (g.name == "hirzebruch") return make_hirzebruch(g.a, g.b);
    throw Error("realize: unknown generator '" + g.name + "'");
}

}  // namespace toriq
