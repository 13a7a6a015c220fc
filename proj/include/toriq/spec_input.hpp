#pragma once

#include "toriq/polytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toriq {

// Parsed form of the JSON input document: either an inline facet list
//   {"ambient_dim": n, "facets": [{"normal": [...], "offset": c}, ...]}
// or a built-in generator
//   {"generator": {"name": "simplex"|"box"|"hirzebruch", "params": {...}}}
// Exactly one of the two is present. Integers may be given as JSON
// numbers or as decimal strings (for values beyond 64 bits).
struct PolytopeSpec {
    struct Inline {
        std::size_t ambient_dim = 0;
        std::vector<Facet> facets;
    };
    struct Generator {
        std::string name;
        std::size_t dim = 0;       // simplex
        Int m;                     // simplex
        std::vector<Int> sides;    // box
        Int a, b;                  // hirzebruch
    };

    std::optional<Inline> inline_spec;
    std::optional<Generator> generator;
};

// Strict parse: unknown keys, non-integral numbers, wrong types and
// out-of-range generator parameters are all rejected. Throws ParseError
// (malformed JSON, with line/column) or SchemaError (naming the field).
PolytopeSpec parse_spec(const std::string& text);

// Builds the described polytope, dispatching to the generators where
// one is named.
HalfspacePolytope realize(const PolytopeSpec& spec);

}  // namespace toriq
