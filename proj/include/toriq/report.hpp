#pragma once

#include "toriq/quantize.hpp"

#include <string>

namespace toriq {

// Text and JSON renderers for the CLI commands. All output is
// deterministic: facet and vertex indices are 1-based, lists keep their
// canonical (lexicographic) order and JSON uses a fixed key order with
// no floating point values. Integers that do not fit in 64 bits are
// emitted as decimal strings.

std::string render_validate_text(const HalfspacePolytope& P, const DelzantCertificate& cert);
std::string render_validate_json(const HalfspacePolytope& P, const DelzantCertificate& cert);

std::string render_vertices_text(const HalfspacePolytope& P, const std::vector<Vertex>& verts);
std::string render_vertices_json(const HalfspacePolytope& P, const std::vector<Vertex>& verts);

std::string render_lattice_text(const std::vector<IntVector>& points);
std::string render_lattice_json(const std::vector<IntVector>& points);

std::string render_family_text(const FacetFamily& F, std::size_t codim,
                               const std::vector<std::vector<int>>& witnesses);
std::string render_family_json(const FacetFamily& F, std::size_t codim,
                               const std::vector<std::vector<int>>& witnesses);

std::string render_construct_text(const HalfspacePolytope& P, const ConstructionData& C);
std::string render_construct_json(const HalfspacePolytope& P, const ConstructionData& C);

std::string render_quantize_text(const QuantizationReport& r);
std::string render_quantize_json(const QuantizationReport& r);

std::string render_sweep_text(const std::vector<std::pair<long long, std::size_t>>& rows);
std::string render_sweep_json(const std::vector<std::pair<long long, std::size_t>>& rows);

}  // namespace toriq
