#pragma once

#include "toriq/sections.hpp"

#include <vector>

namespace toriq {

struct QuantizeOptions {
    Int max_box = Int(kDefaultMaxBox);
};

// Everything the two constructions produce for one polytope. Both
// enumerations are carried in full so a failed check pinpoints the
// first discrepant point instead of just comparing two integers.
struct QuantizationReport {
    HalfspacePolytope polytope;
    DelzantCertificate certificate;
    ConstructionData construction;
    FacetFamily family;
    std::size_t complement_codim = 0;
    std::vector<std::vector<int>> codim_witnesses;  // missing sets of minimal size
    std::vector<IntVector> lattice;                 // Delta geq Z^n
    SectionBasis basis;
    BijectionWitness bijection;
    bool theorem_verified = false;

    std::size_t lattice_count() const { return lattice.size(); }
    std::size_t dimension() const { return basis.monomials.size(); }
};

// Runs the full pipeline: Delzant validation, construction data, facet
// family, codimension, both enumerations and the bijection check.
// theorem_verified is true iff the counts agree and the bijection is
// complete. Errors from any stage carry the stage name.
QuantizationReport quantize(const HalfspacePolytope& P, const QuantizeOptions& opts = {});

// Scales all offsets by m = 1..m_max (dilation about the origin, which
// must lie in the polytope) and reports the dimension per dilate.
std::vector<std::pair<long long, std::size_t>> dilate_sweep(const HalfspacePolytope& P,
                                                            long long m_max,
                                                            const QuantizeOptions& opts = {});

}  // namespace toriq
