#include "toriq/quantize.hpp"

#include "toriq/errors.hpp"

namespace toriq {

namespace {

// Adds the failing stage to the message while keeping the error type,
// so callers can still react to e.g. BoxTooLargeError.
template <typename Fn>
auto stage(const char* name, Fn&& fn) {
    auto ctx = [&](const Error& e) {
        return std::string("quantize [") + name + "]: " + e.what();
    };
    try {
        return fn();
    } catch (const BoxTooLargeError& e) {
        throw BoxTooLargeError(ctx(e));
    } catch (const NotSimpleError& e) {
        throw NotSimpleError(ctx(e));
    } catch (const NotUnimodularError& e) {
        throw NotUnimodularError(ctx(e), e.determinant);
    } catch (const SurjectivityFailureError& e) {
        throw SurjectivityFailureError(ctx(e));
    } catch (const Error& e) {
        throw Error(ctx(e));
    }
}

}  // namespace

QuantizationReport quantize(const HalfspacePolytope& P, const QuantizeOptions& opts) {
    DelzantCertificate cert = stage("validate_delzant", [&] { return validate_delzant(P); });
    ConstructionData C = stage("build_construction", [&] { return build_construction(P, cert); });
    FacetFamily F = stage("facet_family", [&] { return facet_family(P, cert); });
    std::size_t codim = stage("complement_codimension", [&] { return complement_codimension(F); });
    std::vector<std::vector<int>> witnesses =
        stage("complement_codimension", [&] { return minimal_missing_sets(F); });
    std::vector<IntVector> lattice =
        stage("lattice_points", [&] { return lattice_points(P, opts.max_box); });
    SectionBasis basis = stage("section_basis", [&] { return section_basis(C, opts.max_box); });
    BijectionWitness bij =
        stage("verify_lattice_bijection", [&] { return verify_lattice_bijection(C, P, cert, opts.max_box); });

    bool verified = lattice.size() == basis.monomials.size() && bij.complete;
    return QuantizationReport{P,
                              std::move(cert),
                              std::move(C),
                              std::move(F),
                              codim,
                              std::move(witnesses),
                              std::move(lattice),
                              std::move(basis),
                              std::move(bij),
                              verified};
}

std::vector<std::pair<long long, std::size_t>> dilate_sweep(const HalfspacePolytope& P,
                                                            long long m_max,
                                                            const QuantizeOptions& opts) {
    if (m_max < 1) throw Error("dilate_sweep: m_max must be >= 1");
    // 0 in Delta iff <0, v_j> = 0 >= lambda_j for every facet
    for (std::size_t j = 0; j < P.num_facets(); ++j)
        if (P.facet(j).offset > 0)
            throw OriginNotContainedError("dilate_sweep: origin violates facet " +
                                          std::to_string(j + 1) +
                                          ", dilation about the origin is undefined");

    std::vector<std::pair<long long, std::size_t>> out;
    out.reserve(static_cast<std::size_t>(m_max));
    for (long long m = 1; m <= m_max; ++m) {
        std::vector<Facet> scaled = P.facets();
        for (Facet& f : scaled) f.offset *= m;
        // normals are unchanged, so the Delzant condition persists; it is
        // still revalidated inside quantize
        HalfspacePolytope Pm = build_polytope(P.ambient_dim(), std::move(scaled));
        out.emplace_back(m, quantize(Pm, opts).dimension());
    }
    return out;
}

}  // namespace toriq
