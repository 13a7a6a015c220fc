#pragma once

#include "toriq/polytope.hpp"

#include <string>
#include <utility>
#include <vector>

namespace toriq {

// The linear data behind the symplectic reduction presentation of the
// toric manifold: the projection pi sending the j-th basis vector of
// Z^N to the j-th facet normal, its transpose V, a saturated canonical
// basis of ker(pi), the induced map L onto the kernel coordinates, the
// facet offsets lambda and the reduction weight nu = L(-lambda).
struct ConstructionData {
    IntMatrix pi;            // n x N, column j is the normal v_j
    IntMatrix V;             // N x n, transpose of pi
    IntMatrix kernel_basis;  // N x k, saturated, HNF-canonical
    IntMatrix L;             // k x N, transpose of kernel_basis
    IntVector lambda;        // dim N
    IntVector nu;            // dim k, = L * (-lambda)
    IntVector fiber_bounds;  // dim N, max_u <u, v_j> - lambda_j over vertices u
};

// Populates all fields and checks pi * kernel_basis = 0, L * V = 0 and
// that pi maps Z^N onto Z^n (all Smith invariants 1). Throws
// SurjectivityFailureError when a non-Delzant input slipped through.
ConstructionData build_construction(const HalfspacePolytope& P, const DelzantCertificate& cert);
ConstructionData build_construction(const HalfspacePolytope& P);

// The affine embedding x -> V*x - lambda. The image is entrywise >= 0
// exactly when x lies in the polytope, and always satisfies L*y = nu.
IntVector affine_embed(const ConstructionData& C, const IntVector& x);

// Inverts the embedding at a fiber point y by solving on the rows of an
// (unimodular) vertex basis: x = Vbar^{-1} * (y + lambda) restricted.
IntVector pullback_lattice_point(const ConstructionData& C, const IntVector& y,
                                 const std::vector<int>& vertex_basis);

// All I in Z^N with 0 <= I <= bounds and L*I = nu, by depth-first
// search with per-coordinate feasibility pruning, in lexicographic
// order. Deliberately does not use affine_embed: this enumeration is
// the independent side of the dimension check.
std::vector<IntVector> fiber_lattice_points(const ConstructionData& C, const IntVector& bounds,
                                            const Int& max_box = Int(kDefaultMaxBox));

struct BijectionWitness {
    // (x, y) with y = V*x - lambda, covering both enumerations exactly
    std::vector<std::pair<IntVector, IntVector>> pairs;
    bool complete = false;
    std::string failure;  // first discrepancy; empty when complete
};

// Enumerates the polytope lattice points and the fiber points
// independently and checks that the affine embedding is a bijection
// between them. Never silently passes: on failure the witness carries
// the first counterexample.
BijectionWitness verify_lattice_bijection(const ConstructionData& C, const HalfspacePolytope& P,
                               const DelzantCertificate& cert,
                               const Int& max_box = Int(kDefaultMaxBox));
BijectionWitness verify_lattice_bijection(const ConstructionData& C, const HalfspacePolytope& P);

}  // namespace toriq
