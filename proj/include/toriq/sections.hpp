#pragma once

#include "toriq/construction.hpp"

#include <string>
#include <vector>

namespace toriq {

// Indices of the vanishing coordinates of a point of C^N. Membership in
// the open set U_F depends on nothing else, so points are never
// represented directly.
struct ZeroIndexSet {
    std::vector<int> indices;  // sorted 0-based
};

// z lies in U_F exactly when its zero-index set is a member of F.
bool in_UF(const FacetFamily& F, const ZeroIndexSet& z);

// Smallest size of a facet subset missing from F: the complex
// codimension of the largest stratum removed from C^N. At least 2 for
// every family coming from a Delzant polytope, since all singletons
// are present. Throws AllSubsetsPresentError if nothing is missing.
std::size_t complement_codimension(const FacetFamily& F);

// The missing subsets of that minimal size (0-based).
std::vector<std::vector<int>> minimal_missing_sets(const FacetFamily& F);

// Exponent vector of a monomial z^I on C^N.
struct Monomial {
    IntVector exponents;  // entrywise >= 0
};

// "z1^2*z3" with 1-based variable indices; "1" for the constant.
std::string render(const Monomial& m);

// The character by which the reduced torus scales z^I, namely L*I.
IntVector monomial_weight(const ConstructionData& C, const Monomial& m);

struct SectionBasis {
    std::vector<Monomial> monomials;  // lexicographic, duplicate-free
    IntVector weight;                 // = nu
};

// Basis of the equivariant monomials: exponent vectors I >= 0 with
// L*I = nu, i.e. the fiber enumeration read as monomials.
SectionBasis section_basis(const ConstructionData& C, const Int& max_box = Int(kDefaultMaxBox));

// Randomized cross-check of the equivariance condition: samples torus
// elements as rational exponent vectors and tests that the weight of
// z^I pairs identically with nu against them. Exact arithmetic, fixed
// seed, deterministic.
bool equivariance_witness(const ConstructionData& C, const Monomial& m, int trials);

}  // namespace toriq
