#pragma once

#include "toriq/linalg.hpp"

#include <set>
#include <vector>

namespace toriq {

// One half-space <x, normal> >= offset with a primitive inward normal.
struct Facet {
    IntVector normal;
    Int offset;

    bool operator==(const Facet&) const = default;
};

// Enumeration guard: a bounding box with more points than this aborts
// instead of scanning.
inline const long long kDefaultMaxBox = 100000000;

// A bounded, full-dimensional polytope in H-representation. Instances
// only exist after build_polytope has verified boundedness, full
// dimension and irredundancy, so every facet supports a face of
// dimension n-1.
class HalfspacePolytope {
public:
    std::size_t ambient_dim() const { return dim_; }
    std::size_t num_facets() const { return facets_.size(); }
    const std::vector<Facet>& facets() const { return facets_; }
    const Facet& facet(std::size_t j) const { return facets_[j]; }

    // N x n matrix whose rows are the facet normals.
    IntMatrix normal_matrix() const;
    IntVector offsets() const;

    bool contains(const IntVector& x) const;
    bool contains(const RationalVector& x) const;

private:
    HalfspacePolytope(std::size_t dim, std::vector<Facet> facets)
        : dim_(dim), facets_(std::move(facets)) {}
    friend HalfspacePolytope build_polytope(std::size_t, std::vector<Facet>);

    std::size_t dim_;
    std::vector<Facet> facets_;
};

// Canonicalizes normals to primitive form and validates the polytope.
// Throws NonIntegralOffsetError, EmptyPolytopeError, UnboundedError,
// NotFullDimensionalError or RedundantFacetError.
HalfspacePolytope build_polytope(std::size_t ambient_dim, std::vector<Facet> raw_facets);

struct Vertex {
    RationalVector point;
    std::vector<int> active_facets;  // 0-based, sorted; every facet tight at point

    bool is_integral() const { return toriq::is_integral(point); }
    IntVector integral_point() const { return to_int_vector(point); }
};

// All vertices, exact coordinates, ordered lexicographically by point.
std::vector<Vertex> vertices(const HalfspacePolytope& P);

struct DelzantCertificate {
    std::vector<Vertex> vertices;          // lexicographic order
    std::vector<IntVector> vertex_points;  // integer coordinates, same order
    std::vector<Int> vertex_determinants;  // det of the stacked active normals, each +-1
};

// Checks that every vertex lies on exactly n facets whose normals form
// a lattice basis. Throws NotSimpleError or NotUnimodularError.
DelzantCertificate validate_delzant(const HalfspacePolytope& P);

// All integer points of the polytope, ordered lexicographically.
std::vector<IntVector> lattice_points(const HalfspacePolytope& P,
                                      const Int& max_box = Int(kDefaultMaxBox));

// The set system of facet index sets with nonempty common intersection.
// Downward-closed; contains the empty set and every singleton.
class FacetFamily {
public:
    FacetFamily(std::size_t n_facets, std::set<std::vector<int>> members)
        : n_facets_(n_facets), members_(std::move(members)) {}

    std::size_t num_facets() const { return n_facets_; }
    const std::set<std::vector<int>>& members() const { return members_; }
    bool contains(const std::vector<int>& sorted_indices) const {
        return members_.count(sorted_indices) > 0;
    }

private:
    std::size_t n_facets_;
    std::set<std::vector<int>> members_;  // sorted 0-based index sets
};

// Family of all facet subsets with nonempty intersection; every nonempty
// face of a compact polytope contains a vertex, so the members are
// exactly the subsets of vertex active sets.
FacetFamily facet_family(const HalfspacePolytope& P, const DelzantCertificate& cert);

}  // namespace toriq
