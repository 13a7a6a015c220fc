#include "toriq/generators.hpp"

#include "toriq/errors.hpp"

namespace toriq {

HalfspacePolytope make_simplex(std::size_t dim, const Int& m) {
    if (dim == 0) throw Error("make_simplex: dim must be >= 1");
    if (m < 1) throw Error("make_simplex: m must be >= 1");
    std::vector<Facet> facets;
    facets.reserve(dim + 1);
    for (std::size_t i = dim; i-- > 0;) {
        IntVector e(dim, Int(0));
        e[i] = 1;
        facets.push_back({std::move(e), Int(0)});
    }
    facets.push_back({IntVector(dim, Int(-1)), -m});
    return build_polytope(dim, std::move(facets));
}

HalfspacePolytope make_box(const std::vector<Int>& sides) {
    if (sides.empty()) throw Error("make_box: need at least one side");
    const std::size_t d = sides.size();
    std::vector<Facet> facets;
    facets.reserve(2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        IntVector e(d, Int(0));
        e[i] = 1;
        facets.push_back({std::move(e), Int(0)});
    }
    for (std::size_t i = 0; i < d; ++i) {
        if (sides[i] < 1) throw Error("make_box: sides must be >= 1");
        IntVector e(d, Int(0));
        e[i] = -1;
        facets.push_back({std::move(e), -sides[i]});
    }
    return build_polytope(d, std::move(facets));
}

HalfspacePolytope make_hirzebruch(const Int& a, const Int& b) {
    if (a < 1 || b <= a) throw Error("make_hirzebruch: need b > a >= 1");
    std::vector<Facet> facets;
    facets.push_back({int_vector({1, 0}), Int(0)});
    facets.push_back({int_vector({0, 1}), Int(0)});
    facets.push_back({int_vector({0, -1}), Int(-1)});
    facets.push_back({IntVector{Int(-1), -a}, -b});
    return build_polytope(2, std::move(facets));
}

}  // namespace toriq
