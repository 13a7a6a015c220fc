#pragma once

#include "toriq/polytope.hpp"

namespace toriq {

// m times the standard simplex: x_i >= 0, x_1 + ... + x_n <= m. The
// coordinate facets are listed as e_n, ..., e_1 followed by the
// diagonal facet, so for n = 2 the facet numbering is (0,1), (1,0),
// (-1,-1).
HalfspacePolytope make_simplex(std::size_t dim, const Int& m);

// Axis-aligned box [0, s_1] x ... x [0, s_d]: facets e_1..e_d with
// offset 0, then -e_1..-e_d with offsets -s_i.
HalfspacePolytope make_box(const std::vector<Int>& sides);

// Hirzebruch trapezoid {x >= 0, y >= 0, -y >= -1, -x - a*y >= -b} with
// b > a >= 1.
HalfspacePolytope make_hirzebruch(const Int& a, const Int& b);

}  // namespace toriq
