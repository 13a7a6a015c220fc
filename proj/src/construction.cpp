#include "toriq/construction.hpp"

#include "toriq/errors.hpp"

#include <algorithm>
#include <set>

namespace toriq {

ConstructionData build_construction(const HalfspacePolytope& P, const DelzantCertificate& cert) {
    const std::size_t n = P.ambient_dim();
    const std::size_t N = P.num_facets();

    ConstructionData C;
    C.V = P.normal_matrix();
    C.pi = C.V.transpose();
    C.kernel_basis = kernel_lattice_basis(C.pi);
    C.L = C.kernel_basis.transpose();
    C.lambda = P.offsets();

    IntVector neg_lambda(N);
    for (std::size_t j = 0; j < N; ++j) neg_lambda[j] = -C.lambda[j];
    C.nu = C.L * neg_lambda;

    if (C.kernel_basis.cols() != N - n)
        throw SurjectivityFailureError("build_construction: kernel rank " +
                                       std::to_string(C.kernel_basis.cols()) + ", expected " +
                                       std::to_string(N - n));
    if (!(C.pi * C.kernel_basis).is_zero())
        throw Error("build_construction: pi * kernel_basis != 0");
    if (!(C.L * C.V).is_zero())
        throw Error("build_construction: L * V != 0");

    // pi must map Z^N onto Z^n; fails only for non-Delzant input
    std::vector<Int> inv = smith_invariants(C.pi);
    bool onto = inv.size() == n;
    for (const Int& d : inv)
        if (d != 1) onto = false;
    if (!onto) {
        std::string s;
        for (const Int& d : inv) s += (s.empty() ? "" : ", ") + d.str();
        throw SurjectivityFailureError(
            "build_construction: pi is not onto the integer lattice, Smith invariants (" + s + ")");
    }

    // per-coordinate bounds of the image polytope, from the vertices
    C.fiber_bounds.assign(N, Int(0));
    for (const IntVector& u : cert.vertex_points) {
        IntVector y = affine_embed(C, u);
        for (std::size_t j = 0; j < N; ++j) C.fiber_bounds[j] = std::max(C.fiber_bounds[j], y[j]);
    }
    return C;
}

ConstructionData build_construction(const HalfspacePolytope& P) {
    return build_construction(P, validate_delzant(P));
}

IntVector affine_embed(const ConstructionData& C, const IntVector& x) {
    if (x.size() != C.V.cols())
        throw DimensionMismatchError("affine_embed: point has dimension " +
                                     std::to_string(x.size()) + ", expected " +
                                     std::to_string(C.V.cols()));
    IntVector y = C.V * x;
    for (std::size_t j = 0; j < y.size(); ++j) y[j] -= C.lambda[j];
    return y;
}

IntVector pullback_lattice_point(const ConstructionData& C, const IntVector& y,
                                 const std::vector<int>& vertex_basis) {
    const std::size_t n = C.V.cols();
    if (y.size() != C.V.rows())
        throw DimensionMismatchError("pullback_lattice_point: fiber point has dimension " +
                                     std::to_string(y.size()));
    if (vertex_basis.size() != n)
        throw DimensionMismatchError("pullback_lattice_point: vertex basis has " +
                                     std::to_string(vertex_basis.size()) + " facets, expected " +
                                     std::to_string(n));
    IntMatrix vbar(n, n);
    IntVector rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = static_cast<std::size_t>(vertex_basis[i]);
        for (std::size_t c = 0; c < n; ++c) vbar(i, c) = C.V(j, c);
        rhs[i] = y[j] + C.lambda[j];
    }
    IntMatrix inv = unimodular_inverse(vbar);
    return inv * rhs;
}

std::vector<IntVector> fiber_lattice_points(const ConstructionData& C, const IntVector& bounds,
                                            const Int& max_box) {
    const std::size_t N = C.L.cols();
    const std::size_t k = C.L.rows();
    if (bounds.size() != N)
        throw DimensionMismatchError("fiber_lattice_points: bounds dimension mismatch");

    Int volume = 1;
    for (const Int& b : bounds) {
        if (b < 0) return {};
        volume *= b + 1;
        if (volume > max_box)
            throw BoxTooLargeError("fiber_lattice_points: search box exceeds guard " +
                                   max_box.str());
    }

    // suffix min/max of sum_{j >= pos} L(t,j) * I_j over the box
    std::vector<IntVector> sufmin(k, IntVector(N + 1, Int(0)));
    std::vector<IntVector> sufmax(k, IntVector(N + 1, Int(0)));
    for (std::size_t t = 0; t < k; ++t)
        for (std::size_t pos = N; pos-- > 0;) {
            Int c = C.L(t, pos) * bounds[pos];
            sufmin[t][pos] = sufmin[t][pos + 1] + std::min(Int(0), c);
            sufmax[t][pos] = sufmax[t][pos + 1] + std::max(Int(0), c);
        }

    std::vector<IntVector> out;
    IntVector I(N, Int(0));
    IntVector residual = C.nu;  // nu - L * I over the fixed prefix

    auto feasible = [&](std::size_t pos) {
        for (std::size_t t = 0; t < k; ++t)
            if (residual[t] < sufmin[t][pos] || residual[t] > sufmax[t][pos]) return false;
        return true;
    };

    // iterative DFS, coordinates assigned in order for lexicographic output
    std::size_t pos = 0;
    if (!feasible(0)) return out;
    for (;;) {
        if (pos == N) {
            bool exact = true;
            for (std::size_t t = 0; t < k; ++t)
                if (residual[t] != 0) { exact = false; break; }
            if (exact) out.push_back(I);
            // backtrack
            for (;;) {
                if (pos == 0) return out;
                --pos;
                for (std::size_t t = 0; t < k; ++t) residual[t] += C.L(t, pos) * I[pos];
                if (I[pos] < bounds[pos]) {
                    ++I[pos];
                    break;
                }
                I[pos] = 0;
            }
        }
        // descend with the current I[pos]
        for (std::size_t t = 0; t < k; ++t) residual[t] -= C.L(t, pos) * I[pos];
        ++pos;
        if (!feasible(pos)) {
            // undo and advance
            for (;;) {
                if (pos == 0) return out;
                --pos;
                for (std::size_t t = 0; t < k; ++t) residual[t] += C.L(t, pos) * I[pos];
                if (I[pos] < bounds[pos]) {
                    ++I[pos];
                    break;
                }
                I[pos] = 0;
            }
        }
    }
}

BijectionWitness verify_lattice_bijection(const ConstructionData& C, const HalfspacePolytope& P,
                               const DelzantCertificate& cert, const Int& max_box) {
    BijectionWitness w;
    std::vector<IntVector> xs = lattice_points(P, max_box);
    std::vector<IntVector> ys = fiber_lattice_points(C, C.fiber_bounds, max_box);
    std::set<IntVector> fiber_set(ys.begin(), ys.end());

    std::set<IntVector> seen;
    for (const IntVector& x : xs) {
        IntVector y = affine_embed(C, x);
        for (const Int& c : y)
            if (c < 0) {
                w.failure = "embedded point " + to_string(y) + " of " + to_string(x) +
                            " has a negative coordinate";
                return w;
            }
        IntVector ly = C.L * y;
        if (ly != C.nu) {
            w.failure = "embedded point " + to_string(y) + " misses the fiber: L*y = " +
                        to_string(ly) + ", nu = " + to_string(C.nu);
            return w;
        }
        if (!fiber_set.count(y)) {
            w.failure = "embedded point " + to_string(y) + " of " + to_string(x) +
                        " was not found by the fiber enumeration";
            return w;
        }
        if (!seen.insert(y).second) {
            w.failure = "embedding is not injective at " + to_string(x);
            return w;
        }
        w.pairs.emplace_back(x, std::move(y));
    }

    // surjectivity: pull every fiber point back through a vertex basis
    std::set<IntVector> x_set(xs.begin(), xs.end());
    const std::vector<int>& basis = cert.vertices.front().active_facets;
    for (const IntVector& y : ys) {
        IntVector x = pullback_lattice_point(C, y, basis);
        if (affine_embed(C, x) != y) {
            w.failure = "pullback of fiber point " + to_string(y) + " does not re-embed to it";
            return w;
        }
        if (!x_set.count(x)) {
            w.failure = "fiber point " + to_string(y) + " pulls back to " + to_string(x) +
                        ", which is not a lattice point of the polytope";
            return w;
        }
    }

    w.complete = true;
    return w;
}

BijectionWitness verify_lattice_bijection(const ConstructionData& C, const HalfspacePolytope& P) {
    return verify_lattice_bijection(C, P, validate_delzant(P));
}

}  // namespace toriq
