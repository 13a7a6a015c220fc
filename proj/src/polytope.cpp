#include "toriq/polytope.hpp"

#include "toriq/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>

namespace toriq {

using boost::multiprecision::gcd;

IntMatrix HalfspacePolytope::normal_matrix() const {
    IntMatrix V(facets_.size(), dim_);
    for (std::size_t j = 0; j < facets_.size(); ++j) V.set_row(j, facets_[j].normal);
    return V;
}

IntVector HalfspacePolytope::offsets() const {
    IntVector lambda(facets_.size());
    for (std::size_t j = 0; j < facets_.size(); ++j) lambda[j] = facets_[j].offset;
    return lambda;
}

bool HalfspacePolytope::contains(const IntVector& x) const {
    for (const Facet& f : facets_)
        if (dot(x, f.normal) < f.offset) return false;
    return true;
}

bool HalfspacePolytope::contains(const RationalVector& x) const {
    for (const Facet& f : facets_) {
        Rat acc = 0;
        for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * Rat(f.normal[i]);
        if (acc < Rat(f.offset)) return false;
    }
    return true;
}

namespace {

// Visit all k-subsets of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<int> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<int>(i);
    for (;;) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == static_cast<int>(n - k + i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Exact Fourier-Motzkin feasibility test for {x : <x, normal_j> >= offset_j}.
bool is_feasible(const std::vector<Facet>& facets, std::size_t dim) {
    // rows (a, c) encode a.x >= c
    std::vector<std::pair<RationalVector, Rat>> rows;
    rows.reserve(facets.size());
    for (const Facet& f : facets) {
        RationalVector a(dim);
        for (std::size_t i = 0; i < dim; ++i) a[i] = Rat(f.normal[i]);
        rows.emplace_back(std::move(a), Rat(f.offset));
    }

    for (std::size_t k = dim; k-- > 0;) {
        std::vector<std::pair<RationalVector, Rat>> next;
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rat& c = rows[i].first[k];
            if (c > 0)
                pos.push_back(i);
            else if (c < 0)
                neg.push_back(i);
            else
                next.push_back(rows[i]);
        }
        for (std::size_t i : pos)
            for (std::size_t j : neg) {
                // cancel coordinate k with positive multipliers
                Rat mi = -rows[j].first[k];
                Rat mj = rows[i].first[k];
                RationalVector a(k);
                for (std::size_t t = 0; t < k; ++t)
                    a[t] = mi * rows[i].first[t] + mj * rows[j].first[t];
                Rat c = mi * rows[i].second + mj * rows[j].second;
                next.emplace_back(std::move(a), std::move(c));
            }
        for (auto& r : next) r.first.resize(k);
        rows = std::move(next);
    }

    for (const auto& r : rows)
        if (r.second > 0) return false;  // 0 >= c with c > 0
    return true;
}

IntMatrix submatrix_rows(const IntMatrix& V, const std::vector<int>& rows) {
    IntMatrix S(rows.size(), V.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < V.cols(); ++j) S(i, j) = V(rows[i], j);
    return S;
}

// Affine rank of a set of rational points: rank of the differences to
// the first point, computed exactly after clearing denominators.
std::size_t affine_rank(const std::vector<const RationalVector*>& pts, std::size_t dim) {
    if (pts.size() <= 1) return 0;
    std::vector<IntVector> diffs;
    diffs.reserve(pts.size() - 1);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        RationalVector d(dim);
        Int lcm = 1;
        for (std::size_t j = 0; j < dim; ++j) {
            d[j] = (*pts[i])[j] - (*pts[0])[j];
            lcm = lcm / gcd(lcm, denominator(d[j])) * denominator(d[j]);
        }
        IntVector row(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            Rat scaled = d[j] * Rat(lcm);
            row[j] = numerator(scaled);
        }
        diffs.push_back(std::move(row));
    }
    return rank(IntMatrix::from_rows(diffs));
}

std::vector<Vertex> enumerate_vertices(const std::vector<Facet>& facets, std::size_t dim) {
    const std::size_t N = facets.size();
    IntMatrix V(N, dim);
    for (std::size_t j = 0; j < N; ++j) V.set_row(j, facets[j].normal);

    std::map<RationalVector, std::vector<int>> found;
    for_each_subset(N, dim, [&](const std::vector<int>& sub) {
        IntMatrix A = submatrix_rows(V, sub);
        IntVector b(dim);
        for (std::size_t i = 0; i < dim; ++i) b[i] = facets[sub[i]].offset;
        RationalVector x;
        try {
            x = solve_rational(A, b);
        } catch (const SingularError&) {
            return;
        }
        if (found.count(x)) return;
        std::vector<int> active;
        bool feasible = true;
        for (std::size_t j = 0; j < N && feasible; ++j) {
            Rat acc = 0;
            for (std::size_t i = 0; i < dim; ++i) acc += x[i] * Rat(facets[j].normal[i]);
            Rat off(facets[j].offset);
            if (acc < off) feasible = false;
            else if (acc == off) active.push_back(static_cast<int>(j));
        }
        if (feasible) found.emplace(std::move(x), std::move(active));
    });

    std::vector<Vertex> out;
    out.reserve(found.size());
    for (auto& [point, active] : found) out.push_back({point, std::move(active)});
    // std::map keys are already in lexicographic order
    return out;
}

// True iff the recession cone {d : Vd >= 0} contains a nonzero ray.
// Assumes rank(V) == dim, so the cone is pointed and any nonzero ray has
// an extreme ray on dim-1 independent active rows.
bool has_recession_ray(const IntMatrix& V, std::size_t dim) {
    const std::size_t N = V.rows();
    bool ray = false;
    for_each_subset(N, dim - 1, [&](const std::vector<int>& sub) {
        if (ray) return;
        IntMatrix S = submatrix_rows(V, sub);
        IntMatrix K = kernel_lattice_basis(S);
        if (K.cols() != 1) return;  // rank deficient subset
        IntVector d = K.column(0);
        for (int sign = 0; sign < 2; ++sign) {
            bool ok = true;
            for (std::size_t j = 0; j < N && ok; ++j) {
                Int acc = 0;
                for (std::size_t i = 0; i < dim; ++i) acc += V(j, i) * d[i];
                if (acc < 0) ok = false;
            }
            if (ok) { ray = true; return; }
            for (Int& x : d) x = -x;
        }
    });
    return ray;
}

}  // namespace

HalfspacePolytope build_polytope(std::size_t ambient_dim, std::vector<Facet> raw_facets) {
    if (ambient_dim == 0) throw Error("build_polytope: ambient dimension must be positive");
    if (raw_facets.empty()) throw UnboundedError("build_polytope: no facets given");

    // canonicalize: primitive normals, offsets divided by the same gcd
    for (std::size_t j = 0; j < raw_facets.size(); ++j) {
        Facet& f = raw_facets[j];
        if (f.normal.size() != ambient_dim)
            throw DimensionMismatchError("build_polytope: facet " + std::to_string(j + 1) +
                                         " normal has dimension " + std::to_string(f.normal.size()));
        Int g = 0;
        for (const Int& x : f.normal) g = gcd(g, x);
        if (g == 0) throw ZeroVectorError();
        if (f.offset % g != 0)
            throw NonIntegralOffsetError("build_polytope: facet " + std::to_string(j + 1) +
                                             ": offset " + f.offset.str() +
                                             " is not divisible by normal gcd " + g.str(),
                                         static_cast<int>(j));
        for (Int& x : f.normal) x /= g;
        f.offset /= g;
    }

    // duplicate facets are redundant by definition
    for (std::size_t j = 0; j < raw_facets.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (raw_facets[i].normal == raw_facets[j].normal &&
                raw_facets[i].offset == raw_facets[j].offset)
                throw RedundantFacetError("build_polytope: facet " + std::to_string(j + 1) +
                                              " duplicates facet " + std::to_string(i + 1),
                                          static_cast<int>(j));

    if (!is_feasible(raw_facets, ambient_dim)) throw EmptyPolytopeError();

    std::vector<Vertex> verts = enumerate_vertices(raw_facets, ambient_dim);
    if (verts.empty())
        throw UnboundedError("build_polytope: polytope contains a line");

    IntMatrix V(raw_facets.size(), ambient_dim);
    for (std::size_t j = 0; j < raw_facets.size(); ++j) V.set_row(j, raw_facets[j].normal);
    if (has_recession_ray(V, ambient_dim))
        throw UnboundedError("build_polytope: polytope is unbounded");

    std::vector<const RationalVector*> pts;
    pts.reserve(verts.size());
    for (const Vertex& v : verts) pts.push_back(&v.point);
    if (affine_rank(pts, ambient_dim) != ambient_dim)
        throw NotFullDimensionalError("build_polytope: polytope is not full-dimensional");

    // every facet must support a face of dimension n-1
    for (std::size_t j = 0; j < raw_facets.size(); ++j) {
        std::vector<const RationalVector*> on_facet;
        for (const Vertex& v : verts)
            if (std::binary_search(v.active_facets.begin(), v.active_facets.end(),
                                   static_cast<int>(j)))
                on_facet.push_back(&v.point);
        bool supports = !on_facet.empty() &&
                        affine_rank(on_facet, ambient_dim) == ambient_dim - 1;
        if (!supports)
            throw RedundantFacetError("build_polytope: facet " + std::to_string(j + 1) +
                                          " does not support a facet of the polytope",
                                      static_cast<int>(j));
    }

    return HalfspacePolytope(ambient_dim, std::move(raw_facets));
}

std::vector<Vertex> vertices(const HalfspacePolytope& P) {
    return enumerate_vertices(P.facets(), P.ambient_dim());
}

DelzantCertificate validate_delzant(const HalfspacePolytope& P) {
    const std::size_t n = P.ambient_dim();
    DelzantCertificate cert;
    cert.vertices = vertices(P);
    for (const Vertex& v : cert.vertices) {
        if (v.active_facets.size() != n)
            throw NotSimpleError("validate_delzant: vertex " + to_string(v.point) + " lies on " +
                                 std::to_string(v.active_facets.size()) + " facets, expected " +
                                 std::to_string(n));
        IntMatrix vbar(n, n);
        for (std::size_t i = 0; i < n; ++i)
            vbar.set_row(i, P.facet(v.active_facets[i]).normal);
        Int d = det(vbar);
        if (d != 1 && d != -1)
            throw NotUnimodularError("validate_delzant: vertex " + to_string(v.point) +
                                         ": active normals are not a lattice basis, det = " +
                                         d.str(),
                                     d);
        if (!v.is_integral())
            throw Error("validate_delzant: vertex " + to_string(v.point) +
                        " is not integral despite unimodular normals");
        cert.vertex_points.push_back(v.integral_point());
        cert.vertex_determinants.push_back(std::move(d));
    }
    return cert;
}

std::vector<IntVector> lattice_points(const HalfspacePolytope& P, const Int& max_box) {
    const std::size_t n = P.ambient_dim();
    std::vector<Vertex> verts = vertices(P);

    IntVector lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat mn = verts[0].point[i], mx = verts[0].point[i];
        for (const Vertex& v : verts) {
            mn = std::min(mn, v.point[i]);
            mx = std::max(mx, v.point[i]);
        }
        lo[i] = rat_ceil(mn);
        hi[i] = rat_floor(mx);
    }

    Int volume = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (hi[i] < lo[i]) return {};
        volume *= hi[i] - lo[i] + 1;
    }
    if (volume > max_box)
        throw BoxTooLargeError("lattice_points: bounding box has " + volume.str() +
                               " points, guard is " + max_box.str());

    std::vector<IntVector> out;
    IntVector x = lo;
    for (;;) {
        if (P.contains(x)) out.push_back(x);
        // lexicographic odometer
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (x[i] < hi[i]) {
                ++x[i];
                for (std::size_t j = i + 1; j < n; ++j) x[j] = lo[j];
                break;
            }
            if (i == 0) return out;
        }
    }
}

FacetFamily facet_family(const HalfspacePolytope& P, const DelzantCertificate& cert) {
    std::set<std::vector<int>> members;
    members.insert(std::vector<int>{});
    for (const Vertex& v : cert.vertices) {
        const std::vector<int>& act = v.active_facets;
        const std::size_t k = act.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
            std::vector<int> sub;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (std::size_t{1} << b)) sub.push_back(act[b]);
            members.insert(std::move(sub));
        }
    }
    return FacetFamily(P.num_facets(), std::move(members));
}

}  // namespace toriq
