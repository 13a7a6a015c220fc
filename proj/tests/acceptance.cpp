// Acceptance suite: end-to-end checks of the headline guarantees, one
// pass/fail line per criterion. Exits nonzero if any criterion fails.
//
// usage: toriq-acceptance [golden-dir]

#include "toriq/errors.hpp"
#include "toriq/generators.hpp"
#include "toriq/quantize.hpp"
#include "toriq/report.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

using namespace toriq;

namespace {

std::string g_golden_dir = "tests/golden";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open golden file " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// simplices m<=6 in dims 2-3, boxes with sides <=3 in dims 1-3,
// Hirzebruch a<=3, b<=5
std::vector<HalfspacePolytope> full_suite() {
    std::vector<HalfspacePolytope> suite;
    for (std::size_t dim : {2, 3})
        for (long long m = 1; m <= 6; ++m) suite.push_back(make_simplex(dim, m));
    for (long long s1 = 1; s1 <= 3; ++s1) {
        suite.push_back(make_box({s1}));
        for (long long s2 = 1; s2 <= 3; ++s2) {
            suite.push_back(make_box({s1, s2}));
            for (long long s3 = 1; s3 <= 3; ++s3) suite.push_back(make_box({s1, s2, s3}));
        }
    }
    for (long long a = 1; a <= 3; ++a)
        for (long long b = a + 1; b <= 5; ++b) suite.push_back(make_hirzebruch(a, b));
    return suite;
}

// criterion 1: dimensions of the dilated triangle against an
// independent scan and the closed count 1 + 2 + ... + (m+1)
bool criterion_theorem_triangle(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    for (long long m = 1; m <= 10; ++m) {
        QuantizationReport r = quantize(make_simplex(2, m));
        // independent scan of the box [0,m]^2
        std::size_t scan = 0;
        for (long long x = 0; x <= m; ++x)
            for (long long y = 0; y <= m; ++y)
                if (x + y <= m) ++scan;
        std::size_t closed = static_cast<std::size_t>((m + 1) * (m + 2) / 2);
        if (r.dimension() != scan || r.lattice_count() != scan || scan != closed) {
            detail = "m=" + std::to_string(m) + ": dimension " + std::to_string(r.dimension()) +
                     ", scan " + std::to_string(scan) + ", closed form " + std::to_string(closed);
            return false;
        }
    }
    auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    detail = "m=1..10 all equal (m+1)(m+2)/2, " + std::to_string(ms) + " ms";
    if (ms >= 1000) {
        detail += " (budget 1000 ms exceeded)";
        return false;
    }
    return true;
}

// criterion 2: construction data of the simplex generator, byte-exact
bool criterion_golden_construction(std::string& detail) {
    struct Case {
        long long m;
        std::string file;
        bool json;
    };
    for (const Case& c : {Case{1, "simplex2_m1_construct.json", true},
                          Case{5, "simplex2_m5_construct.json", true},
                          Case{1, "simplex2_m1_construct.txt", false}}) {
        HalfspacePolytope P = make_simplex(2, c.m);
        ConstructionData C = build_construction(P);
        std::string rendered = c.json ? render_construct_json(P, C) : render_construct_text(P, C);
        std::string expected = read_file(g_golden_dir + "/" + c.file);
        if (rendered != expected) {
            detail = c.file + " differs";
            return false;
        }
    }
    detail = "pi, L, nu byte-exact against 3 golden files";
    return true;
}

// criterion 3: the square's facet family and complement codimension
bool criterion_square_family(std::string& detail) {
    HalfspacePolytope P = make_box({1, 1});
    FacetFamily F = facet_family(P, validate_delzant(P));
    std::set<std::vector<int>> expected = {{},     {0},    {1},    {2},   {3},
                                           {0, 1}, {1, 2}, {2, 3}, {0, 3}};
    if (F.members() != expected) {
        detail = "family has " + std::to_string(F.members().size()) + " sets, expected the 9";
        return false;
    }
    if (complement_codimension(F) != 2) {
        detail = "codimension " + std::to_string(complement_codimension(F)) + ", expected 2";
        return false;
    }
    std::vector<std::vector<int>> w = minimal_missing_sets(F);
    if (w != std::vector<std::vector<int>>{{0, 2}, {1, 3}}) {
        detail = "witnesses are not {1,3},{2,4}";
        return false;
    }
    detail = "9 sets, codimension 2, witnesses {1,3},{2,4}";
    return true;
}

// criterion 4: embedding bijection across the full generator suite
bool criterion_bijection_suite(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<HalfspacePolytope> suite = full_suite();
    for (const HalfspacePolytope& P : suite) {
        DelzantCertificate cert = validate_delzant(P);
        ConstructionData C = build_construction(P, cert);
        BijectionWitness w = verify_lattice_bijection(C, P, cert);
        if (!w.complete) {
            detail = "incomplete bijection: " + w.failure;
            return false;
        }
    }
    auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    detail = std::to_string(suite.size()) + " polytopes, all complete, " + std::to_string(ms) +
             " ms";
    if (ms >= 10000) {
        detail += " (budget 10000 ms exceeded)";
        return false;
    }
    return true;
}

// criterion 5: exactness of the construction on every suite polytope
bool criterion_exactness(std::string& detail) {
    for (const HalfspacePolytope& P : full_suite()) {
        DelzantCertificate cert = validate_delzant(P);
        ConstructionData C = build_construction(P, cert);
        if (!(C.pi * C.kernel_basis).is_zero()) {
            detail = "pi * K != 0";
            return false;
        }
        if (!(C.L * C.V).is_zero()) {
            detail = "L * V != 0";
            return false;
        }
        std::vector<Int> inv = smith_invariants(C.pi);
        if (inv.size() != P.ambient_dim() ||
            !std::all_of(inv.begin(), inv.end(), [](const Int& d) { return d == 1; })) {
            detail = "Smith invariants of pi are not all 1";
            return false;
        }
        for (const Int& d : cert.vertex_determinants)
            if (d != 1 && d != -1) {
                detail = "vertex determinant " + d.str();
                return false;
            }
    }
    detail = "pi*K = 0, L*V = 0, Smith(pi) = 1, vertex dets +-1 on the whole suite";
    return true;
}

// criterion 6: removed strata have complex codimension >= 2
bool criterion_codimension(std::string& detail) {
    std::size_t min_codim = SIZE_MAX;
    for (const HalfspacePolytope& P : full_suite()) {
        std::size_t c = complement_codimension(facet_family(P, validate_delzant(P)));
        min_codim = std::min(min_codim, c);
        if (c < 2) {
            detail = "codimension " + std::to_string(c);
            return false;
        }
    }
    detail = "minimum codimension over the suite is " + std::to_string(min_codim);
    return true;
}

// criterion 7: the fiber solution set does not depend on the kernel basis
bool criterion_basis_independence(std::string& detail) {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick_op(0, 2);
    std::uniform_int_distribution<int> coef(-3, 3);

    std::vector<HalfspacePolytope> suite = full_suite();
    for (std::size_t i = 0; i < 10; ++i) {
        const HalfspacePolytope& P = suite[i * suite.size() / 10];
        ConstructionData C = build_construction(P);
        std::vector<IntVector> reference = fiber_lattice_points(C, C.fiber_bounds);
        const std::size_t k = C.kernel_basis.cols();
        for (int t = 0; t < 5; ++t) {
            IntMatrix W = IntMatrix::identity(k);
            std::uniform_int_distribution<std::size_t> pick(0, k - 1);
            for (int op = 0; op < 15; ++op) {
                std::size_t a = pick(rng), b = pick(rng);
                switch (pick_op(rng)) {
                    case 0: {
                        if (a == b) break;
                        Int c = coef(rng);
                        for (std::size_t j = 0; j < k; ++j) W(a, j) += c * W(b, j);
                        break;
                    }
                    case 1:
                        for (std::size_t j = 0; j < k; ++j) std::swap(W(a, j), W(b, j));
                        break;
                    default:
                        for (std::size_t j = 0; j < k; ++j) W(a, j) = -W(a, j);
                }
            }
            ConstructionData D = C;
            D.kernel_basis = C.kernel_basis * W;
            D.L = D.kernel_basis.transpose();
            IntVector neg_lambda = C.lambda;
            for (Int& x : neg_lambda) x = -x;
            D.nu = D.L * neg_lambda;
            if (fiber_lattice_points(D, D.fiber_bounds) != reference) {
                detail = "fiber set changed under a unimodular basis change";
                return false;
            }
        }
    }
    detail = "10 polytopes x 5 unimodular resamplings, fiber sets identical";
    return true;
}

// criterion 8: the two canonical rejections
bool criterion_negative(std::string& detail) {
    try {
        validate_delzant(build_polytope(2, {{int_vector({1, 0}), Int(0)},
                                            {int_vector({0, 1}), Int(0)},
                                            {int_vector({-1, -2}), Int(-2)}}));
        detail = "(-1,-2)-triangle was accepted";
        return false;
    } catch (const NotUnimodularError& e) {
        if (e.determinant != 2 && e.determinant != -2) {
            detail = "wrong determinant " + e.determinant.str();
            return false;
        }
    }
    try {
        build_polytope(1, {{int_vector({1}), Int(0)}});
        detail = "single half-space was accepted";
        return false;
    } catch (const UnboundedError&) {
    }
    detail = "NotUnimodular(det +-2) and Unbounded raised as required";
    return true;
}

// criterion 9: integer translation and facet relabeling change nothing
bool criterion_invariance(std::string& detail) {
    std::mt19937_64 rng(0xfeed);
    std::uniform_int_distribution<int> shift(-5, 5);
    std::vector<HalfspacePolytope> suite = full_suite();
    for (int t = 0; t < 100; ++t) {
        const HalfspacePolytope& P = suite[static_cast<std::size_t>(t) % suite.size()];
        QuantizationReport reference = quantize(P);

        IntVector tr(P.ambient_dim());
        for (Int& x : tr) x = shift(rng);
        std::vector<Facet> facets = P.facets();
        for (Facet& f : facets) f.offset += dot(tr, f.normal);
        std::shuffle(facets.begin(), facets.end(), rng);

        QuantizationReport r = quantize(build_polytope(P.ambient_dim(), facets));
        if (r.dimension() != reference.dimension() ||
            r.lattice_count() != reference.lattice_count() ||
            r.family.members().size() != reference.family.members().size()) {
            detail = "case " + std::to_string(t) + " changed an invariant";
            return false;
        }
    }
    detail = "100 random translate+permute cases, all invariants preserved";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_golden_dir = argv[1];

    struct Criterion {
        const char* name;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {"theorem reproduction, triangle m=1..10", criterion_theorem_triangle},
        {"construction data byte-exact vs golden", criterion_golden_construction},
        {"square facet family and codimension", criterion_square_family},
        {"lattice-fiber bijection on the generator suite", criterion_bijection_suite},
        {"exactness invariants on the suite", criterion_exactness},
        {"complement codimension >= 2 on the suite", criterion_codimension},
        {"kernel-basis independence of the fiber", criterion_basis_independence},
        {"negative inputs rejected", criterion_negative},
        {"translation and relabeling invariance", criterion_invariance},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].name << " — "
                  << detail << "\n";
        if (!ok) ++failures;
    }
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all " << criteria.size() << " criteria passed\n";
    return 0;
}
