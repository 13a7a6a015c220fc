#include "toriq/quantize.hpp"

#include "toriq/errors.hpp"
#include "toriq/generators.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace toriq;

TEST_CASE("quantize the standard triangle") {
    QuantizationReport r = quantize(make_simplex(2, 1));
    CHECK(r.lattice_count() == 3);
    CHECK(r.dimension() == 3);
    CHECK(r.theorem_verified);
    CHECK(r.complement_codim == 3);
    CHECK(r.bijection.complete);
}

TEST_CASE("triangle dimension follows the triangular-number count") {
    for (long long m = 1; m <= 6; ++m) {
        QuantizationReport r = quantize(make_simplex(2, m));
        std::size_t expected = static_cast<std::size_t>((m + 1) * (m + 2) / 2);
        CHECK(r.lattice_count() == expected);
        CHECK(r.dimension() == expected);
        CHECK(r.theorem_verified);
    }
}

TEST_CASE("quantize the unit square") {
    QuantizationReport r = quantize(make_box({1, 1}));
    CHECK(r.lattice_count() == 4);
    CHECK(r.dimension() == 4);
    CHECK(r.theorem_verified);
    CHECK(r.complement_codim == 2);
}

TEST_CASE("theorem property across the generator suite") {
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

    for (const HalfspacePolytope& P : suite) {
        QuantizationReport r = quantize(P);
        CHECK(r.theorem_verified);
        CHECK(r.lattice_count() == r.dimension());
    }
}

TEST_CASE("quantize reports the failing stage") {
    HalfspacePolytope P = build_polytope(2, {{int_vector({1, 0}), Int(0)},
                                             {int_vector({0, 1}), Int(0)},
                                             {int_vector({-1, -2}), Int(-2)}});
    try {
        quantize(P);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("validate_delzant") != std::string::npos);
    }
}

TEST_CASE("dilate sweep") {
    SUBCASE("unit triangle") {
        auto rows = dilate_sweep(make_simplex(2, 1), 3);
        REQUIRE(rows.size() == 3);
        CHECK(rows[0] == std::pair<long long, std::size_t>{1, 3});
        CHECK(rows[1] == std::pair<long long, std::size_t>{2, 6});
        CHECK(rows[2] == std::pair<long long, std::size_t>{3, 10});
    }
    SUBCASE("unit square") {
        auto rows = dilate_sweep(make_box({1, 1}), 2);
        REQUIRE(rows.size() == 2);
        CHECK(rows[0].second == 4);
        CHECK(rows[1].second == 9);
    }
    SUBCASE("m = 1 reproduces quantize") {
        HalfspacePolytope P = make_hirzebruch(1, 3);
        CHECK(dilate_sweep(P, 1)[0].second == quantize(P).dimension());
    }
    SUBCASE("dilation needs the origin inside") {
        // shift the square so 0 is outside
        std::vector<Facet> facets = make_box({1, 1}).facets();
        IntVector t = int_vector({2, 0});
        for (Facet& f : facets) f.offset += dot(t, f.normal);
        CHECK_THROWS_AS(dilate_sweep(build_polytope(2, facets), 2), OriginNotContainedError);
    }
}

TEST_CASE("translation invariance") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> shift(-6, 6);
    std::vector<HalfspacePolytope> base = {make_simplex(2, 2), make_box({2, 1}),
                                           make_hirzebruch(1, 2), make_simplex(3, 1)};
    for (const HalfspacePolytope& P : base) {
        QuantizationReport reference = quantize(P);
        for (int t = 0; t < 10; ++t) {
            IntVector tr(P.ambient_dim());
            for (Int& x : tr) x = shift(rng);
            std::vector<Facet> facets = P.facets();
            for (Facet& f : facets) f.offset += dot(tr, f.normal);
            QuantizationReport r = quantize(build_polytope(P.ambient_dim(), facets));
            CHECK(r.lattice_count() == reference.lattice_count());
            CHECK(r.dimension() == reference.dimension());
            CHECK(r.family.members() == reference.family.members());
            CHECK(r.theorem_verified);
        }
    }
}

TEST_CASE("facet relabeling invariance") {
    std::mt19937_64 rng(47);
    std::vector<HalfspacePolytope> base = {make_simplex(2, 3), make_box({2, 2}),
                                           make_hirzebruch(2, 3)};
    for (const HalfspacePolytope& P : base) {
        QuantizationReport reference = quantize(P);
        std::vector<Facet> facets = P.facets();
        for (int t = 0; t < 10; ++t) {
            std::shuffle(facets.begin(), facets.end(), rng);
            QuantizationReport r = quantize(build_polytope(P.ambient_dim(), facets));
            CHECK(r.lattice_count() == reference.lattice_count());
            CHECK(r.dimension() == reference.dimension());
            CHECK(r.family.members().size() == reference.family.members().size());
            CHECK(r.complement_codim == reference.complement_codim);
            CHECK(r.theorem_verified);
        }
    }
}

TEST_CASE("lattice guard propagates through quantize") {
    QuantizeOptions opts;
    opts.max_box = 10;
    CHECK_THROWS_AS(quantize(make_box({100, 100}), opts), BoxTooLargeError);
}
