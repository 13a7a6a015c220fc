#include "toriq/sections.hpp"

#include "toriq/errors.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace toriq {

bool in_UF(const FacetFamily& F, const ZeroIndexSet& z) {
    std::vector<int> sorted = z.indices;
    std::sort(sorted.begin(), sorted.end());
    return F.contains(sorted);
}

namespace {

// Visit k-subsets of {0..n-1}; return true from fn to stop early.
template <typename Fn>
bool scan_subsets(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return false;
    std::vector<int> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<int>(i);
    for (;;) {
        if (fn(idx)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == static_cast<int>(n - k + i - 1)) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::size_t complement_codimension(const FacetFamily& F) {
    const std::size_t N = F.num_facets();
    for (std::size_t k = 0; k <= N; ++k) {
        bool missing = scan_subsets(N, k, [&](const std::vector<int>& sub) {
            return !F.contains(sub);
        });
        if (missing) return k;
    }
    throw AllSubsetsPresentError();
}

std::vector<std::vector<int>> minimal_missing_sets(const FacetFamily& F) {
    const std::size_t k = complement_codimension(F);
    std::vector<std::vector<int>> out;
    scan_subsets(F.num_facets(), k, [&](const std::vector<int>& sub) {
        if (!F.contains(sub)) out.push_back(sub);
        return false;
    });
    return out;
}

std::string render(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < m.exponents.size(); ++j) {
        if (m.exponents[j] == 0) continue;
        if (!first) os << "*";
        os << "z" << (j + 1);
        if (m.exponents[j] > 1) os << "^" << m.exponents[j];
        first = false;
    }
    if (first) return "1";
    return os.str();
}

IntVector monomial_weight(const ConstructionData& C, const Monomial& m) {
    return C.L * m.exponents;
}

SectionBasis section_basis(const ConstructionData& C, const Int& max_box) {
    SectionBasis basis;
    basis.weight = C.nu;
    for (IntVector& I : fiber_lattice_points(C, C.fiber_bounds, max_box))
        basis.monomials.push_back({std::move(I)});
    return basis;
}

bool equivariance_witness(const ConstructionData& C, const Monomial& m, int trials) {
    if (trials < 1) throw Error("equivariance_witness: trials must be >= 1");
    const std::size_t k = C.L.rows();
    // s(k.z) = k^{L(I)} z^I must match k^{nu} z^I, so the exponent
    // difference has to pair to zero against every sampled element.
    IntVector diff = monomial_weight(C, m);
    for (std::size_t t = 0; t < k; ++t) diff[t] -= C.nu[t];

    std::mt19937_64 rng(0x746f726971ULL);  // fixed seed, deterministic
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 12);
    for (int trial = 0; trial < trials; ++trial) {
        Rat pairing = 0;
        for (std::size_t t = 0; t < k; ++t)
            pairing += Rat(num(rng), den(rng)) * Rat(diff[t]);
        if (pairing != 0) return false;
    }
    return true;
}

}  // namespace toriq
