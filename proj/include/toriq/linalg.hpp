#pragma once

#include "toriq/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace toriq {

// Dense row-major matrix of arbitrary-precision integers. Zero-column
// matrices are allowed (they show up as empty kernel bases).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix from_columns(const std::vector<IntVector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector column(std::size_t j) const;
    void set_row(std::size_t i, const IntVector& v);

    IntMatrix transpose() const;
    bool is_zero() const;

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> a_;
};

IntMatrix operator*(const IntMatrix& A, const IntMatrix& B);
IntVector operator*(const IntMatrix& A, const IntVector& x);

std::string to_string(const IntMatrix& A);

// v divided by the gcd of its entries; direction preserved.
IntVector primitive(const IntVector& v);

// Row-style Hermite normal form: H = U*A with U unimodular, pivots
// positive, entries above each pivot reduced into [0, pivot), zero rows
// last.
struct RowHermiteResult {
    IntMatrix H;
    IntMatrix U;
};
RowHermiteResult row_hermite_normal_form(IntMatrix A);

// Column-style Hermite normal form: H = A*U with U unimodular. A and H
// span the same column lattice; zero columns of H come last.
struct HermiteResult {
    IntMatrix H;
    IntMatrix U;
};
HermiteResult hermite_normal_form(const IntMatrix& A);

// Basis of ker(A) geq Z^N as an N x k matrix of columns. The basis is
// saturated (every integer kernel vector is an integer combination of
// the columns) and canonical: the transposed basis is in row Hermite
// normal form.
IntMatrix kernel_lattice_basis(const IntMatrix& A);

// Exact inverse of a matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& A);

// Exact determinant via fraction-free (Bareiss) elimination.
Int det(const IntMatrix& A);

// Unique exact solution of A*x = b for square nonsingular A.
RationalVector solve_rational(const IntMatrix& A, const IntVector& b);

// Nonzero diagonal entries of the Smith normal form, each positive,
// each dividing the next.
std::vector<Int> smith_invariants(IntMatrix A);

std::size_t rank(const IntMatrix& A);

}  // namespace toriq
