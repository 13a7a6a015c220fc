#include "toriq/linalg.hpp"

#include "toriq/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <utility>

namespace toriq {

using boost::multiprecision::gcd;

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
    return I;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
    if (rows.empty()) return IntMatrix();
    IntMatrix A(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != A.cols_)
            throw DimensionMismatchError("from_rows: ragged row lengths");
        for (std::size_t j = 0; j < A.cols_; ++j) A(i, j) = rows[i][j];
    }
    return A;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<IntVector> rv;
    rv.reserve(rows.size());
    for (const auto& r : rows) rv.push_back(int_vector(r));
    return from_rows(rv);
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols) {
    if (cols.empty()) return IntMatrix();
    IntMatrix A(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != A.rows_)
            throw DimensionMismatchError("from_columns: ragged column lengths");
        for (std::size_t i = 0; i < A.rows_; ++i) A(i, j) = cols[j][i];
    }
    return A;
}

IntVector IntMatrix::row(std::size_t i) const {
    IntVector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

IntVector IntMatrix::column(std::size_t j) const {
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void IntMatrix::set_row(std::size_t i, const IntVector& v) {
    if (v.size() != cols_) throw DimensionMismatchError("set_row: wrong length");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix T(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) T(j, i) = (*this)(i, j);
    return T;
}

bool IntMatrix::is_zero() const {
    for (const Int& x : a_)
        if (x != 0) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& A, const IntMatrix& B) {
    if (A.cols() != B.rows())
        throw DimensionMismatchError("matrix product: inner dimensions " +
                                     std::to_string(A.cols()) + " vs " +
                                     std::to_string(B.rows()));
    IntMatrix C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k) {
            const Int& aik = A(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < B.cols(); ++j) C(i, j) += aik * B(k, j);
        }
    return C;
}

IntVector operator*(const IntMatrix& A, const IntVector& x) {
    if (A.cols() != x.size())
        throw DimensionMismatchError("matvec: matrix has " + std::to_string(A.cols()) +
                                     " columns, vector has dimension " + std::to_string(x.size()));
    IntVector y(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < A.cols(); ++j) acc += A(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

std::string to_string(const IntMatrix& A) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < A.rows(); ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < A.cols(); ++j) {
            if (j) os << " ";
            os << A(i, j);
        }
    }
    os << "]";
    return os.str();
}

IntVector primitive(const IntVector& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    if (g == 0) throw ZeroVectorError();
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

RowHermiteResult row_hermite_normal_form(IntMatrix A) {
    const std::size_t m = A.rows();
    const std::size_t n = A.cols();
    IntMatrix U = IntMatrix::identity(m);

    // Zero A(i,c) against the pivot A(r,c). When the pivot divides the
    // entry a plain subtraction keeps row r fixed; otherwise a 2x2
    // transform from the extended gcd strictly shrinks the pivot.
    auto combine = [&](std::size_t r, std::size_t i, std::size_t c) {
        if (A(r, c) != 0 && A(i, c) % A(r, c) == 0) {
            Int q = A(i, c) / A(r, c);
            for (std::size_t j = 0; j < n; ++j) A(i, j) -= q * A(r, j);
            for (std::size_t j = 0; j < m; ++j) U(i, j) -= q * U(r, j);
            return;
        }
        ExtGcd e = ext_gcd(A(r, c), A(i, c));
        Int u = A(i, c) / e.g;
        Int v = A(r, c) / e.g;
        // det [[s, t], [-u, v]] = (s*a + t*b)/g = 1
        for (std::size_t j = 0; j < n; ++j) {
            Int ar = e.s * A(r, j) + e.t * A(i, j);
            Int ai = -u * A(r, j) + v * A(i, j);
            A(r, j) = std::move(ar);
            A(i, j) = std::move(ai);
        }
        for (std::size_t j = 0; j < m; ++j) {
            Int ur = e.s * U(r, j) + e.t * U(i, j);
            Int ui = -u * U(r, j) + v * U(i, j);
            U(r, j) = std::move(ur);
            U(i, j) = std::move(ui);
        }
    };

    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        for (std::size_t i = r + 1; i < m; ++i)
            if (A(i, c) != 0) combine(r, i, c);
        if (A(r, c) == 0) continue;
        if (A(r, c) < 0) {
            for (std::size_t j = 0; j < n; ++j) A(r, j) = -A(r, j);
            for (std::size_t j = 0; j < m; ++j) U(r, j) = -U(r, j);
        }
        // reduce the entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(A(i, c), A(r, c));
            if (q == 0) continue;
            for (std::size_t j = 0; j < n; ++j) A(i, j) -= q * A(r, j);
            for (std::size_t j = 0; j < m; ++j) U(i, j) -= q * U(r, j);
        }
        ++r;
    }
    return {std::move(A), std::move(U)};
}

HermiteResult hermite_normal_form(const IntMatrix& A) {
    RowHermiteResult rh = row_hermite_normal_form(A.transpose());
    // H_row = U_row * A^T  =>  H_row^T = A * U_row^T
    return {rh.H.transpose(), rh.U.transpose()};
}

IntMatrix kernel_lattice_basis(const IntMatrix& A) {
    HermiteResult h = hermite_normal_form(A);
    // Columns of U matching zero columns of H span ker(A) over Z; the
    // span is saturated because U is unimodular.
    std::vector<IntVector> kernel_cols;
    for (std::size_t j = 0; j < h.H.cols(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < h.H.rows(); ++i)
            if (h.H(i, j) != 0) { zero = false; break; }
        if (zero) kernel_cols.push_back(h.U.column(j));
    }
    if (kernel_cols.empty()) return IntMatrix(A.cols(), 0);
    // canonical basis: transposed basis in row Hermite normal form
    IntMatrix basis_t = IntMatrix::from_rows(kernel_cols);
    return row_hermite_normal_form(std::move(basis_t)).H.transpose();
}

Int det(const IntMatrix& A) {
    if (A.rows() != A.cols())
        throw NotSquareError("det: matrix is " + std::to_string(A.rows()) + "x" +
                             std::to_string(A.cols()));
    const std::size_t n = A.rows();
    if (n == 0) return 1;
    IntMatrix M = A;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && M(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(M(k, j), M(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;  // exact
            M(i, k) = 0;
        }
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& A) {
    Int d = det(A);
    if (d != 1 && d != -1)
        throw NotUnimodularError("unimodular_inverse: determinant is " + d.str(), d);
    // The row HNF of an integer-invertible matrix is the identity, so the
    // recorded transform is exactly the inverse.
    RowHermiteResult rh = row_hermite_normal_form(A);
    return std::move(rh.U);
}

RationalVector solve_rational(const IntMatrix& A, const IntVector& b) {
    if (A.rows() != A.cols())
        throw NotSquareError("solve_rational: matrix is " + std::to_string(A.rows()) + "x" +
                             std::to_string(A.cols()));
    if (b.size() != A.rows())
        throw DimensionMismatchError("solve_rational: rhs dimension mismatch");
    const std::size_t n = A.rows();

    std::vector<RationalVector> M(n, RationalVector(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) M[i][j] = Rat(A(i, j));
        M[i][n] = Rat(b[i]);
    }

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && M[p][k] == 0) ++p;
        if (p == n) throw SingularError("solve_rational: singular matrix");
        std::swap(M[k], M[p]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || M[i][k] == 0) continue;
            Rat f = M[i][k] / M[k][k];
            for (std::size_t j = k; j <= n; ++j) M[i][j] -= f * M[k][j];
        }
    }

    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = M[i][n] / M[i][i];
    return x;
}

std::vector<Int> smith_invariants(IntMatrix A) {
    const std::size_t m = A.rows();
    const std::size_t n = A.cols();

    // Both eliminations keep the pivot row/column fixed whenever the
    // pivot divides the target entry; the gcd transform only runs when
    // it strictly shrinks the pivot, which rules out oscillation.
    auto row_combine = [&](std::size_t r, std::size_t i, std::size_t c) {
        if (A(r, c) != 0 && A(i, c) % A(r, c) == 0) {
            Int q = A(i, c) / A(r, c);
            for (std::size_t j = 0; j < n; ++j) A(i, j) -= q * A(r, j);
            return;
        }
        ExtGcd e = ext_gcd(A(r, c), A(i, c));
        Int u = A(i, c) / e.g;
        Int v = A(r, c) / e.g;
        for (std::size_t j = 0; j < n; ++j) {
            Int ar = e.s * A(r, j) + e.t * A(i, j);
            Int ai = -u * A(r, j) + v * A(i, j);
            A(r, j) = std::move(ar);
            A(i, j) = std::move(ai);
        }
    };
    auto col_combine = [&](std::size_t c, std::size_t j, std::size_t r) {
        if (A(r, c) != 0 && A(r, j) % A(r, c) == 0) {
            Int q = A(r, j) / A(r, c);
            for (std::size_t i = 0; i < m; ++i) A(i, j) -= q * A(i, c);
            return;
        }
        ExtGcd e = ext_gcd(A(r, c), A(r, j));
        Int u = A(r, j) / e.g;
        Int v = A(r, c) / e.g;
        for (std::size_t i = 0; i < m; ++i) {
            Int ac = e.s * A(i, c) + e.t * A(i, j);
            Int aj = -u * A(i, c) + v * A(i, j);
            A(i, c) = std::move(ac);
            A(i, j) = std::move(aj);
        }
    };

    std::vector<Int> invariants;
    std::size_t t = 0;
    while (t < m && t < n) {
        // locate a nonzero entry in the trailing block
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < m && !found; ++i)
            for (std::size_t j = t; j < n && !found; ++j)
                if (A(i, j) != 0) { pi = i; pj = j; found = true; }
        if (!found) break;
        if (pi != t)
            for (std::size_t j = 0; j < n; ++j) std::swap(A(t, j), A(pi, j));
        if (pj != t)
            for (std::size_t i = 0; i < m; ++i) std::swap(A(i, t), A(i, pj));

        for (;;) {
            for (std::size_t i = t + 1; i < m; ++i)
                if (A(i, t) != 0) row_combine(t, i, t);
            for (std::size_t j = t + 1; j < n; ++j)
                if (A(t, j) != 0) col_combine(t, j, t);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i)
                if (A(i, t) != 0) { clean = false; break; }
            if (!clean) continue;

            // pivot must divide the whole trailing block
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n && divides; ++j)
                    if (A(i, j) % A(t, t) != 0) {
                        for (std::size_t jj = 0; jj < n; ++jj) A(t, jj) += A(i, jj);
                        divides = false;
                    }
            if (divides) break;
        }
        if (A(t, t) < 0)
            for (std::size_t j = 0; j < n; ++j) A(t, j) = -A(t, j);
        invariants.push_back(A(t, t));
        ++t;
    }
    return invariants;
}

std::size_t rank(const IntMatrix& A) {
    RowHermiteResult rh = row_hermite_normal_form(A);
    std::size_t r = 0;
    for (std::size_t i = 0; i < rh.H.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < rh.H.cols(); ++j)
            if (rh.H(i, j) != 0) { zero = false; break; }
        if (!zero) ++r;
    }
    return r;
}

}  // namespace toriq
