#include "wcore/affine_solver.hpp"

#include "wcore/linalg.hpp"

#include <stdexcept>
#include <string>

namespace wcore {

namespace {

void check_term(const LinearTerm& t, const MatrixEquation& eq, int p, int q) {
    const int want_inner = t.transpose_unknown ? q : p;
    const int want_outer = t.transpose_unknown ? p : q;
    if (t.left.cols() != want_inner || t.right.rows() != want_outer)
        throw std::invalid_argument("affine system: term does not conform to the unknown");
    if (t.left.rows() != eq.rhs.rows() || t.right.cols() != eq.rhs.cols())
        throw std::invalid_argument("affine system: term shape differs from rhs shape");
}

}  // namespace

AffineSolveResult solve_affine_system(std::span<const MatrixEquation> equations,
                                      int unknown_rows, int unknown_cols) {
    const int p = unknown_rows, q = unknown_cols;
    if (p <= 0 || q <= 0) throw std::invalid_argument("affine system: empty unknown");
    const int n_unknowns = p * q;
    int n_rows = 0;
    for (const auto& eq : equations) {
        for (const auto& t : eq.terms) check_term(t, eq, p, q);
        n_rows += eq.rhs.rows() * eq.rhs.cols();
    }

    // Augmented system [ M | b ], unknown vec(X) column-major: u(r,c) = c*p + r.
    Matrix aug(n_rows, n_unknowns + 1);
    int row = 0;
    for (const auto& eq : equations) {
        const int re = eq.rhs.rows(), ce = eq.rhs.cols();
        for (int j = 0; j < ce; ++j)
            for (int i = 0; i < re; ++i) {
                for (const auto& t : eq.terms) {
                    for (int v = 0; v < q; ++v)
                        for (int u = 0; u < p; ++u) {
                            const Rational c = t.transpose_unknown
                                                   ? t.coeff * t.left(i, v) * t.right(u, j)
                                                   : t.coeff * t.left(i, u) * t.right(v, j);
                            if (!c.is_zero()) aug(row, v * p + u) += c;
                        }
                }
                aug(row, n_unknowns) = eq.rhs(i, j);
                ++row;
            }
    }

    RrefResult r = rref(aug);
    AffineSolveResult out;
    for (int c : r.pivot_cols)
        if (c == n_unknowns) {
            out.kind = AffineSolveResult::Kind::Inconsistent;
            return out;
        }

    std::vector<bool> is_pivot(n_unknowns, false);
    for (int c : r.pivot_cols) is_pivot[c] = true;

    Matrix part(p, q);
    for (int i = 0; i < r.rank; ++i) {
        const int c = r.pivot_cols[i];
        part(c % p, c / p) = r.reduced(i, n_unknowns);
    }
    out.particular = std::move(part);

    for (int f = 0; f < n_unknowns; ++f) {
        if (is_pivot[f]) continue;
        Matrix h(p, q);
        h(f % p, f / p) = Rational(1);
        for (int i = 0; i < r.rank; ++i) {
            const int c = r.pivot_cols[i];
            h(c % p, c / p) = -r.reduced(i, f);
        }
        out.null_basis.push_back(std::move(h));
    }
    out.kind = out.null_basis.empty() ? AffineSolveResult::Kind::Unique
                                      : AffineSolveResult::Kind::Affine;
    return out;
}

MatrixEquation eq_product(Matrix left, Matrix right, Matrix rhs) {
    MatrixEquation eq;
    eq.terms.push_back(LinearTerm{Rational(1), std::move(left), false, std::move(right)});
    eq.rhs = std::move(rhs);
    return eq;
}

MatrixEquation eq_symmetric_product(const Matrix& left_factor, int unknown_rows, int unknown_cols) {
    // left_factor * X symmetric: left_factor*X - X^T*left_factor^T = 0.
    if (left_factor.cols() != unknown_rows)
        throw std::invalid_argument("eq_symmetric_product: factor does not conform");
    MatrixEquation eq;
    const int k = left_factor.rows();
    eq.terms.push_back(
        LinearTerm{Rational(1), left_factor, false, Matrix::identity(unknown_cols)});
    eq.terms.push_back(
        LinearTerm{Rational(-1), Matrix::identity(k), true, adjoint(left_factor)});
    eq.rhs = Matrix::zeros(k, unknown_cols);
    return eq;
}

MatrixEquation eq_commutator(Matrix left, Matrix right, Matrix rhs) {
    MatrixEquation eq;
    const int k = rhs.rows();
    eq.terms.push_back(LinearTerm{Rational(1), std::move(left), false, Matrix::identity(rhs.cols())});
    eq.terms.push_back(LinearTerm{Rational(-1), Matrix::identity(k), false, std::move(right)});
    eq.rhs = std::move(rhs);
    return eq;
}

}  // namespace wcore
