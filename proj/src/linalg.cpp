#include "wcore/linalg.hpp"

namespace wcore {

RrefResult rref(const Matrix& a) {
    Matrix m = a;
    const int rows = m.rows(), cols = m.cols();
    std::vector<int> pivots;
    int lead = 0;
    for (int col = 0; col < cols && lead < rows; ++col) {
        int piv = -1;
        for (int r = lead; r < rows; ++r)
            if (!m(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != lead)
            for (int j = 0; j < cols; ++j) std::swap(m(piv, j), m(lead, j));
        const Rational inv = m(lead, col).reciprocal();
        for (int j = 0; j < cols; ++j) m(lead, j) *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == lead || m(r, col).is_zero()) continue;
            const Rational f = m(r, col);
            for (int j = 0; j < cols; ++j) m(r, j) -= f * m(lead, j);
        }
        pivots.push_back(col);
        ++lead;
    }
    return RrefResult{std::move(m), static_cast<int>(pivots.size()), std::move(pivots)};
}

int rank(const Matrix& a) { return rref(a).rank; }

std::optional<Matrix> inverse(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("inverse: non-square matrix");
    const int k = a.rows();
    RrefResult r = rref(hstack(a, Matrix::identity(k)));
    // invertible iff every pivot of [a | I] lands in the a-block
    for (int i = 0; i < k; ++i)
        if (i >= static_cast<int>(r.pivot_cols.size()) || r.pivot_cols[i] != i)
            return std::nullopt;
    Matrix inv(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) inv(i, j) = r.reduced(i, k + j);
    return inv;
}

Subspace::Subspace(int ambient_dim, Matrix basis) : ambient_(ambient_dim), basis_(std::move(basis)) {
    if (ambient_ <= 0) throw std::invalid_argument("Subspace: ambient dimension must be positive");
    if (basis_.rows() != ambient_) throw std::invalid_argument("Subspace: basis rows != ambient dim");
    if (rank(basis_) != basis_.cols())
        throw std::invalid_argument("Subspace: basis columns are dependent");
}

bool subspace_contained(const Subspace& p, const Subspace& q) {
    if (p.ambient_dim() != q.ambient_dim())
        throw std::invalid_argument("subspace_contained: ambient dimension mismatch");
    if (p.dim() == 0) return true;
    return rank(hstack(q.basis(), p.basis())) == q.dim();
}

SubspaceRelation subspace_relation(const Subspace& p, const Subspace& q) {
    const bool pq = subspace_contained(p, q);
    const bool qp = subspace_contained(q, p);
    if (pq && qp) return SubspaceRelation::Equal;
    if (pq) return SubspaceRelation::PinQ;
    if (qp) return SubspaceRelation::QinP;
    return SubspaceRelation::Incomparable;
}

Subspace column_space(const Matrix& a) {
    if (a.rows() <= 0) throw std::invalid_argument("column_space: empty matrix");
    return Subspace(a.rows(), select_columns(a, rref(a).pivot_cols));
}

Subspace row_space(const Matrix& a) { return column_space(adjoint(a)); }

Subspace null_space(const Matrix& a) {
    const int n = a.cols();
    RrefResult r = rref(a);
    std::vector<bool> is_pivot(n, false);
    for (int c : r.pivot_cols) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix basis(n, static_cast<int>(free_cols.size()));
    for (int j = 0; j < static_cast<int>(free_cols.size()); ++j) {
        const int f = free_cols[j];
        basis(f, j) = Rational(1);
        for (int p = 0; p < r.rank; ++p) basis(r.pivot_cols[p], j) = -r.reduced(p, f);
    }
    return Subspace(n, std::move(basis));
}

bool col_contained(const Matrix& a, const Matrix& b) {
    return subspace_contained(column_space(a), column_space(b));
}

bool col_equal(const Matrix& a, const Matrix& b) {
    return subspace_relation(column_space(a), column_space(b)) == SubspaceRelation::Equal;
}

std::optional<std::pair<Matrix, Matrix>> full_rank_factorization(const Matrix& a) {
    RrefResult r = rref(a);
    if (r.rank == 0) return std::nullopt;
    Matrix f = select_columns(a, r.pivot_cols);
    Matrix g(r.rank, a.cols());
    for (int i = 0; i < r.rank; ++i)
        for (int j = 0; j < a.cols(); ++j) g(i, j) = r.reduced(i, j);
    return std::make_pair(std::move(f), std::move(g));
}

}  // namespace wcore
