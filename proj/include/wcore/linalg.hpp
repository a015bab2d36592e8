#ifndef WCORE_LINALG_HPP
#define WCORE_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "wcore/matrix.hpp"

namespace wcore {

struct RrefResult {
    Matrix reduced;
    int rank = 0;
    std::vector<int> pivot_cols;
};

/// Unique reduced row-echelon form, exact pivoting (first nonzero entry).
RrefResult rref(const Matrix& a);

int rank(const Matrix& a);

/// Inverse of a square matrix, or nullopt when rank-deficient.
std::optional<Matrix> inverse(const Matrix& a);

/// A linear subspace of Q^ambient given by an independent-column basis.
/// The trivial subspace has a basis with zero columns.
class Subspace {
public:
    Subspace(int ambient_dim, Matrix basis);
    static Subspace trivial(int ambient_dim) { return Subspace(ambient_dim, Matrix(ambient_dim, 0)); }
    static Subspace full(int ambient_dim) { return Subspace(ambient_dim, Matrix::identity(ambient_dim)); }

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }

private:
    int ambient_;
    Matrix basis_;
};

enum class SubspaceRelation { Equal, PinQ, QinP, Incomparable };

/// Containment decided by rank tests: P <= Q iff rank([Q | P]) = rank(Q).
bool subspace_contained(const Subspace& p, const Subspace& q);
SubspaceRelation subspace_relation(const Subspace& p, const Subspace& q);

/// Column space of a (basis: the pivot columns of a).
Subspace column_space(const Matrix& a);
/// Row space of a, represented as the column space of adjoint(a).
Subspace row_space(const Matrix& a);
/// Kernel {v : a v = 0}; dim = cols(a) - rank(a).
Subspace null_space(const Matrix& a);

/// Shorthand for column-space containment col(a) <= col(b).
bool col_contained(const Matrix& a, const Matrix& b);
bool col_equal(const Matrix& a, const Matrix& b);

/// a = F G with F of full column rank r and G of full row rank r, r = rank(a).
/// F is the pivot columns of a; G the nonzero rows of rref(a). Nullopt for the
/// zero matrix, whose factorization is left to the caller.
std::optional<std::pair<Matrix, Matrix>> full_rank_factorization(const Matrix& a);

}  // namespace wcore

#endif
