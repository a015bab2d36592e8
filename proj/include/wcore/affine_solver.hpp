#ifndef WCORE_AFFINE_SOLVER_HPP
#define WCORE_AFFINE_SOLVER_HPP

#include <optional>
#include <span>
#include <vector>

#include "wcore/matrix.hpp"

namespace wcore {

/// One summand  coeff * left * X * right  (or X^T when transpose_unknown),
/// matching the affine shape of every defining equation in the inverse
/// classes: fixed factors multiply the unknown from either side.
struct LinearTerm {
    Rational coeff = Rational(1);
    Matrix left;
    bool transpose_unknown = false;
    Matrix right;
};

/// sum(terms) = rhs, affine in the unknown matrix X.
struct MatrixEquation {
    std::vector<LinearTerm> terms;
    Matrix rhs;
};

struct AffineSolveResult {
    enum class Kind { Unique, Affine, Inconsistent };
    Kind kind = Kind::Inconsistent;
    std::optional<Matrix> particular;   // free variables zeroed
    std::vector<Matrix> null_basis;     // basis of the homogeneous solution set

    bool consistent() const { return kind != Kind::Inconsistent; }
};

/// Solves the stacked linear system over Q for an unknown_rows x unknown_cols
/// matrix X. Unknowns are vectorized column-major; system rows are ordered by
/// equation index, then by entry index (column-major) within the equation, so
/// the encoding and the returned particular solution are deterministic.
AffineSolveResult solve_affine_system(std::span<const MatrixEquation> equations,
                                      int unknown_rows, int unknown_cols);

/// Builders for the recurring equation shapes.

/// left * X * right = rhs
MatrixEquation eq_product(Matrix left, Matrix right, Matrix rhs);
/// (w * X)^T = w * X  as  w*X - X^T*w^T = 0, i.e. symmetry of a one-sided product
MatrixEquation eq_symmetric_product(const Matrix& left_factor, int unknown_rows, int unknown_cols);
/// left * X - X * right = rhs (commutator-style)
MatrixEquation eq_commutator(Matrix left, Matrix right, Matrix rhs);

}  // namespace wcore

#endif
