#ifndef WCORE_WEIGHT_HPP
#define WCORE_WEIGHT_HPP

#include <optional>

#include "wcore/linalg.hpp"
#include "wcore/matrix.hpp"

namespace wcore {

/// A hermitian invertible weight: symmetric (under the transpose involution)
/// and full rank. Both properties are validated eagerly at construction, since
/// every statement about weighted inverses presumes them. The inverse is
/// precomputed; weights are small and reused heavily.
class Weight {
public:
    explicit Weight(Matrix m) : mat_(std::move(m)) {
        if (!mat_.is_square()) throw std::invalid_argument("Weight: matrix not square");
        if (!mat_.is_symmetric()) throw std::invalid_argument("Weight: matrix not symmetric");
        auto inv = wcore::inverse(mat_);
        if (!inv) throw std::invalid_argument("Weight: matrix not invertible");
        inv_ = std::move(*inv);
    }

    static Weight identity(int k) { return Weight(Matrix::identity(k)); }

    int dim() const { return mat_.rows(); }
    const Matrix& matrix() const { return mat_; }
    const Matrix& inverse() const { return inv_; }

    bool operator==(const Weight& o) const { return mat_ == o.mat_; }

private:
    Matrix mat_;
    Matrix inv_;
};

/// The ambient data (R, *, m, n) every weighted statement lives in.
struct RingContext {
    int dim = 0;
    std::optional<Weight> m;
    std::optional<Weight> n;
};

}  // namespace wcore

#endif
