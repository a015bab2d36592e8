#include "wcore/generate.hpp"

#include "wcore/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace wcore {

namespace {

[[noreturn]] void exhausted(const char* who) {
    throw std::runtime_error(std::string(who) + ": retry budget exhausted");
}

/// Basis matrix of null(a) as columns (k x d).
Matrix null_basis(const Matrix& a) { return null_space(a).basis(); }

bool wcore_member(const Matrix& a, const Weight& m) { return weighted_core(a, m).present(); }
bool dual_member(const Matrix& a, const Weight& n) { return weighted_dual_core(a, n).present(); }

}  // namespace

Matrix random_matrix(Rng& rng, int rows, int cols, int bound) {
    Matrix a(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a(i, j) = Rational(rng.uniform(-bound, bound));
    return a;
}

Matrix random_rank_matrix(const GenConfig& cfg, Rng& rng, int r) {
    const int k = cfg.dim;
    if (r < 0 || r > k) throw std::invalid_argument("random_rank_matrix: rank out of range");
    if (r == 0) return Matrix::zeros(k, k);
    for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
        Matrix f = random_matrix(rng, k, r, cfg.entry_bound);
        Matrix g = random_matrix(rng, r, k, cfg.entry_bound);
        Matrix a = f * g;
        if (rank(a) == r) return a;
    }
    exhausted("random_rank_matrix");
}

Weight random_pd_weight(const GenConfig& cfg, Rng& rng) {
    const int k = cfg.dim;
    Matrix p = random_matrix(rng, k, k, cfg.entry_bound);
    return Weight(adjoint(p) * p + Matrix::identity(k));
}

Weight random_indefinite_weight(const GenConfig& cfg, Rng& rng) {
    const int k = cfg.dim;
    for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
        Matrix s = random_matrix(rng, k, k, cfg.entry_bound);
        Matrix sym = s + adjoint(s);
        if (rank(sym) == k) return Weight(std::move(sym));
    }
    exhausted("random_indefinite_weight");
}

Matrix gen_core_invertible(const GenConfig& cfg, Rng& rng, const Weight& m) {
    const int k = cfg.dim;
    for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
        const int r = static_cast<int>(rng.uniform(1, k));
        Matrix a = random_rank_matrix(cfg, rng, r);
        if (rank(a * a) == r && inverse_13m(a, m).present()) return a;
    }
    exhausted("gen_core_invertible");
}

Matrix gen_dual_core_invertible(const GenConfig& cfg, Rng& rng, const Weight& n) {
    const int k = cfg.dim;
    for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
        const int r = static_cast<int>(rng.uniform(1, k));
        Matrix a = random_rank_matrix(cfg, rng, r);
        if (rank(a * a) == r && inverse_14n(a, n).present()) return a;
    }
    exhausted("gen_dual_core_invertible");
}

namespace {

/// Basis of the hyperplane orthogonal to a nonzero column vector.
Matrix perp_basis(const Matrix& v) { return null_space(adjoint(v)).basis(); }

Matrix random_nonzero_vector(Rng& rng, int k, int bound) {
    for (;;) {
        Matrix v = random_matrix(rng, k, 1, bound);
        if (!v.is_zero()) return v;
    }
}

/// Rank-deficient a with prescribed vectors u perpendicular to col(a) and
/// v inside null(a): a = basis(u-perp) C basis(v-perp)^T.
Matrix constrained_deficient(Rng& rng, const Matrix& u, const Matrix& v) {
    Matrix b1 = perp_basis(u), b2 = perp_basis(v);
    const int rmax = std::min(b1.cols(), b2.cols());
    const int r = rmax > 0 ? static_cast<int>(rng.uniform(1, rmax)) : 0;
    Matrix c = random_matrix(rng, b1.cols(), r, 2) * random_matrix(rng, r, b2.cols(), 2);
    return b1 * c * adjoint(b2);
}

}  // namespace

std::pair<Matrix, Matrix> gen_additive_pair(const GenConfig& cfg, Rng& rng, const Weight& m,
                                            bool disjoint) {
    const int k = cfg.dim;
    for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
        // Seed a common null direction v: a v = 0 and a* m v = 0 by
        // construction, so null(a) inter null(a* m) is never trivial.
        Matrix v = random_nonzero_vector(rng, k, cfg.entry_bound);
        Matrix a = constrained_deficient(rng, m.matrix() * v, v);
        if (rank(a * a) != rank(a) || !inverse_13m(a, m).present()) continue;
        Matrix nullv = null_basis(vstack(a, adjoint(a) * m.matrix()));
        if (nullv.cols() == 0) continue;
        for (int inner = 0; inner < 8; ++inner) {
            Matrix b;
            if (disjoint) {
                Matrix mt = null_basis(adjoint(a));
                if (mt.cols() == 0) break;
                b = nullv * random_matrix(rng, nullv.cols(), mt.cols(), 2) * adjoint(mt);
            } else {
                b = nullv * random_matrix(rng, nullv.cols(), k, 2);
            }
            if (wcore_member(b, m)) return {std::move(a), std::move(b)};
        }
    }
    exhausted("gen_additive_pair");
}

std::pair<Matrix, Matrix> gen_dual_additive_pair(const GenConfig& cfg, Rng& rng, const Weight& n,
                                                 bool disjoint) {
    const int k = cfg.dim;
    for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
        Matrix a;
        if (disjoint) {
            // v lands in null(a n^-1) inter null(a*) by construction
            Matrix v = random_nonzero_vector(rng, k, cfg.entry_bound);
            a = constrained_deficient(rng, v, n.inverse() * v);
        } else {
            const int r = static_cast<int>(rng.uniform(1, k - 1 > 0 ? k - 1 : 1));
            a = random_rank_matrix(cfg, rng, r);
        }
        if (rank(a * a) != rank(a) || !inverse_14n(a, n).present()) continue;
        Matrix left = null_basis(a);  // columns of b live in null(a)
        Matrix an_inv = a * n.inverse();
        Matrix right = disjoint ? null_basis(vstack(an_inv, adjoint(a)))
                                : null_basis(an_inv);  // rows of b from null(a n^-1)
        if (left.cols() == 0 || right.cols() == 0) continue;
        for (int inner = 0; inner < 8; ++inner) {
            Matrix b = left * random_matrix(rng, left.cols(), right.cols(), 2) * adjoint(right);
            if (dual_member(b, n)) return {std::move(a), std::move(b)};
        }
    }
    exhausted("gen_dual_additive_pair");
}

std::pair<Matrix, Matrix> gen_sum_alt_pair(const GenConfig& cfg, Rng& rng, const Weight& m) {
    const int k = cfg.dim;
    for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
        Matrix a = gen_core_invertible(cfg, rng, m);
        const Matrix q = weighted_core(a, m).get() * a;  // idempotent, a q = a... q a... b q = a
        const Matrix iq = Matrix::identity(k) - q;
        for (int inner = 0; inner < 8; ++inner) {
            Matrix b = a + random_matrix(rng, k, k, 2) * iq;
            if (!wcore_member(b, m)) continue;
            if (!group_inverse(a + b).present()) continue;
            return {std::move(a), std::move(b)};
        }
    }
    exhausted("gen_sum_alt_pair");
}

std::pair<Matrix, Matrix> gen_difference_pair(const GenConfig& cfg, Rng& rng, const Weight& m) {
    const int k = cfg.dim;
    for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
        Matrix a = gen_core_invertible(cfg, rng, m);
        const Matrix core = weighted_core(a, m).get();
        const Matrix ip = Matrix::identity(k) - a * core;
        const Matrix iq = Matrix::identity(k) - core * a;
        for (int inner = 0; inner < 8; ++inner) {
            Matrix b = a + ip * random_matrix(rng, k, k, 2) * iq;
            if (wcore_member(b, m)) return {std::move(a), std::move(b)};
        }
    }
    exhausted("gen_difference_pair");
}

std::pair<Matrix, Matrix> gen_a2ba_pair(const GenConfig& cfg, Rng& rng, const Weight& m) {
    const int k = cfg.dim;
    for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
        Matrix a = gen_core_invertible(cfg, rng, m);
        const Matrix p = a * weighted_core(a, m).get();  // (1-p) a = 0
        for (int inner = 0; inner < 8; ++inner) {
            Matrix b = a * p + random_matrix(rng, k, k, 2) * (Matrix::identity(k) - p);
            if (wcore_member(b, m)) return {std::move(a), std::move(b)};
        }
    }
    exhausted("gen_a2ba_pair");
}

std::pair<Matrix, Matrix> gen_b2ba_pair(const GenConfig& cfg, Rng& rng, const Weight& n) {
    for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
        Matrix b = gen_dual_core_invertible(cfg, rng, n);
        Matrix nb = null_basis(b);
        if (nb.cols() == 0) {  // b invertible: only a = b fits b^2 = b a
            if (dual_member(b, n)) return {b, b};
            continue;
        }
        for (int inner = 0; inner < 8; ++inner) {
            Matrix a = b + nb * random_matrix(rng, nb.cols(), cfg.dim, 2);
            if (dual_member(a, n)) return {std::move(a), std::move(b)};
        }
    }
    exhausted("gen_b2ba_pair");
}

Matrix gen_unitary(const GenConfig& cfg, Rng& rng) {
    const int k = cfg.dim;
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    for (int i = k - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.uniform(0, i));
        std::swap(perm[i], perm[j]);
    }
    Matrix u(k, k);
    for (int i = 0; i < k; ++i) u(perm[i], i) = Rational(rng.chance(1, 2) ? 1 : -1);
    return u;
}

namespace {

std::optional<Matrix> m_projector_onto(const Matrix& basis, const Weight& m) {
    auto gram_inv = inverse(adjoint(basis) * m.matrix() * basis);
    if (!gram_inv) return std::nullopt;  // possible only for indefinite m
    return basis * (*gram_inv) * adjoint(basis) * m.matrix();
}

}  // namespace

Matrix gen_m_projector(const GenConfig& cfg, Rng& rng, const Weight& m) {
    const int k = cfg.dim;
    for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
        const int r = static_cast<int>(rng.uniform(1, k));
        Matrix b = random_matrix(rng, k, r, cfg.entry_bound);
        if (rank(b) != r) continue;
        if (auto p = m_projector_onto(b, m)) return *p;
    }
    exhausted("gen_m_projector");
}

std::pair<Matrix, Matrix> gen_complementary_m_projectors(const GenConfig& cfg, Rng& rng,
                                                         const Weight& m) {
    const int k = cfg.dim;
    if (k < 2) throw std::invalid_argument("gen_complementary_m_projectors: dim must be >= 2");
    for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
        const int r1 = static_cast<int>(rng.uniform(1, k - 1));
        Matrix b1 = random_matrix(rng, k, r1, cfg.entry_bound);
        if (rank(b1) != r1) continue;
        auto p = m_projector_onto(b1, m);
        if (!p) continue;
        Matrix compl_basis = null_space(adjoint(b1) * m.matrix()).basis();
        const int r2 = static_cast<int>(rng.uniform(1, compl_basis.cols()));
        Matrix b2 = compl_basis * random_matrix(rng, compl_basis.cols(), r2, 2);
        if (rank(b2) != r2) continue;
        auto q = m_projector_onto(b2, m);
        if (!q) continue;
        return {std::move(*p), std::move(*q)};
    }
    exhausted("gen_complementary_m_projectors");
}

}  // namespace wcore
