#ifndef WCORE_GENERATE_HPP
#define WCORE_GENERATE_HPP

#include <cstdint>
#include <utility>

#include "wcore/inverses.hpp"
#include "wcore/rng.hpp"
#include "wcore/weight.hpp"

namespace wcore {

/// Knobs for the seeded generators. Entries are drawn from {-entry_bound ..
/// entry_bound}; every generator is a pure function of (config, rng state), so
/// identical seeds reproduce identical instances bit for bit.
struct GenConfig {
    int dim = 3;
    int entry_bound = 5;
    std::uint64_t seed = 0;
    int max_retries = 200;
};

Matrix random_matrix(Rng& rng, int rows, int cols, int bound);

/// Exact rank r, built as a product of full-rank k x r and r x k factors.
Matrix random_rank_matrix(const GenConfig& cfg, Rng& rng, int r);

/// m = P^T P + I: symmetric positive definite, hence a valid weight.
Weight random_pd_weight(const GenConfig& cfg, Rng& rng);

/// Random symmetric invertible weight with unconstrained signature; with these
/// the {1,3^m} class may genuinely be empty.
Weight random_indefinite_weight(const GenConfig& cfg, Rng& rng);

/// Group-invertible a with a{1,3^m} nonempty, i.e. m-weighted core invertible.
Matrix gen_core_invertible(const GenConfig& cfg, Rng& rng, const Weight& m);

/// Dual: group-invertible a with a{1,4^n} nonempty.
Matrix gen_dual_core_invertible(const GenConfig& cfg, Rng& rng, const Weight& n);

/// (a, b) with a* m b = 0, a b = 0, both m-weighted core invertible; when
/// `disjoint` additionally b a = 0 (hypotheses of the additive results).
std::pair<Matrix, Matrix> gen_additive_pair(const GenConfig& cfg, Rng& rng, const Weight& m,
                                            bool disjoint);

/// Dual pair: a n^-1 b* = 0, a b = 0 (and b a = 0 when `disjoint`), both
/// n-weighted dual core invertible.
std::pair<Matrix, Matrix> gen_dual_additive_pair(const GenConfig& cfg, Rng& rng, const Weight& n,
                                                 bool disjoint);

/// (a, b) with b a^{#,m} a = a via b = a + w (1 - a^{#,m} a).
std::pair<Matrix, Matrix> gen_sum_alt_pair(const GenConfig& cfg, Rng& rng, const Weight& m);

/// (a, b) with a = a a^{#,m} b = b a^{#,m} a via b = a + (1-P) w (1-Q).
std::pair<Matrix, Matrix> gen_difference_pair(const GenConfig& cfg, Rng& rng, const Weight& m);

/// (a, b) with a^2 = b a via b = a P + w (1-P), P = a a^{#,m}.
std::pair<Matrix, Matrix> gen_a2ba_pair(const GenConfig& cfg, Rng& rng, const Weight& m);

/// Dual: (a, b) with b^2 = b a, both n-weighted dual core invertible.
std::pair<Matrix, Matrix> gen_b2ba_pair(const GenConfig& cfg, Rng& rng, const Weight& n);

/// Signed permutation matrix: exactly unitary over Q under transposition.
Matrix gen_unitary(const GenConfig& cfg, Rng& rng);

/// Idempotent p with m p symmetric (the m-orthogonal projector onto a random
/// subspace); such p is its own m-weighted core inverse.
Matrix gen_m_projector(const GenConfig& cfg, Rng& rng, const Weight& m);

/// (p, q): m-orthogonal projectors onto m-orthogonal subspaces, so pq = qp = 0.
std::pair<Matrix, Matrix> gen_complementary_m_projectors(const GenConfig& cfg, Rng& rng,
                                                         const Weight& m);

}  // namespace wcore

#endif
