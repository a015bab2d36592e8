#include <doctest.h>

#include <array>

#include "wcore/generate.hpp"
#include "wcore/inverses.hpp"
#include "wcore/linalg.hpp"

using namespace wcore;

namespace {

// Worked 2x2 data reused across the inverse and reverse-order-law tests.
const Matrix kA{{1, 0}, {-1, 0}};
const Matrix kM{{2, 1}, {1, 2}};
const Matrix kX{{Rational(1, 2), Rational(-1, 2)}, {Rational(-1, 2), Rational(1, 2)}};
const Matrix kNdiag{{1, 0}, {0, 2}};

/// Independent route to the group inverse: solve the affine system
/// {axa=a, xa^2=a, ax=xa} and reflexively close the particular solution.
std::optional<Matrix> group_inverse_by_solver(const Matrix& a) {
    const int k = a.rows();
    std::array<MatrixEquation, 3> eqs = {
        eq_product(a, a, a),
        eq_product(Matrix::identity(k), a * a, a),
        eq_commutator(a, a, Matrix::zeros(k, k)),
    };
    auto sol = solve_affine_system(eqs, k, k);
    if (!sol.consistent()) return std::nullopt;
    const Matrix& y = *sol.particular;
    return y * a * y;
}

}  // namespace

TEST_SUITE("inverses") {

TEST_CASE("matrix_index") {
    CHECK(matrix_index(Matrix::identity(3)) == 0);
    CHECK(matrix_index(Matrix{{0, 1}, {0, 0}}) == 2);
    CHECK(matrix_index(Matrix{{1, 2}, {0, 0}}) == 1);
    CHECK(matrix_index(Matrix::zeros(2, 2)) == 1);
}

TEST_CASE("one_inverse") {
    CHECK(one_inverse(Matrix::identity(3)) == Matrix::identity(3));
    CHECK(one_inverse(Matrix::zeros(2, 2)) == Matrix::zeros(2, 2));
    Matrix a{{1, 2}, {0, 0}};
    Matrix x = one_inverse(a);
    CHECK(a * x * a == a);
}

TEST_CASE("verify_equations on the worked example") {
    RingContext ctx{2, Weight(kM), std::nullopt};
    std::array<EquationTag, 3> tags = {EquationTag::E3m, EquationTag::E6, EquationTag::E7};
    auto cert = verify_equations(kA, kX, tags, ctx);
    CHECK(certificate_ok(cert));

    std::array<EquationTag, 5> all = {EquationTag::E1, EquationTag::E2, EquationTag::E3m,
                                      EquationTag::E6, EquationTag::E7};
    CHECK(certificate_ok(verify_equations(Matrix::identity(2), Matrix::identity(2), all, ctx)));

    std::array<EquationTag, 1> e1 = {EquationTag::E1};
    auto bad = verify_equations(Matrix{{1, 2}, {0, 0}}, Matrix::zeros(2, 2), e1, ctx);
    CHECK_FALSE(certificate_ok(bad));

    std::array<EquationTag, 1> e6k = {EquationTag::E6k};
    CHECK_THROWS_AS(verify_equations(kA, kX, e6k, ctx), std::invalid_argument);
}

TEST_CASE("weight validation is eager") {
    CHECK_THROWS_AS(Weight(Matrix{{1, 2}, {3, 4}}), std::invalid_argument);  // not symmetric
    CHECK_THROWS_AS(Weight(Matrix{{1, 1}, {1, 1}}), std::invalid_argument);  // singular
    CHECK_THROWS_AS(Weight(Matrix{{1, 0, 0}, {0, 1, 0}}), std::invalid_argument);
    CHECK(Weight(kM).inverse() * kM == Matrix::identity(2));
}

TEST_CASE("inverse_13m on the worked example") {
    Weight m(kM);
    auto r = inverse_13m(kA, m);
    REQUIRE(r.present());
    CHECK(certificate_ok(r.certificate));
    // the published candidate x is one valid member of a{1,3^m}
    RingContext ctx{2, m, std::nullopt};
    std::array<EquationTag, 2> tags = {EquationTag::E1, EquationTag::E3m};
    CHECK(certificate_ok(verify_equations(kA, kX, tags, ctx)));

    CHECK(inverse_13m(Matrix::identity(2), m).get() == Matrix::identity(2));
}

TEST_CASE("inverse_13m exists for rank-deficient a with identity weight") {
    Rng rng(41);
    GenConfig cfg;
    Weight id3 = Weight::identity(3);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix a = random_rank_matrix(cfg, rng, 2);
        auto r = inverse_13m(a, id3);
        REQUIRE(r.present());
        CHECK(certificate_ok(r.certificate));
    }
}

TEST_CASE("inverse_13m can be absent for an indefinite weight") {
    Matrix ones{{1, 1}, {1, 1}};
    Weight m(Matrix{{1, 0}, {0, -1}});
    CHECK_FALSE(inverse_13m(ones, m).present());
}

TEST_CASE("inverse_14n on the worked dual example") {
    Weight n(kNdiag);
    auto r = inverse_14n(kA, n);
    REQUIRE(r.present());
    RingContext ctx{2, std::nullopt, n};
    std::array<EquationTag, 2> tags = {EquationTag::E1, EquationTag::E4n};
    CHECK(certificate_ok(verify_equations(kA, Matrix{{1, 0}, {0, 0}}, tags, ctx)));
    CHECK(inverse_14n(Matrix::identity(2), n).get() == Matrix::identity(2));
}

TEST_CASE("{1,3^m} and {1,4^n} membership swap under adjoints with the inverse weight") {
    Rng rng(42);
    GenConfig cfg;
    for (int trial = 0; trial < 10; ++trial) {
        Weight m = random_pd_weight(cfg, rng);
        Matrix a = random_rank_matrix(cfg, rng, static_cast<int>(rng.uniform(1, 3)));
        auto x = inverse_13m(a, m);
        REQUIRE(x.present());
        Weight minv(m.inverse());
        RingContext ctx{3, std::nullopt, minv};
        std::array<EquationTag, 2> tags = {EquationTag::E1, EquationTag::E4n};
        CHECK(certificate_ok(verify_equations(adjoint(a), adjoint(x.get()), tags, ctx)));
    }
}

TEST_CASE("group inverse: idempotent is its own") {
    Matrix a{{1, 2}, {0, 0}};
    auto g = group_inverse(a);
    REQUIRE(g.present());
    CHECK(g.get() == a);
    CHECK(certificate_ok(g.certificate));
}

TEST_CASE("group inverse absent for the counterexample sum") {
    CHECK_FALSE(group_inverse(Matrix{{0, 5}, {0, 0}}).present());
}

TEST_CASE("group inverse of zero is zero") {
    auto g = group_inverse(Matrix::zeros(3, 3));
    REQUIRE(g.present());
    CHECK(g.get().is_zero());
}

TEST_CASE("group inverse agrees with the solver route") {
    Rng rng(77);
    GenConfig cfg;
    cfg.dim = 4;
    int hits = 0;
    for (int trial = 0; trial < 40 && hits < 12; ++trial) {
        Matrix a = random_rank_matrix(cfg, rng, static_cast<int>(rng.uniform(1, 4)));
        auto closed = group_inverse(a);
        auto solved = group_inverse_by_solver(a);
        CHECK(closed.present() == solved.has_value());
        if (closed.present()) {
            CHECK(closed.get() == *solved);
            ++hits;
        }
    }
    CHECK(hits >= 12);
}

TEST_CASE("drazin inverse: nilpotent and invertible") {
    auto d1 = drazin_inverse(Matrix{{0, 1}, {0, 0}});
    CHECK(d1.index == 2);
    CHECK(d1.inv.get().is_zero());

    Matrix m{{2, 1}, {1, 2}};
    auto d2 = drazin_inverse(m);
    CHECK(d2.index == 0);
    CHECK(d2.inv.get() == *inverse(m));
}

TEST_CASE("drazin inverse agrees with the commuting-system route") {
    // independent route: any y with y a^{K+1} = a^K and ay = ya yields
    // a^D = y^{K+1} a^K; every generator of the affine solution set must map
    // to the same matrix
    Rng rng(780);
    GenConfig cfg;
    cfg.dim = 3;
    for (int trial = 0; trial < 10; ++trial) {
        Matrix a = random_matrix(rng, 3, 3, 3);
        auto d = drazin_inverse(a);
        const int kk = d.index;
        std::array<MatrixEquation, 2> eqs = {
            eq_product(Matrix::identity(3), matrix_power(a, kk + 1), matrix_power(a, kk)),
            eq_commutator(a, a, Matrix::zeros(3, 3)),
        };
        auto sol = solve_affine_system(eqs, 3, 3);
        REQUIRE(sol.consistent());
        auto candidate = [&](const Matrix& y) { return matrix_power(y, kk + 1) * matrix_power(a, kk); };
        CHECK(candidate(*sol.particular) == d.inv.get());
        for (const auto& h : sol.null_basis) CHECK(candidate(*sol.particular + h) == d.inv.get());
    }
}

TEST_CASE("drazin inverse on an index-2 block construction") {
    // s * blkdiag(c, nilpotent) * s^-1 has index 2 and an axiom-checkable d
    Matrix blk{{2, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}};
    Matrix s{{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 1, 1, 0}, {0, 1, 1, 1}};
    auto si = inverse(s);
    REQUIRE(si.has_value());
    Matrix a = s * blk * *si;
    auto d = drazin_inverse(a);
    CHECK(d.index == 2);
    CHECK(certificate_ok(d.inv.certificate));
    // independent expected value: invert the regular block, zero the nilpotent
    Matrix c{{2, 1}, {1, 1}};
    Matrix ci = *inverse(c);
    Matrix dblk = Matrix::zeros(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) dblk(i, j) = ci(i, j);
    CHECK(d.inv.get() == s * dblk * *si);
}

TEST_CASE("weighted core: worked examples") {
    auto r = weighted_core(kA, Weight(kM));
    REQUIRE(r.present());
    CHECK(r.get() == kX);
    CHECK(certificate_ok(r.certificate));

    auto r2 = weighted_core(Matrix{{1, 0}, {0, 0}}, Weight(kNdiag));
    REQUIRE(r2.present());
    CHECK(r2.get() == Matrix{{1, 0}, {0, 0}});

    auto r3 = weighted_core(Matrix{{-1, 1}, {0, 0}}, Weight(kNdiag));
    REQUIRE(r3.present());
    CHECK(r3.get() == Matrix{{-1, 0}, {0, 0}});

    CHECK(weighted_core(Matrix::identity(2), Weight(kM)).get() == Matrix::identity(2));
    CHECK(weighted_core(Matrix::zeros(2, 2), Weight(kM)).get().is_zero());
}

TEST_CASE("weighted core absent without group invertibility") {
    CHECK_FALSE(weighted_core(Matrix{{0, 5}, {0, 0}}, Weight::identity(2)).present());
}

TEST_CASE("weighted dual core: worked examples") {
    auto r = weighted_dual_core(kA, Weight(kNdiag));
    REQUIRE(r.present());
    CHECK(r.get() == Matrix{{1, 0}, {0, 0}});
    CHECK(certificate_ok(r.certificate));

    auto r2 = weighted_dual_core(Matrix{{-1, 0}, {1, 0}}, Weight(kNdiag));
    REQUIRE(r2.present());
    CHECK(r2.get() == Matrix{{-1, 0}, {0, 0}});

    CHECK(weighted_dual_core(Matrix::identity(2), Weight(kM)).get() == Matrix::identity(2));
}

TEST_CASE("oracle agrees on the worked example and zero") {
    Weight m(kM);
    auto oracle = oracle_weighted_core(kA, m);
    REQUIRE(oracle.present());
    CHECK(oracle.get() == kX);
    CHECK(oracle.method == Method::Oracle);
    CHECK(oracle_weighted_core(Matrix::zeros(2, 2), m).get().is_zero());
}

TEST_CASE("oracle and closed form agree, including absences") {
    Rng rng(4242);
    GenConfig cfg;
    cfg.dim = 3;
    for (int trial = 0; trial < 25; ++trial) {
        Weight m = trial % 3 == 0 ? Weight(random_indefinite_weight(cfg, rng))
                                  : random_pd_weight(cfg, rng);
        Matrix a = random_rank_matrix(cfg, rng, static_cast<int>(rng.uniform(0, 3)));
        auto closed = weighted_core(a, m);
        auto oracle = oracle_weighted_core(a, m);
        CHECK(closed.present() == oracle.present());
        if (closed.present()) CHECK(closed.get() == oracle.get());
    }
}

TEST_CASE("range characterization") {
    Weight m(kM);
    CHECK(range_characterization(kA, kX, m));
    CHECK(range_characterization(Matrix::identity(2), Matrix::identity(2), m));
    CHECK_FALSE(range_characterization(Matrix{{1, 2}, {0, 0}}, Matrix::zeros(2, 2),
                                       Weight::identity(2)));
}

TEST_CASE("power rule") {
    Weight m(kM);
    CHECK(power_rule_check(kA, m, 2) == CheckOutcome::Pass);
    CHECK(power_rule_check(kA, m, 1) == CheckOutcome::Pass);
    CHECK(power_rule_check(Matrix{{0, 5}, {0, 0}}, Weight::identity(2), 2) ==
          CheckOutcome::HypothesisNotMet);

    Rng rng(5150);
    GenConfig cfg;
    for (int trial = 0; trial < 10; ++trial) {
        Weight w = random_pd_weight(cfg, rng);
        Matrix a = gen_core_invertible(cfg, rng, w);
        CHECK(power_rule_check(a, w, 2) == CheckOutcome::Pass);
        CHECK(power_rule_check(a, w, 3) == CheckOutcome::Pass);
    }
}

}  // TEST_SUITE
