#include <doctest.h>

#include "wcore/generate.hpp"
#include "wcore/matrix.hpp"
#include "wcore/rng.hpp"

using namespace wcore;

TEST_SUITE("matrix") {

TEST_CASE("adjoint basics") {
    Matrix a{{1, 2}, {0, 0}};
    CHECK(adjoint(a) == Matrix{{1, 0}, {2, 0}});
    CHECK(adjoint(adjoint(a)) == a);
}

TEST_CASE("identity is neutral") {
    Matrix x{{3, -1}, {2, 5}};
    CHECK(Matrix::identity(2) * x == x);
    CHECK(x * Matrix::identity(2) == x);
}

TEST_CASE("involution laws on random matrices") {
    Rng rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix a = random_matrix(rng, 3, 3, 6);
        Matrix b = random_matrix(rng, 3, 3, 6);
        CHECK(adjoint(a * b) == adjoint(b) * adjoint(a));
        CHECK(adjoint(a + b) == adjoint(a) + adjoint(b));
        CHECK(adjoint(adjoint(a)) == a);
    }
}

TEST_CASE("scalar and power") {
    Matrix a{{1, 1}, {0, 1}};
    CHECK(Rational(1, 2) * (a + a) == a);
    CHECK(matrix_power(a, 0) == Matrix::identity(2));
    CHECK(matrix_power(a, 3) == Matrix{{1, 3}, {0, 1}});
}

TEST_CASE("shape errors") {
    Matrix a{{1, 2}, {3, 4}};
    Matrix v{{1}, {2}};
    CHECK_THROWS_AS(a + v, std::invalid_argument);
    CHECK_THROWS_AS(v * a, std::invalid_argument);
    CHECK_THROWS_AS(matrix_power(v, 2), std::invalid_argument);
}

TEST_CASE("stacking and selection") {
    Matrix a{{1, 2}, {3, 4}};
    Matrix b{{5}, {6}};
    Matrix h = hstack(a, b);
    CHECK(h.cols() == 3);
    CHECK(h(1, 2) == Rational(6));
    Matrix v = vstack(a, Matrix{{7, 8}});
    CHECK(v.rows() == 3);
    CHECK(v(2, 1) == Rational(8));
    CHECK(select_columns(h, {2, 0}) == Matrix{{5, 1}, {6, 3}});
}

}  // TEST_SUITE
