#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "sfgft/matrix.hpp"
#include "sfgft/rng.hpp"
#include "sfgft/svd.hpp"
#include "support/oracles.hpp"

using namespace sfgft;

namespace {

Matrix random_matrix(int rows, int cols, std::uint64_t seed) {
    Rng rng(seed);
    Matrix a(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a(i, j) = rng.uniform(-1.0, 1.0);
    return a;
}

Matrix reconstruct(const Svd& svd) {
    const int k = static_cast<int>(svd.sigma.size());
    Matrix us = svd.u;
    for (int i = 0; i < us.rows(); ++i)
        for (int j = 0; j < k; ++j) us(i, j) *= svd.sigma[static_cast<size_t>(j)];
    return multiply(us, transpose(svd.v));
}

double gram_defect(const Matrix& m) {
    const Matrix g = multiply_at_b(m, m);
    double worst = 0.0;
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) worst = std::max(worst, std::abs(g(i, j) - (i == j ? 1.0 : 0.0)));
    return worst;
}

}  // namespace

TEST_CASE("singular values of a hand example") {
    // a = [[3,0],[4,5]]; a^T a has eigenvalues 45 and 5.
    Matrix a(2, 2);
    a(0, 0) = 3.0;
    a(1, 0) = 4.0; a(1, 1) = 5.0;
    const auto svd = jacobi_svd(a);
    REQUIRE(svd.sigma.size() == 2);
    CHECK(svd.sigma[0] == doctest::Approx(3.0 * std::sqrt(5.0)).epsilon(1e-13));
    CHECK(svd.sigma[1] == doctest::Approx(std::sqrt(5.0)).epsilon(1e-13));
}

TEST_CASE("diagonal input") {
    Matrix a(3, 3);
    a(0, 0) = -2.0;
    a(1, 1) = 0.5;
    a(2, 2) = 1.0;
    const auto svd = jacobi_svd(a);
    CHECK(svd.sigma[0] == doctest::Approx(2.0));
    CHECK(svd.sigma[1] == doctest::Approx(1.0));
    CHECK(svd.sigma[2] == doctest::Approx(0.5));
}

TEST_CASE("factorization contracts on random shapes") {
    for (auto [rows, cols] : {std::pair{8, 5}, std::pair{5, 8}, std::pair{6, 6}}) {
        const Matrix a = random_matrix(rows, cols, static_cast<std::uint64_t>(rows * 100 + cols));
        const auto svd = jacobi_svd(a);
        const int k = std::min(rows, cols);
        REQUIRE(static_cast<int>(svd.sigma.size()) == k);
        REQUIRE(svd.u.rows() == rows);
        REQUIRE(svd.u.cols() == k);
        REQUIRE(svd.v.rows() == cols);
        REQUIRE(svd.v.cols() == k);

        for (int i = 1; i < k; ++i) CHECK(svd.sigma[static_cast<size_t>(i - 1)] >= svd.sigma[static_cast<size_t>(i)]);
        CHECK(svd.sigma[static_cast<size_t>(k - 1)] >= 0.0);

        const Matrix back = reconstruct(svd);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) CHECK(back(i, j) == doctest::Approx(a(i, j)).epsilon(1e-11));

        CHECK(gram_defect(svd.u) < 1e-12);
        CHECK(gram_defect(svd.v) < 1e-12);
    }
}

TEST_CASE("least squares matches the normal equations when well posed") {
    const Matrix a = random_matrix(10, 4, 7);
    Rng rng(8);
    const auto b = rng.normal_vector(10, 0.0, 1.0);

    const auto x = lstsq_min_norm(a, b, 1e-12);
    REQUIRE(x.size() == 4);

    const Matrix ata = multiply_at_b(a, a);
    const auto atb = multiply_transpose(a, b);
    const auto ref = testing::solve_linear(ata, atb);
    for (int i = 0; i < 4; ++i) CHECK(x[static_cast<size_t>(i)] == doctest::Approx(ref[static_cast<size_t>(i)]).epsilon(1e-10));
}

TEST_CASE("exact solve when the system is square and invertible") {
    const Matrix a = random_matrix(5, 5, 17);
    Rng rng(18);
    const auto xtrue = rng.normal_vector(5, 0.0, 1.0);
    const auto b = multiply(a, xtrue);
    const auto x = lstsq_min_norm(a, b, 1e-12);
    for (int i = 0; i < 5; ++i) CHECK(x[static_cast<size_t>(i)] == doctest::Approx(xtrue[static_cast<size_t>(i)]).epsilon(1e-9));
}

TEST_CASE("minimum-norm rule on duplicated columns") {
    // Columns 0 and 1 identical: any (c0, c1) with c0 + c1 fixed fits equally
    // well; the minimum-norm answer splits the weight evenly.
    Matrix a(4, 2);
    for (int i = 0; i < 4; ++i) a(i, 0) = a(i, 1) = i + 1.0;
    std::vector<double> b{2.0, 4.0, 6.0, 8.0};
    const auto x = lstsq_min_norm(a, b, 1e-12);
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rcond cutoff zeroes tiny singular directions") {
    Matrix a(2, 2);
    a(0, 0) = 1.0;
    a(1, 1) = 1e-12;
    std::vector<double> b{3.0, 5.0};

    // Below the cutoff the tiny direction is treated as null space.
    const auto trunc = lstsq_min_norm(a, b, 1e-10);
    CHECK(trunc[0] == doctest::Approx(3.0));
    CHECK(trunc[1] == 0.0);

    // With a smaller rcond the same direction is kept and blows up as 1/sigma.
    const auto kept = lstsq_min_norm(a, b, 1e-14);
    CHECK(kept[1] == doctest::Approx(5e12));
}

TEST_CASE("zero matrix yields the zero solution") {
    Matrix a(3, 2);
    std::vector<double> b{1.0, 2.0, 3.0};
    const auto x = lstsq_min_norm(a, b, 1e-10);
    CHECK(x[0] == 0.0);
    CHECK(x[1] == 0.0);
}
