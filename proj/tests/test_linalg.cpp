#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "core/linalg.hpp"
#include "core/matrix.hpp"
#include "support/oracles.hpp"

using spinpair::ComplexMatrix;
using spinpair::cplx;

namespace {

ComplexMatrix random_square(testsup::TestRng &rng, int n) {
    ComplexMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = rng.cgauss();
    return a;
}

ComplexMatrix random_hermitian(testsup::TestRng &rng, int n) {
    ComplexMatrix a = random_square(rng, n);
    ComplexMatrix h(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return h;
}

} // namespace

TEST_SUITE("linalg") {

TEST_CASE("hermitian eigendecomposition reconstructs the input") {
    testsup::TestRng rng(101);
    for (int n : {2, 3, 4, 8, 16}) {
        ComplexMatrix h = random_hermitian(rng, n);
        auto eig = spinpair::hermitian_eig(h);
        REQUIRE(static_cast<int>(eig.values.size()) == n);

        // values ascending
        for (int k = 0; k + 1 < n; ++k)
            CHECK(eig.values[k] <= eig.values[k + 1]);

        // V diag(lambda) V^H == H
        ComplexMatrix d = ComplexMatrix::zero(n, n);
        for (int k = 0; k < n; ++k)
            d(k, k) = eig.values[k];
        ComplexMatrix rebuilt = eig.vectors * d * eig.vectors.dagger();
        const double scale = std::max(1.0, h.max_abs());
        CHECK(testsup::max_diff(rebuilt, h) <= 1e-10 * scale);

        // columns orthonormal
        ComplexMatrix gram = eig.vectors.dagger() * eig.vectors;
        CHECK(testsup::max_diff(gram, ComplexMatrix::identity(n)) <= 1e-12);

        // eigenvalue sum equals the trace
        double sum = 0.0;
        for (double v : eig.values)
            sum += v;
        CHECK(std::abs(sum - h.trace().real()) <= 1e-10 * scale * n);
    }
}

TEST_CASE("hermitian eigendecomposition on a diagonal matrix is exact") {
    ComplexMatrix d = ComplexMatrix::zero(3, 3);
    d(0, 0) = 2.0;
    d(1, 1) = -1.0;
    d(2, 2) = 0.5;
    auto eig = spinpair::hermitian_eig(d);
    CHECK(eig.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(eig.values[1] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(eig.values[2] == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("hermitian eigendecomposition rejects non-hermitian input") {
    ComplexMatrix a = ComplexMatrix::zero(2, 2);
    a(0, 1) = 1.0; // upper triangular, clearly not hermitian
    CHECK_THROWS_AS((void)spinpair::hermitian_eig(a), spinpair::invalid_input);
}

TEST_CASE("general eigenvalues solve det(A - lambda I) = 0") {
    testsup::TestRng rng(202);
    for (int n : {2, 4, 5}) {
        ComplexMatrix a = random_square(rng, n);
        auto vals = spinpair::general_eig(a);
        REQUIRE(static_cast<int>(vals.size()) == n);

        // sorted by (re, im)
        for (int k = 0; k + 1 < n; ++k) {
            const bool ordered = vals[k].real() < vals[k + 1].real() ||
                                 (vals[k].real() == vals[k + 1].real() &&
                                  vals[k].imag() <= vals[k + 1].imag());
            CHECK(ordered);
        }

        // each value is a root of the characteristic polynomial; the
        // determinant magnitude scales like ||A||^n, so normalize by that
        const double scale = std::pow(std::max(1.0, a.frobenius_norm()), n);
        for (const cplx &lam : vals) {
            ComplexMatrix shifted = a;
            for (int i = 0; i < n; ++i)
                shifted(i, i) -= lam;
            CHECK(std::abs(testsup::det(shifted)) <= 1e-8 * scale);
        }

        // eigenvalue sum equals the trace
        cplx sum = 0.0;
        for (const cplx &lam : vals)
            sum += lam;
        CHECK(std::abs(sum - a.trace()) <= 1e-9 * std::max(1.0, a.frobenius_norm()) * n);
    }
}

TEST_CASE("general eigenvalues of known matrices") {
    // diagonal complex matrix comes back sorted
    ComplexMatrix d = ComplexMatrix::zero(3, 3);
    d(0, 0) = cplx(1.0, 2.0);
    d(1, 1) = cplx(-1.0, 0.0);
    d(2, 2) = cplx(1.0, -2.0);
    auto vals = spinpair::general_eig(d);
    CHECK(std::abs(vals[0] - cplx(-1.0, 0.0)) <= 1e-12);
    CHECK(std::abs(vals[1] - cplx(1.0, -2.0)) <= 1e-12);
    CHECK(std::abs(vals[2] - cplx(1.0, 2.0)) <= 1e-12);

    // nilpotent 2x2: double eigenvalue at zero
    ComplexMatrix nil = ComplexMatrix::zero(2, 2);
    nil(0, 1) = 1.0;
    auto nvals = spinpair::general_eig(nil);
    CHECK(std::abs(nvals[0]) <= 1e-8);
    CHECK(std::abs(nvals[1]) <= 1e-8);

    // rotation generator: eigenvalues +-i
    ComplexMatrix rot = ComplexMatrix::zero(2, 2);
    rot(0, 1) = -1.0;
    rot(1, 0) = 1.0;
    auto rvals = spinpair::general_eig(rot);
    CHECK(std::abs(rvals[0] - cplx(0.0, -1.0)) <= 1e-12);
    CHECK(std::abs(rvals[1] - cplx(0.0, 1.0)) <= 1e-12);
}

TEST_CASE("general eigenvalues agree with hermitian path on hermitian input") {
    testsup::TestRng rng(303);
    ComplexMatrix h = random_hermitian(rng, 5);
    auto gen = spinpair::general_eig(h);
    auto herm = spinpair::hermitian_eig(h);
    for (int k = 0; k < 5; ++k) {
        CHECK(std::abs(gen[k].imag()) <= 1e-9);
        CHECK(gen[k].real() == doctest::Approx(herm.values[k]).epsilon(1e-9));
    }
}

TEST_CASE("singular values match the analytic 2x2 answer") {
    ComplexMatrix a(2, 2);
    a(0, 0) = 1.0;
    a(0, 1) = 2.0;
    a(1, 0) = 3.0;
    a(1, 1) = 4.0;
    // singular values squared are roots of s^4 - 30 s^2 + 4 = 0
    const double s_big = std::sqrt(15.0 + std::sqrt(221.0));
    const double s_small = std::sqrt(15.0 - std::sqrt(221.0));
    auto svd = spinpair::singular_right(a);
    REQUIRE(svd.singular_values.size() == 2);
    CHECK(svd.singular_values[0] == doctest::Approx(s_big).epsilon(1e-12));
    CHECK(svd.singular_values[1] == doctest::Approx(s_small).epsilon(1e-12));
}

TEST_CASE("right singular vectors satisfy |A v_k| = sigma_k") {
    testsup::TestRng rng(404);
    for (int n : {3, 6}) {
        ComplexMatrix a = random_square(rng, n);
        auto svd = spinpair::singular_right(a);
        // descending order
        for (int k = 0; k + 1 < n; ++k)
            CHECK(svd.singular_values[k] >= svd.singular_values[k + 1]);
        // columns orthonormal
        ComplexMatrix gram = svd.v.dagger() * svd.v;
        CHECK(testsup::max_diff(gram, ComplexMatrix::identity(n)) <= 1e-12);
        for (int k = 0; k < n; ++k) {
            std::vector<cplx> col(n);
            for (int i = 0; i < n; ++i)
                col[i] = svd.v(i, k);
            std::vector<cplx> av = spinpair::matvec(a, col);
            CHECK(spinpair::vec_norm(av) ==
                  doctest::Approx(svd.singular_values[k]).epsilon(1e-10));
        }
    }
}

TEST_CASE("nullspace of the identity is empty and of zero is everything") {
    CHECK(spinpair::nullspace(ComplexMatrix::identity(4)).cols() == 0);
    ComplexMatrix z = ComplexMatrix::zero(3, 3);
    ComplexMatrix basis = spinpair::nullspace(z);
    REQUIRE(basis.cols() == 3);
    ComplexMatrix gram = basis.dagger() * basis;
    CHECK(testsup::max_diff(gram, ComplexMatrix::identity(3)) <= 1e-12);
}

TEST_CASE("nullspace finds a constructed kernel") {
    // rank-one hermitian projector: kernel is the orthogonal complement
    testsup::TestRng rng(505);
    const int n = 4;
    std::vector<cplx> u(n);
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
        u[i] = rng.cgauss();
        norm += std::norm(u[i]);
    }
    norm = std::sqrt(norm);
    ComplexMatrix proj(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            proj(i, j) = u[i] * std::conj(u[j]) / (norm * norm);

    ComplexMatrix basis = spinpair::nullspace(proj);
    REQUIRE(basis.cols() == n - 1);
    ComplexMatrix image = proj * basis;
    CHECK(image.max_abs() <= 1e-12);
    ComplexMatrix gram = basis.dagger() * basis;
    CHECK(testsup::max_diff(gram, ComplexMatrix::identity(n - 1)) <= 1e-12);

    // explicit 2x2 with kernel along (1, -1)/sqrt(2)
    ComplexMatrix ones(2, 2);
    ones(0, 0) = ones(0, 1) = ones(1, 0) = ones(1, 1) = 1.0;
    ComplexMatrix kb = spinpair::nullspace(ones);
    REQUIRE(kb.cols() == 1);
    CHECK(std::abs(kb(0, 0) + kb(1, 0)) <= 1e-12);
    CHECK(std::abs(std::norm(kb(0, 0)) + std::norm(kb(1, 0)) - 1.0) <= 1e-12);
}

TEST_CASE("nullspace of a rectangular map") {
    // 2x3 projection onto the first two coordinates: kernel is e3
    ComplexMatrix a = ComplexMatrix::zero(2, 3);
    a(0, 0) = 1.0;
    a(1, 1) = 1.0;
    ComplexMatrix basis = spinpair::nullspace(a);
    REQUIRE(basis.cols() == 1);
    CHECK(std::abs(basis(0, 0)) <= 1e-12);
    CHECK(std::abs(basis(1, 0)) <= 1e-12);
    CHECK(std::abs(std::abs(basis(2, 0)) - 1.0) <= 1e-12);
}

TEST_CASE("linear solve leaves a tiny residual") {
    testsup::TestRng rng(606);
    for (int n : {2, 5, 16}) {
        ComplexMatrix a = random_square(rng, n);
        for (int i = 0; i < n; ++i)
            a(i, i) += static_cast<double>(n); // keep it well conditioned
        std::vector<cplx> b(n);
        for (int i = 0; i < n; ++i)
            b[i] = rng.cgauss();
        std::vector<cplx> x = spinpair::solve(a, b);
        std::vector<cplx> ax = spinpair::matvec(a, x);
        double worst = 0.0;
        for (int i = 0; i < n; ++i)
            worst = std::max(worst, std::abs(ax[i] - b[i]));
        CHECK(worst <= 1e-11 * std::max(1.0, a.max_abs()));
    }
}

TEST_CASE("linear solve rejects singular systems") {
    ComplexMatrix a(2, 2);
    a(0, 0) = 1.0;
    a(0, 1) = 2.0;
    a(1, 0) = 2.0;
    a(1, 1) = 4.0; // rank one
    std::vector<cplx> b = {cplx(1.0, 0.0), cplx(0.0, 0.0)};
    CHECK_THROWS_AS((void)spinpair::solve(a, b), spinpair::invalid_input);
}

} // TEST_SUITE
