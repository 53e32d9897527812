#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "core/lindblad.hpp"
#include "core/linalg.hpp"
#include "core/matrix.hpp"
#include "support/oracles.hpp"

using namespace spinpair;

namespace {

// L acting on a density matrix, with the vectorization kept out of sight
ComplexMatrix apply_super(const ComplexMatrix &l, const ComplexMatrix &rho) {
    return unvec(matvec(l, vec(rho)), rho.rows(), rho.cols());
}

} // namespace

TEST_SUITE("lindblad") {

TEST_CASE("single-qubit operators and their embeddings") {
    ComplexMatrix sp = sigma_plus();
    CHECK(sp(0, 1) == cplx(1.0, 0.0));
    CHECK(sp(0, 0) == cplx(0.0, 0.0));
    CHECK(sp(1, 0) == cplx(0.0, 0.0));
    CHECK(sp(1, 1) == cplx(0.0, 0.0));

    ComplexMatrix sy = sigma_y();
    CHECK(sy(0, 1) == cplx(0.0, -1.0));
    CHECK(sy(1, 0) == cplx(0.0, 1.0));

    CHECK(testsup::max_diff(sigma_minus(), sigma_plus().dagger()) == 0.0);

    // qubit 1 is the left factor: raising it sends |du> -> |uu>, |dd> -> |ud>
    ComplexMatrix p1 = on_qubit(sigma_plus(), 1);
    CHECK(p1(0, 2) == cplx(1.0, 0.0));
    CHECK(p1(1, 3) == cplx(1.0, 0.0));
    CHECK(p1(0, 1) == cplx(0.0, 0.0));

    ComplexMatrix p2 = on_qubit(sigma_plus(), 2);
    CHECK(p2(0, 1) == cplx(1.0, 0.0));
    CHECK(p2(2, 3) == cplx(1.0, 0.0));
    CHECK(p2(0, 2) == cplx(0.0, 0.0));

    ComplexMatrix z1 = on_qubit(sigma_z(), 1);
    for (int i = 0; i < 4; ++i)
        CHECK(z1(i, i) == cplx(i < 2 ? 1.0 : -1.0, 0.0));

    CHECK_THROWS_AS((void)on_qubit(sigma_z(), 3), invalid_input);
}

TEST_CASE("pair hamiltonian counts excitations") {
    ComplexMatrix h = pair_hamiltonian(2.0);
    CHECK(h(0, 0) == cplx(2.0, 0.0));
    CHECK(h(1, 1) == cplx(0.0, 0.0));
    CHECK(h(2, 2) == cplx(0.0, 0.0));
    CHECK(h(3, 3) == cplx(-2.0, 0.0));
    CHECK(h.max_abs() == 2.0);
}

TEST_CASE("coherent part rotates each coherence sector at its detuning") {
    ComplexMatrix lh = build_hamiltonian_part(1.0);

    // |uu><dd| carries excitation difference 2, so it picks up -2i
    ComplexMatrix rho = ComplexMatrix::zero(4, 4);
    rho(0, 3) = 1.0;
    ComplexMatrix dot = apply_super(lh, rho);
    CHECK(std::abs(dot(0, 3) - cplx(0.0, -2.0)) <= 1e-15);
    dot(0, 3) = 0.0;
    CHECK(dot.max_abs() <= 1e-15);

    // populations are untouched
    ComplexMatrix pop = ComplexMatrix::zero(4, 4);
    pop(1, 1) = 1.0;
    CHECK(apply_super(lh, pop).max_abs() <= 1e-15);

    // spectrum: detuning q in {-2,..,2} with multiplicities 1,4,6,4,1
    auto vals = general_eig(lh);
    std::array<int, 5> counts{};
    for (const cplx &v : vals) {
        CHECK(std::abs(v.real()) <= 1e-12);
        const int q = static_cast<int>(std::lround(v.imag()));
        CHECK(std::abs(v.imag() - q) <= 1e-12);
        REQUIRE(std::abs(q) <= 2);
        ++counts[static_cast<size_t>(q + 2)];
    }
    CHECK(counts == std::array<int, 5>{1, 4, 6, 4, 1});
}

TEST_CASE("dissipator acts correctly on a fully excited pair") {
    RateSet rates;
    rates.gamma_e_local = 1.0;
    ComplexMatrix d = build_dissipator(rates);

    ComplexMatrix uu = ComplexMatrix::zero(4, 4);
    uu(0, 0) = 1.0;
    ComplexMatrix dot = apply_super(d, uu);
    CHECK(std::abs(dot(0, 0) - cplx(-2.0, 0.0)) <= 1e-14);
    CHECK(std::abs(dot(1, 1) - cplx(1.0, 0.0)) <= 1e-14);
    CHECK(std::abs(dot(2, 2) - cplx(1.0, 0.0)) <= 1e-14);
    CHECK(std::abs(dot(3, 3)) <= 1e-14);
    CHECK(std::abs(dot.trace()) <= 1e-14);
}

TEST_CASE("generator preserves trace and hermiticity") {
    testsup::TestRng rng(711);
    for (int trial = 0; trial < 10; ++trial) {
        RateSet rates = testsup::random_physical_rates(rng);
        ComplexMatrix l = build_liouvillian(rates, rng.uniform(0.2, 2.0));

        // vec(I)^dagger L == 0 row by row
        std::vector<cplx> id = vec(ComplexMatrix::identity(4));
        double worst = 0.0;
        for (int j = 0; j < 16; ++j) {
            cplx acc = 0.0;
            for (int i = 0; i < 16; ++i)
                acc += std::conj(id[static_cast<size_t>(i)]) * l(i, j);
            worst = std::max(worst, std::abs(acc));
        }
        CHECK(worst <= 1e-13);

        ComplexMatrix rho = testsup::random_density(rng);
        CHECK(apply_super(l, rho).hermiticity_defect() <= 1e-13);
    }
}

TEST_CASE("jump decomposition at frozen rate sets") {
    RateSet fully;
    fully.gamma_e_local = 1.0;
    fully.gamma_e_nonlocal = 1.0;
    auto ch = jump_decomposition(fully);
    REQUIRE(ch.size() == 4);
    CHECK(ch[0].rate == 2.0);
    CHECK(ch[1].rate == 0.0);
    CHECK(ch[2].rate == 0.0);
    CHECK(ch[3].rate == 0.0);
    // bright channel is the symmetric lowering combination
    ComplexMatrix sym =
        (on_qubit(sigma_minus(), 1) + on_qubit(sigma_minus(), 2)) * cplx(1.0 / std::sqrt(2.0));
    CHECK(testsup::max_diff(ch[0].op, sym) <= 1e-15);

    RateSet partial;
    partial.gamma_e_local = 1.0;
    partial.gamma_e_nonlocal = 0.5;
    auto ch2 = jump_decomposition(partial);
    CHECK(ch2[0].rate == 1.5);
    CHECK(ch2[1].rate == 0.5);

    // negative nonlocal rate flips the relative sign inside the operator
    RateSet flipped;
    flipped.gamma_a_local = 1.0;
    flipped.gamma_a_nonlocal = -0.4;
    auto ch3 = jump_decomposition(flipped);
    CHECK(ch3[2].rate == doctest::Approx(1.4).epsilon(1e-15));
    CHECK(ch3[3].rate == doctest::Approx(0.6).epsilon(1e-15));
    ComplexMatrix anti =
        (on_qubit(sigma_plus(), 1) - on_qubit(sigma_plus(), 2)) * cplx(1.0 / std::sqrt(2.0));
    CHECK(testsup::max_diff(ch3[2].op, anti) <= 1e-15);
}

TEST_CASE("jump channels reassemble the dissipator") {
    testsup::TestRng rng(722);
    for (int trial = 0; trial < 20; ++trial) {
        RateSet rates = testsup::random_physical_rates(rng);
        ComplexMatrix direct = build_dissipator(rates);
        ComplexMatrix rebuilt = dissipator_from_jumps(jump_decomposition(rates));
        CHECK(testsup::max_diff(direct, rebuilt) <= 1e-12);
    }

    // vanishing nonlocal rates (sign convention edge) reassemble too
    RateSet local_only;
    local_only.gamma_e_local = 0.9;
    local_only.gamma_a_local = 0.3;
    CHECK(testsup::max_diff(build_dissipator(local_only),
                            dissipator_from_jumps(jump_decomposition(local_only))) <= 1e-13);
}

TEST_CASE("positivity margins") {
    RateSet ok;
    ok.gamma_e_local = 1.0;
    ok.gamma_e_nonlocal = 0.8;
    ok.gamma_a_local = 0.5;
    ok.gamma_a_nonlocal = -0.5;
    PsdReport rep = validate_psd(ok);
    CHECK(rep.physical);
    CHECK(rep.margin_e == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(rep.margin_a == 0.0);

    RateSet bad = ok;
    bad.gamma_e_nonlocal = 1.1;
    CHECK_FALSE(validate_psd(bad).physical);

    // tolerance absorbs a boundary graze
    RateSet graze = ok;
    graze.gamma_a_nonlocal = -0.5 - 1e-14;
    CHECK(validate_psd(graze).physical);
    CHECK_FALSE(validate_psd(graze, 0.0).physical);
}

TEST_CASE("boltzmann ratio limits") {
    CHECK(boltzmann_ratio(HUGE_VAL) == 1.0);
    CHECK(boltzmann_ratio(-HUGE_VAL) == 1.0);
    CHECK(boltzmann_ratio(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(boltzmann_ratio(-1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
    CHECK(boltzmann_ratio(1e-300) == 0.0); // graceful pure-emission underflow
    CHECK_THROWS_AS((void)boltzmann_ratio(0.0), invalid_input);
    CHECK_THROWS_AS((void)boltzmann_ratio(-1e-300), invalid_input); // overflow
    CHECK_THROWS_AS((void)boltzmann_ratio(std::nan("")), invalid_input);
}

TEST_CASE("temperature-parametrized rate families") {
    RateSet r = rates_from_temperatures(2.0, 0.7, 0.7, 0.35, -1);
    CHECK(r.gamma_e_local == 2.0);
    CHECK(r.gamma_e_nonlocal == doctest::Approx(1.4).epsilon(1e-15));
    CHECK(r.gamma_a_local == doctest::Approx(2.0 * std::exp(-1.0 / 0.7)).epsilon(1e-15));
    CHECK(r.gamma_a_nonlocal == doctest::Approx(-1.4 * std::exp(-1.0 / 0.35)).epsilon(1e-15));

    CHECK_THROWS_AS((void)rates_from_temperatures(0.0, 0.5, 1.0, 1.0, 1), invalid_input);
    CHECK_THROWS_AS((void)rates_from_temperatures(1.0, 1.5, 1.0, 1.0, 1), invalid_input);
    CHECK_THROWS_AS((void)rates_from_temperatures(1.0, 0.5, 1.0, 1.0, 0), invalid_input);

    // absorption-anchored twin at mirrored temperatures swaps the families
    const double f = 0.99, kT0 = 0.5, kTr = 0.25;
    RateSet e_anchored = rates_from_temperatures(1.0, f, kT0, kTr, 1);
    RateSet a_anchored = rates_from_temperatures_absorption(1.0, f, -kT0, -kTr, 1);
    CHECK(a_anchored.gamma_a_local == e_anchored.gamma_e_local);
    CHECK(a_anchored.gamma_a_nonlocal == e_anchored.gamma_e_nonlocal);
    CHECK(a_anchored.gamma_e_local ==
          doctest::Approx(e_anchored.gamma_a_local).epsilon(1e-14));
    CHECK(a_anchored.gamma_e_nonlocal ==
          doctest::Approx(e_anchored.gamma_a_nonlocal).epsilon(1e-14));

    // anchoring absorption near kT -> 0+ would need an infinite emission rate
    CHECK_THROWS_AS((void)rates_from_temperatures_absorption(1.0, 0.5, 1e-300, 1.0, 1),
                    invalid_input);
}

TEST_CASE("detailed balance holds exactly at matching temperatures") {
    for (double kT : {0.35, 1.0, -0.5}) {
        for (double f : {0.0, 0.4, 0.99}) {
            RateSet r = rates_from_temperatures(1.0, f, kT, kT, 1);
            CHECK(detailed_balance_residual(r, kT) <= 1e-14);
        }
    }
    // and breaks once the nonlocal temperature departs from the local one
    RateSet skew = rates_from_temperatures(1.0, 0.9, 0.7, 0.3, 1);
    CHECK(detailed_balance_residual(skew, 0.7) > 1e-3);
}

TEST_CASE("thermal state at frozen temperature") {
    ComplexMatrix rho = thermal_state(1.0);
    const double x = std::exp(-1.0);
    const double z = x + 2.0 + 1.0 / x;
    CHECK(rho(0, 0).real() == doctest::Approx(x / z).epsilon(1e-15));
    CHECK(rho(1, 1).real() == doctest::Approx(1.0 / z).epsilon(1e-15));
    CHECK(rho(2, 2).real() == rho(1, 1).real());
    CHECK(rho(3, 3).real() == doctest::Approx(1.0 / (x * z)).epsilon(1e-15));
    CHECK(std::abs(rho.trace() - cplx(1.0, 0.0)) <= 1e-15);
    CHECK(rho(0, 3) == cplx(0.0, 0.0));

    DensityReport rep = validate_density(rho);
    CHECK(rep.min_eigenvalue > 0.0);
    CHECK(rep.trace_defect <= 1e-15);
}

TEST_CASE("density validation rejects malformed states") {
    ComplexMatrix skewed = ComplexMatrix::identity(4) * cplx(0.25);
    skewed(0, 1) = cplx(0.0, 0.3); // hermiticity broken
    CHECK_THROWS_AS((void)validate_density(skewed), invalid_input);

    ComplexMatrix traced = ComplexMatrix::identity(4) * cplx(0.5);
    CHECK_THROWS_AS((void)validate_density(traced), invalid_input);

    ComplexMatrix negative = ComplexMatrix::zero(4, 4);
    negative(0, 0) = 1.5;
    negative(1, 1) = -0.5;
    CHECK_THROWS_AS((void)validate_density(negative), invalid_input);

    CHECK_NOTHROW((void)validate_density(ComplexMatrix::identity(4) * cplx(0.25)));
}

} // TEST_SUITE
