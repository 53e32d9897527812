#ifndef SPINPAIR_LINDBLAD_HPP
#define SPINPAIR_LINDBLAD_HPP

#include "core/magnet.hpp"
#include "core/matrix.hpp"

namespace spinpair {

// Basis order throughout: (|uu>, |ud>, |du>, |dd>) with qubit 1 the left
// Kronecker factor, sigma_z|u> = +|u>, sigma_plus = |u><d|.
ComplexMatrix sigma_plus();
ComplexMatrix sigma_minus();
ComplexMatrix sigma_z();
ComplexMatrix sigma_y();

// Single-qubit operator embedded on qubit 1 or 2 of the pair.
ComplexMatrix on_qubit(const ComplexMatrix &op, int which);

// H = (delta/2)(sigma_z^1 + sigma_z^2)
ComplexMatrix pair_hamiltonian(double delta);

// Superoperators act on column-stacked vec(rho), so rho -> A rho B becomes
// kron(B^T, A).  All of them are 16x16 here.
ComplexMatrix build_hamiltonian_part(double delta);

// Collective emission/absorption dissipator
//   sum_ij Ge(r_ij) (sm_j rho sp_i - {sp_i sm_j, rho}/2)
//        + Ga(r_ij) (sp_j rho sm_i - {sm_i sp_j, rho}/2)
// with Ge(r_ii) the local and Ge(r_12) = Ge(r_21) the nonlocal rate.
ComplexMatrix build_dissipator(const RateSet &rates);

ComplexMatrix build_liouvillian(const RateSet &rates, double delta);

struct JumpChannel {
    ComplexMatrix op; // 4x4
    double rate = 0.0;
};

// Diagonalized form of the dissipator: symmetric/antisymmetric combinations
// (s_1 +- sgn[G(r)] s_2)/sqrt(2) at rates G(0) +- |G(r)|.  Emission channels
// first, then absorption.
std::vector<JumpChannel> jump_decomposition(const RateSet &rates);

// Rebuild the dissipator from jump channels; used to pin the decomposition
// against build_dissipator.
ComplexMatrix dissipator_from_jumps(const std::vector<JumpChannel> &channels);

struct PsdReport {
    bool physical = false;
    double margin_e = 0.0; // G_e(0) - |G_e(r)|
    double margin_a = 0.0;
};

// A rate set generates a completely positive evolution iff both margins are
// non-negative; tol absorbs roundoff on the boundary.
PsdReport validate_psd(const RateSet &rates, double tol = 1e-12);

// exp(-delta/kT) with kT given in units of delta.  Accepts +-infinity
// (ratio 1); rejects exact zero and negative values so close to zero that
// the ratio overflows.  Tiny positive kT underflows gracefully to ratio 0.
double boltzmann_ratio(double kT);

// Phenomenological rate sets parametrized by the local and nonlocal
// effective temperatures.  The emission-anchored form sets
//   G_e(0) = gamma_e0,         G_e(r) = f_e gamma_e0,
//   G_a(0) = gamma_e0 x(kT0),  G_a(r) = sign_a f_e gamma_e0 x(kTr),
// with x = boltzmann_ratio.  The absorption-anchored twin fixes G_a instead
// and divides by the ratios; it exists so absorption-dominated (negative
// temperature) scans can pin |G_a(r)|/G_a(0) directly.
RateSet rates_from_temperatures(double gamma_e0, double f_e, double kT0, double kTr, int sign_a);
RateSet rates_from_temperatures_absorption(double gamma_a0, double f_a, double kT0, double kTr,
                                           int sign_e);

// Two-qubit Gibbs state diag(x, 1, 1, 1/x)/Z at x = exp(-delta/kT).
ComplexMatrix thermal_state(double kT);

// Largest entry of |L^e_ij[rho_T] + L^a_ji[rho_T]| over the four index
// pairs.  Vanishes (to roundoff) when G_a(r_ij) = exp(-delta/kT) G_e(r_ij)
// for every pair, including negative kT.
double detailed_balance_residual(const RateSet &rates, double kT);

struct DensityReport {
    double hermiticity_defect = 0.0;
    double trace_defect = 0.0;
    double min_eigenvalue = 0.0;
};

// Checks rho is Hermitian, unit trace, and positive semidefinite within tol;
// throws invalid_input otherwise.
DensityReport validate_density(const ComplexMatrix &rho, double tol = 1e-10);

} // namespace spinpair

#endif
