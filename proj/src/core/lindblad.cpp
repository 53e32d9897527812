#include "core/lindblad.hpp"

#include "core/linalg.hpp"

#include <cmath>

namespace spinpair {

ComplexMatrix sigma_plus() {
    ComplexMatrix m(2, 2);
    m(0, 1) = 1.0;
    return m;
}

ComplexMatrix sigma_minus() {
    ComplexMatrix m(2, 2);
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix sigma_z() {
    ComplexMatrix m(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

ComplexMatrix sigma_y() {
    ComplexMatrix m(2, 2);
    m(0, 1) = cplx(0.0, -1.0);
    m(1, 0) = cplx(0.0, 1.0);
    return m;
}

ComplexMatrix on_qubit(const ComplexMatrix &op, int which) {
    if (op.rows() != 2 || op.cols() != 2)
        throw invalid_input("on_qubit: operator must be 2x2");
    const ComplexMatrix id = ComplexMatrix::identity(2);
    if (which == 1)
        return kron(op, id);
    if (which == 2)
        return kron(id, op);
    throw invalid_input("on_qubit: qubit index must be 1 or 2");
}

ComplexMatrix pair_hamiltonian(double delta) {
    ComplexMatrix h = on_qubit(sigma_z(), 1) + on_qubit(sigma_z(), 2);
    return h * cplx(0.5 * delta);
}

namespace {

// rho -> A rho B as a matrix on vec(rho)
ComplexMatrix sandwich(const ComplexMatrix &a, const ComplexMatrix &b) {
    return kron(b.transpose(), a);
}

// rho -> A rho B - {C, rho}/2 accumulated over one (i, j) dissipator term
ComplexMatrix lindblad_term(const ComplexMatrix &jump_left, const ComplexMatrix &jump_right) {
    const int n = jump_left.rows();
    const ComplexMatrix id = ComplexMatrix::identity(n);
    const ComplexMatrix c = jump_right * jump_left; // e.g. sp_i sm_j
    ComplexMatrix t = sandwich(jump_left, jump_right);
    t += sandwich(c, id) * cplx(-0.5);
    t += sandwich(id, c) * cplx(-0.5);
    return t;
}

double rate_entry(const RateSet &r, bool emission, int i, int j) {
    if (emission)
        return (i == j) ? r.gamma_e_local : r.gamma_e_nonlocal;
    return (i == j) ? r.gamma_a_local : r.gamma_a_nonlocal;
}

} // namespace

ComplexMatrix build_hamiltonian_part(double delta) {
    const ComplexMatrix h = pair_hamiltonian(delta);
    const ComplexMatrix id = ComplexMatrix::identity(4);
    const ComplexMatrix comm = sandwich(h, id) - sandwich(id, h);
    return comm * cplx(0.0, -1.0);
}

ComplexMatrix build_dissipator(const RateSet &rates) {
    ComplexMatrix l(16, 16);
    for (int i = 1; i <= 2; ++i) {
        for (int j = 1; j <= 2; ++j) {
            const ComplexMatrix sm_j = on_qubit(sigma_minus(), j);
            const ComplexMatrix sp_i = on_qubit(sigma_plus(), i);
            const ComplexMatrix sp_j = on_qubit(sigma_plus(), j);
            const ComplexMatrix sm_i = on_qubit(sigma_minus(), i);
            l += lindblad_term(sm_j, sp_i) * cplx(rate_entry(rates, true, i, j));
            l += lindblad_term(sp_j, sm_i) * cplx(rate_entry(rates, false, i, j));
        }
    }
    return l;
}

ComplexMatrix build_liouvillian(const RateSet &rates, double delta) {
    return build_hamiltonian_part(delta) + build_dissipator(rates);
}

namespace {

void append_pair(std::vector<JumpChannel> &out, const ComplexMatrix &s1, const ComplexMatrix &s2,
                 double local, double nonlocal) {
    const double sgn = (nonlocal < 0.0) ? -1.0 : 1.0;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    JumpChannel plus, minus;
    plus.op = (s1 + s2 * cplx(sgn)) * cplx(inv_sqrt2);
    plus.rate = local + std::fabs(nonlocal);
    minus.op = (s1 - s2 * cplx(sgn)) * cplx(inv_sqrt2);
    minus.rate = local - std::fabs(nonlocal);
    out.push_back(std::move(plus));
    out.push_back(std::move(minus));
}

} // namespace

std::vector<JumpChannel> jump_decomposition(const RateSet &rates) {
    std::vector<JumpChannel> out;
    out.reserve(4);
    append_pair(out, on_qubit(sigma_minus(), 1), on_qubit(sigma_minus(), 2), rates.gamma_e_local,
                rates.gamma_e_nonlocal);
    append_pair(out, on_qubit(sigma_plus(), 1), on_qubit(sigma_plus(), 2), rates.gamma_a_local,
                rates.gamma_a_nonlocal);
    return out;
}

ComplexMatrix dissipator_from_jumps(const std::vector<JumpChannel> &channels) {
    ComplexMatrix l(16, 16);
    for (const JumpChannel &ch : channels)
        l += lindblad_term(ch.op, ch.op.dagger()) * cplx(ch.rate);
    return l;
}

PsdReport validate_psd(const RateSet &rates, double tol) {
    PsdReport rep;
    rep.margin_e = rates.gamma_e_local - std::fabs(rates.gamma_e_nonlocal);
    rep.margin_a = rates.gamma_a_local - std::fabs(rates.gamma_a_nonlocal);
    rep.physical = rep.margin_e >= -tol && rep.margin_a >= -tol;
    return rep;
}

double boltzmann_ratio(double kT) {
    if (std::isnan(kT))
        throw invalid_input("temperature is NaN");
    if (kT == 0.0)
        throw invalid_input("temperature must be nonzero (the kT -> 0 limit is a pure "
                            "emission/absorption rate set; build it directly)");
    if (std::isinf(kT))
        return 1.0;
    const double x = std::exp(-1.0 / kT);
    if (std::isinf(x))
        throw invalid_input("temperature too close to zero from below; the Boltzmann ratio "
                            "overflows");
    return x;
}

RateSet rates_from_temperatures(double gamma_e0, double f_e, double kT0, double kTr, int sign_a) {
    if (!(gamma_e0 > 0.0))
        throw invalid_input("rates: gamma_e0 must be > 0");
    if (!(f_e >= -1.0 && f_e <= 1.0))
        throw invalid_input("rates: f_e must lie in [-1, 1]");
    if (sign_a != 1 && sign_a != -1)
        throw invalid_input("rates: sign_a must be +1 or -1");
    RateSet r;
    r.gamma_e_local = gamma_e0;
    r.gamma_e_nonlocal = f_e * gamma_e0;
    r.gamma_a_local = gamma_e0 * boltzmann_ratio(kT0);
    r.gamma_a_nonlocal = sign_a * f_e * gamma_e0 * boltzmann_ratio(kTr);
    return r;
}

RateSet rates_from_temperatures_absorption(double gamma_a0, double f_a, double kT0, double kTr,
                                           int sign_e) {
    if (!(gamma_a0 > 0.0))
        throw invalid_input("rates: gamma_a0 must be > 0");
    if (!(f_a >= -1.0 && f_a <= 1.0))
        throw invalid_input("rates: f_a must lie in [-1, 1]");
    if (sign_e != 1 && sign_e != -1)
        throw invalid_input("rates: sign_e must be +1 or -1");
    const double inv0 = 1.0 / boltzmann_ratio(kT0);
    const double invr = 1.0 / boltzmann_ratio(kTr);
    if (std::isinf(inv0) || std::isinf(invr))
        throw invalid_input("temperature too close to zero from above; the inverse Boltzmann "
                            "ratio overflows");
    RateSet r;
    r.gamma_a_local = gamma_a0;
    r.gamma_a_nonlocal = f_a * gamma_a0;
    r.gamma_e_local = gamma_a0 * inv0;
    r.gamma_e_nonlocal = sign_e * f_a * gamma_a0 * invr;
    return r;
}

ComplexMatrix thermal_state(double kT) {
    const double x = boltzmann_ratio(kT);
    const double z = x + 2.0 + 1.0 / x;
    ComplexMatrix rho(4, 4);
    rho(0, 0) = x / z;
    rho(1, 1) = 1.0 / z;
    rho(2, 2) = 1.0 / z;
    rho(3, 3) = (1.0 / x) / z;
    return rho;
}

double detailed_balance_residual(const RateSet &rates, double kT) {
    const ComplexMatrix rho = thermal_state(kT);
    double worst = 0.0;
    for (int i = 1; i <= 2; ++i) {
        for (int j = 1; j <= 2; ++j) {
            const ComplexMatrix sm_i = on_qubit(sigma_minus(), i);
            const ComplexMatrix sp_j = on_qubit(sigma_plus(), j);
            const double ge = rate_entry(rates, true, i, j);
            const double ga = rate_entry(rates, false, i, j);
            // L^e_ij[rho] = Ge(r_ij)(sm_i rho sp_j - {sp_j sm_i, rho}/2)
            ComplexMatrix me = sm_i * rho * sp_j;
            const ComplexMatrix ce = sp_j * sm_i;
            me += (ce * rho + rho * ce) * cplx(-0.5);
            // L^a_ji[rho] = Ga(r_ji)(sp_j rho sm_i - {sm_i sp_j, rho}/2)
            ComplexMatrix ma = sp_j * rho * sm_i;
            const ComplexMatrix ca = sm_i * sp_j;
            ma += (ca * rho + rho * ca) * cplx(-0.5);
            const ComplexMatrix sum = me * cplx(ge) + ma * cplx(ga);
            worst = std::max(worst, sum.max_abs());
        }
    }
    return worst;
}

DensityReport validate_density(const ComplexMatrix &rho, double tol) {
    if (rho.rows() != rho.cols())
        throw invalid_input("density matrix must be square");
    DensityReport rep;
    rep.hermiticity_defect = rho.hermiticity_defect();
    rep.trace_defect = std::abs(rho.trace() - cplx(1.0));
    if (rep.hermiticity_defect > tol)
        throw invalid_input("density matrix is not Hermitian within tolerance");
    if (rep.trace_defect > tol)
        throw invalid_input("density matrix trace differs from 1 beyond tolerance");
    const HermitianEig eig = hermitian_eig(rho);
    rep.min_eigenvalue = eig.values.front();
    if (rep.min_eigenvalue < -tol)
        throw invalid_input("density matrix has a negative eigenvalue beyond tolerance");
    return rep;
}

} // namespace spinpair
