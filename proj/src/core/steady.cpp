#include "core/steady.hpp"

#include "core/linalg.hpp"
#include "core/lindblad.hpp"

#include <cmath>

namespace spinpair {

namespace {

void check_liouvillian_shape(const ComplexMatrix &l) {
    if (l.rows() != 16 || l.cols() != 16)
        throw invalid_input("generator must be 16x16 (two-qubit superoperator)");
}

ComplexMatrix hermitize(const ComplexMatrix &m) {
    ComplexMatrix h(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return h;
}

ComplexMatrix normalize_trace(const ComplexMatrix &m) {
    const cplx t = m.trace();
    if (std::abs(t) < 1e-6 * std::max(1.0, m.frobenius_norm()))
        throw numerical_failure("steady state candidate is (numerically) traceless");
    return m * (cplx(1.0) / t);
}

double residual_of(const ComplexMatrix &l, const ComplexMatrix &rho) {
    return vec_max_abs(matvec(l, vec(rho)));
}

void finish(SteadyStateResult &out, const ComplexMatrix &l) {
    out.residual = residual_of(l, out.rho);
    const double scale = std::max(1.0, l.max_abs());
    if (out.residual > 1e-8 * scale)
        throw numerical_failure("steady state residual exceeds tolerance");
    validate_density(out.rho);
}

} // namespace

SteadyStateResult steady_state(const ComplexMatrix &l) {
    check_liouvillian_shape(l);
    SteadyStateResult out;
    out.method = "nullspace";

    const ComplexMatrix kernel = nullspace(l);
    const int m = kernel.cols();
    if (m == 0)
        throw numerical_failure("no kernel found; a trace-preserving generator must have one");
    out.multiplicity = m;

    if (m == 1) {
        std::vector<cplx> v(16);
        for (int i = 0; i < 16; ++i)
            v[i] = kernel(i, 0);
        // dividing by the trace also removes the arbitrary global phase of
        // the kernel vector
        out.rho = hermitize(normalize_trace(unvec(v, 4, 4)));
        finish(out, l);
        return out;
    }

    // Degenerate family: return the member reached from the maximally mixed
    // state, which is the projection that conserved quantities single out.
    out.degenerate = true;
    const GapResult g = spectral_gap(l);
    ComplexMatrix rho0 = ComplexMatrix::identity(4) * cplx(0.25);
    if (g.no_decay) {
        out.rho = rho0; // nothing decays; the mixed state is already steady
    } else {
        out.rho = hermitize(normalize_trace(propagate(l, rho0, 100.0 / g.gap)));
    }
    out.method = "nullspace+propagate";
    finish(out, l);
    return out;
}

SteadyStateResult steady_state_block(const ComplexMatrix &l) {
    check_liouvillian_shape(l);
    const double scale = std::max(1.0, l.max_abs());

    // Hermitian basis of the populations + cross-coherence sector
    std::vector<ComplexMatrix> basis;
    for (int k = 0; k < 4; ++k) {
        ComplexMatrix b(4, 4);
        b(k, k) = 1.0;
        basis.push_back(b);
    }
    {
        ComplexMatrix b(4, 4);
        b(1, 2) = 1.0;
        b(2, 1) = 1.0;
        basis.push_back(b);
        ComplexMatrix c(4, 4);
        c(1, 2) = cplx(0.0, 1.0);
        c(2, 1) = cplx(0.0, -1.0);
        basis.push_back(c);
    }

    // project L onto the sector; the generator must not leak out of it
    ComplexMatrix m(6, 6);
    for (int k = 0; k < 6; ++k) {
        const ComplexMatrix w = unvec(matvec(l, vec(basis[k])), 4, 4);
        double leak = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const bool inside = (i == j) || (i == 1 && j == 2) || (i == 2 && j == 1);
                if (!inside)
                    leak = std::max(leak, std::abs(w(i, j)));
            }
        if (leak > 1e-9 * scale)
            throw invalid_input("generator couples the population sector to other coherences; "
                                "the reduced solver does not apply");
        for (int i = 0; i < 4; ++i) {
            if (std::fabs(w(i, i).imag()) > 1e-9 * scale)
                throw numerical_failure("population derivative came out complex");
            m(i, k) = w(i, i).real();
        }
        m(4, k) = w(1, 2).real();
        m(5, k) = w(1, 2).imag();
    }

    // replace the first (redundant) row with the trace constraint
    for (int k = 0; k < 6; ++k)
        m(0, k) = (k < 4) ? 1.0 : 0.0;
    std::vector<cplx> rhs(6, cplx(0.0));
    rhs[0] = 1.0;

    std::vector<cplx> x;
    try {
        x = solve(m, rhs);
    } catch (const invalid_input &) {
        throw invalid_input("reduced steady-state system is singular (degenerate family); "
                            "use the full kernel solver");
    }

    SteadyStateResult out;
    out.method = "block";
    out.rho = ComplexMatrix(4, 4);
    for (int k = 0; k < 4; ++k)
        out.rho(k, k) = x[k].real();
    out.rho(1, 2) = cplx(x[4].real(), x[5].real());
    out.rho(2, 1) = std::conj(out.rho(1, 2));
    finish(out, l);
    return out;
}

ComplexMatrix propagate(const ComplexMatrix &l, const ComplexMatrix &rho0, double t, double dt) {
    check_liouvillian_shape(l);
    if (rho0.rows() != 4 || rho0.cols() != 4)
        throw invalid_input("propagate: state must be 4x4");
    if (!(t >= 0.0) || std::isinf(t) || std::isnan(t))
        throw invalid_input("propagate: time must be finite and non-negative");

    const double norm_l = l.max_abs();
    if (norm_l == 0.0 || t == 0.0)
        return rho0;
    if (dt <= 0.0)
        dt = 0.05 / norm_l;
    if (dt * norm_l > 0.1)
        throw invalid_input("propagate: step too large for the explicit RK4 stability guard "
                            "(need dt * max|L| <= 0.1)");

    const cplx tr0 = rho0.trace();
    std::vector<cplx> y = vec(rho0);
    const long long nsteps = static_cast<long long>(std::ceil(t / dt));
    const double h_last = t - dt * static_cast<double>(nsteps - 1);

    std::vector<cplx> k1, k2, k3, k4, tmp(y.size());
    for (long long step = 0; step < nsteps; ++step) {
        const double h = (step == nsteps - 1) ? h_last : dt;
        k1 = matvec(l, y);
        for (size_t i = 0; i < y.size(); ++i)
            tmp[i] = y[i] + 0.5 * h * k1[i];
        k2 = matvec(l, tmp);
        for (size_t i = 0; i < y.size(); ++i)
            tmp[i] = y[i] + 0.5 * h * k2[i];
        k3 = matvec(l, tmp);
        for (size_t i = 0; i < y.size(); ++i)
            tmp[i] = y[i] + h * k3[i];
        k4 = matvec(l, tmp);
        for (size_t i = 0; i < y.size(); ++i)
            y[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }

    ComplexMatrix rho = unvec(y, 4, 4);
    if (std::abs(rho.trace() - tr0) > 1e-9)
        throw numerical_failure("propagate: trace drifted beyond tolerance");
    return rho;
}

GapResult spectral_gap(const ComplexMatrix &l) {
    check_liouvillian_shape(l);
    GapResult out;
    out.spectrum = general_eig(l);
    const double eps_zero = 1e-9 * std::max(1.0, l.max_abs());
    double gap = HUGE_VAL;
    for (const cplx &lam : out.spectrum) {
        if (std::fabs(lam.real()) <= eps_zero && std::fabs(lam.imag()) <= eps_zero) {
            ++out.zero_count;
        } else if (lam.real() < -eps_zero) {
            gap = std::min(gap, -lam.real());
        }
    }
    if (std::isinf(gap)) {
        out.no_decay = true;
        out.gap = 0.0;
    } else {
        out.gap = gap;
    }
    return out;
}

} // namespace spinpair
