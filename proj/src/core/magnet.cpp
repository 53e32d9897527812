#include "core/magnet.hpp"

#include "core/bessel.hpp"
#include "core/matrix.hpp"

#include <cmath>

namespace spinpair {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void MagnetParams::validate() const {
    if (!(A > 0.0))
        throw invalid_input("magnet: stiffness A must be > 0");
    if (!(s > 0.0))
        throw invalid_input("magnet: spin density s must be > 0");
    if (!(b > 0.0))
        throw invalid_input("magnet: band shift b must be > 0");
    if (!(T_E >= 0.0))
        throw invalid_input("magnet: temperature T_E must be >= 0");
    if (T_E > 0.0 && !(mu < -b))
        throw invalid_input("magnet: chemical potential mu must lie below the band bottom -b "
                            "whenever T_E > 0");
}

void CouplingParams::validate() const {
    if (!(lambda_plus >= 0.0) || !(lambda_minus >= 0.0))
        throw invalid_input("couplings: magnitudes must be >= 0");
    if (lambda_plus == 0.0 && lambda_minus == 0.0)
        throw invalid_input("couplings: lambda_plus and lambda_minus cannot both vanish");
}

void SystemParams::validate() const {
    if (!(delta > 0.0))
        throw invalid_input("system: qubit splitting delta must be > 0");
    if (!(r >= 0.0))
        throw invalid_input("system: separation r must be >= 0");
}

double dispersion(const MagnetParams &m, double k) { return m.A * m.s * k * k - m.b; }

double wavevector(const MagnetParams &m, double omega) {
    if (omega < -m.b)
        throw invalid_input("wavevector: frequency below the band bottom");
    return std::sqrt((omega + m.b) / (m.A * m.s));
}

double dos(const MagnetParams &m, double omega) {
    if (omega + m.b < 0.0)
        return 0.0;
    return 1.0 / (4.0 * kPi * m.A * m.s);
}

double bose(const MagnetParams &m, double omega) {
    if (m.T_E == 0.0)
        return 0.0;
    const double y = (omega - m.mu) / m.T_E;
    if (y <= 0.0)
        throw invalid_input("bose: occupation exponent must be positive (omega above mu)");
    return 1.0 / std::expm1(y);
}

namespace {

// Shared body for the two correlation spectra.  stimulated == true picks the
// bose(omega) weight, false picks bose(omega)+1.
double corr_eval(const MagnetParams &m, double omega, double r, bool stimulated) {
    const double g = dos(m, omega);
    if (g == 0.0)
        return 0.0;
    double occ;
    if (stimulated) {
        if (m.T_E == 0.0)
            return 0.0;
        occ = bose(m, omega);
    } else {
        occ = bose(m, omega) + 1.0;
    }
    return 4.0 * kPi * m.s * occ * g * bessel_j0(r * wavevector(m, omega));
}

void check_channel(int n) {
    if (n != 1 && n != -1)
        throw invalid_input("correlation channel index must be +1 or -1");
}

} // namespace

double corr_plus(const MagnetParams &m, int n, double omega, double r) {
    check_channel(n);
    m.validate();
    // conserving channel emits by creating a magnon (spontaneous+stimulated);
    // the counter-rotating channel instead eats an excitation at -omega
    return (n == 1) ? corr_eval(m, omega, r, false) : corr_eval(m, -omega, r, true);
}

double corr_minus(const MagnetParams &m, int n, double omega, double r) {
    check_channel(n);
    m.validate();
    return (n == 1) ? corr_eval(m, omega, r, true) : corr_eval(m, -omega, r, false);
}

double kms_residual(const MagnetParams &m, int n, double omega, double r) {
    check_channel(n);
    m.validate();
    if (m.T_E <= 0.0)
        throw invalid_input("kms_residual: needs T_E > 0");
    const double cp = corr_plus(m, n, omega, r);
    if (cp == 0.0)
        throw invalid_input("kms_residual: corr_plus vanishes at this point (out of band or "
                            "at a spatial zero)");
    const double ratio = corr_minus(m, n, omega, r) / cp;
    const double expected = std::exp(-(omega - n * m.mu) / m.T_E);
    return std::fabs(ratio - expected) / std::max(1.0, expected);
}

RateSet magnet_rates(const MagnetParams &m, const CouplingParams &c, const SystemParams &sys) {
    m.validate();
    c.validate();
    sys.validate();
    const double lp2 = c.lambda_plus * c.lambda_plus;
    const double lm2 = c.lambda_minus * c.lambda_minus;
    RateSet rs;
    rs.gamma_e_local = lp2 * corr_plus(m, 1, sys.delta, 0.0) + lm2 * corr_plus(m, -1, sys.delta, 0.0);
    rs.gamma_e_nonlocal =
        lp2 * corr_plus(m, 1, sys.delta, sys.r) + lm2 * corr_plus(m, -1, sys.delta, sys.r);
    rs.gamma_a_local =
        lp2 * corr_minus(m, 1, sys.delta, 0.0) + lm2 * corr_minus(m, -1, sys.delta, 0.0);
    rs.gamma_a_nonlocal =
        lp2 * corr_minus(m, 1, sys.delta, sys.r) + lm2 * corr_minus(m, -1, sys.delta, sys.r);
    return rs;
}

EffectiveTemperature effective_temperature(double gamma_e, double gamma_a) {
    EffectiveTemperature t;
    const double ae = std::fabs(gamma_e), aa = std::fabs(gamma_a);
    if (ae == 0.0 && aa == 0.0) {
        t.ratio = 0.0;
        t.kT = std::nan("");
        t.kind = TempKind::undefined;
        return t;
    }
    if (ae == 0.0) {
        t.ratio = HUGE_VAL;
        t.kT = -0.0; // absorption only: the zero-temperature limit from below
        t.kind = TempKind::zero_minus;
        return t;
    }
    t.ratio = aa / ae;
    if (t.ratio == 0.0) {
        t.kT = 0.0;
        t.kind = TempKind::zero_plus;
        return t;
    }
    if (t.ratio == 1.0) {
        t.kT = HUGE_VAL;
        t.kind = TempKind::infinite;
        return t;
    }
    t.kT = -1.0 / std::log(t.ratio);
    t.kind = TempKind::finite;
    return t;
}

ExchangeCouplings couplings_from_angle(double J, double theta) {
    ExchangeCouplings e;
    e.c = -J * (1.0 + std::cos(theta));
    e.chi = -J * (1.0 - std::cos(theta));
    return e;
}

CouplingParams couplings_magnitudes(const ExchangeCouplings &e) {
    CouplingParams c;
    c.lambda_plus = std::fabs(e.c);
    c.lambda_minus = std::fabs(e.chi);
    return c;
}

} // namespace spinpair
