#ifndef SPINPAIR_MAGNET_HPP
#define SPINPAIR_MAGNET_HPP

namespace spinpair {

// Quadratic magnon band over a 2D film: omega(k) = A*s*k^2 - b.  The band
// bottom sits at -b (pumping shifts it below zero), and mu is the magnon
// chemical potential maintained by the pump.
struct MagnetParams {
    double A = 1.0;   // exchange stiffness
    double s = 1.0;   // spin density
    double b = 1.0;   // band shift (> 0)
    double T_E = 0.0; // film temperature
    double mu = 0.0;  // chemical potential; must stay below -b when T_E > 0

    void validate() const;
};

// Magnitudes of the spin-conserving (lambda_plus) and counter-rotating
// (lambda_minus) qubit-magnon couplings.
struct CouplingParams {
    double lambda_plus = 0.0;
    double lambda_minus = 0.0;

    void validate() const;
};

struct SystemParams {
    double delta = 1.0; // qubit splitting (> 0)
    double r = 0.0;     // qubit separation (>= 0)

    void validate() const;
};

// Local and distance-r emission/absorption rates.  The nonlocal entries are
// signed; the sign carries the oscillation of the spatial correlations.
struct RateSet {
    double gamma_e_local = 0.0;
    double gamma_e_nonlocal = 0.0;
    double gamma_a_local = 0.0;
    double gamma_a_nonlocal = 0.0;
};

double dispersion(const MagnetParams &m, double k);

// Inverse of the dispersion on the positive branch; requires omega >= -b.
double wavevector(const MagnetParams &m, double omega);

// 2D density of states: constant 1/(4 pi A s) above the band bottom, zero
// below.  The band edge itself counts as inside (theta(0) = 1).
double dos(const MagnetParams &m, double omega);

// Bose-Einstein occupation at (omega - mu)/T_E; identically 0 at T_E = 0.
double bose(const MagnetParams &m, double omega);

// Environment correlation spectra at frequency omega and separation r for
// the two coupling channels n = +1 (conserving) and n = -1 (counter
// rotating).  corr_plus drives qubit emission, corr_minus absorption.
double corr_plus(const MagnetParams &m, int n, double omega, double r);
double corr_minus(const MagnetParams &m, int n, double omega, double r);

// Residual of the pump-shifted detailed-balance identity
//   corr_minus/corr_plus = exp(-(omega - n*mu)/T_E),
// normalized by max(1, expected ratio) so that exponentially large ratios
// are compared in relative terms.
double kms_residual(const MagnetParams &m, int n, double omega, double r);

// Golden-rule rates at the qubit splitting: both coupling channels
// contribute |lambda_n|^2 * corr(delta, r).
RateSet magnet_rates(const MagnetParams &m, const CouplingParams &c, const SystemParams &sys);

enum class TempKind {
    finite,
    infinite,   // gamma_a == gamma_e: ratio 1, |kT| -> infinity
    zero_plus,  // gamma_a == 0: pure emission, kT -> 0 from above
    zero_minus, // gamma_e == 0: pure absorption, kT -> 0 from below
    undefined,  // both rates vanish
};

struct EffectiveTemperature {
    double ratio = 0.0; // |gamma_a / gamma_e|
    double kT = 0.0;    // in units of delta; signed zero / infinity at limits
    TempKind kind = TempKind::finite;
};

// Temperature assigned through exp(-delta/kT) = |gamma_a/gamma_e|.
EffectiveTemperature effective_temperature(double gamma_e, double gamma_a);

// Exchange-coupling decomposition for a qubit axis tilted by theta against
// the film magnetization: c multiplies the conserving channel, chi the
// counter-rotating one.
struct ExchangeCouplings {
    double c = 0.0;
    double chi = 0.0;
};

ExchangeCouplings couplings_from_angle(double J, double theta);
CouplingParams couplings_magnitudes(const ExchangeCouplings &e);

} // namespace spinpair

#endif
