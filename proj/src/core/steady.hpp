#ifndef SPINPAIR_STEADY_HPP
#define SPINPAIR_STEADY_HPP

#include "core/matrix.hpp"

#include <string>

namespace spinpair {

struct SteadyStateResult {
    ComplexMatrix rho; // 4x4, Hermitian, unit trace
    int multiplicity = 1;
    bool degenerate = false;
    double residual = 0.0; // max |L vec(rho)|
    std::string method;
};

// Steady state as the kernel of the 16x16 generator.  With a degenerate
// kernel the returned representative is the one reached from the maximally
// mixed state, and the degenerate flag is set.
SteadyStateResult steady_state(const ComplexMatrix &liouvillian);

// Steady state from the closed 6-real-unknown population/cross-coherence
// sector (rho_11..rho_44, Re rho_23, Im rho_23).  Requires a nondegenerate
// generator; throws invalid_input if the reduced system is singular.
SteadyStateResult steady_state_block(const ComplexMatrix &liouvillian);

// Classical RK4 for d vec(rho)/dt = L vec(rho).  dt <= 0 picks the default
// 0.05/max|L|; explicit dt must respect the stability guard dt*max|L| <= 0.1.
ComplexMatrix propagate(const ComplexMatrix &liouvillian, const ComplexMatrix &rho0, double t,
                        double dt = 0.0);

struct GapResult {
    double gap = 0.0; // smallest nonzero decay rate; 0 when nothing decays
    int zero_count = 0;
    bool no_decay = false;
    std::vector<cplx> spectrum; // sorted by (Re, Im)
};

// Relaxation spectrum.  An eigenvalue counts as zero only if both its real
// and imaginary parts sit within eps = 1e-9 * max(1, max|L|); purely
// imaginary eigenvalues beyond eps are persistent oscillations, not steady
// states.
GapResult spectral_gap(const ComplexMatrix &liouvillian);

} // namespace spinpair

#endif
