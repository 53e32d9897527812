#ifndef SPINPAIR_CONCURRENCE_HPP
#define SPINPAIR_CONCURRENCE_HPP

#include "core/matrix.hpp"

namespace spinpair {

struct ConcurrenceResult {
    double value = 0.0;
    double lambdas[4] = {0.0, 0.0, 0.0, 0.0}; // descending
};

// Two-qubit concurrence: square roots of the eigenvalues of
// rho (sy x sy) rho^* (sy x sy) in decreasing order, then
// C = max(0, l1 - l2 - l3 - l4).
ConcurrenceResult concurrence(const ComplexMatrix &rho);

// Fast path for states supported on populations plus the ud/du coherence:
// C = 2 max(0, |rho_23| - sqrt(rho_11 rho_44)).  Throws if rho has weight
// outside that sector.
double concurrence_block(const ComplexMatrix &rho);

} // namespace spinpair

#endif
