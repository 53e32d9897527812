#include "core/concurrence.hpp"

#include "core/linalg.hpp"
#include "core/lindblad.hpp"

#include <algorithm>
#include <cmath>

namespace spinpair {

ConcurrenceResult concurrence(const ComplexMatrix &rho) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw invalid_input("concurrence: state must be 4x4");
    validate_density(rho, 1e-8);

    const ComplexMatrix f = kron(sigma_y(), sigma_y());
    const ComplexMatrix r = rho * f * rho.conj() * f;
    const std::vector<cplx> ev = general_eig(r);

    std::vector<double> lam;
    lam.reserve(4);
    for (const cplx &e : ev) {
        double x = e.real();
        if (x < -1e-12)
            throw numerical_failure("concurrence: spin-flipped product has a negative "
                                    "eigenvalue beyond tolerance");
        if (x < 0.0)
            x = 0.0;
        lam.push_back(std::sqrt(x));
    }
    std::sort(lam.begin(), lam.end(), std::greater<double>());

    ConcurrenceResult out;
    for (int i = 0; i < 4; ++i)
        out.lambdas[i] = lam[i];
    out.value = std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
    return out;
}

double concurrence_block(const ComplexMatrix &rho) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw invalid_input("concurrence_block: state must be 4x4");
    double off = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const bool inside = (i == j) || (i == 1 && j == 2) || (i == 2 && j == 1);
            if (!inside)
                off = std::max(off, std::abs(rho(i, j)));
        }
    if (off > 1e-9)
        throw invalid_input("concurrence_block: state has weight outside the population + "
                            "ud/du-coherence sector");
    const double p1 = std::max(0.0, rho(0, 0).real());
    const double p4 = std::max(0.0, rho(3, 3).real());
    return 2.0 * std::max(0.0, std::abs(rho(1, 2)) - std::sqrt(p1 * p4));
}

} // namespace spinpair
