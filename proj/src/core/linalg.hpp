#ifndef SPINPAIR_LINALG_HPP
#define SPINPAIR_LINALG_HPP

#include "core/matrix.hpp"

namespace spinpair {

struct HermitianEig {
    std::vector<double> values; // ascending
    ComplexMatrix vectors;      // column k pairs with values[k]
};

// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
// rotations.  Input must be Hermitian to 1e-12 relative to its magnitude.
HermitianEig hermitian_eig(const ComplexMatrix &a);

// Eigenvalues (only) of a general complex square matrix: Householder
// reduction to upper Hessenberg form followed by shifted QR iteration.
// Returned sorted by (real, imag) ascending.
std::vector<cplx> general_eig(const ComplexMatrix &a);

struct Svd {
    std::vector<double> singular_values; // descending
    ComplexMatrix v;                     // right singular vectors, columns
};

// Singular values and right singular vectors by one-sided Jacobi on the
// columns.  Chosen over eig(A^H A) because it keeps full relative accuracy
// in the small singular values, which is what the kernel detection needs.
Svd singular_right(const ComplexMatrix &a);

// Orthonormal basis (as columns) for {v : Av = 0}, i.e. the right singular
// vectors whose singular value falls below tol relative to the largest.
ComplexMatrix nullspace(const ComplexMatrix &a, double tol = 1e-9);

// Gaussian elimination with partial pivoting.  Throws invalid_input when a
// pivot falls below 1e-13 relative to the matrix magnitude, and
// numerical_failure when the solution fails its own residual check.
std::vector<cplx> solve(const ComplexMatrix &a, const std::vector<cplx> &b);

} // namespace spinpair

#endif
