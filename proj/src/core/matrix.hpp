#ifndef SPINPAIR_MATRIX_HPP
#define SPINPAIR_MATRIX_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinpair {

using cplx = std::complex<double>;

// Raised when an input fails a precondition (bad dimension, invalid
// parameter value, ...).  The C wrapper maps this to a validation status.
struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when an iteration fails to converge or a computed quantity fails
// its own consistency check.  Maps to a numerical-failure status.
struct numerical_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense row-major complex matrix.  Everything in this project is 16x16 or
// smaller, so no attempt is made at blocking or expression templates.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0)
            throw invalid_input("matrix dimensions must be non-negative");
    }

    static ComplexMatrix identity(int n);
    static ComplexMatrix zero(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx &operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const cplx &operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    ComplexMatrix operator+(const ComplexMatrix &b) const;
    ComplexMatrix operator-(const ComplexMatrix &b) const;
    ComplexMatrix operator*(const ComplexMatrix &b) const;
    ComplexMatrix &operator+=(const ComplexMatrix &b);
    ComplexMatrix operator*(cplx s) const;

    ComplexMatrix dagger() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;

    // Largest entry magnitude; used for relative tolerances throughout.
    double max_abs() const;
    double frobenius_norm() const;
    cplx trace() const;

    // max_ij |A_ij - conj(A_ji)|
    double hermiticity_defect() const;

    bool same_shape(const ComplexMatrix &b) const {
        return rows_ == b.rows_ && cols_ == b.cols_;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

// Kronecker product, left factor major: (A (x) B)_{(i*p+k),(j*q+l)} = A_ij B_kl.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

// Column stacking: vec(A)_{i + rows*j} = A_ij, so vec(X rho Y) = (Y^T (x) X) vec(rho).
std::vector<cplx> vec(const ComplexMatrix &a);
ComplexMatrix unvec(const std::vector<cplx> &v, int rows, int cols);

std::vector<cplx> matvec(const ComplexMatrix &a, const std::vector<cplx> &x);

double vec_norm(const std::vector<cplx> &v);
double vec_max_abs(const std::vector<cplx> &v);

} // namespace spinpair

#endif
