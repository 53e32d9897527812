#include "core/matrix.hpp"

#include <cmath>

namespace spinpair {

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::zero(int rows, int cols) { return ComplexMatrix(rows, cols); }

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix &b) const {
    if (!same_shape(b))
        throw invalid_input("matrix add: shape mismatch");
    ComplexMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = a_[i] + b.a_[i];
    return r;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix &b) const {
    if (!same_shape(b))
        throw invalid_input("matrix subtract: shape mismatch");
    ComplexMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = a_[i] - b.a_[i];
    return r;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &b) {
    if (!same_shape(b))
        throw invalid_input("matrix add: shape mismatch");
    for (size_t i = 0; i < a_.size(); ++i)
        a_[i] += b.a_[i];
    return *this;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &b) const {
    if (cols_ != b.rows_)
        throw invalid_input("matrix multiply: inner dimension mismatch");
    ComplexMatrix r(rows_, b.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const cplx aik = (*this)(i, k);
            if (aik == cplx(0.0))
                continue;
            for (int j = 0; j < b.cols_; ++j)
                r(i, j) += aik * b(k, j);
        }
    return r;
}

ComplexMatrix ComplexMatrix::operator*(cplx s) const {
    ComplexMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = a_[i] * s;
    return r;
}

ComplexMatrix ComplexMatrix::dagger() const {
    ComplexMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r(j, i) = std::conj((*this)(i, j));
    return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r(j, i) = (*this)(i, j);
    return r;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = std::conj(a_[i]);
    return r;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx &z : a_)
        m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx &z : a_)
        s += std::norm(z);
    return std::sqrt(s);
}

cplx ComplexMatrix::trace() const {
    if (rows_ != cols_)
        throw invalid_input("trace: matrix not square");
    cplx t = 0.0;
    for (int i = 0; i < rows_; ++i)
        t += (*this)(i, i);
    return t;
}

double ComplexMatrix::hermiticity_defect() const {
    if (rows_ != cols_)
        return HUGE_VAL;
    double m = 0.0;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx(0.0))
                continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

std::vector<cplx> vec(const ComplexMatrix &a) {
    std::vector<cplx> v(static_cast<size_t>(a.rows()) * a.cols());
    for (int j = 0; j < a.cols(); ++j)
        for (int i = 0; i < a.rows(); ++i)
            v[static_cast<size_t>(i) + static_cast<size_t>(a.rows()) * j] = a(i, j);
    return v;
}

ComplexMatrix unvec(const std::vector<cplx> &v, int rows, int cols) {
    if (v.size() != static_cast<size_t>(rows) * cols)
        throw invalid_input("unvec: size mismatch");
    ComplexMatrix a(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i)
            a(i, j) = v[static_cast<size_t>(i) + static_cast<size_t>(rows) * j];
    return a;
}

std::vector<cplx> matvec(const ComplexMatrix &a, const std::vector<cplx> &x) {
    if (x.size() != static_cast<size_t>(a.cols()))
        throw invalid_input("matvec: size mismatch");
    std::vector<cplx> y(a.rows(), cplx(0.0));
    for (int i = 0; i < a.rows(); ++i) {
        cplx s = 0.0;
        for (int j = 0; j < a.cols(); ++j)
            s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

double vec_norm(const std::vector<cplx> &v) {
    double s = 0.0;
    for (const cplx &z : v)
        s += std::norm(z);
    return std::sqrt(s);
}

double vec_max_abs(const std::vector<cplx> &v) {
    double m = 0.0;
    for (const cplx &z : v)
        m = std::max(m, std::abs(z));
    return m;
}

} // namespace spinpair
