// Dense complex eigen/SVD/solve routines for small matrices (n <= 16).
//
// hermitian_eig: cyclic Jacobi with complex 2x2 rotations.  Each rotation is
// the exact eigenvector matrix of the pivot block, computed in a cancellation
// free form (cf. LAPACK zlaev2).  Quadratic convergence, ~10 sweeps at n=16.
//
// general_eig: Householder reduction to upper Hessenberg form, then explicit
// single-shift QR with Wilkinson shifts and an occasional exceptional shift
// to break symmetry cycles.  Complex arithmetic throughout, so no double
// shift is needed.
//
// singular_right: one-sided Jacobi on the columns.  A^H A is never formed;
// small singular values keep full relative accuracy, which the nullspace
// threshold relies on.

#include "core/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace spinpair {

namespace {

constexpr double kEps = 2.220446049250313e-16;

// Unitary J with J^H [[a, g], [conj(g), b]] J = diag(lam_hi, lam_lo),
// a, b real.  Columns of J are the unit eigenvectors (e^{i phi} cos, sin)
// and (-e^{i phi} sin, cos) with phi = arg(g).
struct Rot2 {
    double c = 1.0, s = 0.0; // cos, sin, both >= 0
    cplx phase = 1.0;        // e^{i phi}
    double lam_hi = 0.0, lam_lo = 0.0;
};

Rot2 herm2x2(double a, double b, cplx g) {
    Rot2 r;
    const double ag = std::abs(g);
    const double m = 0.5 * (a + b), d = 0.5 * (a - b);
    const double rad = std::hypot(d, ag);
    r.lam_hi = m + rad;
    r.lam_lo = m - rad;
    if (ag == 0.0)
        return r; // already diagonal
    r.phase = g / ag;
    if (d >= 0.0) {
        // eigenvector (g, ag^2/(rad+d)); avoid the cancellation in rad-d
        const double y = ag / (rad + d);
        const double n = std::sqrt(1.0 + y * y);
        r.c = 1.0 / n;
        r.s = y / n;
    } else {
        const double t = rad - d; // = rad + |d|, safe
        const double n = std::sqrt(ag * ag + t * t);
        r.c = ag / n;
        r.s = t / n;
    }
    return r;
}

double offdiag_max(const ComplexMatrix &a) {
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j)
                m = std::max(m, std::abs(a(i, j)));
    return m;
}

} // namespace

HermitianEig hermitian_eig(const ComplexMatrix &a) {
    if (a.rows() != a.cols())
        throw invalid_input("hermitian_eig: matrix not square");
    const int n = a.rows();
    const double scale = std::max(1.0, a.max_abs());
    if (a.hermiticity_defect() > 1e-12 * scale)
        throw invalid_input("hermitian_eig: matrix not Hermitian within tolerance");

    ComplexMatrix w = a;
    ComplexMatrix v = ComplexMatrix::identity(n);

    const int max_sweeps = 100;
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (offdiag_max(w) <= 1e2 * kEps * scale)
            break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx g = w(p, q);
                if (std::abs(g) <= kEps * scale * 1e-3)
                    continue;
                Rot2 r = herm2x2(w(p, p).real(), w(q, q).real(), g);
                const cplx jc = r.phase * r.c, js = r.phase * r.s;
                // columns: (col_p, col_q) <- (col_p, col_q) * J
                for (int k = 0; k < n; ++k) {
                    const cplx wp = w(k, p), wq = w(k, q);
                    w(k, p) = wp * jc + wq * r.s;
                    w(k, q) = -wp * js + wq * r.c;
                }
                // rows: apply J^H from the left
                for (int k = 0; k < n; ++k) {
                    const cplx wp = w(p, k), wq = w(q, k);
                    w(p, k) = std::conj(jc) * wp + r.s * wq;
                    w(q, k) = -std::conj(js) * wp + r.c * wq;
                }
                w(p, p) = r.lam_hi;
                w(q, q) = r.lam_lo;
                w(p, q) = w(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    const cplx vp = v(k, p), vq = v(k, q);
                    v(k, p) = vp * jc + vq * r.s;
                    v(k, q) = -vp * js + vq * r.c;
                }
            }
        }
    }
    if (sweep == max_sweeps)
        throw numerical_failure("hermitian_eig: Jacobi sweeps did not converge");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return w(i, i).real() < w(j, j).real(); });

    HermitianEig out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        out.values[j] = w(order[j], order[j]).real();
        for (int i = 0; i < n; ++i)
            out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

namespace {

// In-place Householder reduction to upper Hessenberg form.
void to_hessenberg(ComplexMatrix &h) {
    const int n = h.rows();
    for (int k = 0; k + 2 < n; ++k) {
        double xnorm = 0.0;
        for (int i = k + 1; i < n; ++i)
            xnorm = std::hypot(xnorm, std::abs(h(i, k)));
        if (xnorm == 0.0)
            continue;
        cplx x0 = h(k + 1, k);
        cplx alpha = (x0 == cplx(0.0)) ? cplx(-xnorm) : -(x0 / std::abs(x0)) * xnorm;
        std::vector<cplx> u(n, 0.0);
        u[k + 1] = x0 - alpha;
        for (int i = k + 2; i < n; ++i)
            u[i] = h(i, k);
        double un = 0.0;
        for (int i = k + 1; i < n; ++i)
            un += std::norm(u[i]);
        if (un == 0.0)
            continue;
        const double inv = 2.0 / un;
        // H <- P H with P = I - 2 u u^H / |u|^2
        for (int j = 0; j < n; ++j) {
            cplx s = 0.0;
            for (int i = k + 1; i < n; ++i)
                s += std::conj(u[i]) * h(i, j);
            s *= inv;
            for (int i = k + 1; i < n; ++i)
                h(i, j) -= u[i] * s;
        }
        // H <- H P
        for (int i = 0; i < n; ++i) {
            cplx s = 0.0;
            for (int j = k + 1; j < n; ++j)
                s += h(i, j) * u[j];
            s *= inv;
            for (int j = k + 1; j < n; ++j)
                h(i, j) -= s * std::conj(u[j]);
        }
        h(k + 1, k) = alpha;
        for (int i = k + 2; i < n; ++i)
            h(i, k) = 0.0;
    }
}

struct Givens {
    double c;
    cplx s;
};

// G (f, g)^T = (r, 0)^T with G = [[c, s], [-conj(s), c]], c real.
Givens make_givens(cplx f, cplx g) {
    Givens gv{1.0, 0.0};
    const double af = std::abs(f), ag = std::abs(g);
    if (ag == 0.0)
        return gv;
    if (af == 0.0) {
        gv.c = 0.0;
        gv.s = std::conj(g) / ag;
        return gv;
    }
    const double d = std::hypot(af, ag);
    gv.c = af / d;
    gv.s = (f / af) * std::conj(g) / d;
    return gv;
}

} // namespace

std::vector<cplx> general_eig(const ComplexMatrix &a) {
    if (a.rows() != a.cols())
        throw invalid_input("general_eig: matrix not square");
    const int n = a.rows();
    std::vector<cplx> eig;
    eig.reserve(n);
    if (n == 0)
        return eig;

    ComplexMatrix h = a;
    to_hessenberg(h);
    const double scale = std::max(1.0, h.max_abs());

    int hi = n - 1;
    int iter_at_hi = 0;
    const int max_total = 100 * n;
    int total = 0;

    while (hi >= 0) {
        if (hi == 0) {
            eig.push_back(h(0, 0));
            --hi;
            continue;
        }
        // find the active window: walk up from hi until a negligible
        // subdiagonal splits the matrix
        int lo = 0;
        for (int l = hi; l >= 1; --l) {
            const double sub = std::abs(h(l, l - 1));
            if (sub <= kEps * (std::abs(h(l - 1, l - 1)) + std::abs(h(l, l))) +
                           kEps * kEps * scale) {
                h(l, l - 1) = 0.0;
                lo = l;
                break;
            }
        }
        if (lo == hi) {
            eig.push_back(h(hi, hi));
            --hi;
            iter_at_hi = 0;
            continue;
        }

        if (++total > max_total)
            throw numerical_failure("general_eig: QR iteration did not converge");

        // Wilkinson shift from the trailing 2x2 of the active window
        cplx shift;
        {
            const cplx aa = h(hi - 1, hi - 1), bb = h(hi - 1, hi);
            const cplx cc = h(hi, hi - 1), dd = h(hi, hi);
            const cplx tr2 = 0.5 * (aa + dd);
            const cplx disc = std::sqrt(tr2 * tr2 - (aa * dd - bb * cc));
            const cplx m1 = tr2 + disc, m2 = tr2 - disc;
            shift = (std::abs(m1 - dd) < std::abs(m2 - dd)) ? m1 : m2;
        }
        if (++iter_at_hi % 10 == 0) // cycle breaker
            shift = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));

        // explicit shifted QR on the window [lo, hi]
        for (int i = lo; i <= hi; ++i)
            h(i, i) -= shift;
        std::vector<Givens> gs(hi - lo);
        for (int k = lo; k < hi; ++k) {
            Givens g = make_givens(h(k, k), h(k + 1, k));
            gs[k - lo] = g;
            for (int j = k; j <= hi; ++j) {
                const cplx t1 = h(k, j), t2 = h(k + 1, j);
                h(k, j) = g.c * t1 + g.s * t2;
                h(k + 1, j) = -std::conj(g.s) * t1 + g.c * t2;
            }
            h(k + 1, k) = 0.0;
        }
        for (int k = lo; k < hi; ++k) {
            const Givens &g = gs[k - lo];
            for (int i = lo; i <= std::min(hi, k + 1); ++i) {
                const cplx t1 = h(i, k), t2 = h(i, k + 1);
                h(i, k) = g.c * t1 + std::conj(g.s) * t2;
                h(i, k + 1) = -g.s * t1 + g.c * t2;
            }
        }
        for (int i = lo; i <= hi; ++i)
            h(i, i) += shift;
    }

    std::sort(eig.begin(), eig.end(), [](const cplx &x, const cplx &y) {
        if (x.real() != y.real())
            return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return eig;
}

Svd singular_right(const ComplexMatrix &a) {
    const int m = a.rows(), n = a.cols();
    ComplexMatrix b = a;
    ComplexMatrix v = ComplexMatrix::identity(n);

    auto colnorm2 = [&](int j) {
        double s = 0.0;
        for (int i = 0; i < m; ++i)
            s += std::norm(b(i, j));
        return s;
    };

    const int max_sweeps = 100;
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        double max_col = 0.0;
        for (int j = 0; j < n; ++j)
            max_col = std::max(max_col, std::sqrt(colnorm2(j)));
        const double noise = 8.0 * kEps * max_col;

        bool rotated = false;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double ap = colnorm2(p), aq = colnorm2(q);
                cplx g = 0.0;
                for (int i = 0; i < m; ++i)
                    g += std::conj(b(i, p)) * b(i, q);
                const double sp = std::sqrt(ap), sq = std::sqrt(aq);
                if (sp <= noise && sq <= noise)
                    continue; // both columns are roundoff; angles irrelevant
                if (std::abs(g) <= 1e-15 * sp * sq)
                    continue;
                Rot2 r = herm2x2(ap, aq, g);
                const cplx jc = r.phase * r.c, js = r.phase * r.s;
                for (int i = 0; i < m; ++i) {
                    const cplx tp = b(i, p), tq = b(i, q);
                    b(i, p) = tp * jc + tq * r.s;
                    b(i, q) = -tp * js + tq * r.c;
                }
                for (int i = 0; i < n; ++i) {
                    const cplx tp = v(i, p), tq = v(i, q);
                    v(i, p) = tp * jc + tq * r.s;
                    v(i, q) = -tp * js + tq * r.c;
                }
                rotated = true;
            }
        }
        if (!rotated)
            break;
    }
    if (sweep == max_sweeps)
        throw numerical_failure("singular_right: Jacobi sweeps did not converge");

    std::vector<double> sv(n);
    for (int j = 0; j < n; ++j)
        sv[j] = std::sqrt(colnorm2(j));
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return sv[i] > sv[j]; });

    Svd out;
    out.singular_values.resize(n);
    out.v = ComplexMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        out.singular_values[j] = sv[order[j]];
        for (int i = 0; i < n; ++i)
            out.v(i, j) = v(i, order[j]);
    }
    return out;
}

ComplexMatrix nullspace(const ComplexMatrix &a, double tol) {
    if (tol <= 0.0)
        throw invalid_input("nullspace: tolerance must be positive");
    Svd s = singular_right(a);
    const int n = a.cols();
    const double smax = s.singular_values.empty() ? 0.0 : s.singular_values[0];
    int first = n;
    for (int j = 0; j < n; ++j) {
        if (s.singular_values[j] <= tol * smax) {
            first = j;
            break;
        }
    }
    if (smax == 0.0)
        first = 0; // zero matrix: everything is kernel
    ComplexMatrix basis(n, n - first);
    for (int j = first; j < n; ++j)
        for (int i = 0; i < n; ++i)
            basis(i, j - first) = s.v(i, j);
    return basis;
}

std::vector<cplx> solve(const ComplexMatrix &a, const std::vector<cplx> &b) {
    if (a.rows() != a.cols())
        throw invalid_input("solve: matrix not square");
    const int n = a.rows();
    if (b.size() != static_cast<size_t>(n))
        throw invalid_input("solve: right-hand side size mismatch");

    const double amax = a.max_abs();
    ComplexMatrix w = a;
    std::vector<cplx> y = b;

    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(w(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double m = std::abs(w(i, k));
            if (m > best) {
                best = m;
                piv = i;
            }
        }
        if (best <= 1e-13 * std::max(1.0, amax))
            throw invalid_input("solve: matrix singular within pivot tolerance");
        if (piv != k) {
            for (int j = k; j < n; ++j)
                std::swap(w(k, j), w(piv, j));
            std::swap(y[k], y[piv]);
        }
        for (int i = k + 1; i < n; ++i) {
            const cplx f = w(i, k) / w(k, k);
            if (f == cplx(0.0))
                continue;
            for (int j = k + 1; j < n; ++j)
                w(i, j) -= f * w(k, j);
            w(i, k) = 0.0;
            y[i] -= f * y[k];
        }
    }
    std::vector<cplx> x(n);
    for (int i = n - 1; i >= 0; --i) {
        cplx s = y[i];
        for (int j = i + 1; j < n; ++j)
            s -= w(i, j) * x[j];
        x[i] = s / w(i, i);
    }

    // the elimination above can lose accuracy silently; make it loud instead
    double xmax = 0.0;
    for (const cplx &z : x)
        xmax = std::max(xmax, std::abs(z));
    const std::vector<cplx> r = matvec(a, x);
    double rmax = 0.0;
    for (int i = 0; i < n; ++i)
        rmax = std::max(rmax, std::abs(r[i] - b[i]));
    if (rmax > 1e-10 * std::max(1.0, amax * xmax))
        throw numerical_failure("solve: residual check failed");
    return x;
}

} // namespace spinpair
