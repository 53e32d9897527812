#ifndef SPINPAIR_BESSEL_HPP
#define SPINPAIR_BESSEL_HPP

namespace spinpair {

// Bessel function of the first kind, order zero.  Absolute accuracy is
// better than 1e-12 on the whole real line (even function of x).
double bessel_j0(double x);

} // namespace spinpair

#endif
