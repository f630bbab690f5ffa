#ifndef FLOORQ_ALPHA_HPP
#define FLOORQ_ALPHA_HPP

// alpha0: the unique s > 1 with zeta(s) = 2, the exponent governing the chain
// and Mobius envelopes. Computed at runtime by bisection, not hard-coded.

namespace floorq {

// Riemann zeta for real s > 1, truncated sum plus Euler-Maclaurin tail;
// absolute error well below 1e-14 on [1.5, 2].
double zeta_real(double s);

// Root of zeta(s) = 2 on [1.5, 2], bisected to 1e-13; cached after first call.
double alpha0();

} // namespace floorq

#endif
