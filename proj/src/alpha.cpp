#include "floorq/alpha.hpp"

#include <cmath>
#include <stdexcept>

namespace floorq {

double zeta_real(double s)
{
    if (s <= 1.0)
        throw std::domain_error("zeta_real requires s > 1");
    // zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
    //           + s*N^(-s-1)/12 - s(s+1)(s+2)*N^(-s-3)/720 + ...
    // with N = 4096 the dropped term is ~ N^(-s-5), far below double epsilon.
    const int N = 4096;
    double sum = 0.0;
    for (int n = N - 1; n >= 1; --n) // ascending magnitude for accuracy
        sum += std::pow(static_cast<double>(n), -s);
    const double Nd = static_cast<double>(N);
    sum += std::pow(Nd, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(Nd, -s);
    sum += s * std::pow(Nd, -s - 1.0) / 12.0;
    sum -= s * (s + 1.0) * (s + 2.0) * std::pow(Nd, -s - 3.0) / 720.0;
    return sum;
}

double alpha0()
{
    static const double value = [] {
        double lo = 1.5, hi = 2.0; // zeta(1.5) ~ 2.612 > 2 > zeta(2) ~ 1.645
        while (hi - lo > 1e-13) {
            double mid = 0.5 * (lo + hi);
            if (zeta_real(mid) > 2.0)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    }();
    return value;
}

} // namespace floorq
