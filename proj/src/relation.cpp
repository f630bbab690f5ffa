#include "floorq/relation.hpp"

namespace floorq {

bool is_floor_quotient(int64_t d, int64_t n)
{
    require_positive(d, "d");
    require_positive(n, "n");
    return is_floor_quotient_unchecked(d, n);
}

bool characterization(int64_t d, int64_t n, Characterization which)
{
    require_positive(d, "d");
    require_positive(n, "n");
    // Settle both additive extremes up front: d > n relates to nothing
    // (floor(n/k) <= n < d), d = n to itself via k = 1. This also keeps
    // d + 1 and n + 1 below in range at the top of the int64 domain.
    if (d > n)
        return false;
    if (d == n)
        return true;

    using i128 = __int128;
    const int64_t k_max = n / d;
    switch (which) {
    case Characterization::Cutting:
        for (int64_t k = 1; k <= k_max; ++k)
            if (n / k == d)
                return true;
        return false;

    case Characterization::Covering:
        // k*[d, d+1) covers [n, n+1)  <=>  kd <= n and n+1 <= k(d+1)
        for (int64_t k = 1; k <= k_max; ++k)
            if (i128{k} * d <= n && i128{n} + 1 <= i128{k} * (i128{d} + 1))
                return true;
        return false;

    case Characterization::Intersection:
        // [kd, kd+k) meets [n, n+1): half-open intervals on integer endpoints
        for (int64_t k = 1; k <= k_max; ++k) {
            const i128 a_lo = i128{k} * d, a_hi = a_lo + k;
            const i128 b_lo = n, b_hi = i128{n} + 1;
            const i128 lo = a_lo > b_lo ? a_lo : b_lo;
            const i128 hi = a_hi < b_hi ? a_hi : b_hi;
            if (lo < hi)
                return true;
        }
        return false;

    case Characterization::StrongRemainder: {
        const int64_t k = n / d;
        const int64_t r = n - d * k;
        return k >= 1 && r < (d < k ? d : k);
    }

    case Characterization::TippingPoint:
        return n / d > n / (d + 1);

    case Characterization::ReciprocalDuality: {
        const int64_t q = n / d;
        return q >= 1 && n / q == d;
    }
    }
    return false; // unreachable
}

QuotientWitness cutting_set(int64_t d, int64_t n)
{
    require_positive(d, "d");
    require_positive(n, "n");
    QuotientWitness w;
    w.d = d;
    w.n = n;
    if (d > n) {
        w.k_lo = w.k_hi = 0; // empty (0, 0]
        return w;
    }
    if (d == n) {
        w.k_lo = 0; // floor(n/(d+1)) = 0, computed directly so d+1 stays in range
        w.k_hi = 1;
        return w;
    }
    w.k_lo = n / (d + 1);
    w.k_hi = n / d;
    return w;
}

int64_t floor_reciprocal(int64_t n, int64_t k)
{
    require_positive(n, "n");
    require_positive(k, "k");
    if (k > n)
        throw std::domain_error("floor_reciprocal: k = " + std::to_string(k) + " exceeds n = " +
                                std::to_string(n) + " (quotient would be 0)");
    return n / k;
}

std::optional<int64_t> canonical_cutting_length(int64_t d, int64_t n)
{
    require_positive(d, "d");
    require_positive(n, "n");
    if (!is_floor_quotient_unchecked(d, n))
        return std::nullopt;
    return n / d;
}

bool dilated_floor_commute_check(int64_t n, int64_t k, int64_t l)
{
    require_positive(n, "n");
    require_positive(k, "k");
    require_positive(l, "l");
    const int64_t kl = checked_mul(k, l);
    const int64_t a = (n / l) / k;
    const int64_t b = (n / k) / l;
    return a == b && b == n / kl;
}

} // namespace floorq
