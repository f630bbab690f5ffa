#include "floorq/semigroup.hpp"

namespace floorq {

bool is_floor_multiple(int64_t d, int64_t n)
{
    require_positive(d, "d");
    require_positive(n, "n");
    if (d > n / d) // d^2 > n without overflow
    {
        // n < d^2: write n = dk + j with 0 <= j,k < d; member iff j < k.
        const int64_t k = n / d;
        const int64_t j = n - d * k;
        return j < k;
    }
    return true; // n >= d^2
}

SemigroupInfo semigroup_info(int64_t d)
{
    require_positive(d, "d");
    SemigroupInfo info;
    info.d = d;
    // frobenius and generators involve d^2-scale products; checked, since d
    // itself is only bounded by the int64 range
    info.frobenius = d == 1 ? 0 : checked_sub(checked_mul(d, d), 1);
    info.gap_count = (d - 1) * (d + 2) / 2; // (d-1)(d+2) even; fits if d^2 does
    info.generators.reserve(static_cast<std::size_t>(d));
    for (int64_t i = 1; i <= d; ++i)
        info.generators.push_back(checked_sub(checked_mul(i, d + 1), 1));
    return info;
}

std::vector<int64_t> semigroup_gaps(int64_t d)
{
    require_positive(d, "d");
    if (d > (int64_t{1} << 16))
        throw std::length_error("semigroup_gaps: d = " + std::to_string(d) +
                                " exceeds 2^16 (gap list has ~d^2/2 entries)");
    std::vector<int64_t> gaps;
    const int64_t d2 = d * d;
    for (int64_t n = 1; n < d2; ++n)
        if (!is_floor_multiple(d, n))
            gaps.push_back(n);
    return gaps;
}

} // namespace floorq
