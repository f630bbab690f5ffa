#ifndef FLOORQ_CHECKED_HPP
#define FLOORQ_CHECKED_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

// Checked 64-bit arithmetic. All overflow surfaces as std::overflow_error;
// nothing in this library is allowed to wrap silently.

namespace floorq {

using std::int64_t;

[[noreturn]] inline void raise_overflow(const char* op, int64_t a, int64_t b)
{
    throw std::overflow_error(std::string("int64 overflow in ") + op + "(" +
                              std::to_string(a) + ", " + std::to_string(b) + ")");
}

inline int64_t checked_add(int64_t a, int64_t b)
{
    int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        raise_overflow("add", a, b);
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b)
{
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        raise_overflow("sub", a, b);
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b)
{
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        raise_overflow("mul", a, b);
    return r;
}

// Positive integer value type: zero and negatives are rejected at
// construction, so a PosInt in hand is always a valid poset element.
class PosInt {
public:
    explicit PosInt(int64_t v) : v_(v)
    {
        if (v < 1)
            throw std::domain_error("PosInt requires value >= 1, got " + std::to_string(v));
    }

    int64_t value() const noexcept { return v_; }
    operator int64_t() const noexcept { return v_; }

    friend bool operator==(PosInt a, PosInt b) noexcept { return a.v_ == b.v_; }
    friend bool operator!=(PosInt a, PosInt b) noexcept { return a.v_ != b.v_; }
    friend bool operator<(PosInt a, PosInt b) noexcept { return a.v_ < b.v_; }
    friend bool operator<=(PosInt a, PosInt b) noexcept { return a.v_ <= b.v_; }
    friend bool operator>(PosInt a, PosInt b) noexcept { return a.v_ > b.v_; }
    friend bool operator>=(PosInt a, PosInt b) noexcept { return a.v_ >= b.v_; }

private:
    int64_t v_;
};

// Argument validation shared by the public entry points. d > n is legal for
// the relation predicates (it just means "not related"); nonpositive is not.
inline void require_positive(int64_t v, const char* name)
{
    if (v < 1)
        throw std::domain_error(std::string(name) + " must be a positive integer, got " +
                                std::to_string(v));
}

// floor(sqrt(n)) by integer Newton iteration with endpoint correction.
// No floating point: exactness at n = s^2 and n = s(s+1) boundaries matters.
inline int64_t isqrt(int64_t n)
{
    if (n < 0)
        throw std::domain_error("isqrt of negative value");
    if (n < 2)
        return n;
    int shift = (66 - __builtin_clzll(static_cast<unsigned long long>(n))) / 2;
    int64_t x = int64_t{1} << shift; // >= sqrt(n)
    int64_t y = (x + n / x) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    while (x > n / x)
        --x;
    while (x + 1 <= n / (x + 1))
        ++x;
    return x;
}

} // namespace floorq

#endif
