#ifndef FLOORQ_VERIFY_HPP
#define FLOORQ_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "floorq/mobius.hpp"

// The structural-property suite behind `floorq verify`: every named check
// runs one invariant of the library at bounds set by the budget and reports
// a counterexample on failure.

namespace floorq {

struct CheckResult {
    std::string name;
    bool passed = false;
    int64_t cases = 0;          // number of instances checked
    std::string counterexample; // empty when passed
};

struct VerifyBudget {
    bool full = false; // quick caps exhaustive scans at n <= 2000

    int64_t cap(int64_t quick_bound, int64_t full_bound) const
    {
        return full ? full_bound : quick_bound;
    }
};

// Runs every check; progress lines go to *progress when non-null.
std::vector<CheckResult> run_all_checks(const VerifyBudget& budget,
                                        std::ostream* progress = nullptr);

// Structural identities of a built table, re-derived by per-n divisor
// enumeration (independent of the push sieve that built it): prefix-sum
// consistency, seeds, the differenced recursion, and the vanishing classes.
// Used by verify and by corruption tests.
CheckResult verify_mobius_table(const MobiusTable& table);

} // namespace floorq

#endif
