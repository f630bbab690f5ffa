#ifndef FLOORQ_IO_HPP
#define FLOORQ_IO_HPP

#include <iosfwd>
#include <string>

#include "floorq/interval.hpp"
#include "floorq/mobius.hpp"

// Text formats consumed by the CLI and by external plotting tools. CSV is
// unquoted (all fields numeric) with LF line endings; DOT output is one edge
// statement per covering pair.

namespace floorq {

// digraph with one node statement per element (additive order) and one edge
// statement per covering pair.
std::string to_dot(const IntervalView& view);

// header "element", one element per row.
std::string interval_to_csv(const IntervalView& view);

// header "n,mu1,delta_mu1", one row per n = 1..limit. The streaming form
// avoids materializing the multi-GB string a full-size table would produce.
void write_mobius_table_csv(const MobiusTable& table, std::ostream& out);
std::string mobius_table_to_csv(const MobiusTable& table);

// Inverse of mobius_table_to_csv; throws std::invalid_argument on malformed
// input. Round-trips bit-exactly.
MobiusTable mobius_table_from_csv(std::istream& in);

// header "a,size", rows (a, |Q[a, a*w]|) for a = 1..a_max.
std::string scan_width_csv(int64_t w, int64_t a_max);

} // namespace floorq

#endif
