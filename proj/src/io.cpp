#include "floorq/io.hpp"

#include <istream>
#include <sstream>

namespace floorq {

std::string to_dot(const IntervalView& view)
{
    std::ostringstream os;
    os << "digraph floor_quotients {\n";
    os << "  rankdir=BT;\n";
    for (int64_t e : view.elements)
        os << "  " << e << ";\n";
    for (const auto& [a, b] : covering_edges(view))
        os << "  " << a << " -> " << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string interval_to_csv(const IntervalView& view)
{
    std::ostringstream os;
    os << "element\n";
    for (int64_t e : view.elements)
        os << e << "\n";
    return os.str();
}

void write_mobius_table_csv(const MobiusTable& table, std::ostream& out)
{
    out << "n,mu1,delta_mu1\n";
    for (int64_t n = 1; n <= table.limit; ++n)
        out << n << "," << table.mu1[static_cast<std::size_t>(n)] << ","
            << table.delta[static_cast<std::size_t>(n)] << "\n";
}

std::string mobius_table_to_csv(const MobiusTable& table)
{
    std::ostringstream os;
    write_mobius_table_csv(table, os);
    return os.str();
}

MobiusTable mobius_table_from_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line != "n,mu1,delta_mu1")
        throw std::invalid_argument("mobius_table_from_csv: missing 'n,mu1,delta_mu1' header");

    MobiusTable t;
    t.mu1.push_back(0); // 1-based
    t.delta.push_back(0);
    int64_t expected = 1;
    while (std::getline(in, line)) {
        if (line.empty())
            break;
        std::istringstream row(line);
        int64_t n = 0, m = 0, d = 0;
        char c1 = 0, c2 = 0;
        if (!(row >> n >> c1 >> m >> c2 >> d) || c1 != ',' || c2 != ',')
            throw std::invalid_argument("mobius_table_from_csv: malformed row '" + line + "'");
        if (n != expected)
            throw std::invalid_argument("mobius_table_from_csv: expected n = " +
                                        std::to_string(expected) + ", got " + std::to_string(n));
        t.mu1.push_back(m);
        t.delta.push_back(d);
        ++expected;
    }
    t.limit = expected - 1;
    if (t.limit < 1)
        throw std::invalid_argument("mobius_table_from_csv: no data rows");
    return t;
}

std::string scan_width_csv(int64_t w, int64_t a_max)
{
    require_positive(w, "w");
    require_positive(a_max, "a_max");
    checked_mul(a_max, w); // overflow guard up front
    std::ostringstream os;
    os << "a,size\n";
    for (int64_t a = 1; a <= a_max; ++a)
        os << a << "," << interval(a, a * w).size() << "\n";
    return os.str();
}

} // namespace floorq
