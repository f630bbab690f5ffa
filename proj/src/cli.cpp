#include "floorq/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "floorq/alpha.hpp"
#include "floorq/interval.hpp"
#include "floorq/io.hpp"
#include "floorq/mobius.hpp"
#include "floorq/relation.hpp"
#include "floorq/semigroup.hpp"
#include "floorq/verify.hpp"

namespace floorq {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

void write_payload(const std::string& payload, const std::string& out_path, std::ostream& out)
{
    if (out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(out_path, std::ios::binary); // LF endings on all platforms
    if (!f)
        throw std::runtime_error("cannot open output file: " + out_path);
    f << payload;
    if (!f)
        throw std::runtime_error("write failed: " + out_path);
}

std::string relation_symbol(bool related)
{
    return related ? " ⪯₁ " : " ⋠₁ "; // d <=_1 n / d not<=_1 n
}

int cmd_rel(int64_t d, int64_t n, std::ostream& out)
{
    const PosInt dp(d), np(n);
    const bool rel = is_floor_quotient(dp, np);
    const auto w = cutting_set(d, n);
    out << d << relation_symbol(rel) << n;
    if (rel) {
        out << "; K = (" << w.k_lo << ", " << w.k_hi << "], |K| = " << w.cardinality();
        out << "; k* = " << *canonical_cutting_length(d, n) << "\n";
    } else {
        out << "; K empty\n";
    }
    static const char* names[] = {"cutting", "covering", "intersection", "strong-remainder",
                                  "tipping-point", "reciprocal-duality"};
    for (int i = 0; i < 6; ++i)
        out << "  " << names[i] << ": "
            << (characterization(d, n, static_cast<Characterization>(i)) ? "true" : "false")
            << "\n";
    return kExitOk;
}

int cmd_semigroup(int64_t d, bool with_gaps, std::ostream& out)
{
    const auto info = semigroup_info(PosInt(d).value());
    out << "M(" << d << "): frobenius " << info.frobenius << ", gaps " << info.gap_count
        << ", generators <";
    for (std::size_t i = 0; i < info.generators.size(); ++i)
        out << (i ? ", " : "") << info.generators[i];
    out << ">\n";
    if (with_gaps) {
        out << "gap set:";
        for (int64_t g : semigroup_gaps(d))
            out << " " << g;
        out << "\n";
    }
    return kExitOk;
}

int cmd_interval(int64_t d, int64_t n, const std::string& format, const std::string& out_path,
                 std::ostream& out)
{
    const auto view = interval(PosInt(d).value(), PosInt(n).value());
    if (format == "csv") {
        write_payload(interval_to_csv(view), out_path, out);
    } else if (format == "dot") {
        write_payload(to_dot(view), out_path, out);
    } else {
        std::ostringstream os;
        os << "Q[" << d << "," << n << "] = {";
        for (std::size_t i = 0; i < view.elements.size(); ++i)
            os << (i ? ", " : "") << view.elements[i];
        os << "}, size " << view.size() << "\n";
        write_payload(os.str(), out_path, out);
    }
    return kExitOk;
}

int cmd_hasse(int64_t n, const std::string& out_path, std::ostream& out)
{
    if (n > 1000000)
        throw CLI::ValidationError("hasse", "n exceeds the 1e6 display guard");
    const auto view = initial_interval(PosInt(n).value());
    write_payload(to_dot(view), out_path, out);
    return kExitOk;
}

int cmd_mobius_table(int64_t limit, const std::string& out_path, std::ostream& out)
{
    const auto table = mu1_initial_table(PosInt(limit).value());
    if (out_path.empty()) {
        write_mobius_table_csv(table, out);
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f)
            throw std::runtime_error("cannot open output file: " + out_path);
        write_mobius_table_csv(table, f);
        if (!f)
            throw std::runtime_error("write failed: " + out_path);
    }
    const auto g = growth_scan(table, 0.6);
    const auto run = longest_sign_run(table);
    out << "max |mu1| = " << g.max_abs << " at n = " << g.argmax_n
        << "; longest constant-sign run " << run.first << " (ending at " << run.second << ")\n";
    if (g.max_ratio > 1.0)
        out << "largest |mu1(n)|/n^0.6 = " << g.max_ratio << " at n = " << g.max_ratio_n << "\n";
    return kExitOk;
}

int cmd_scan_width(int64_t w, int64_t a_max, const std::string& out_path, std::ostream& out)
{
    write_payload(scan_width_csv(PosInt(w).value(), PosInt(a_max).value()), out_path, out);
    return kExitOk;
}

int cmd_verify(const std::string& budget_name, std::ostream& out)
{
    VerifyBudget budget;
    budget.full = budget_name == "full";
    const auto results = run_all_checks(budget, &out);
    int64_t failed = 0;
    for (const auto& r : results)
        failed += r.passed ? 0 : 1;
    out << results.size() - failed << "/" << results.size() << " checks passed (budget "
        << budget_name << ")\n";
    return failed == 0 ? kExitOk : kExitVerifyFailure;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"floorq: the floor quotient partial order on positive integers"};
    app.require_subcommand(1);

    int64_t d = 0, n = 0, limit = 0, w = 0, a_max = 0;
    std::string out_path, format = "plain", budget = "quick";
    bool with_gaps = false;

    auto* rel = app.add_subcommand("rel", "relation verdict for a pair (d, n)");
    rel->add_option("d", d)->required();
    rel->add_option("n", n)->required();

    auto* sg = app.add_subcommand("semigroup", "floor-multiple semigroup M(d)");
    sg->add_option("d", d)->required();
    sg->add_flag("--gaps", with_gaps, "also list the gap set");

    auto* iv = app.add_subcommand("interval", "elements of Q[d, n]");
    iv->add_option("d", d)->required();
    iv->add_option("n", n)->required();
    iv->add_option("--format", format)->check(CLI::IsMember({"plain", "csv", "dot"}));
    iv->add_option("--out", out_path);

    auto* hs = app.add_subcommand("hasse", "DOT Hasse diagram of Q[1, n]");
    hs->add_option("n", n)->required();
    hs->add_option("--out", out_path);

    auto* mt = app.add_subcommand("mobius-table", "CSV table of mu1(1, n) and delta mu1(n)");
    mt->add_option("limit", limit)->required()->check(CLI::Range(int64_t{1}, int64_t{100000000}));
    mt->add_option("--out", out_path);

    auto* sw = app.add_subcommand("scan-width", "sizes |Q[a, a*w]| for a = 1..a_max");
    sw->add_option("w", w)->required();
    sw->add_option("a_max", a_max)->required();
    sw->add_option("--out", out_path);

    auto* vf = app.add_subcommand("verify", "run the structural property suite");
    vf->add_option("--budget", budget)->check(CLI::IsMember({"quick", "full"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (rel->parsed())
            return cmd_rel(d, n, out);
        if (sg->parsed())
            return cmd_semigroup(d, with_gaps, out);
        if (iv->parsed())
            return cmd_interval(d, n, format, out_path, out);
        if (hs->parsed())
            return cmd_hasse(n, out_path, out);
        if (mt->parsed())
            return cmd_mobius_table(limit, out_path, out);
        if (sw->parsed())
            return cmd_scan_width(w, a_max, out_path, out);
        if (vf->parsed())
            return cmd_verify(budget, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

} // namespace floorq
