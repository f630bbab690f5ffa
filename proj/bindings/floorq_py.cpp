#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "floorq/alpha.hpp"
#include "floorq/interval.hpp"
#include "floorq/io.hpp"
#include "floorq/mobius.hpp"
#include "floorq/relation.hpp"
#include "floorq/semigroup.hpp"
#include "floorq/verify.hpp"

namespace py = pybind11;
using namespace floorq;

PYBIND11_MODULE(_floorq, m)
{
    m.doc() = "Floor quotient partial order: relation tests, intervals, numerical "
              "semigroups of floor multiples, and poset Mobius functions.";

    py::enum_<Characterization>(m, "Characterization")
        .value("Cutting", Characterization::Cutting)
        .value("Covering", Characterization::Covering)
        .value("Intersection", Characterization::Intersection)
        .value("StrongRemainder", Characterization::StrongRemainder)
        .value("TippingPoint", Characterization::TippingPoint)
        .value("ReciprocalDuality", Characterization::ReciprocalDuality);

    py::class_<QuotientWitness>(m, "QuotientWitness")
        .def_readonly("d", &QuotientWitness::d)
        .def_readonly("n", &QuotientWitness::n)
        .def_readonly("k_lo", &QuotientWitness::k_lo)
        .def_readonly("k_hi", &QuotientWitness::k_hi)
        .def("related", &QuotientWitness::related)
        .def("cardinality", &QuotientWitness::cardinality)
        .def("contains", &QuotientWitness::contains)
        .def("__repr__", [](const QuotientWitness& w) {
            return "QuotientWitness(d=" + std::to_string(w.d) + ", n=" + std::to_string(w.n) +
                   ", k_range=(" + std::to_string(w.k_lo) + ", " + std::to_string(w.k_hi) + "])";
        });

    py::class_<SemigroupInfo>(m, "SemigroupInfo")
        .def_readonly("d", &SemigroupInfo::d)
        .def_readonly("frobenius", &SemigroupInfo::frobenius)
        .def_readonly("gap_count", &SemigroupInfo::gap_count)
        .def_readonly("generators", &SemigroupInfo::generators);

    py::class_<IntervalView>(m, "IntervalView")
        .def_readonly("lo", &IntervalView::lo)
        .def_readonly("hi", &IntervalView::hi)
        .def_readonly("elements", &IntervalView::elements)
        .def("__len__", &IntervalView::size)
        .def("__contains__", &IntervalView::contains)
        .def("position",
             [](const IntervalView& v, int64_t e) { return v.index.at(e); });

    py::class_<InitialSplit>(m, "InitialSplit")
        .def_readonly("n", &InitialSplit::n)
        .def_readonly("s", &InitialSplit::s)
        .def_readonly("q_minus", &InitialSplit::q_minus)
        .def_readonly("q_plus", &InitialSplit::q_plus)
        .def_readonly("overlap", &InitialSplit::overlap);

    py::class_<IncidenceStats>(m, "IncidenceStats")
        .def_readonly("n", &IncidenceStats::n)
        .def_readonly("z_total", &IncidenceStats::z_total)
        .def_readonly("z_minus", &IncidenceStats::z_minus)
        .def_readonly("z_plus", &IncidenceStats::z_plus)
        .def_readonly("z_cross_minus_plus", &IncidenceStats::z_cross_minus_plus)
        .def_readonly("z_cross_plus_minus", &IncidenceStats::z_cross_plus_minus)
        .def_readonly("overlap", &IncidenceStats::overlap);

    py::class_<ChainCount>(m, "ChainCount")
        .def_readonly("d", &ChainCount::d)
        .def_readonly("n", &ChainCount::n)
        .def_readonly("total", &ChainCount::total)
        .def_readonly("by_length", &ChainCount::by_length);

    py::class_<SetDelta>(m, "SetDelta")
        .def_readonly("n", &SetDelta::n)
        .def_readonly("removed", &SetDelta::removed)
        .def_readonly("added", &SetDelta::added);

    py::class_<Ratio>(m, "Ratio")
        .def_readonly("num", &Ratio::num)
        .def_readonly("den", &Ratio::den)
        .def("__repr__", [](const Ratio& r) {
            return std::to_string(r.num) + "/" + std::to_string(r.den);
        });

    py::class_<ClassicalMobiusTable>(m, "ClassicalMobiusTable")
        .def_readonly("limit", &ClassicalMobiusTable::limit)
        .def("mu_at", &ClassicalMobiusTable::mu_at);

    py::class_<MobiusTable>(m, "MobiusTable")
        .def_readonly("limit", &MobiusTable::limit)
        .def("mu1_at", &MobiusTable::mu1_at)
        .def("delta_at", &MobiusTable::delta_at)
        .def_property_readonly("mu1",
                               [](const MobiusTable& t) {
                                   return std::vector<int64_t>(t.mu1.begin() + 1, t.mu1.end());
                               })
        .def_property_readonly("delta", [](const MobiusTable& t) {
            return std::vector<int64_t>(t.delta.begin() + 1, t.delta.end());
        });

    py::class_<SignChangeSequence>(m, "SignChangeSequence")
        .def_readonly("entries", &SignChangeSequence::entries);

    py::class_<GrowthSummary>(m, "GrowthSummary")
        .def_readonly("argmax_n", &GrowthSummary::argmax_n)
        .def_readonly("max_abs", &GrowthSummary::max_abs)
        .def_readonly("beta", &GrowthSummary::beta)
        .def_readonly("max_ratio", &GrowthSummary::max_ratio)
        .def_readonly("max_ratio_n", &GrowthSummary::max_ratio_n);

    py::class_<Mu1Context>(m, "Mu1Context")
        .def(py::init<bool>(), py::arg("use_sqrt_shortcut") = true)
        .def("mu1", &Mu1Context::mu1, py::arg("d"), py::arg("n"))
        .def("cache_size", &Mu1Context::cache_size);

    m.def("is_floor_quotient", py::overload_cast<int64_t, int64_t>(&is_floor_quotient),
          py::arg("d"), py::arg("n"));
    m.def("characterization", &characterization, py::arg("d"), py::arg("n"), py::arg("variant"));
    m.def("cutting_set", &cutting_set, py::arg("d"), py::arg("n"));
    m.def("floor_reciprocal", &floor_reciprocal, py::arg("n"), py::arg("k"));
    m.def("canonical_cutting_length", &canonical_cutting_length, py::arg("d"), py::arg("n"));
    m.def("dilated_floor_commute_check", &dilated_floor_commute_check, py::arg("n"), py::arg("k"),
          py::arg("l"));

    m.def("is_floor_multiple", &is_floor_multiple, py::arg("d"), py::arg("n"));
    m.def("semigroup_info", &semigroup_info, py::arg("d"));
    m.def("semigroup_gaps", &semigroup_gaps, py::arg("d"));

    m.def("initial_interval", &initial_interval, py::arg("n"));
    m.def("interval", &interval, py::arg("d"), py::arg("n"));
    m.def("split", &split, py::arg("n"));
    m.def("gap", &gap, py::arg("d"), py::arg("n"));
    m.def("multiplicity", &multiplicity, py::arg("d"), py::arg("n"));
    m.def("covering_edges", &covering_edges, py::arg("view"));
    m.def("incidence_stats", &incidence_stats, py::arg("n"));
    m.def("count_chains", &count_chains, py::arg("d"), py::arg("n"));
    m.def("consecutive_delta", &consecutive_delta, py::arg("n"));
    m.def("width", &width, py::arg("d"), py::arg("n"));

    m.def("classical_mobius", &classical_mobius, py::arg("limit"));
    m.def("mobius_value", &mobius_value, py::arg("n"));
    m.def("mu1_initial_table", &mu1_initial_table, py::arg("limit"));
    m.def("mu1", py::overload_cast<int64_t, int64_t>(&mu1), py::arg("d"), py::arg("n"));
    m.def("hall_chain_sum", &hall_chain_sum, py::arg("d"), py::arg("n"));
    m.def("sign_change_sequence",
          py::overload_cast<const MobiusTable&>(&sign_change_sequence), py::arg("table"));
    m.def("sign_change_sequence", py::overload_cast<int64_t>(&sign_change_sequence),
          py::arg("limit"));
    m.def("growth_scan", &growth_scan, py::arg("table"), py::arg("beta"));
    m.def("longest_sign_run", &longest_sign_run, py::arg("table"));

    m.def("alpha0", &alpha0);
    m.def("zeta_real", &zeta_real, py::arg("s"));

    m.def("to_dot", &to_dot, py::arg("view"));
    m.def("interval_to_csv", &interval_to_csv, py::arg("view"));
    m.def("mobius_table_to_csv", &mobius_table_to_csv, py::arg("table"));
    m.def("scan_width_csv", &scan_width_csv, py::arg("w"), py::arg("a_max"));
}
