#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lnde/boolean_anf.hpp"
#include "lnde/classical_lnde.hpp"
#include "lnde/errors.hpp"
#include "lnde/lnde_bus.hpp"
#include "lnde/quantum_adder.hpp"
#include "lnde/statevector_oracle.hpp"
#include "lnde/transcript.hpp"

namespace py = pybind11;
using namespace lnde;

namespace {

Bits to_bits(const std::vector<int> &v) {
    Bits out;
    out.reserve(v.size());
    for (int b : v) {
        if (b != 0 && b != 1) {
            throw InvalidInput("expected a list of 0/1 values");
        }
        out.push_back(static_cast<Bit>(b));
    }
    return out;
}

std::vector<int> to_list(const Bits &b) {
    return {b.begin(), b.end()};
}

py::dict transcript_dict(const AdderTranscript &t) {
    py::dict d;
    d["N"] = t.senders;
    d["m"] = t.channels;
    d["seed"] = t.seed;
    d["inputs"] = to_list(t.inputs);
    std::vector<std::vector<int>> sent;
    for (const auto &s : t.sent) {
        sent.push_back(to_list(s));
    }
    d["sent"] = sent;
    d["received"] = to_list(t.received);
    d["olga_results"] = to_list(t.olga_results);
    d["outputs"] = to_list(t.outputs);
    d["S"] = t.output_value();
    d["ghz_consumed"] = t.ghz_consumed;
    d["text"] = to_text(t);
    return d;
}

}  // namespace

PYBIND11_MODULE(_lnde, m) {
    m.doc() = "Locally nonlinear distributed evaluation: ANF tools, classical search, GHZ adder";

    auto base = py::register_exception<Error>(m, "LndeError", PyExc_RuntimeError);
    py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
    py::register_exception<ProtocolViolation>(m, "ProtocolViolation", base.ptr());
    py::register_exception<ResourceLimit>(m, "ResourceLimit", base.ptr());
    py::register_exception<InternalConsistency>(m, "InternalConsistency", base.ptr());

    m.def("moebius_transform", [](const std::vector<int> &table) {
        return to_list(moebius_transform(BitTable::from_bits(to_bits(table))).to_bits());
    }, py::arg("table"));
    m.def("anf_to_truth_table", [](const std::vector<int> &anf) {
        return to_list(anf_to_truth_table(BitTable::from_bits(to_bits(anf))).to_bits());
    }, py::arg("anf"));
    m.def("algebraic_degree", [](const std::vector<int> &table) {
        return algebraic_degree(BooleanFunction(BitTable::from_bits(to_bits(table)))).value;
    }, py::arg("truth_table"));
    m.def("is_linear", [](const std::vector<int> &table) {
        return is_linear(BooleanFunction(BitTable::from_bits(to_bits(table))));
    }, py::arg("truth_table"));
    m.def("sum_digit_function", [](unsigned n, unsigned q) {
        return to_list(sum_digit_function(n, q).truth_table().to_bits());
    }, py::arg("n"), py::arg("q"));
    m.def("format_anf", [](const std::vector<int> &anf) {
        return format_anf(BitTable::from_bits(to_bits(anf)));
    }, py::arg("anf"));

    m.def("ghz_budget", &ghz_budget, py::arg("n"));
    m.def("run_quantum_adder", [](const std::vector<int> &x, std::uint64_t seed) {
        return transcript_dict(run_quantum_adder(to_bits(x), seed));
    }, py::arg("inputs"), py::arg("seed") = 2006);
    m.def("run_adder_statevector", [](const std::vector<int> &x, std::uint64_t seed) {
        return transcript_dict(run_adder_statevector(to_bits(x), seed));
    }, py::arg("inputs"), py::arg("seed") = 2006);

    m.def("search_realizable", [](const std::vector<int> &target, std::size_t channels, unsigned log2_budget) {
        SearchOptions o;
        o.budget.log2_max_triples = log2_budget;
        SearchResult r = search_realizable(BooleanFunction(BitTable::from_bits(to_bits(target))), channels, o);
        py::dict d;
        d["feasible"] = r.feasible;
        d["strategies_examined"] = r.strategies_examined;
        if (r.witness) {
            d["taps"] = r.witness->taps;
            d["offsets"] = to_list(r.witness->offsets);
            d["receiver"] = to_list(r.witness->receivers.front().truth_table().to_bits());
        }
        return d;
    }, py::arg("target"), py::arg("m"), py::arg("log2_budget") = 26);
    m.def("verify_lemma_bound", [](std::size_t n, std::size_t channels) {
        LemmaReport r = verify_lemma_bound(n, channels);
        py::dict d;
        d["max_degree"] = r.max_degree;
        d["strategies_examined"] = r.strategies_examined;
        d["holds"] = r.holds();
        d["bound_attained"] = r.bound_attained();
        return d;
    }, py::arg("n"), py::arg("m"));

    m.def("bus_xor", [](std::size_t senders, std::size_t channels, const std::vector<std::tuple<std::size_t, std::size_t, int>> &uploads) {
        ChannelBus bus(senders, channels);
        for (const auto &[s, c, b] : uploads) {
            if (b != 0 && b != 1) {
                throw InvalidInput("uploaded value must be a bit");
            }
            bus.upload(s, c, static_cast<Bit>(b));
        }
        return to_list(bus.deliver());
    }, py::arg("n"), py::arg("m"), py::arg("uploads"));

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "0.1.0";
#endif
}
