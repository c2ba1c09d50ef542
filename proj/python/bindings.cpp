#include "planar/circuit.hpp"
#include "planar/compiler.hpp"
#include "planar/encodings.hpp"
#include "planar/reduction.hpp"
#include "planar/term.hpp"
#include "planar/typing.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace planar;

namespace {

Bit bit_from_int(int b)
{
    if (b != 0 && b != 1) {
        throw py::value_error("bit must be 0 or 1");
    }
    return to_bit(b == 1);
}

BitVector bits_from_list(const std::vector<int>& v)
{
    BitVector out;
    for (int b : v) {
        out.push_back(bit_from_int(b));
    }
    return out;
}

std::vector<int> bits_to_list(const BitVector& v)
{
    std::vector<int> out;
    for (Bit b : v) {
        out.push_back(to_bool(b) ? 1 : 0);
    }
    return out;
}

Connective connective_named(const std::string& name)
{
    static const std::pair<const char*, Connective> table[] = {
        {"cstt", Connective::cstt}, {"cstf", Connective::cstf}, {"not", Connective::not_},
        {"and", Connective::and_},  {"or", Connective::or_},    {"id", Connective::id},
        {"compose", Connective::compose}};
    for (const auto& [n, c] : table) {
        if (name == n) {
            return c;
        }
    }
    throw py::value_error("unknown connective: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Planar lambda-calculus toolkit";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<CircuitError>(m, "CircuitError", PyExc_ValueError);
    py::register_exception<DecodeError>(m, "DecodeError", PyExc_ValueError);
    py::register_exception<FuelExhausted>(m, "FuelExhausted", PyExc_RuntimeError);
    py::register_exception<NotLinearError>(m, "NotLinearError", PyExc_ValueError);

    py::class_<Term>(m, "Term")
        .def_property_readonly("size", &Term::size)
        .def("__str__", [](const Term& t) { return print_term(t); })
        .def("__repr__", [](const Term& t) { return "Term(" + print_term(t) + ")"; })
        .def("__eq__", [](const Term& a, const Term& b) { return alpha_eq(a, b); })
        .def("__call__", [](const Term& f, const Term& a) { return Term::app(f, a); }, py::arg("arg"));

    m.def(
        "parse_term",
        [](const std::string& text, bool constants) {
            return constants ? parse_term(text, constant_resolver()) : parse_term(text);
        },
        py::arg("text"), py::arg("constants") = true);
    m.def("print_term", &print_term);
    m.def("alpha_eq", &alpha_eq);
    m.def("term_size", &term_size);

    m.def("is_linear", &is_linear);
    m.def("check_planar", &check_planar);
    m.def(
        "infer_planar_context",
        [](const Term& t) -> std::optional<std::vector<std::string>> {
            const PlanarVerdict v = infer_planar_context(t);
            if (!v.ok()) {
                return std::nullopt;
            }
            return v.context().names();
        },
        "Ordered context as a list of names, or None when the term is not planar.");
    m.def("enumerate_planar", &enumerate_planar, py::arg("max_size"));

    m.def(
        "normalize",
        [](const Term& t, std::optional<std::size_t> fuel) {
            NormalizeOptions options;
            options.fuel = fuel;
            options.detail = TraceDetail::none;
            const NormalizationTrace trace = normalize(t, options);
            return py::make_tuple(trace.final, trace.step_count);
        },
        py::arg("term"), py::arg("fuel") = py::none(), "Returns (normal_form, step_count).");
    m.def(
        "beta_convertible",
        [](const Term& t, const Term& u, bool eta) {
            return beta_convertible(t, u, eta ? Conversion::beta_eta : Conversion::beta);
        },
        py::arg("t"), py::arg("u"), py::arg("eta") = true);

    m.def("mk_bool", [](int b) { return mk_bool(bit_from_int(b)); });
    m.def("connective", [](const std::string& name) { return mk_connective(connective_named(name)); });
    m.def("encode_bitvec", [](const std::vector<int>& v) { return encode_bitvec(bits_from_list(v)); });
    m.def("decode_bool", [](const Term& t) { return to_bool(decode_bool(t)) ? 1 : 0; });
    m.def("decode_bitvec", [](const Term& t, std::size_t n) { return bits_to_list(decode_bitvec(t, n)); });

    py::class_<Circuit>(m, "Circuit")
        .def_property_readonly("size", &Circuit::size)
        .def("__str__", [](const Circuit& c) { return print_circuit(c); })
        .def("__eq__", [](const Circuit& a, const Circuit& b) { return a == b; });
    m.def("parse_circuit", &parse_circuit);
    m.def("random_circuit", &random_circuit, py::arg("gate_count"), py::arg("seed"));
    m.def("eval_circuit", [](const Circuit& c) { return bits_to_list(eval_circuit(c).wires); },
          "Values of all wires in definition order.");
    m.def("compile_circuit", &compile_circuit);
    m.def(
        "run_compiled",
        [](const Circuit& c) {
            const RunSummary r = run_compiled(c);
            return py::make_tuple(to_bool(r.bit) ? 1 : 0, r.step_count, r.initial_size);
        },
        "Returns (bit, step_count, compiled_size).");
    m.def("emit_equiv_instance", [](const Circuit& c) {
        auto [t, u] = emit_equiv_instance(c);
        return py::make_tuple(t, u);
    });
}
