#include "planar/compiler.hpp"

#include "planar/reduction.hpp"

#include <stdexcept>

namespace planar {

std::vector<VectorOp> OpPipeline::ops() const
{
    std::vector<VectorOp> out;
    for (const auto& g : gates) {
        out.insert(out.end(), g.ops.begin(), g.ops.end());
    }
    out.emplace_back(Last{gates.size()});
    return out;
}

std::vector<std::string> OpPipeline::labels() const
{
    std::vector<std::string> out;
    for (const auto& g : gates) {
        out.push_back(g.label);
    }
    out.push_back("last_" + std::to_string(gates.size()));
    return out;
}

namespace {

std::string subscript(std::size_t a, std::size_t b)
{
    return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

std::string subscript(std::size_t a, std::size_t b, std::size_t c)
{
    return "{" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "}";
}

}  // namespace

OpPipeline plan_pipeline(const Circuit& c)
{
    if (auto v = validate_topological(c)) {
        throw std::invalid_argument(format_violation(*v));
    }
    OpPipeline p;
    p.source_circuit = c;
    for (std::size_t k = 1; k <= c.gates.size(); ++k) {
        const std::size_t n = k - 1;
        auto idx = [&](const std::string& wire) { return *c.index_of(wire); };
        PlannedGate planned{k, {}, {}};
        std::visit(
            [&](const auto& e) {
                using T = std::decay_t<decltype(e)>;
                if constexpr (std::is_same_v<T, ConstGate>) {
                    planned.label = (e.value == Bit::one ? "true_" : "false_") + std::to_string(n);
                    planned.ops = {AppendConst{e.value, n}};
                } else if constexpr (std::is_same_v<T, NotGate>) {
                    planned.label = "not_" + subscript(idx(e.src), n);
                    planned.ops = {NotAppend{idx(e.src), n}};
                } else if constexpr (std::is_same_v<T, AndGate>) {
                    planned.label = "and_" + subscript(idx(e.lhs), idx(e.rhs), n);
                    planned.ops = gate_and_ops(idx(e.lhs), idx(e.rhs), n);
                } else {
                    planned.label = "or_" + subscript(idx(e.lhs), idx(e.rhs), n);
                    planned.ops = gate_or_ops(idx(e.lhs), idx(e.rhs), n);
                }
            },
            c.gates[k - 1].rhs);
        p.gates.push_back(std::move(planned));
    }
    return p;
}

Term compile_prefix(const OpPipeline& pipeline, std::size_t gate_count)
{
    if (gate_count > pipeline.gates.size()) {
        throw std::out_of_range("prefix longer than the pipeline");
    }
    Term acc = encode_bitvec({});
    for (std::size_t g = 0; g < gate_count; ++g) {
        for (const VectorOp& op : pipeline.gates[g].ops) {
            acc = Term::app(mk_vector_op(op), std::move(acc));
        }
    }
    return acc;
}

Term compile_pipeline(const OpPipeline& pipeline)
{
    return Term::app(mk_vector_op(Last{pipeline.gates.size()}), compile_prefix(pipeline, pipeline.gates.size()));
}

Term compile_circuit(const Circuit& c)
{
    return compile_pipeline(plan_pipeline(c));
}

RunSummary run_compiled(const Circuit& c)
{
    const Term compiled = compile_circuit(c);
    NormalizeOptions options;
    options.detail = TraceDetail::none;
    const NormalizationTrace trace = normalize(compiled, options);
    const Bit bit = decode_bool(trace.final);
    return {bit, trace.step_count, trace.initial_size, trace.peak_size};
}

std::pair<Term, Term> emit_equiv_instance(const Circuit& c)
{
    return {compile_circuit(c), mk_bool(Bit::one)};
}

}  // namespace planar
