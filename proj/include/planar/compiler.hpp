#pragma once

// Circuit -> closed planar term. Gate k becomes a net n -> n+1 vector
// transformation that appends the gate's value, so wire k lives at slot k of
// the vector throughout. The compiled term is
//
//   last_n (op_m (... (op_1 (\k. k))))
//
// with every gate composite expanded into its primitive ops.

#include "planar/circuit.hpp"
#include "planar/encodings.hpp"
#include "planar/term.hpp"

#include <string>
#include <utility>
#include <vector>

namespace planar {

struct PlannedGate {
    std::size_t wire;    // 1-based
    std::string label;   // e.g. "and_{1,2,3}"
    std::vector<VectorOp> ops;  // application order
};

struct OpPipeline {
    std::vector<PlannedGate> gates;
    Circuit source_circuit;

    // All gate ops followed by Last(n).
    std::vector<VectorOp> ops() const;
    // Gate labels followed by "last_n".
    std::vector<std::string> labels() const;
};

OpPipeline plan_pipeline(const Circuit& c);

// The vector term after the first `gate_count` gates, applied to the empty
// vector (no Last).
Term compile_prefix(const OpPipeline& pipeline, std::size_t gate_count);

Term compile_pipeline(const OpPipeline& pipeline);
Term compile_circuit(const Circuit& c);

struct RunSummary {
    Bit bit;
    std::size_t step_count;
    std::size_t initial_size;
    std::size_t peak_size;
};

// Normalizes the compiled term and decodes it. Throws DecodeError if the
// normal form is not a boolean.
RunSummary run_compiled(const Circuit& c);

// (compile_circuit(c), true): convertible exactly when the circuit outputs 1.
std::pair<Term, Term> emit_equiv_instance(const Circuit& c);

}  // namespace planar
