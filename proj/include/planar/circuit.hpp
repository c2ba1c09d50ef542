#pragma once

// Topologically ordered boolean circuits: a list of wire definitions, each a
// constant or a not/and/or of wires defined earlier. The circuit's value is
// the value of its last wire.
//
//   x1 := 1; x2 := 0; x3 := x1 and x2;   -- "=" also accepted, as are ¬ ∧ ∨

#include "planar/encodings.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace planar {

struct ConstGate {
    Bit value;
    bool operator==(const ConstGate&) const = default;
};
struct NotGate {
    std::string src;
    bool operator==(const NotGate&) const = default;
};
struct AndGate {
    std::string lhs;
    std::string rhs;
    bool operator==(const AndGate&) const = default;
};
struct OrGate {
    std::string lhs;
    std::string rhs;
    bool operator==(const OrGate&) const = default;
};

using GateExpr = std::variant<ConstGate, NotGate, AndGate, OrGate>;

struct Gate {
    std::string target;
    GateExpr rhs;
    bool operator==(const Gate&) const = default;
};

struct Circuit {
    std::vector<Gate> gates;

    std::size_t size() const { return gates.size(); }
    // 1-based definition index of a wire; nullopt if undefined.
    std::optional<std::size_t> index_of(std::string_view wire) const;

    bool operator==(const Circuit&) const = default;
};

std::vector<std::string> sources(const GateExpr& rhs);

class CircuitError : public std::runtime_error {
public:
    CircuitError(const std::string& message, std::size_t line, std::size_t column);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

enum class ViolationKind { empty_circuit, duplicate_target, use_before_definition, unknown_wire };

struct Violation {
    ViolationKind kind;
    std::size_t gate;  // 1-based
    std::string target;
    std::string source;  // offending source wire, empty for duplicates
};

std::string format_violation(const Violation& v);

std::optional<Violation> validate_topological(const Circuit& c);

// Parses and validates; throws CircuitError on syntax errors or violations.
Circuit parse_circuit(std::string_view text);

// Canonical form: one "target := rhs;" per line.
std::string print_circuit(const Circuit& c);

struct Evaluation {
    BitVector wires;
    Bit final;
};

// Precondition: the circuit validates.
Evaluation eval_circuit(const Circuit& c);

// Deterministic in seed. The first max(1, gate_count / 4) wires are
// constants, later ones pick an operator and earlier sources uniformly.
Circuit random_circuit(std::size_t gate_count, std::uint64_t seed);

}  // namespace planar
