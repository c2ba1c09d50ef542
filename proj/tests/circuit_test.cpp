#include "planar/circuit.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <functional>
#include <map>

using namespace planar;

namespace {

const char* const worked_example =
    "x1 := 1; x2 := 0; x3 := 1; x4 = x1 and x2; x5 = not x1; x6 = x5 and x3; x7 = x4 or x6;";

BitVector bits(const char* s)
{
    BitVector v;
    for (; *s != 0; ++s) {
        v.push_back(*s == '1' ? Bit::one : Bit::zero);
    }
    return v;
}

// Every circuit with exactly `gates` gates over wires x1..x_gates.
void for_each_circuit(std::size_t gates, const std::function<void(const Circuit&)>& visit)
{
    Circuit c;
    std::function<void(std::size_t)> extend = [&](std::size_t k) {
        if (k > gates) {
            visit(c);
            return;
        }
        const std::string target = "x" + std::to_string(k);
        auto wire = [](std::size_t m) { return "x" + std::to_string(m); };
        auto push = [&](GateExpr e) {
            c.gates.push_back({target, std::move(e)});
            extend(k + 1);
            c.gates.pop_back();
        };
        push(ConstGate{Bit::zero});
        push(ConstGate{Bit::one});
        for (std::size_t a = 1; a < k; ++a) {
            push(NotGate{wire(a)});
            for (std::size_t b = 1; b < k; ++b) {
                push(AndGate{wire(a), wire(b)});
                push(OrGate{wire(a), wire(b)});
            }
        }
    };
    extend(1);
}

}  // namespace

TEST_CASE("worked example parses and evaluates")
{
    const Circuit c = parse_circuit(worked_example);
    REQUIRE(c.size() == 7);
    CHECK(c.gates[0] == Gate{"x1", ConstGate{Bit::one}});
    CHECK(c.gates[3] == Gate{"x4", AndGate{"x1", "x2"}});
    CHECK(c.gates[4] == Gate{"x5", NotGate{"x1"}});
    CHECK(c.gates[6] == Gate{"x7", OrGate{"x4", "x6"}});
    CHECK(c.index_of("x6") == 6);
    CHECK_FALSE(c.index_of("x9").has_value());

    const Evaluation e = eval_circuit(c);
    CHECK(e.wires == bits("1010000"));
    CHECK(e.final == Bit::zero);
    CHECK(oracle::truth_table_value(c) == Bit::zero);
}

TEST_CASE("alternative syntax")
{
    const Circuit a = parse_circuit("a := 1;\nb := NOT a; -- comment\nc = a AND b;\nd := c Or a;");
    const Circuit u = parse_circuit("a := 1; b := \xC2\xAC a; c := a \xE2\x88\xA7 b; d := c \xE2\x88\xA8 a;");
    CHECK(a == u);
    CHECK(eval_circuit(a).final == Bit::one);
}

TEST_CASE("topological order violations")
{
    Circuit swapped = parse_circuit(worked_example);
    std::swap(swapped.gates[3], swapped.gates[4]);
    CHECK_FALSE(validate_topological(swapped).has_value());
    CHECK(eval_circuit(swapped).final == Bit::zero);

    Circuit bad = parse_circuit(worked_example);
    bad.gates[6].rhs = OrGate{"x4", "x8"};
    bad.gates.push_back({"x8", ConstGate{Bit::one}});
    const auto v = validate_topological(bad);
    REQUIRE(v.has_value());
    CHECK(v->kind == ViolationKind::use_before_definition);
    CHECK(v->gate == 7);
    CHECK(v->source == "x8");

    Circuit unknown = parse_circuit(worked_example);
    unknown.gates[5].rhs = AndGate{"x5", "y"};
    const auto w = validate_topological(unknown);
    REQUIRE(w.has_value());
    CHECK(w->kind == ViolationKind::unknown_wire);
    CHECK(w->gate == 6);
    CHECK(format_violation(*w) == "gate 6 (x6): unknown wire y");

    Circuit dup = parse_circuit(worked_example);
    dup.gates[2].target = "x1";
    const auto d = validate_topological(dup);
    REQUIRE(d.has_value());
    CHECK(d->kind == ViolationKind::duplicate_target);

    CHECK(validate_topological(Circuit{})->kind == ViolationKind::empty_circuit);

    CHECK_FALSE(validate_topological(parse_circuit("a := 1;")).has_value());

    // A gate reading its own wire uses it before its definition.
    Circuit self;
    self.gates.push_back({"a", NotGate{"a"}});
    CHECK(validate_topological(self)->kind == ViolationKind::use_before_definition);
}

TEST_CASE("parse errors")
{
    CHECK_THROWS_AS(parse_circuit(""), CircuitError);
    CHECK_THROWS_AS(parse_circuit("x1 := 2;"), CircuitError);
    CHECK_THROWS_AS(parse_circuit("x1 := 1"), CircuitError);
    CHECK_THROWS_AS(parse_circuit("x1 := x2 xor x3;"), CircuitError);
    CHECK_THROWS_AS(parse_circuit("x1 := 1; x2 := x1 and;"), CircuitError);
    try {
        parse_circuit("x1 := 1;\nx2 := x1 and x3;\nx3 := 0;");
        FAIL("expected a validation error");
    } catch (const CircuitError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 1);
    }
    try {
        parse_circuit("x1 := 1;\nx2 := x1 $ x1;");
        FAIL("expected a syntax error");
    } catch (const CircuitError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 10);
    }
}

TEST_CASE("print/parse round trip")
{
    const Circuit c = parse_circuit(worked_example);
    const std::string printed = print_circuit(c);
    CHECK(printed.substr(0, 9) == "x1 := 1;\n");
    CHECK(parse_circuit(printed) == c);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Circuit r = random_circuit(1 + seed % 15, seed);
        CHECK(parse_circuit(print_circuit(r)) == r);
    }
}

TEST_CASE("evaluator matches demand-driven oracle on every circuit with up to 4 gates")
{
    std::size_t count = 0;
    for (std::size_t g = 1; g <= 4; ++g) {
        for_each_circuit(g, [&](const Circuit& c) {
            REQUIRE_FALSE(validate_topological(c).has_value());
            const Evaluation e = eval_circuit(c);
            CHECK(e.final == oracle::truth_table_value(c));
            CHECK(e.wires.size() == c.size());
            std::map<std::size_t, bool> memo;
            for (std::size_t k = 1; k <= c.size(); ++k) {
                CHECK(e.wires[k - 1] == oracle::eval_wire(c, k, memo));
            }
            ++count;
        });
    }
    CHECK(count > 1000);
}

TEST_CASE("random circuits are deterministic and valid")
{
    CHECK(random_circuit(12, 7) == random_circuit(12, 7));
    CHECK_FALSE(random_circuit(12, 7) == random_circuit(12, 8));
    CHECK_THROWS_AS(random_circuit(0, 1), std::invalid_argument);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = 1 + seed % 15;
        const Circuit c = random_circuit(n, seed);
        CHECK(c.size() == n);
        CHECK_FALSE(validate_topological(c).has_value());
        CHECK(std::holds_alternative<ConstGate>(c.gates[0].rhs));
        CHECK(eval_circuit(c).final == oracle::truth_table_value(c));
    }
}
