#include "planar/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <unordered_map>

namespace planar {

std::optional<std::size_t> Circuit::index_of(std::string_view wire) const
{
    for (std::size_t k = 0; k < gates.size(); ++k) {
        if (gates[k].target == wire) {
            return k + 1;
        }
    }
    return std::nullopt;
}

std::vector<std::string> sources(const GateExpr& rhs)
{
    return std::visit(
        [](const auto& g) -> std::vector<std::string> {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, ConstGate>) {
                return {};
            } else if constexpr (std::is_same_v<T, NotGate>) {
                return {g.src};
            } else {
                return {g.lhs, g.rhs};
            }
        },
        rhs);
}

CircuitError::CircuitError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column)
{
}

std::string format_violation(const Violation& v)
{
    const std::string where = "gate " + std::to_string(v.gate) + " (" + v.target + ")";
    switch (v.kind) {
    case ViolationKind::empty_circuit:
        return "circuit has no gates";
    case ViolationKind::duplicate_target:
        return where + ": duplicate definition of " + v.target;
    case ViolationKind::use_before_definition:
        return where + ": uses " + v.source + " before its definition";
    case ViolationKind::unknown_wire:
        return where + ": unknown wire " + v.source;
    }
    return where;
}

std::optional<Violation> validate_topological(const Circuit& c)
{
    if (c.gates.empty()) {
        return Violation{ViolationKind::empty_circuit, 0, {}, {}};
    }
    std::unordered_map<std::string, std::size_t> first_definition;
    for (std::size_t k = 0; k < c.gates.size(); ++k) {
        first_definition.try_emplace(c.gates[k].target, k);
    }
    std::unordered_map<std::string, std::size_t> defined;
    for (std::size_t k = 0; k < c.gates.size(); ++k) {
        const Gate& g = c.gates[k];
        for (const auto& src : sources(g.rhs)) {
            if (defined.count(src) != 0) {
                continue;
            }
            const auto kind = first_definition.count(src) != 0 ? ViolationKind::use_before_definition
                                                               : ViolationKind::unknown_wire;
            return Violation{kind, k + 1, g.target, src};
        }
        if (!defined.try_emplace(g.target, k).second) {
            return Violation{ViolationKind::duplicate_target, k + 1, g.target, {}};
        }
    }
    return std::nullopt;
}

namespace {

enum class CTok { ident, number, define, semicolon, op_not, op_and, op_or, end };

struct CToken {
    CTok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

bool word_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

class CircuitLexer {
public:
    explicit CircuitLexer(std::string_view src) : src_(src) {}

    CToken next()
    {
        skip_trivia();
        const std::size_t line = line_;
        const std::size_t col = col_;
        if (pos_ >= src_.size()) {
            return {CTok::end, {}, line, col};
        }
        const char c = src_[pos_];
        auto starts = [&](std::string_view s) { return src_.substr(pos_, s.size()) == s; };
        if (starts(":=")) {
            advance(2);
            return {CTok::define, ":=", line, col};
        }
        if (c == '=') {
            advance(1);
            return {CTok::define, "=", line, col};
        }
        if (c == ';') {
            advance(1);
            return {CTok::semicolon, ";", line, col};
        }
        if (starts("\xC2\xAC")) {
            advance(2);
            return {CTok::op_not, "not", line, col};
        }
        if (starts("\xE2\x88\xA7")) {
            advance(3);
            return {CTok::op_and, "and", line, col};
        }
        if (starts("\xE2\x88\xA8")) {
            advance(3);
            return {CTok::op_or, "or", line, col};
        }
        if (c >= '0' && c <= '9') {
            const std::size_t start = pos_;
            while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') {
                advance(1);
            }
            return {CTok::number, std::string(src_.substr(start, pos_ - start)), line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < src_.size() && word_char(src_[pos_])) {
                advance(1);
            }
            std::string text(src_.substr(start, pos_ - start));
            const std::string key = lower(text);
            if (key == "not") return {CTok::op_not, text, line, col};
            if (key == "and") return {CTok::op_and, text, line, col};
            if (key == "or") return {CTok::op_or, text, line, col};
            return {CTok::ident, std::move(text), line, col};
        }
        throw CircuitError(std::string("unexpected character '") + c + "'", line, col);
    }

private:
    void advance(std::size_t n)
    {
        for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
            if (src_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    void skip_trivia()
    {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
                advance(1);
            } else if (src_.substr(pos_, 2) == "--") {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    advance(1);
                }
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

std::string describe_token(const CToken& t)
{
    return t.kind == CTok::end ? "end of input" : "'" + t.text + "'";
}

}  // namespace

Circuit parse_circuit(std::string_view text)
{
    CircuitLexer lex(text);
    CToken tok = lex.next();
    auto expect = [&](CTok kind, const char* what) {
        if (tok.kind != kind) {
            throw CircuitError(std::string("expected ") + what + ", found " + describe_token(tok), tok.line,
                               tok.column);
        }
        CToken t = tok;
        tok = lex.next();
        return t;
    };

    Circuit c;
    std::vector<std::pair<std::size_t, std::size_t>> positions;
    while (tok.kind != CTok::end) {
        const CToken target = expect(CTok::ident, "wire name");
        expect(CTok::define, "':=' or '='");
        GateExpr rhs;
        if (tok.kind == CTok::number) {
            if (tok.text != "0" && tok.text != "1") {
                throw CircuitError("constant must be 0 or 1", tok.line, tok.column);
            }
            rhs = ConstGate{tok.text == "1" ? Bit::one : Bit::zero};
            tok = lex.next();
        } else if (tok.kind == CTok::op_not) {
            tok = lex.next();
            rhs = NotGate{expect(CTok::ident, "wire name").text};
        } else {
            std::string lhs = expect(CTok::ident, "constant, 'not' or wire name").text;
            if (tok.kind == CTok::op_and) {
                tok = lex.next();
                rhs = AndGate{std::move(lhs), expect(CTok::ident, "wire name").text};
            } else if (tok.kind == CTok::op_or) {
                tok = lex.next();
                rhs = OrGate{std::move(lhs), expect(CTok::ident, "wire name").text};
            } else {
                throw CircuitError("expected 'and' or 'or', found " + describe_token(tok), tok.line, tok.column);
            }
        }
        expect(CTok::semicolon, "';'");
        c.gates.push_back({target.text, std::move(rhs)});
        positions.emplace_back(target.line, target.column);
    }

    if (auto v = validate_topological(c)) {
        const auto [line, col] = v->gate == 0 ? std::pair<std::size_t, std::size_t>{tok.line, tok.column}
                                              : positions[v->gate - 1];
        throw CircuitError(format_violation(*v), line, col);
    }
    return c;
}

std::string print_circuit(const Circuit& c)
{
    std::string out;
    for (const Gate& g : c.gates) {
        out += g.target + " := ";
        std::visit(
            [&](const auto& e) {
                using T = std::decay_t<decltype(e)>;
                if constexpr (std::is_same_v<T, ConstGate>) {
                    out += to_char(e.value);
                } else if constexpr (std::is_same_v<T, NotGate>) {
                    out += "not " + e.src;
                } else if constexpr (std::is_same_v<T, AndGate>) {
                    out += e.lhs + " and " + e.rhs;
                } else {
                    out += e.lhs + " or " + e.rhs;
                }
            },
            g.rhs);
        out += ";\n";
    }
    return out;
}

Evaluation eval_circuit(const Circuit& c)
{
    std::unordered_map<std::string, Bit> value;
    BitVector wires;
    wires.reserve(c.gates.size());
    for (const Gate& g : c.gates) {
        const Bit b = std::visit(
            [&](const auto& e) -> Bit {
                using T = std::decay_t<decltype(e)>;
                if constexpr (std::is_same_v<T, ConstGate>) {
                    return e.value;
                } else if constexpr (std::is_same_v<T, NotGate>) {
                    return to_bit(!to_bool(value.at(e.src)));
                } else if constexpr (std::is_same_v<T, AndGate>) {
                    return to_bit(to_bool(value.at(e.lhs)) && to_bool(value.at(e.rhs)));
                } else {
                    return to_bit(to_bool(value.at(e.lhs)) || to_bool(value.at(e.rhs)));
                }
            },
            g.rhs);
        value[g.target] = b;
        wires.push_back(b);
    }
    const Bit final = wires.empty() ? Bit::zero : wires.back();
    return {std::move(wires), final};
}

Circuit random_circuit(std::size_t gate_count, std::uint64_t seed)
{
    if (gate_count == 0) {
        throw std::invalid_argument("gate_count must be positive");
    }
    // mt19937_64 output is fixed by the standard; distributions are not, so
    // draws are reduced by hand.
    std::mt19937_64 rng(seed);
    auto draw = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };

    const std::size_t constants = std::max<std::size_t>(1, gate_count / 4);
    Circuit c;
    for (std::size_t k = 1; k <= gate_count; ++k) {
        std::string target = "x" + std::to_string(k);
        auto wire = [&] { return "x" + std::to_string(draw(k - 1) + 1); };
        if (k <= constants) {
            c.gates.push_back({std::move(target), ConstGate{to_bit(draw(2) == 1)}});
            continue;
        }
        switch (draw(3)) {
        case 0:
            c.gates.push_back({std::move(target), NotGate{wire()}});
            break;
        case 1: {
            std::string lhs = wire();
            c.gates.push_back({std::move(target), AndGate{std::move(lhs), wire()}});
            break;
        }
        default: {
            std::string lhs = wire();
            c.gates.push_back({std::move(target), OrGate{std::move(lhs), wire()}});
            break;
        }
        }
    }
    return c;
}

}  // namespace planar
