#pragma once

// Planar encodings of booleans and bit vectors, and the vector combinators
// used to compile circuits.
//
// Booleans are continuation-passing pairs of endofunctions:
//
//   false = \k. \f. k f (\x. x)        true = \k. \f. k (\x. x) f
//
// and an n-bit vector is the Church tuple \k. k b1 ... bn. Every combinator
// below is a closed planar term; the connectives it embeds are closed, so
// inlining them never breaks the left-to-right discipline.
//
// Some results are only eta-equal to the canonical booleans (cstt false
// normalizes to \k. \f. k (\x. x) (\x. f x)), so decoding compares
// beta-normal forms up to eta.

#include "planar/term.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace planar {

enum class Bit : std::uint8_t { zero = 0, one = 1 };

using BitVector = std::vector<Bit>;

constexpr Bit to_bit(bool b) { return b ? Bit::one : Bit::zero; }
constexpr bool to_bool(Bit b) { return b == Bit::one; }
constexpr char to_char(Bit b) { return b == Bit::one ? '1' : '0'; }

// "<0,1,0>"
std::string format_bits(const BitVector& v);

Term mk_bool(Bit b);

enum class Connective { cstt, cstf, not_, and_, or_, id, compose };

Term mk_connective(Connective which);

// Resolves the names accepted after '@' in term files: true, false, cstt,
// cstf, not, and, or, id, compose.
std::optional<Term> named_constant(std::string_view name);
ConstantResolver constant_resolver();

Term encode_bitvec(const BitVector& v);

// Vector combinators. Indices are 1-based; `arity` is the n of the
// corresponding source length (see source_length).
struct Fetch {
    std::size_t index;
    std::size_t arity;
};
struct NotAppend {
    std::size_t index;
    std::size_t arity;
};
struct AndInPlace {
    std::size_t arity;
};
struct NotInPlace {
    std::size_t arity;
};
struct AppendConst {
    Bit bit;
    std::size_t arity;
};
struct Last {
    std::size_t arity;
};

using VectorOp = std::variant<Fetch, NotAppend, AndInPlace, NotInPlace, AppendConst, Last>;

// Fetch/NotAppend/AppendConst: n -> n+1, AndInPlace: n+2 -> n+1,
// NotInPlace: n+1 -> n+1, Last: n -> boolean (target length reported as 1).
std::size_t source_length(const VectorOp& op);
std::size_t target_length(const VectorOp& op);
std::string describe(const VectorOp& op);

// Throws std::out_of_range when an index is outside 1..n.
void validate(const VectorOp& op);

Term mk_vector_op(const VectorOp& op);

// The gate composites as lists of ops in application order.
std::vector<VectorOp> gate_and_ops(std::size_t i, std::size_t j, std::size_t n);
std::vector<VectorOp> gate_or_ops(std::size_t i, std::size_t j, std::size_t n);

// \y. t_k (... (t_1 y)), for terms listed in application order.
Term compose_chain(const std::vector<Term>& in_application_order);

Term mk_gate_and(std::size_t i, std::size_t j, std::size_t n);
Term mk_gate_or(std::size_t i, std::size_t j, std::size_t n);

class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Normalizes t and matches it against the two booleans up to alpha and eta.
// Throws DecodeError or FuelExhausted.
Bit decode_bool(const Term& t, std::optional<std::size_t> fuel = std::nullopt);

// Reads an n-tuple by applying the normal form of t to projection probes.
BitVector decode_bitvec(const Term& t, std::size_t n, std::optional<std::size_t> fuel = std::nullopt);

}  // namespace planar
