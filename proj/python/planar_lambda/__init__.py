"""Planar lambda-calculus toolkit: terms, planarity, normalization, circuits."""

from ._core import (
    Circuit,
    CircuitError,
    DecodeError,
    FuelExhausted,
    NotLinearError,
    ParseError,
    Term,
    alpha_eq,
    beta_convertible,
    check_planar,
    compile_circuit,
    connective,
    decode_bitvec,
    decode_bool,
    emit_equiv_instance,
    encode_bitvec,
    enumerate_planar,
    eval_circuit,
    infer_planar_context,
    is_linear,
    mk_bool,
    normalize,
    parse_circuit,
    parse_term,
    print_term,
    random_circuit,
    run_compiled,
    term_size,
)

__all__ = [
    "Circuit",
    "CircuitError",
    "DecodeError",
    "FuelExhausted",
    "NotLinearError",
    "ParseError",
    "Term",
    "alpha_eq",
    "beta_convertible",
    "check_planar",
    "compile_circuit",
    "connective",
    "decode_bitvec",
    "decode_bool",
    "emit_equiv_instance",
    "encode_bitvec",
    "enumerate_planar",
    "eval_circuit",
    "infer_planar_context",
    "is_linear",
    "mk_bool",
    "normalize",
    "parse_circuit",
    "parse_term",
    "print_term",
    "random_circuit",
    "run_compiled",
    "term_size",
]
