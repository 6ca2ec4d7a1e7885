"""Dirichlet convolution rings over finite-type multiplicative monoids.

Coefficients cross the boundary as text literals in the ring's own syntax
("2/3" for rationals, "1+2i" for complex values, "1,0,2" for polynomial
coefficient lists), so exact rings stay exact.
"""

from ._core import (
    DirconvError,
    ExtFn,
    Fn,
    Monoid,
    Ring,
    Series,
    add,
    convolve,
    decode,
    encode,
    eval_point,
    ext_add,
    ext_convolve,
    ext_embed,
    extend,
    format_fn,
    holo_derivation,
    invert,
    lift_derivation,
    load_fn,
    log_derivation,
    mobius,
    neg,
    norm,
    one,
    p_derivation,
    restrict,
    save_fn,
    selftest,
    sub,
    twist,
    unit,
)

__all__ = [
    "DirconvError",
    "ExtFn",
    "Fn",
    "Monoid",
    "Ring",
    "Series",
    "add",
    "convolve",
    "decode",
    "encode",
    "eval_point",
    "ext_add",
    "ext_convolve",
    "ext_embed",
    "extend",
    "format_fn",
    "holo_derivation",
    "invert",
    "lift_derivation",
    "load_fn",
    "log_derivation",
    "mobius",
    "neg",
    "norm",
    "one",
    "p_derivation",
    "restrict",
    "save_fn",
    "selftest",
    "sub",
    "twist",
    "unit",
]
