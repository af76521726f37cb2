"""weilforge: Weil restriction of polynomial systems over finite fields.

Exact computer algebra for systems over Galois extensions k -> K: the
restriction operator itself, Macaulay-matrix solving degrees, Groebner
bases, Hilbert series, graded Betti numbers, and a verification harness
that exercises the identity catalogue relating a system's invariants to
those of its restriction.
"""

from .errors import WeilforgeError
from .fields import (
    ExtensionField,
    FieldElement,
    GaloisAutomorphism,
    PrimeField,
    ext_field_create,
    frobenius_apply,
    parse_field_spec,
    vec_decompose,
    vec_recompose,
)

__all__ = [
    "WeilforgeError",
    "PrimeField",
    "ExtensionField",
    "FieldElement",
    "GaloisAutomorphism",
    "ext_field_create",
    "vec_decompose",
    "vec_recompose",
    "frobenius_apply",
    "parse_field_spec",
]

__version__ = "0.1.0"
