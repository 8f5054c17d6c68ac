"""Exact structure theory for finite dimensional associative algebras.

Thin dict-based wrappers over the C++ core; every function takes and
returns plain Python data.
"""

import json

from ._exalg import (  # noqa: F401
    ExalgError,
    analyze_algebra as _analyze_algebra,
    counterexample as _counterexample,
    envelope as _envelope,
    generate_extension as _generate_extension,
    lift_subalgebra as _lift_subalgebra,
    matrix_algebra as _matrix_algebra,
    quasi_inverse as _quasi_inverse,
    radical_basis as _radical_basis,
    scalar_arith,
    unit_regular_witness as _unit_regular_witness,
)

__all__ = [
    "ExalgError",
    "analyze",
    "radical",
    "quasi_inverse",
    "unit_regular_witness",
    "matrix_algebra",
    "generate_extension",
    "lift_subalgebra",
    "envelope",
    "counterexample",
    "scalar_arith",
]


def analyze(algebra):
    return json.loads(_analyze_algebra(json.dumps(algebra)))


def radical(algebra):
    return json.loads(_radical_basis(json.dumps(algebra)))


def quasi_inverse(algebra, element):
    return json.loads(_quasi_inverse(json.dumps(algebra), json.dumps(element)))


def unit_regular_witness(algebra, element):
    return json.loads(_unit_regular_witness(json.dumps(algebra), json.dumps(element)))


def matrix_algebra(field, n):
    return json.loads(_matrix_algebra(json.dumps(field), n))


def generate_extension(seed, field, ideal_sizes, quotient_sizes):
    return json.loads(
        _generate_extension(seed, json.dumps(field), list(ideal_sizes), list(quotient_sizes))
    )


def lift_subalgebra(extension):
    return json.loads(_lift_subalgebra(json.dumps(extension)))


def envelope(extension, kind="matricial"):
    return json.loads(_envelope(json.dumps(extension), kind))


def counterexample(p, n, sanity=False):
    return json.loads(_counterexample(p, n, sanity))
