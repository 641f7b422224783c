"""Certified symbolic-numeric toolkit for Oeljeklaus-Toma manifold data.

The heavy lifting lives in the C++ extension ``otkit._core``; this package
adds light input coercion (plain ints are accepted wherever the core wants
decimal coefficient strings).
"""

from ._core import (
    Field as _Field,
    PrecisionError,
    SpecError,
    __version__,
    check_irreducible as _check_irreducible,
    commands,
    inoue_from_matrix,
    resultant as _resultant,
    run,
    sturm_count as _sturm_count,
)

__all__ = [
    "Field",
    "PrecisionError",
    "SpecError",
    "__version__",
    "check_irreducible",
    "commands",
    "inoue_from_matrix",
    "resultant",
    "run",
    "sturm_count",
]


def _strs(coeffs):
    return [str(c) for c in coeffs]


class Field(_Field):
    """Number field from ascending defining coefficients, e.g. [-1, -1, 0, 1]."""

    def __init__(self, defining, bits=128):
        super().__init__(_strs(defining), bits)

    def min_poly(self, coeffs):
        return super().min_poly(_strs(coeffs))

    def norm(self, coeffs):
        return super().norm(_strs(coeffs))

    def trace(self, coeffs):
        return super().trace(_strs(coeffs))

    def is_unit(self, coeffs):
        return super().is_unit(_strs(coeffs))

    def is_algebraic_integer(self, coeffs):
        return super().is_algebraic_integer(_strs(coeffs))

    def embed(self, coeffs, i):
        return super().embed(_strs(coeffs), i)

    def log_map(self, coeffs):
        return super().log_map(_strs(coeffs))

    def admissibility(self, generators):
        return super().admissibility([_strs(g) for g in generators])

    @property
    def signature(self):
        return (self.s, self.t)


def resultant(p, q):
    return _resultant(_strs(p), _strs(q))


def sturm_count(p, lo, hi):
    return _sturm_count(_strs(p), str(lo), str(hi))


def check_irreducible(p):
    return _check_irreducible(_strs(p))
