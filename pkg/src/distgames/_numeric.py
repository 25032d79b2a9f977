"""Shared numeric helpers: the exact/float dual backend.

Values are plain Python numbers.  int and Fraction are the exact backend;
float is the approximate one.  An operation is exact when every input is
exact, and comparisons then use true equality.  As soon as a float is
involved, comparisons fall back to an absolute tolerance (default 1e-9,
overridable per call).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

Number = Union[int, Fraction, float]

DEFAULT_TOL = 1e-9
MASS_SUM_TOL = 1e-12


def is_exact(x: Number) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def all_exact(xs: Sequence[Number]) -> bool:
    return all(is_exact(x) for x in xs)


def cmp(a: Number, b: Number, tol: float | None = None) -> int:
    """Three-way compare. Returns -1, 0 or 1.

    Exact inputs compare exactly; otherwise equality means
    |a - b| <= tol.
    """
    if is_exact(a) and is_exact(b):
        if a == b:
            return 0
        return -1 if a < b else 1
    t = DEFAULT_TOL if tol is None else tol
    d = float(a) - float(b)
    if abs(d) <= t:
        return 0
    return -1 if d < 0 else 1


def close_to(a: Number, b: Number, tol: float) -> bool:
    if is_exact(a) and is_exact(b):
        return a == b
    return abs(float(a) - float(b)) <= tol


def parse_number(obj) -> Number:
    """Read a number from a JSON value.

    Strings are exact rationals in "p/q" (or plain "p") form; ints stay
    ints, everything else becomes float.
    """
    if isinstance(obj, str):
        f = Fraction(obj)
        return int(f) if f.denominator == 1 else f
    if isinstance(obj, bool):
        raise TypeError("boolean is not a number")
    if isinstance(obj, int):
        return obj
    if isinstance(obj, float):
        return obj
    raise TypeError(f"cannot interpret {obj!r} as a number")


def format_number(x: Number):
    """Inverse of parse_number for JSON output.

    Exact non-integers serialize as "p/q" strings so round-trips stay
    exact; floats keep 17 significant digits.
    """
    if isinstance(x, bool):
        raise TypeError("boolean is not a number")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return f"{x.numerator}/{x.denominator}"
    return float(f"{float(x):.17g}")
