"""Exact data model for proportionally modular inequalities over N^p.

A semigroup here is the solution set S = {x in N^p : f(x) mod b <= g(x)}
for integer linear forms f, g and a positive integer modulus b.  The
remainder is always the Euclidean one (in [0, b)), so membership is well
defined for forms with negative coefficients.  Rational input data is
admitted through :func:`normalize`, which clears denominators without
changing the solution set.

All arithmetic is plain Python integer arithmetic, which is arbitrary
precision; no operation here can silently wrap.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

Point = tuple[int, ...]
RationalPoint = tuple[Fraction, ...]


class SemigroupError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInequality(SemigroupError):
    """The inequality data violates a structural invariant."""


class DimensionMismatch(SemigroupError):
    """A point or form has the wrong number of coordinates."""


class UnsupportedCase(SemigroupError):
    """The computation is outside the hypotheses of the chosen method."""


class CapExceeded(SemigroupError):
    """An intermediate set grew past the configured size cap."""


def mod_reduce(a: int, b: int) -> int:
    """Euclidean remainder of ``a`` modulo ``b``, in [0, b) for any sign of ``a``."""
    if b <= 0:
        raise SemigroupError(f"modulus must be positive, got {b}")
    return a % b


def norm1(x: Sequence[int]) -> int:
    return sum(abs(c) for c in x)


def grlex_key(x: Sequence[int]) -> tuple:
    """Sort key for the graded lexicographic order used in all output."""
    return (sum(x), tuple(x))


def sort_points(points: Iterable[Sequence[int]]) -> tuple[Point, ...]:
    return tuple(sorted({tuple(int(c) for c in p) for p in points}, key=grlex_key))


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """True when a >= b coordinatewise (product order)."""
    return all(ai >= bi for ai, bi in zip(a, b))


def minimal_points(points: Iterable[Sequence[int]]) -> tuple[Point, ...]:
    """The antichain of coordinatewise-minimal elements of ``points``."""
    kept: list[Point] = []
    for p in sort_points(points):
        if not any(dominates(p, q) for q in kept):
            kept.append(p)
    return tuple(kept)


@dataclass(frozen=True)
class ModularInequality:
    """The inequality f(x) mod b <= g(x), with f, g integer forms and b >= 1.

    Both forms must have at least one nonzero coefficient and equal length.
    """

    f: Point
    g: Point
    b: int

    def __post_init__(self) -> None:
        f = tuple(int(c) for c in self.f)
        g = tuple(int(c) for c in self.g)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "b", int(self.b))
        if len(f) == 0 or len(f) != len(g):
            raise InvalidInequality(
                f"f and g must be nonempty forms of equal length, got {len(f)} and {len(g)}"
            )
        if self.b < 1:
            raise InvalidInequality(f"modulus must be a positive integer, got {self.b}")
        if all(c == 0 for c in f):
            raise InvalidInequality("f must have a nonzero coefficient")
        if all(c == 0 for c in g):
            raise InvalidInequality("g must have a nonzero coefficient")

    @property
    def p(self) -> int:
        return len(self.f)

    def _check_dim(self, x: Sequence[int]) -> None:
        if len(x) != self.p:
            raise DimensionMismatch(f"point of length {len(x)} against dimension {self.p}")

    def f_of(self, x: Sequence[int]) -> int:
        self._check_dim(x)
        return sum(c * v for c, v in zip(self.f, x))

    def g_of(self, x: Sequence[int]) -> int:
        self._check_dim(x)
        return sum(c * v for c, v in zip(self.g, x))

    def residue(self, x: Sequence[int]) -> int:
        """f(x) mod b with the Euclidean convention."""
        return mod_reduce(self.f_of(x), self.b)

    def member(self, x: Sequence[int]) -> bool:
        """Whether x lies in S.  Points outside N^p are never members.

        Any x with g(x) >= b is a member: the remainder is below b.
        """
        self._check_dim(x)
        if any(c < 0 for c in x):
            return False
        gx = sum(c * v for c, v in zip(self.g, x))
        if gx >= self.b:
            return True
        if gx < 0:
            return False
        return sum(c * v for c, v in zip(self.f, x)) % self.b <= gx


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise InvalidInequality(f"expected integer, fraction or 'p/q' string, got {v!r}")


def normalize(f: Sequence, g: Sequence, b) -> ModularInequality:
    """Clear denominators from rational input data.

    Multiplying f, g and b by the least common multiple d of all their
    denominators leaves the solution set untouched: d*f(x) mod d*b <= d*g(x)
    holds exactly when f(x) mod b <= g(x) does.
    """
    fr = [_as_fraction(c) for c in f]
    gr = [_as_fraction(c) for c in g]
    br = _as_fraction(b)
    if br <= 0:
        raise InvalidInequality(f"modulus must be positive, got {b!r}")
    if len(fr) != len(gr):
        raise InvalidInequality("f and g must have equal length")
    d = lcm(*(c.denominator for c in fr + gr + [br]))
    return ModularInequality(
        tuple(int(c * d) for c in fr),
        tuple(int(c * d) for c in gr),
        int(br * d),
    )


def inequality_to_json(ineq: ModularInequality) -> dict:
    return {"f": list(ineq.f), "g": list(ineq.g), "b": ineq.b}


def inequality_from_json(data: dict | str) -> ModularInequality:
    """Read an inequality from a dict or JSON text {"f": [...], "g": [...], "b": ...}.

    Entries may be integers or "p/q" strings; the result is normalized.
    """
    if isinstance(data, str):
        data = json.loads(data)
    try:
        return normalize(data["f"], data["g"], data["b"])
    except KeyError as exc:
        raise InvalidInequality(f"missing key {exc} in inequality data") from exc
