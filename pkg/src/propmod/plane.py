"""Minimal generating sets of plane semigroups via bounded candidate regions.

The sign pattern of g = (g1, g2) splits the computation:

* g1 < 0 and g2 < 0: only 0 satisfies the inequality, S is trivial;
* g1 <= 0 and g2 <= 0 with a zero coefficient: S is the free ray generated
  by the period vector on the line g = 0;
* g1 > 0 and g2 > 0: the complement of S in N^2 is finite and every
  generator lies in the triangle spanned by 0 and the two axis crossings
  shifted by the axis generators;
* mixed signs: S lies in the strip 0 <= g(x), is invariant under adding the
  period u, and every generator lies in the parallelogram spanned by u and
  the crossing point w shifted by the axis generator.

Candidates from the region are then reduced to the unique minimal
generating set: a member is a generator exactly when it is not the sum of
two nonzero members.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import ceil, floor
from typing import Iterable, Sequence

from .core import (
    DimensionMismatch,
    ModularInequality,
    Point,
    RationalPoint,
    SemigroupError,
    sort_points,
)
from .rays import axis_crossing, axis_generator, period_vector, strip_geometry


class RegionKind(Enum):
    STRIP = "strip"
    TRIANGLE = "triangle"


@dataclass(frozen=True)
class Region2:
    """A bounded convex region in the closed first quadrant, given by vertices."""

    vertices: tuple[RationalPoint, ...]
    kind: RegionKind

    def __post_init__(self) -> None:
        verts = tuple(tuple(Fraction(c) for c in v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if not verts:
            raise SemigroupError("a region needs at least one vertex")
        for v in verts:
            if len(v) != 2:
                raise SemigroupError("region vertices live in the plane")
            if any(c < 0 for c in v):
                raise SemigroupError(f"vertex {v} leaves the closed first quadrant")


@dataclass(frozen=True)
class GeneratorSet:
    points: tuple[Point, ...]
    minimal: bool
    trivial: bool

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)


def _convex_hull(vertices: Sequence[RationalPoint]) -> list[RationalPoint]:
    pts = sorted(set(vertices))
    if len(pts) <= 2:
        return pts
    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    lower: list[RationalPoint] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[RationalPoint] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 2:
        # All vertices collinear: keep the two extreme points.
        return [pts[0], pts[-1]]
    return hull


def _row_span(edges, y: int) -> tuple[Fraction, Fraction] | None:
    """Exact x-interval of a convex polygon at integer height y, or None."""
    yq = Fraction(y)
    xs: list[Fraction] = []
    for (x1, y1), (x2, y2) in edges:
        if y1 == y2:
            if y1 == yq:
                xs.extend((x1, x2))
            continue
        lo, hi = (y1, y2) if y1 < y2 else (y2, y1)
        if lo <= yq <= hi:
            t = (yq - y1) / (y2 - y1)
            xs.append(x1 + t * (x2 - x1))
    if not xs:
        return None
    return min(xs), max(xs)


def enumerate_region(ineq: ModularInequality, region: Region2,
                     include_origin: bool = False) -> set[Point]:
    """Members of S among the integer points of the region.

    Row by row: the convex hull of the vertices is sliced at each integer
    height into an exact rational x-interval, and the integer points inside
    are tested for membership.  The origin is skipped unless requested.
    """
    if ineq.p != 2:
        raise DimensionMismatch("region enumeration works in the plane")
    hull = _convex_hull(region.vertices)
    if len(hull) == 1:
        edges = [(hull[0], hull[0])]
    else:
        edges = list(zip(hull, hull[1:] + hull[:1]))
    y_lo = ceil(min(v[1] for v in hull))
    y_hi = floor(max(v[1] for v in hull))
    out: set[Point] = set()
    for y in range(y_lo, y_hi + 1):
        span = _row_span(edges, y)
        if span is None:
            continue
        for x in range(ceil(span[0]), floor(span[1]) + 1):
            if x == 0 and y == 0 and not include_origin:
                continue
            if ineq.member((x, y)):
                out.add((x, y))
    return out


def minimalize(candidates: Iterable[Sequence[int]], ineq: ModularInequality) -> GeneratorSet:
    """Reduce a generating candidate set to the minimal generating set.

    Requires every candidate to be a member and the candidates to generate S.
    Processing in graded-lexicographic order, a candidate is redundant exactly
    when subtracting some already-accepted generator lands back in S; this is
    equivalent to being a sum of two nonzero members.
    """
    seen = sort_points(candidates)
    accepted: list[Point] = []
    for h in seen:
        if not any(h):
            continue
        if not ineq.member(h):
            raise SemigroupError(f"candidate {h} is not a member of the semigroup")
        reducible = False
        for s in accepted:
            if all(a >= b for a, b in zip(h, s)) and ineq.member(tuple(a - b for a, b in zip(h, s))):
                reducible = True
                break
        if not reducible:
            accepted.append(h)
    return GeneratorSet(tuple(accepted), minimal=True, trivial=False)


def strip_region(ineq: ModularInequality) -> Region2:
    """The parallelogram spanned by u and w + axis generator (vertices
    0, u, u + w + axis_gen, w + axis_gen); it contains every generator."""
    geom = strip_geometry(ineq)
    u = geom.period
    t = geom.axis_gen
    w = geom.crossing
    wt = (w[0] + t[0], w[1] + t[1])
    return Region2(
        vertices=(
            (Fraction(0), Fraction(0)),
            (Fraction(u[0]), Fraction(u[1])),
            (u[0] + wt[0], u[1] + wt[1]),
            wt,
        ),
        kind=RegionKind.STRIP,
    )


def triangle_region(ineq: ModularInequality) -> Region2:
    """For g1, g2 > 0: the triangle 0, w1 + axis_gen1, w2 + axis_gen2."""
    g1, g2 = ineq.g
    if g1 <= 0 or g2 <= 0:
        raise SemigroupError("the triangle region needs both g coefficients positive")
    t1 = axis_generator(ineq, 0)
    t2 = axis_generator(ineq, 1)
    w1 = axis_crossing(ineq, 0)
    w2 = axis_crossing(ineq, 1)
    return Region2(
        vertices=(
            (Fraction(0), Fraction(0)),
            (w1[0] + t1[0], Fraction(0)),
            (Fraction(0), w2[1] + t2[1]),
        ),
        kind=RegionKind.TRIANGLE,
    )


def minimal_generators(ineq: ModularInequality) -> GeneratorSet:
    """The unique minimal generating set of a plane semigroup."""
    if ineq.p != 2:
        raise DimensionMismatch("this method works in dimension 2; use the general one")
    g1, g2 = ineq.g
    if g1 < 0 and g2 < 0:
        # Membership forces g(x) >= 0, so only the origin survives.
        return GeneratorSet((), minimal=True, trivial=True)
    if g1 <= 0 and g2 <= 0:
        # One coefficient is zero: S is the free ray on the line g = 0.
        return GeneratorSet((period_vector(ineq),), minimal=True, trivial=False)
    if g1 > 0 and g2 > 0:
        candidates = enumerate_region(ineq, triangle_region(ineq))
    else:
        candidates = enumerate_region(ineq, strip_region(ineq))
    return minimalize(candidates, ineq)
