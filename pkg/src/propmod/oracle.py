"""Brute-force reference computations on finite windows.

Everything in this module works by direct enumeration against the defining
inequality and shares no logic with the fast algorithms; the tests use it
to cross-check generator sets, closures and Frobenius vectors.  Results are
only meaningful when the window is large enough, and the Frobenius oracle
raises when it can detect that it is not.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .core import ModularInequality, Point, SemigroupError, minimal_points, sort_points

MAX_WINDOW_POINTS = 10**7


class MarginError(SemigroupError):
    """The window is visibly too small to certify the brute-force answer."""


@dataclass(frozen=True)
class Window:
    """The box [0, bounds_1] x ... x [0, bounds_p]."""

    bounds: Point

    def __post_init__(self) -> None:
        bounds = tuple(int(c) for c in self.bounds)
        object.__setattr__(self, "bounds", bounds)
        if not bounds or any(c < 0 for c in bounds):
            raise SemigroupError(f"window bounds must be nonnegative, got {bounds}")
        if self.size() > MAX_WINDOW_POINTS:
            raise SemigroupError(f"window of {self.size()} points exceeds the brute-force limit")

    def size(self) -> int:
        n = 1
        for c in self.bounds:
            n *= c + 1
        return n

    def points(self) -> Iterable[Point]:
        return product(*(range(c + 1) for c in self.bounds))

    def contains(self, x: Sequence[int]) -> bool:
        return len(x) == len(self.bounds) and all(0 <= v <= c for v, c in zip(x, self.bounds))


def brute_members(ineq: ModularInequality, window: Window) -> set[Point]:
    """All window points satisfying f(x) mod b <= g(x), straight from the definition."""
    if len(window.bounds) != ineq.p:
        raise SemigroupError("window dimension does not match the inequality")
    f, g, b = ineq.f, ineq.g, ineq.b
    out = set()
    for x in window.points():
        if sum(c * v for c, v in zip(f, x)) % b <= sum(c * v for c, v in zip(g, x)):
            out.add(x)
    return out


def closure_in_window(gens: Iterable[Sequence[int]], window: Window) -> set[Point]:
    """Window points reachable as N-combinations of ``gens`` (always includes 0).

    Dynamic programming over the box: x is reachable when x = 0 or some
    generator s <= x has x - s reachable.
    """
    gen_list = sort_points(gens)
    p = len(window.bounds)
    for s in gen_list:
        if len(s) != p:
            raise SemigroupError("generator dimension does not match the window")
        if all(c == 0 for c in s):
            raise SemigroupError("0 is not allowed as a generator")
    reachable: set[Point] = set()
    for x in window.points():
        if not any(x):
            reachable.add(x)
            continue
        for s in gen_list:
            if all(v >= c for v, c in zip(x, s)) and tuple(v - c for v, c in zip(x, s)) in reachable:
                reachable.add(x)
                break
    return reachable


def _cross(a: Sequence[int], b: Sequence[int]) -> int:
    return a[0] * b[1] - a[1] * b[0]


def _extremal_directions(members: set[Point], window: Window) -> tuple[Point, Point]:
    # Clockwise-most and counterclockwise-most member directions; these span
    # the cone of the semigroup when the window reaches far enough.  For each
    # extreme we keep the smallest member attaining it as a witness that the
    # direction is realized well inside the window.
    nonzero = [m for m in members if any(m)]
    if not nonzero:
        raise MarginError("no nonzero member in the window")
    lo = lo_w = nonzero[0]
    hi = hi_w = nonzero[0]
    for m in nonzero[1:]:
        c = _cross(lo, m)
        if c < 0:
            lo, lo_w = m, m
        elif c == 0 and sum(m) < sum(lo_w):
            lo_w = m
        c = _cross(hi, m)
        if c > 0:
            hi, hi_w = m, m
        elif c == 0 and sum(m) < sum(hi_w):
            hi_w = m
    half = tuple(c // 2 for c in window.bounds)
    for witness in (lo_w, hi_w):
        if not all(v <= h for v, h in zip(witness, half)):
            raise MarginError(
                "extreme member direction only attained near the window boundary; enlarge the window"
            )
    if _cross(lo, hi) == 0:
        raise MarginError("window members span no two-dimensional cone")
    return lo_w, hi_w


def brute_min_frobenius(ineq: ModularInequality, window: Window) -> set[Point]:
    """Coordinatewise-minimal Frobenius vectors found by definition checking.

    A non-member q of the difference group passes when every window point of
    the group lying strictly inside the shifted cone q + int(cone(S)) is a
    nonzero member.  The difference group is probed as {a - b : a, b members}.

    Candidates are only drawn from the inner half of the window; the outer
    half serves as certification room for their shifted cones.  A passer
    whose cone directions do not fit twice over inside the window triggers
    :class:`MarginError` rather than a guess.
    """
    if ineq.p != 2:
        raise SemigroupError("the Frobenius oracle works in dimension 2 only")
    members = brute_members(ineq, window)
    gaps = [x for x in window.points() if x not in members]
    if not gaps:
        return set()
    half = tuple(c // 2 for c in window.bounds)
    lo, hi = _extremal_directions(members, window)

    # z is in the difference group iff z + m is a member for some member m.
    in_group = {}
    for z in window.points():
        in_group[z] = any((z[0] + m[0], z[1] + m[1]) in members for m in members)

    passers = []
    for q in gaps:
        if not in_group[q] or not all(v <= h for v, h in zip(q, half)):
            continue
        ok = True
        for z in window.points():
            d = (z[0] - q[0], z[1] - q[1])
            if _cross(lo, d) <= 0 or _cross(d, hi) <= 0:
                continue  # not strictly inside the cone
            if z not in members and in_group[z]:
                ok = False
                break
        if ok:
            for d in (lo, hi):
                rim = (q[0] + 2 * d[0], q[1] + 2 * d[1])
                if not window.contains(rim):
                    raise MarginError(
                        f"candidate {q} passed but its cone leaves the window "
                        "before it can be certified; enlarge the window")
            passers.append(q)
    return set(minimal_points(passers))
