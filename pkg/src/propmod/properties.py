"""Cohen-Macaulay, Gorenstein and Buchsbaum decisions for plane semigroups.

The decisions run on the simplicial cases (at least one positive g
coefficient) and are purely combinatorial:

* mixed signs: S sits in a strip and is always Cohen-Macaulay and
  Buchsbaum; Gorenstein reduces to uniqueness of the maximal element of
  the intersection of two Apery sets, taken with respect to the semigroup
  order a <= b iff b - a in S.
* both signs positive: a nontrivial S has a finite nonempty gap set, any
  coordinatewise-maximal gap plus any two generators stays inside S, and
  that breaks the Cohen-Macaulay criterion; Buchsbaum is left undecided.

Every shortcut verdict is re-verified on a finite fundamental cell.  A
cell violation cannot happen if the theory and the code agree, so it is
raised as an error instead of being folded into the answer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    ModularInequality,
    Point,
    SemigroupError,
    UnsupportedCase,
    sort_points,
)
from .frobenius import _ceil_div, _positive_gaps
from .plane import minimal_generators
from .rays import StripGeometry, strip_geometry


@dataclass(frozen=True)
class AperyData:
    """Intersection of the Apery sets of the period and the axis generator."""

    period: Point
    axis_generator: Point
    elements: tuple[Point, ...]
    maximal: tuple[Point, ...]


@dataclass(frozen=True)
class PropertyReport:
    cohen_macaulay: bool
    gorenstein: bool
    buchsbaum: bool | None
    witnesses: dict


def s_order_leq(ineq: ModularInequality, a, b) -> bool:
    """The semigroup order: a <= b exactly when b - a is a member."""
    return ineq.member(tuple(y - x for x, y in zip(a, b)))


def _classify(ineq: ModularInequality) -> str:
    if ineq.p != 2:
        raise UnsupportedCase("property decisions are implemented in N^2 only")
    g1, g2 = ineq.g
    if g1 <= 0 and g2 <= 0:
        raise UnsupportedCase(
            "the semigroup is trivial or lies on a line; "
            "the simplicial criteria need a positive g coefficient")
    return "positive" if g1 > 0 and g2 > 0 else "strip"


def _cell(ineq: ModularInequality, geo: StripGeometry,
          g_top: int, h_top: int):
    """Integer points with height in [0, h_top) and g-value in [0, g_top]."""
    axis, h_idx = geo.axis, geo.height_index
    g_a, g_h = ineq.g[axis], ineq.g[h_idx]
    z = [0, 0]
    for h in range(h_top):
        lo = max(0, _ceil_div(-g_h * h, g_a))
        hi = (g_top - g_h * h) // g_a
        for x in range(lo, hi + 1):
            z[axis], z[h_idx] = x, h
            yield (z[0], z[1])


def _sub(a: Point, b_: Point) -> Point:
    return (a[0] - b_[0], a[1] - b_[1])


def is_cohen_macaulay(ineq: ModularInequality) -> tuple[bool, Point | None]:
    """Decide Cohen-Macaulayness; a failing gap is returned as witness.

    The witness v is a gap with v + s in S for two minimal generators s,
    which is exactly what the depth criterion forbids.
    """
    case = _classify(ineq)
    if case == "positive":
        gaps = _positive_gaps(ineq)
        if not gaps:
            return True, None
        # the graded-lexicographic maximum is dominated by no other gap
        v = max(gaps, key=lambda z: (z[0] + z[1], z))
        gens = minimal_generators(ineq).points
        for s in gens[:2]:
            if not ineq.member(tuple(a + b for a, b in zip(v, s))):
                raise SemigroupError(
                    f"gap {v} was expected to absorb every generator; "
                    "the gap enumeration is inconsistent")
        return False, v
    geo = strip_geometry(ineq)
    u, ut = geo.period, geo.axis_gen
    u_h = u[geo.height_index]
    for v in _cell(ineq, geo, ineq.b - 1, u_h):
        if ineq.member(v):
            continue
        if ineq.member(tuple(a + b for a, b in zip(v, u))) and \
                ineq.member(tuple(a + b for a, b in zip(v, ut))):
            raise SemigroupError(
                f"strip gap {v} violates the depth criterion; "
                "this contradicts the structure theory")
    return True, None


def apery_intersection(ineq: ModularInequality) -> AperyData:
    """Members h of the hull window with h - u and h - u~ both outside S.

    Differences leaving N^2 count as outside.  The result is finite and
    carries its maximal elements under the semigroup order.
    """
    if _classify(ineq) != "strip":
        raise UnsupportedCase("the Apery intersection is defined in the strip case")
    geo = strip_geometry(ineq)
    u, ut = geo.period, geo.axis_gen
    u_h = u[geo.height_index]
    g_top = ineq.b + ineq.g_of(ut)
    elements = [
        h for h in _cell(ineq, geo, g_top, u_h + 1)
        if ineq.member(h)
        and not ineq.member(_sub(h, u))
        and not ineq.member(_sub(h, ut))
    ]
    elements = sort_points(elements)
    maximal = tuple(
        h for h in elements
        if not any(h2 != h and ineq.member(_sub(h2, h)) for h2 in elements))
    return AperyData(period=u, axis_generator=ut,
                     elements=elements, maximal=sort_points(maximal))


def is_gorenstein(ineq: ModularInequality) -> tuple[bool, tuple[Point, ...]]:
    """True when the Apery intersection has a single maximal element."""
    case = _classify(ineq)
    if case == "positive":
        cm, _ = is_cohen_macaulay(ineq)
        if not cm:
            return False, ()
        # no gaps at all: the free semigroup N^2, whose graded algebra is
        # a polynomial ring
        return True, ((0, 0),)
    ap = apery_intersection(ineq)
    return len(ap.maximal) == 1, ap.maximal


def is_buchsbaum(ineq: ModularInequality) -> tuple[bool | None, bool | None]:
    """Verdict plus whether the closure semigroup agrees with S.

    The closure adds every point s with s + s_i in S for all minimal
    generators s_i.  In the strip case it must equal S; the check runs on
    a fundamental cell and extends by periodicity.  For two positive g
    coefficients with gaps the criteria decide nothing, hence None.
    """
    case = _classify(ineq)
    if case == "positive":
        if not _positive_gaps(ineq):
            return True, True
        return None, None
    gens = minimal_generators(ineq).points
    geo = strip_geometry(ineq)
    u_h = geo.period[geo.height_index]
    for s in _cell(ineq, geo, ineq.b - 1, u_h):
        closed = all(ineq.member(tuple(a + b for a, b in zip(s, si)))
                     for si in gens)
        if closed != ineq.member(s):
            raise SemigroupError(
                f"closure disagrees with S at {s}; "
                "this contradicts the structure theory")
    return True, True


def property_report(ineq: ModularInequality) -> PropertyReport:
    """All three decisions plus their witnesses in one report."""
    case = _classify(ineq)
    if case == "positive":
        cm, gap = is_cohen_macaulay(ineq)
        if cm:
            return PropertyReport(
                cohen_macaulay=True, gorenstein=True, buchsbaum=True,
                witnesses={"apery_intersection": ((0, 0),),
                           "apery_maximal": ((0, 0),),
                           "cm_gap": None,
                           "closure_equals_S": True})
        return PropertyReport(
            cohen_macaulay=False, gorenstein=False, buchsbaum=None,
            witnesses={"apery_intersection": None,
                       "apery_maximal": None,
                       "cm_gap": gap,
                       "closure_equals_S": None})
    cm, _ = is_cohen_macaulay(ineq)
    ap = apery_intersection(ineq)
    bb, closure_ok = is_buchsbaum(ineq)
    return PropertyReport(
        cohen_macaulay=cm,
        gorenstein=len(ap.maximal) == 1,
        buchsbaum=bb,
        witnesses={"apery_intersection": ap.elements,
                   "apery_maximal": ap.maximal,
                   "cm_gap": None,
                   "closure_equals_S": closure_ok})
