"""Restriction of a plane inequality to rational rays, and the strip skeleton.

Restricting S = {x in N^2 : f(x) mod b <= g(x)} to the ray through a
direction w gives a numerical semigroup in the ray parameter: with a' = f(w)
and c' = g(w) for primitive w, the ray members are the t with
(a' t) mod b <= c' t.  Three shapes occur:

* c' > 0: a proportionally modular numerical semigroup;
* c' = 0: the multiples of the least t with a' t = 0 mod b (a free line);
* c' < 0: only 0.

When g has coefficients of mixed sign (g1 * g2 <= 0, both not negative),
the semigroup lives in the strip 0 <= g(x) and three distinguished data
determine its geometry: the translation period u on the line g = 0, the
smallest nonzero member on the axis where g is positive, and the rational
crossing point of g(x) = b with that axis.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import ceil, gcd

from .core import (
    ModularInequality,
    Point,
    RationalPoint,
    SemigroupError,
    UnsupportedCase,
    mod_reduce,
)


class RayKind(Enum):
    PROPORTIONALLY_MODULAR = "proportionally_modular"
    FREE_LINE = "free_line"
    ZERO = "zero"


@dataclass(frozen=True)
class RayRestriction:
    """The numerical problem induced on the ray through ``direction``.

    ``direction`` is stored primitive.  ``free_step`` is the least positive t
    with a' t = 0 mod b and is set for FREE_LINE rays only; the ray members
    are then exactly the multiples of free_step * direction.
    """

    direction: Point
    a_prime: int
    c_prime: int
    b: int
    kind: RayKind
    free_step: int | None = None


def _primitive(direction: Point) -> Point:
    if len(direction) != 2:
        raise SemigroupError("ray directions live in dimension 2")
    if any(c < 0 for c in direction) or not any(direction):
        raise SemigroupError(f"ray direction must be nonzero and nonnegative, got {direction}")
    d = gcd(direction[0], direction[1])
    return (direction[0] // d, direction[1] // d)


def restrict_to_ray(ineq: ModularInequality, direction: Point) -> RayRestriction:
    if ineq.p != 2:
        raise SemigroupError("ray restriction needs a plane inequality")
    w = _primitive(tuple(int(c) for c in direction))
    a = ineq.f_of(w)
    c = ineq.g_of(w)
    if c > 0:
        return RayRestriction(w, a, c, ineq.b, RayKind.PROPORTIONALLY_MODULAR)
    if c == 0:
        # gcd(0, b) = b, so a' = 0 mod b gives step 1.
        step = ineq.b // gcd(mod_reduce(a, ineq.b), ineq.b)
        return RayRestriction(w, a, c, ineq.b, RayKind.FREE_LINE, free_step=step)
    return RayRestriction(w, a, c, ineq.b, RayKind.ZERO)


def numerical_min_gens(a: int, b: int, c: int) -> tuple[int, ...]:
    """Minimal generating set of the numerical semigroup {t : (a t) mod b <= c t}.

    Every t >= b/c is a member, so the Frobenius number is below b and the
    multiplicity is at most b; minimal generators therefore sit in [1, 2b).
    A generator is a member not expressible as a sum of two nonzero members.
    """
    if b < 1:
        raise SemigroupError(f"modulus must be positive, got {b}")
    if a < 0:
        raise SemigroupError("reduce a modulo b first; negative a is not accepted")
    if c <= 0:
        raise SemigroupError("the ray inequality must have a positive right side")
    members = [t for t in range(1, 2 * b) if (a * t) % b <= c * t]
    member_set = set(members)
    gens = []
    for t in members:
        if not any(s < t and (t - s) in member_set for s in member_set):
            gens.append(t)
    return tuple(gens)


def period_vector(ineq: ModularInequality) -> Point:
    """The generator u of the solutions of {g(x) = 0, f(x) = 0 mod b} in N^2.

    Needs g of mixed sign (g1 * g2 <= 0, g nonzero).  The quadrant part of the
    line g = 0 is the ray through d = (|g2|, |g1|)/gcd, and u = k d for the
    least k >= 1 with k f(d) = 0 mod b.
    """
    if ineq.p != 2:
        raise SemigroupError("the period vector is defined for plane inequalities")
    g1, g2 = ineq.g
    if g1 * g2 > 0:
        raise UnsupportedCase("g has no zero line in the quadrant when g1*g2 > 0")
    d = _primitive((abs(g2), abs(g1)))
    k = ineq.b // gcd(mod_reduce(ineq.f_of(d), ineq.b), ineq.b)
    return (k * d[0], k * d[1])


def _positive_axis(ineq: ModularInequality) -> int:
    g1, g2 = ineq.g
    if g1 > 0:
        return 0
    if g2 > 0:
        return 1
    raise UnsupportedCase("no axis with positive g coefficient")


def axis_generator(ineq: ModularInequality, axis: int | None = None) -> Point:
    """The smallest nonzero member of S on a coordinate axis.

    By default the axis with positive g coefficient is used (the strip case);
    pass ``axis`` explicitly when both coefficients are positive.  The scan is
    finite because t >= b / g_axis is always a member.
    """
    if ineq.p != 2:
        raise SemigroupError("axis generators are defined for plane inequalities")
    if axis is None:
        axis = _positive_axis(ineq)
    if axis not in (0, 1):
        raise SemigroupError(f"axis must be 0 or 1, got {axis}")
    ga = ineq.g[axis]
    if ga <= 0:
        raise UnsupportedCase(f"g is not positive on axis {axis}")
    limit = ceil(Fraction(ineq.b, ga))
    fa = ineq.f[axis]
    for t in range(1, limit + 1):
        if (fa * t) % ineq.b <= ga * t:
            point = [0, 0]
            point[axis] = t
            return tuple(point)
    raise SemigroupError(f"no member found on axis {axis} up to {limit}")  # unreachable


def axis_crossing(ineq: ModularInequality, axis: int | None = None) -> RationalPoint:
    """The rational point where g(x) = b meets the chosen axis."""
    if ineq.p != 2:
        raise SemigroupError("axis crossings are defined for plane inequalities")
    if axis is None:
        axis = _positive_axis(ineq)
    ga = ineq.g[axis]
    if ga <= 0:
        raise UnsupportedCase(f"g is not positive on axis {axis}")
    point = [Fraction(0), Fraction(0)]
    point[axis] = Fraction(ineq.b, ga)
    return tuple(point)


@dataclass(frozen=True)
class StripGeometry:
    """Period u, axis generator and axis crossing for a strip-shaped S."""

    period: Point
    axis_gen: Point
    crossing: RationalPoint
    axis: int

    @property
    def height_index(self) -> int:
        """Coordinate transverse to the axis; u is positive there."""
        return 1 - self.axis


def strip_geometry(ineq: ModularInequality) -> StripGeometry:
    g1, g2 = ineq.g
    if g1 * g2 > 0:
        raise UnsupportedCase("not a strip case: both g coefficients are positive"
                              if g1 > 0 else "trivial semigroup: both g coefficients negative")
    axis = _positive_axis(ineq)
    return StripGeometry(
        period=period_vector(ineq),
        axis_gen=axis_generator(ineq, axis),
        crossing=axis_crossing(ineq, axis),
        axis=axis,
    )
