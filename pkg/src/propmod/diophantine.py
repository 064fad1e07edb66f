"""Minimal nonnegative solutions of small linear systems with congruences.

The solver handles conjunctions of linear equalities L(x) = c, congruences
L(x) = k mod m and lower bounds L(x) >= c over N^p for p <= 4.  Everything
is rewritten as an equality system:

* a congruence first has its coefficients reduced into [0, m), which keeps
  the solution set and makes the left side nonnegative on N^p, and then gets
  one nonnegative slack t with L(x) - m t = k;
* a lower bound L(x) >= c becomes L(x) - s = c with slack s >= 0;
* a nonzero right-hand side is absorbed into one homogenizing variable x0,
  and the wanted solutions are those with x0 = 1.

The resulting homogeneous system is solved by a breadth-first completion
over increasing 1-norm: a candidate y grows by a unit step e_j only when
the step decreases the residual (scalar product of A y and A e_j negative),
and candidates dominating an already-found solution are pruned.  Slack
coordinates are projected away afterwards and the antichain re-minimalized.
Termination is certified by a conservative bound on the 1-norm of minimal
solutions, recorded in the result for audit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (
    CapExceeded,
    Point,
    SemigroupError,
    dominates,
    minimal_points,
    mod_reduce,
    sort_points,
)

MAX_DIMENSION = 4


@dataclass(frozen=True)
class DiophSystem:
    """A conjunction of constraints over N^p.

    equalities:   (coeffs, c)     meaning  coeffs . x = c
    congruences:  (coeffs, k, m)  meaning  coeffs . x = k  (mod m)
    inequalities: (coeffs, c)     meaning  coeffs . x >= c
    """

    p: int
    equalities: tuple[tuple[Point, int], ...] = ()
    congruences: tuple[tuple[Point, int, int], ...] = ()
    inequalities: tuple[tuple[Point, int], ...] = ()

    def __post_init__(self) -> None:
        if not 1 <= self.p <= MAX_DIMENSION:
            raise SemigroupError(f"dimension must be in [1, {MAX_DIMENSION}], got {self.p}")
        eqs = tuple((tuple(int(c) for c in coeffs), int(rhs)) for coeffs, rhs in self.equalities)
        congs = tuple(
            (tuple(int(c) for c in coeffs), mod_reduce(int(k), int(m)), int(m))
            for coeffs, k, m in self.congruences
        )
        ineqs = tuple((tuple(int(c) for c in coeffs), int(rhs)) for coeffs, rhs in self.inequalities)
        object.__setattr__(self, "equalities", eqs)
        object.__setattr__(self, "congruences", congs)
        object.__setattr__(self, "inequalities", ineqs)
        for coeffs, *_ in eqs + congs + ineqs:
            if len(coeffs) != self.p:
                raise SemigroupError(f"constraint arity {len(coeffs)} does not match p={self.p}")
        for _, _, m in congs:
            if m < 1:
                raise SemigroupError(f"congruence modulus must be positive, got {m}")
        if not (eqs or congs or ineqs):
            raise SemigroupError("a system needs at least one constraint")

    def satisfied_by(self, x: Sequence[int]) -> bool:
        if len(x) != self.p or any(v < 0 for v in x):
            return False
        for coeffs, rhs in self.equalities:
            if sum(c * v for c, v in zip(coeffs, x)) != rhs:
                return False
        for coeffs, k, m in self.congruences:
            if sum(c * v for c, v in zip(coeffs, x)) % m != k:
                return False
        for coeffs, rhs in self.inequalities:
            if sum(c * v for c, v in zip(coeffs, x)) < rhs:
                return False
        return True

    @classmethod
    def from_json(cls, data: dict) -> "DiophSystem":
        return cls(
            p=data["p"],
            equalities=tuple((tuple(c), r) for c, r in data.get("equalities", [])),
            congruences=tuple((tuple(c), k, m) for c, k, m in data.get("congruences", [])),
            inequalities=tuple((tuple(c), r) for c, r in data.get("inequalities", [])),
        )


@dataclass(frozen=True)
class MinimalSolutionSet:
    """The antichain of minimal solutions, sorted graded-lexicographically."""

    points: tuple[Point, ...]
    homogeneous: bool
    bound: int


def _completion(rows: list[list[int]], n_vars: int, target: int | None, bound: int,
                cap: int | None = None) -> list[Point]:
    """Minimal nonzero solutions of the homogeneous system rows . y = 0 over N^n.

    ``target`` marks the homogenizing coordinate; candidates never push it
    past 1 (every minimal solution with x0 = 1 is reachable below that cap).
    """
    m = len(rows)
    cols = [tuple(rows[i][j] for i in range(m)) for j in range(n_vars)]
    zero_image = (0,) * m

    minimal: list[Point] = []
    frontier: dict[Point, tuple[int, ...]] = {}
    for j in range(n_vars):
        y = tuple(1 if i == j else 0 for i in range(n_vars))
        frontier[y] = cols[j]

    level = 1
    while frontier:
        if level > bound:
            raise SemigroupError(
                f"completion passed the certified bound {bound}; this should be unreachable"
            )
        solutions = [y for y, img in frontier.items() if img == zero_image]
        for y in solutions:
            # Level order makes same-level solutions incomparable and earlier
            # pruning keeps dominators out, so each one is minimal.
            minimal.append(y)
        next_frontier: dict[Point, tuple[int, ...]] = {}
        for y, img in frontier.items():
            if img == zero_image:
                continue
            for j in range(n_vars):
                if sum(a * b for a, b in zip(img, cols[j])) >= 0:
                    continue  # the step must reduce the residual
                if target is not None and j == target and y[target] >= 1:
                    continue
                child = tuple(v + 1 if i == j else v for i, v in enumerate(y))
                if child in next_frontier:
                    continue
                if any(dominates(child, s) for s in minimal):
                    continue
                next_frontier[child] = tuple(a + b for a, b in zip(img, cols[j]))
        if cap is not None and len(next_frontier) > cap:
            raise CapExceeded(
                f"completion frontier of {len(next_frontier)} candidates exceeds the cap {cap}"
            )
        frontier = next_frontier
        level += 1
    return minimal


def _termination_bound(rows: list[list[int]]) -> int:
    # Conservative variant of the classical norm bound for minimal solutions
    # of integer systems: n * (1 + max row 1-norm + max |rhs|) ** #rows, with
    # the right-hand sides already folded into the rows here.
    n = max(len(r) for r in rows)
    biggest = max(sum(abs(c) for c in r) for r in rows)
    return n * (1 + biggest) ** len(rows)


def minimal_solutions(system: DiophSystem, cap: int | None = None) -> MinimalSolutionSet:
    """The complete antichain of minimal nonzero solutions of ``system``.

    The zero solution is never reported; an infeasible system yields an
    empty set.
    """
    n_slack = len(system.congruences) + len(system.inequalities)
    rhs: list[int] = []
    rows: list[list[int]] = []
    slack_at = system.p
    for coeffs, c in system.equalities:
        rows.append(list(coeffs) + [0] * n_slack)
        rhs.append(c)
    for coeffs, k, m in system.congruences:
        row = [mod_reduce(c, m) for c in coeffs] + [0] * n_slack
        row[slack_at] = -m
        slack_at += 1
        rows.append(row)
        rhs.append(k)
    for coeffs, c in system.inequalities:
        row = list(coeffs) + [0] * n_slack
        row[slack_at] = -1
        slack_at += 1
        rows.append(row)
        rhs.append(c)

    homogeneous = all(c == 0 for c in rhs)
    if homogeneous:
        n_vars = system.p + n_slack
        target = None
    else:
        n_vars = system.p + n_slack + 1
        target = n_vars - 1
        for row, c in zip(rows, rhs):
            row.append(-c)

    bound = _termination_bound(rows)
    lifted = _completion(rows, n_vars, target, bound, cap=cap)
    if homogeneous:
        projected = [y[: system.p] for y in lifted]
    else:
        projected = [y[: system.p] for y in lifted if y[target] == 1]
    projected = [x for x in projected if any(x)]
    return MinimalSolutionSet(minimal_points(projected), homogeneous, bound)


def cone_hilbert_basis(g: Sequence[int], cap: int | None = None) -> MinimalSolutionSet:
    """Minimal generating set (Hilbert basis) of {x in N^p : g(x) >= 0}.

    The cone monoid is isomorphic to the equality monoid
    {(x, s) in N^(p+1) : g(x) - s = 0} via s = g(x); that monoid is closed
    under differences inside the product order, so its minimal generators
    are exactly its minimal nonzero elements.  Projecting the lifted
    antichain without re-minimalizing yields the Hilbert basis.
    """
    g = tuple(int(c) for c in g)
    p = len(g)
    if not 1 <= p <= MAX_DIMENSION:
        raise SemigroupError(f"dimension must be in [1, {MAX_DIMENSION}], got {p}")
    rows = [list(g) + [-1]]
    bound = _termination_bound(rows)
    lifted = _completion(rows, p + 1, None, bound, cap=cap)
    basis = sort_points(y[:p] for y in lifted)
    return MinimalSolutionSet(basis, True, bound)


def partition_by_slab(points: Iterable[Point], g: Sequence[int], b: int) -> dict:
    """Split points by g-value: key 0 holds the face g = 0, keys 1..b-1 the
    slabs, and key "high" everything with g >= b."""
    if b < 1:
        raise SemigroupError(f"modulus must be positive, got {b}")
    out: dict = {i: [] for i in range(b)}
    out["high"] = []
    for x in points:
        v = sum(c * w for c, w in zip(g, x))
        if v < 0:
            raise SemigroupError(f"point {x} has negative g-value {v}; not in the cone")
        out[v if v < b else "high"].append(x)
    return {k: sort_points(v) for k, v in out.items()}
