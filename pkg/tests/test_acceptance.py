"""Acceptance gate: one test per criterion, one PASS/FAIL line each.

Each test prints a single summary line and enforces the stated time limit
where one applies.  The line is emitted with output capture suspended so
it shows up in any pytest run, not only with ``-s``.  Everything asserted
here is exact: set equality on integer tuples, never approximate
comparison.
"""

import time
from contextlib import contextmanager

import pytest

from propmod.core import ModularInequality, dominates, sort_points
from propmod.diophantine import DiophSystem, cone_hilbert_basis, minimal_solutions
from propmod.frobenius import definition_check, frobenius_vectors
from propmod.general import minimal_generators_general
from propmod.oracle import Window, brute_members, closure_in_window
from propmod.plane import minimal_generators
from propmod.properties import is_buchsbaum, is_cohen_macaulay, is_gorenstein
from propmod.rays import numerical_min_gens, restrict_to_ray, strip_geometry

from conftest import ALLTRUE_GENS, WORKED_GENS
from corpus import CORPUS, MIXED, NONPOSITIVE, POSITIVE, make


_CAPTURE = None


@pytest.fixture(autouse=True)
def _capture_handle(capfd):
    # lets the summary line reach the terminal despite fd-level capture
    global _CAPTURE
    _CAPTURE = capfd
    yield
    _CAPTURE = None


def _report(line: str) -> None:
    if _CAPTURE is None:
        print(line, flush=True)
    else:
        with _CAPTURE.disabled():
            print(line, flush=True)


@contextmanager
def criterion(number: int, label: str, limit: float | None = None):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        _report(f"ACCEPTANCE {number} [{label}]: FAIL")
        raise
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed > limit:
        _report(f"ACCEPTANCE {number} [{label}]: FAIL ({elapsed:.2f}s > {limit:.0f}s)")
        pytest.fail(f"criterion {number} exceeded its {limit:.0f}s limit: {elapsed:.2f}s")
    timing = f", {elapsed:.2f}s" if limit is not None else ""
    _report(f"ACCEPTANCE {number} [{label}]: PASS{timing}")


def test_criterion_1_worked_example_generators():
    with criterion(1, "worked example generators, < 1 s", limit=1.0):
        gens = minimal_generators(ModularInequality((3, -2), (1, -3), 11))
        assert set(gens.points) == WORKED_GENS
        assert len(gens.points) == 13


def test_criterion_2_alltrue_generators_and_properties():
    with criterion(2, "eleven generators + all three properties true, < 1 s",
                   limit=1.0):
        ineq = ModularInequality((7, -1), (1, -14), 5)
        gens = minimal_generators(ineq)
        assert set(gens.points) == ALLTRUE_GENS
        assert len(gens.points) == 11
        assert is_cohen_macaulay(ineq)[0] is True
        assert is_gorenstein(ineq)[0] is True
        assert is_buchsbaum(ineq) == (True, True)


def test_criterion_3_frobenius_reproduction():
    with criterion(3, "Frobenius vector (9,1) with translates, < 1 s", limit=1.0):
        ineq = ModularInequality((3, 2), (1, -1), 10)
        geo = strip_geometry(ineq)
        assert geo.period == (2, 2)
        assert geo.crossing == (10, 0)
        report = frobenius_vectors(ineq)
        assert report.minimal == ((9, 1),)
        for lam in (1, 2):
            shifted = (9 + 2 * lam, 1 + 2 * lam)
            assert definition_check(ineq, shifted)


def test_criterion_4_intermediate_objects():
    with criterion(4, "worked example intermediates u, u~, w, axis generators"):
        ineq = ModularInequality((3, -2), (1, -3), 11)
        geo = strip_geometry(ineq)
        assert geo.period == (33, 11)
        assert geo.axis_gen == (4, 0)
        assert geo.crossing == (11, 0)
        ray = restrict_to_ray(ineq, (1, 0))
        assert numerical_min_gens(ray.a_prime, ray.b, ray.c_prime) == (4, 5, 11)


def test_criterion_5_oracle_equivalence_suite():
    label = f"oracle equivalence over {len(CORPUS)} inequalities, < 60 s"
    with criterion(5, label, limit=60.0):
        assert len(CORPUS) >= 40
        assert POSITIVE and MIXED and NONPOSITIVE
        assert all(-15 <= c <= 15 for f, g, b in CORPUS for c in f + g)
        assert all(2 <= b <= 12 for _, _, b in CORPUS)
        window = Window((60, 60))
        for entry in CORPUS:
            ineq = make(entry)
            plane_gens = minimal_generators(ineq)
            general_gens = minimal_generators_general(ineq)
            assert (sort_points(plane_gens.points)
                    == sort_points(general_gens.points)), entry
            members = brute_members(ineq, window) | {(0, 0)}
            assert closure_in_window(plane_gens.points, window) == members, entry
            for i, s in enumerate(plane_gens.points):
                others = plane_gens.points[:i] + plane_gens.points[i + 1:]
                assert s not in closure_in_window(others, Window(s)), (entry, s)


def test_criterion_6_three_dimensional_check():
    with criterion(6, "5x+2y+z mod 4 <= 3x+y-4z closure on [0,12]^3, < 120 s",
                   limit=120.0):
        ineq = ModularInequality((5, 2, 1), (3, 1, -4), 4)
        gens = minimal_generators_general(ineq)
        window = Window((12, 12, 12))
        members = brute_members(ineq, window) | {(0, 0, 0)}
        assert closure_in_window(gens.points, window) == members


def test_criterion_7_invariant_suites():
    with criterion(7, "invariant suites over the corpus"):
        for entry in MIXED:
            ineq = make(entry)
            geo = strip_geometry(ineq)
            u = geo.period
            # translation invariance along the period
            for x in range(0, 30, 3):
                for y in range(0, 30, 3):
                    assert (ineq.member((x, y))
                            == ineq.member((x + u[0], y + u[1]))), entry
        for entry in CORPUS:
            ineq = make(entry)
            # half-space membership: g(x) >= b forces x into S
            for x in range(0, 40, 2):
                for y in range(0, 40, 2):
                    if ineq.g_of((x, y)) >= ineq.b:
                        assert ineq.member((x, y)), entry
        for entry in MIXED + POSITIVE:
            f, g, b = entry
            # Dickson minimality of the solver antichains; the cone basis is
            # an antichain once the slack coordinate g(x) is restored
            lifted = [s + (sum(c * v for c, v in zip(g, s)),)
                      for s in cone_hilbert_basis(g).points]
            assert all(not dominates(s, t)
                       for s in lifted for t in lifted if s != t), entry
            face = minimal_solutions(
                DiophSystem(p=2, equalities=((g, 0),),
                            congruences=((f, 0, b),))).points
            assert all(not dominates(s, t)
                       for s in face for t in face if s != t), entry
            slab = minimal_solutions(
                DiophSystem(p=2, equalities=((g, 1),),
                            congruences=((f, 1, b),))).points
            assert all(not dominates(s, t)
                       for s in slab for t in slab if s != t), entry
        for entry in MIXED + POSITIVE:
            ineq = make(entry)
            # gorenstein implies cohen_macaulay
            if is_gorenstein(ineq)[0]:
                assert is_cohen_macaulay(ineq)[0], entry
        for entry in MIXED:
            # uniqueness of a minimal Frobenius vector in the strip case
            report = frobenius_vectors(make(entry))
            assert len(report.minimal) == (1 if report.delta else 0), entry
        window = Window((40, 40))
        for entry in MIXED:
            ineq = make(entry)
            gens = minimal_generators(ineq).points
            # closure semigroup equals S: every window gap fails some step
            for z in window.points():
                if ineq.member(z):
                    continue
                assert not all(ineq.member((z[0] + s[0], z[1] + s[1]))
                               for s in gens), (entry, z)
