"""Ring-theoretic verdicts: Apery windows and the three finite criteria."""

import pytest

from propmod.core import ModularInequality, UnsupportedCase
from propmod.properties import (
    apery_intersection,
    is_buchsbaum,
    is_cohen_macaulay,
    is_gorenstein,
    property_report,
    s_order_leq,
)
from propmod.rays import strip_geometry

from corpus import MIXED, POSITIVE, label, make

WORKED_MAXIMAL = {(34, 7), (36, 10), (38, 10), (39, 9), (39, 10)}


class TestAperyIntersection:
    def test_alltrue(self, alltrue):
        ap = apery_intersection(alltrue)
        assert ap.period == (70, 5)
        assert ap.axis_generator == (3, 0)
        assert len(ap.elements) == 15
        assert ap.maximal == ((62, 4),)

    def test_frobcase(self, frobcase):
        ap = apery_intersection(frobcase)
        assert set(ap.elements) == {(0, 0), (3, 1), (5, 0), (6, 1),
                                    (7, 0), (8, 1), (10, 0), (13, 1)}
        assert ap.maximal == ((13, 1),)

    def test_worked(self, worked):
        ap = apery_intersection(worked)
        assert len(ap.elements) == 44
        assert set(ap.maximal) == WORKED_MAXIMAL

    def test_free_ray_strip(self):
        # S restricted to the axis: the intersection collapses to the origin
        ap = apery_intersection(ModularInequality((11, 0), (1, -3), 11))
        assert ap.elements == ((0, 0),)
        assert ap.maximal == ((0, 0),)

    def test_elements_are_members_missing_both_steps(self, worked):
        ap = apery_intersection(worked)
        u, ut = ap.period, ap.axis_generator
        for h in ap.elements:
            assert worked.member(h)
            assert not worked.member((h[0] - u[0], h[1] - u[1]))
            assert not worked.member((h[0] - ut[0], h[1] - ut[1]))

    @pytest.mark.parametrize("entry", MIXED[:8], ids=label)
    def test_members_outside_the_window_reach_back(self, entry):
        # beyond the Apery window every member has a member u- or axis-step back
        ineq = make(entry)
        geo = strip_geometry(ineq)
        u, ut = geo.period, geo.axis_gen
        ap = set(apery_intersection(ineq).elements)
        for x in range(46):
            for y in range(46):
                if not ineq.member((x, y)) or (x, y) in ap:
                    continue
                assert (ineq.member((x - u[0], y - u[1]))
                        or ineq.member((x - ut[0], y - ut[1])))


class TestSemigroupOrder:
    def test_reflexive_and_translation(self, worked):
        assert s_order_leq(worked, (4, 0), (4, 0))
        assert s_order_leq(worked, (4, 0), (8, 0))
        assert not s_order_leq(worked, (8, 0), (4, 0))

    def test_transitive_on_samples(self, worked):
        chain = [(0, 0), (4, 0), (9, 0), (13, 0)]
        for a, b, c in zip(chain, chain[1:], chain[2:]):
            assert s_order_leq(worked, a, b) and s_order_leq(worked, b, c)
            assert s_order_leq(worked, a, c)


class TestVerdicts:
    def test_alltrue_all_true(self, alltrue):
        report = property_report(alltrue)
        assert (report.cohen_macaulay, report.gorenstein, report.buchsbaum) \
            == (True, True, True)

    def test_worked(self, worked):
        report = property_report(worked)
        assert report.cohen_macaulay is True
        assert report.gorenstein is False
        assert report.buchsbaum is True
        assert set(report.witnesses["apery_maximal"]) == WORKED_MAXIMAL

    def test_frobcase_gorenstein(self, frobcase):
        ok, maximal = is_gorenstein(frobcase)
        assert ok and maximal == ((13, 1),)

    def test_positive_with_gaps(self):
        ineq = ModularInequality((1, 2), (1, 1), 3)
        cm, witness = is_cohen_macaulay(ineq)
        assert not cm and witness == (0, 1)
        assert is_gorenstein(ineq) == (False, ())
        assert is_buchsbaum(ineq) == (None, None)

    def test_positive_without_gaps_all_true(self):
        ineq = ModularInequality((5, 3), (15, 2), 2)
        report = property_report(ineq)
        assert (report.cohen_macaulay, report.gorenstein, report.buchsbaum) \
            == (True, True, True)

    def test_nonpositive_unsupported(self):
        with pytest.raises(UnsupportedCase):
            property_report(ModularInequality((1, 1), (-1, -1), 7))

    @pytest.mark.parametrize("entry", MIXED + POSITIVE, ids=label)
    def test_gorenstein_implies_cohen_macaulay(self, entry):
        ineq = make(entry)
        if is_gorenstein(ineq)[0]:
            assert is_cohen_macaulay(ineq)[0]

    @pytest.mark.parametrize("entry", MIXED, ids=label)
    def test_strip_always_cm_and_buchsbaum(self, entry):
        ineq = make(entry)
        assert is_cohen_macaulay(ineq)[0] is True
        assert is_buchsbaum(ineq) == (True, True)
