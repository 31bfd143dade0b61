import math

import pytest

from gamma3lab import (
    F1,
    F2,
    F3,
    BoundReport,
    RegionPoint,
    UnknownEdge,
    edge_maximum,
    global_bound,
    hessian_xy,
    interior_critical_points,
    is_negative_definite,
)
from gamma3lab import optimize as optimize_module
from gamma3lab.optimize import CertificationMismatch, _dense_grid_max, _edge_polynomial

X2 = (4 - math.sqrt(7)) / 6
Y2 = (47 - 14 * math.sqrt(7)) / 108


class TestInteriorCriticalPoints:
    def test_first_family_unique_point(self):
        points = interior_critical_points(F1, 0.05, 1e-12)
        assert len(points) == 1
        (p, v) = points[0]
        assert math.hypot(p.x - 0.25, p.y - 0.3125) <= 1e-9
        assert abs(v - 15.75) <= 1e-9

    def test_second_family_unique_point(self):
        points = interior_critical_points(F2, 0.05, 1e-12)
        assert len(points) == 1
        (p, v) = points[0]
        assert math.hypot(p.x - X2, p.y - Y2) <= 1e-9
        assert abs(v - 3.10518) <= 1e-5

    def test_third_family_unique_point(self):
        points = interior_critical_points(F3, 0.05, 1e-12)
        assert len(points) == 1
        (p, v) = points[0]
        assert math.hypot(p.x - 0.25, p.y - 0.3125) <= 1e-9
        assert abs(v - 17.75) <= 1e-9

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            interior_critical_points(F1, 0.2)
        with pytest.raises(ValueError):
            interior_critical_points(F1, 0.05, 1e-16)

    def test_hessian_negative_definite_at_maxima(self):
        for family in (F1, F2, F3):
            (p, _), = interior_critical_points(family, 0.05, 1e-12)
            assert is_negative_definite(hessian_xy(family, p.x, p.y))


class TestEdgeMaximum:
    def test_first_family_edges(self):
        t, v = edge_maximum(F1, "bottom")
        assert abs(v - (9 + 10 * math.sqrt(30) / 9)) <= 1e-9
        t, v = edge_maximum(F1, "left")
        assert abs(v - 46 / 3) <= 1e-9
        assert abs(t - 1 / 6) <= 1e-9
        t, v = edge_maximum(F1, "top")
        assert abs(v - 15.304035) <= 1e-4  # published decimal is rounded

    def test_second_family_edges(self):
        _, v = edge_maximum(F2, "bottom")
        assert abs(v - (2 + 4 * math.sqrt(6) / 9)) <= 1e-9
        t, v = edge_maximum(F2, "left")
        assert v == 3.0 and t == 0.0
        t, v = edge_maximum(F2, "top")
        assert abs(v - 2 * math.sqrt(2)) <= 1e-9
        assert abs(t - 1 / math.sqrt(2)) <= 1e-9

    def test_third_family_edges_shift_by_two(self):
        for edge in ("bottom", "left", "top"):
            t1, v1 = edge_maximum(F1, edge)
            t3, v3 = edge_maximum(F3, edge)
            assert abs(t1 - t3) <= 1e-9
            assert abs(v3 - v1 - 2.0) <= 1e-9

    def test_unknown_edge(self):
        with pytest.raises(UnknownEdge):
            edge_maximum(F1, "diagonal")

    def test_fitted_restrictions_match_hand_substitution(self):
        # substituting y=0, x=0 and y=1-x^2 into the objectives by hand
        expected = {
            ("F1", "bottom"): (15, 2, -12, 4),
            ("F1", "left"): (15, 4, -12),
            ("F1", "top"): (7, 22, -4, -16),
            ("F2", "bottom"): (3, 1, -3, 1),
            ("F2", "left"): (3, 0, -3),
            ("F2", "top"): (0, 6, 0, -4),
            ("F3", "bottom"): (17, 2, -12, 4),
            ("F3", "left"): (17, 4, -12),
            ("F3", "top"): (9, 22, -4, -16),
        }
        for family in (F1, F2, F3):
            for edge in ("bottom", "left", "top"):
                coeffs = _edge_polynomial(family, edge)
                target = expected[(family.tag, edge)]
                assert len(coeffs) == len(target)
                for got, want in zip(coeffs, target):
                    assert abs(got - want) <= 1e-9


class TestGlobalBound:
    def test_first_family_report(self):
        r = global_bound(F1)
        assert abs(r.global_max - 15.75) <= 1e-9
        assert f"{r.gamma3_bound:.12g}" == "0.328125"
        assert r.grid_max <= r.global_max + 1e-9

    def test_second_family_report(self):
        r = global_bound(F2)
        assert abs(r.gamma3_bound - 0.258765) <= 1e-6

    def test_third_family_report_documents_discrepancy(self):
        r = global_bound(F3)
        assert abs(r.global_max - 17.75) <= 1e-9
        assert abs(r.gamma3_bound - 17.75 / 48) <= 1e-9
        assert len(r.notes) == 1
        note = r.notes[0]
        assert "16x^3" in note and "20x^3" in note
        assert "17.304049" in note and "16.56455" in note

    def test_interior_dominates_edges(self):
        for family in (F1, F2, F3):
            r = global_bound(family)
            interior_best = max(v for _, v in r.interior_points)
            assert r.global_max == interior_best
            assert all(v < interior_best for _, _, v in r.edge_maxima)

    def test_grid_reproduces_global_max_closely(self):
        for family in (F1, F2, F3):
            r = global_bound(family)
            assert abs(r.grid_max - r.global_max) <= 1e-3

    def test_dense_grid_never_exceeds(self):
        for family in (F1, F2, F3):
            r = global_bound(family)
            assert _dense_grid_max(family) <= r.global_max + 1e-9


class TestBoundReportInvariants:
    def _valid_kwargs(self):
        r = global_bound(F1)
        return dict(
            family=r.family,
            interior_points=r.interior_points,
            edge_maxima=r.edge_maxima,
            global_max=r.global_max,
            gamma3_bound=r.gamma3_bound,
            grid_max=r.grid_max,
            notes=r.notes,
        )

    def test_global_max_must_match_candidates(self):
        kwargs = self._valid_kwargs()
        kwargs["global_max"] = kwargs["global_max"] + 0.5
        kwargs["gamma3_bound"] = kwargs["global_max"] / 48
        with pytest.raises(ValueError):
            BoundReport(**kwargs)

    def test_bound_must_match_scale(self):
        kwargs = self._valid_kwargs()
        kwargs["gamma3_bound"] = kwargs["gamma3_bound"] * 2
        with pytest.raises(ValueError):
            BoundReport(**kwargs)

    def test_grid_max_may_not_exceed(self):
        kwargs = self._valid_kwargs()
        kwargs["grid_max"] = kwargs["global_max"] + 1e-3
        with pytest.raises(ValueError):
            BoundReport(**kwargs)

    def test_certification_catches_a_lost_interior_maximum(self, monkeypatch):
        # if Newton ever failed to locate the interior maximum, the best edge
        # value would fall 0.4 below the dense sweep and certification fires
        monkeypatch.setattr(
            optimize_module, "interior_critical_points", lambda *a, **k: []
        )
        with pytest.raises(CertificationMismatch):
            optimize_module.global_bound(F1)
