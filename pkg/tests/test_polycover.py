import math

import pytest

from triwork.cover import orbits
from triwork.geometry import loop_monodromy, polynomial_cover_check
from triwork.geometry.polycover import critical_points, critical_values, fiber

from oracles import riemann_hurwitz_disk


class TestCriticalData:
    def test_n2_unit_slope(self):
        # f = x^3 - 3x, critical points are the square roots of 1
        pts = sorted(critical_points(2, 1.0), key=lambda z: z.real)
        assert pts[0] == pytest.approx(-1.0)
        assert pts[1] == pytest.approx(1.0)

    def test_n1_critical_point(self):
        # f = x^2 - 2 eps x has the single critical point x = eps
        assert critical_points(1, 0.7)[0] == pytest.approx(0.7)

    def test_critical_values_on_circle(self):
        n, eps = 4, 0.5
        vals = critical_values(n, eps)
        r = n * eps ** ((n + 1) / n)
        for v in vals:
            assert abs(v) == pytest.approx(r)

    def test_fiber_at_zero_for_n2(self):
        # x^3 - 3x = 0 has roots 0, +-sqrt(3)
        roots = sorted(fiber(2, 1.0, 0.0), key=lambda z: z.real)
        assert roots[0] == pytest.approx(-math.sqrt(3))
        assert roots[1] == pytest.approx(0.0)
        assert roots[2] == pytest.approx(math.sqrt(3))


class TestMonodromy:
    def test_meridians_are_transpositions_and_transitive(self):
        for n in (2, 3, 4):
            mers = [loop_monodromy(n, 1.0, k) for k in range(n)]
            assert all(m is not None and m.is_transposition() for m in mers)
            assert len(orbits(mers, n + 1)) == 1

    def test_meridian_product_is_full_cycle(self):
        # The boundary of a big disk containing all branch points winds
        # the fiber in a single (n+1)-cycle, like the standard chain.
        n = 3
        mers = [loop_monodromy(n, 0.1, k) for k in range(n)]
        prod = mers[0]
        for m in mers[1:]:
            prod = m * prod
        assert len(prod.cycles()) == 1


class TestFullCheck:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    @pytest.mark.parametrize("eps", [0.1, 1.0])
    def test_model_covering(self, n, eps):
        rep = polynomial_cover_check(n, eps)
        assert rep.critical_point_error < 1e-10
        assert rep.sheet_counts_ok
        assert rep.regular_values_tested == 100
        assert rep.rh_euler_char == riemann_hurwitz_disk(n + 1, n) == 1
        assert rep.rh_components == 1
        assert rep.monodromy_simple and rep.monodromy_transitive
        assert rep.ok

    def test_degenerate_slope_rejected(self):
        with pytest.raises(ValueError):
            polynomial_cover_check(2, 0.0)
        with pytest.raises(ValueError):
            polynomial_cover_check(0, 1.0)
