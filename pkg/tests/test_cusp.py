import math

import pytest

from triwork.geometry import cusp_analysis, discriminant, fold_point, \
    real_root_count


class TestLocalModel:
    def test_three_roots_inside(self):
        # z^3 - 3z factors as z (z^2 - 3)
        assert real_root_count(0.0, 3.0) == 3

    def test_one_root_outside(self):
        # z^3 + z = z (z^2 + 1)
        assert real_root_count(0.0, -1.0) == 1

    def test_two_roots_on_fold(self):
        # z^3 - 3z + 2 = (z - 1)^2 (z + 2)
        assert real_root_count(-2.0, 3.0) == 2

    def test_cusp_point(self):
        assert real_root_count(0.0, 0.0) == 1

    def test_discriminant_signs(self):
        assert discriminant(0.0, 3.0) > 0
        assert discriminant(0.0, -1.0) < 0
        assert discriminant(-2.0, 3.0) == 0

    def test_fold_parametrization(self):
        # (x, y) = (-2 t^3, 3 t^2) lies on the discriminant zero set and
        # carries the double root z = t
        for t in (0.5, 1.0, 1.7):
            x, y = fold_point(t)
            assert discriminant(x, y) == pytest.approx(0.0, abs=1e-12)
            assert t ** 3 - y * t - x == pytest.approx(0.0, abs=1e-12)
            assert real_root_count(x, y) == 2

    def test_counts_depend_only_on_discriminant_sign(self):
        # sweep rays: fiber count constant per sign region
        for r in (0.5, 1.0, 2.0):
            for deg in range(0, 360, 7):
                x = r * math.cos(math.radians(deg))
                y = r * math.sin(math.radians(deg))
                d = discriminant(x, y)
                if abs(d) < 1e-9:
                    continue
                assert real_root_count(x, y) == (3 if d > 0 else 1)


class TestCuspAnalysis:
    def test_default_report(self):
        rep = cusp_analysis(n_samples=4000, seed=3)
        assert rep.ok
        assert rep.interior.expected_fibers == 3
        assert rep.exterior.expected_fibers == 1
        assert rep.fold.expected_fibers == 2
        assert rep.interior.mismatches == 0
        assert rep.exterior.mismatches == 0
        assert rep.fold.mismatches == 0
        assert rep.cusp_point_fibers == 1
        assert rep.interior.samples + rep.exterior.samples <= 4000

    def test_seed_changes_samples_not_verdict(self):
        a = cusp_analysis(n_samples=2000, seed=1)
        b = cusp_analysis(n_samples=2000, seed=2)
        assert a.ok and b.ok
        assert (a.interior.samples, a.exterior.samples) != \
            (b.interior.samples, b.exterior.samples)

    def test_explicit_samples(self):
        rep = cusp_analysis(samples=[(0.0, 3.0), (0.0, -1.0), (1.0, 2.0)])
        assert rep.ok
        assert rep.interior.samples + rep.exterior.samples == 3
