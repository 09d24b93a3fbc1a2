import pytest
from hypothesis import given, strategies as st

from triwork.bridge import (BridgeSurfaceData, PerturbationMove, perturb,
                            surface_euler, trivial_disks, validate_bridge)

from oracles import cell_euler_bridge_surface


def valid_relative_data():
    """Valid relative bridge data reached by perturbing trivial disks."""
    def build(args):
        n, moves = args
        s = trivial_disks(n)
        for lam in moves:
            s = perturb(s, PerturbationMove(lam))
        return s
    return st.tuples(st.integers(1, 5),
                     st.lists(st.integers(1, 3), max_size=5)).map(build)


CLOSED_SPHERE = BridgeSurfaceData(braid_index=0, bridge_index=1,
                                  bridge_points=2, arcs=(1, 1, 1),
                                  patches=(1, 1, 1), closed_ambient=True)


class TestValidate:
    def test_trivial_disks(self):
        s = trivial_disks(3)
        assert s.bridge_points == 3 and s.arcs == (3, 3, 3)
        assert validate_bridge(s).valid

    def test_closed_unknotted_sphere(self):
        assert validate_bridge(CLOSED_SPHERE).valid

    def test_point_count_mismatch(self):
        s = BridgeSurfaceData(braid_index=2, bridge_index=0, bridge_points=3,
                              arcs=(2, 2, 2), patches=(2, 2, 2))
        rep = validate_bridge(s)
        assert not rep.valid
        assert "bridge_points != 2b + n" in rep.violations

    def test_arc_count_mismatch(self):
        s = BridgeSurfaceData(braid_index=1, bridge_index=1, bridge_points=3,
                              arcs=(2, 2, 1), patches=(1, 1, 2))
        rep = validate_bridge(s)
        assert "2*arcs[3] != bridge_points + n" in rep.violations


class TestPerturb:
    def test_single_disk_sector_three(self):
        s = perturb(trivial_disks(1), PerturbationMove(3))
        assert (s.bridge_index, s.bridge_points) == (1, 3)
        assert s.patches == (2, 1, 1)   # sector after the move gains the patch
        assert s.arcs == (2, 2, 2)

    def test_two_successive_sector_three(self):
        s = trivial_disks(1)
        for _ in range(2):
            s = perturb(s, PerturbationMove(3))
        assert (s.bridge_index, s.bridge_points) == (2, 5)
        assert s.patches == (3, 1, 1)

    @given(valid_relative_data(), st.integers(1, 3))
    def test_braid_index_fixed_and_counts(self, s, lam):
        t = perturb(s, PerturbationMove(lam))
        assert t.braid_index == s.braid_index
        assert t.bridge_points == s.bridge_points + 2
        gained = [t.patches[i] - s.patches[i] for i in range(3)]
        assert sorted(gained) == [0, 0, 1]
        assert gained[lam % 3] == 1  # cyclic successor sector

    @given(valid_relative_data(), st.integers(1, 3))
    def test_validity_preserved(self, s, lam):
        assert validate_bridge(perturb(s, PerturbationMove(lam))).valid

    def test_closed_case(self):
        t = perturb(CLOSED_SPHERE, PerturbationMove(1))
        assert t.bridge_points == 4 and t.arcs == (2, 2, 2)
        assert t.patches == (1, 2, 1)
        assert validate_bridge(t).valid

    def test_invalid_input_rejected(self):
        bad = BridgeSurfaceData(1, 0, 2, (1, 1, 1), (1, 1, 1))
        with pytest.raises(ValueError):
            perturb(bad, PerturbationMove(1))


class TestSurfaceEuler:
    def test_frozen_values(self):
        # Expected values computed with the full cell-count oracle.
        assert cell_euler_bridge_surface(2, (1, 1, 1), (1, 1, 1), 0, True) == 2
        assert surface_euler(CLOSED_SPHERE) == 2
        for n in (1, 2, 5):
            s = trivial_disks(n)
            assert cell_euler_bridge_surface(
                s.bridge_points, s.arcs, s.patches, n, False) == n
            assert surface_euler(s) == n

    def test_perturbed_disk(self):
        s = perturb(trivial_disks(1), PerturbationMove(3))
        assert surface_euler(s) == 1

    @given(valid_relative_data(), st.integers(1, 3))
    def test_perturb_preserves_euler(self, s, lam):
        assert surface_euler(perturb(s, PerturbationMove(lam))) == surface_euler(s)

    @given(valid_relative_data())
    def test_matches_cell_oracle(self, s):
        assert surface_euler(s) == cell_euler_bridge_surface(
            s.bridge_points, s.arcs, s.patches, s.braid_index, False)
