import itertools

import pytest
from hypothesis import given, strategies as st

from triwork.bridge import PerturbationMove, perturb, surface_euler, trivial_disks
from triwork.cover import (MonodromyRep, Permutation, boundary_product,
                           identity, lift_stratum, orbits,
                           perturbation_stabilization_check, pullback_strata,
                           pullback_trisection, standard_rho, transposition)
from triwork.params import RelTrisectionParams, STANDARD_B4, validate_params

from oracles import orbits_brute, riemann_hurwitz_disk


class TestPermutation:
    def test_bijectivity_enforced(self):
        with pytest.raises(ValueError):
            Permutation((1, 1, 3))

    def test_compose_and_inverse(self):
        s = transposition(1, 2, 3)
        t = transposition(2, 3, 3)
        st_ = s * t
        assert [st_(i) for i in (1, 2, 3)] == [2, 3, 1]
        assert (st_ * st_.inverse()).is_identity()

    def test_cycles(self):
        p = Permutation((2, 3, 1, 4))
        assert p.cycles() == [(1, 2, 3), (4,)]

    def test_is_transposition(self):
        assert transposition(2, 5, 6).is_transposition()
        assert not identity(4).is_transposition()


class TestOrbits:
    def test_matches_brute_force(self):
        cases = [
            ([transposition(1, 2, 4)], 4),
            ([transposition(1, 2, 4), transposition(3, 4, 4)], 4),
            ([Permutation((2, 3, 1, 5, 4))], 5),
            ([], 3),
        ]
        for perms, d in cases:
            assert orbits(perms, d) == orbits_brute([p.images for p in perms], d)


class TestStandardRho:
    def test_small_cases(self):
        r1 = standard_rho(1)
        assert r1.degree == 2 and r1.meridians[0].moved_points() == (1, 2)
        r2 = standard_rho(2)
        assert r2.degree == 3
        assert [m.moved_points() for m in r2.meridians] == [(1, 2), (2, 3)]

    def test_transitivity_checked(self):
        assert len(orbits(standard_rho(3).meridians, 4)) == 1
        with pytest.raises(ValueError):
            standard_rho(0)
        with pytest.raises(ValueError):
            MonodromyRep(4, (transposition(1, 2, 4), transposition(1, 2, 4)))

    def test_non_transposition_rejected(self):
        with pytest.raises(ValueError):
            MonodromyRep(3, (Permutation((2, 3, 1)),))


class TestLiftStratum:
    def test_disk_standard_cover(self):
        for n in range(1, 6):
            rho = standard_rho(n)
            lift = lift_stratum(1, rho.meridians, rho.meridians, n + 1)
            assert lift.euler_char == riemann_hurwitz_disk(n + 1, n) == 1
            assert lift.components == 1

    def test_disjoint_double_cover_of_sphere(self):
        lift = lift_stratum(2, [], [], 2)
        assert lift.euler_char == 4
        assert lift.components == 2
        assert lift.per_component_euler == (2, 2)

    def test_two_branch_points_degree_three(self):
        perms = [transposition(1, 2, 3), transposition(2, 3, 3)]
        lift = lift_stratum(1, perms, perms, 3)
        assert lift.euler_char == 1 and lift.components == 1

    def test_intransitive_charging(self):
        # Two orbits {1,2} and {3,4}; each branch point charges its own.
        branch = [transposition(1, 2, 4), transposition(3, 4, 4),
                  transposition(3, 4, 4)]
        lift = lift_stratum(1, branch, branch, 4)
        assert lift.components == 2
        assert lift.euler_char == 4 - 3
        # Double disk cover with one branch point is a disk (chi 1), with
        # two branch points an annulus (chi 0).
        assert sorted(lift.per_component_euler) == [0, 1]

    def test_spanning_transposition_rejected(self):
        ambient = [transposition(1, 2, 4), transposition(3, 4, 4)]
        with pytest.raises(ValueError):
            lift_stratum(1, [transposition(2, 3, 4)], ambient, 4)

    def test_non_simple_rejected(self):
        with pytest.raises(ValueError):
            lift_stratum(1, [Permutation((2, 3, 1))], [], 3)

    @given(st.integers(1, 6), st.integers(-2, 2))
    def test_unbranched_transitive(self, n, chi):
        rho = standard_rho(n)
        lift = lift_stratum(chi, [], rho.meridians, n + 1)
        assert lift.components == 1
        assert lift.euler_char == (n + 1) * chi


def expected_pullback(n, pleats_by_sector):
    """Riemann-Hurwitz closed form for the standard family: genus =
    total pleats, k_lam = patches gained in sector lam, page 0, binding 1."""
    total = sum(pleats_by_sector)
    k = tuple(pleats_by_sector[i] for i in range(3))
    return RelTrisectionParams(total, k, 0, 1)


def pleated_locus(n, moves):
    s = trivial_disks(n)
    for lam in moves:
        s = perturb(s, PerturbationMove(lam))
    return s


class TestPullback:
    def test_unperturbed_family_is_standard(self):
        for n in range(1, 6):
            got = pullback_trisection(STANDARD_B4, trivial_disks(n),
                                      standard_rho(n))
            assert got == STANDARD_B4

    def test_single_sector3_pleat(self):
        locus = pleated_locus(1, [3])
        got = pullback_trisection(STANDARD_B4, locus, standard_rho(1))
        assert got == RelTrisectionParams(1, (1, 0, 0), 0, 1)

    def test_iterated_sector3_pleats(self):
        for m in range(1, 4):
            for n in (1, 2, 3):
                locus = pleated_locus(n, [3] * m)
                got = pullback_trisection(STANDARD_B4, locus, standard_rho(n))
                # Cross-check with the Riemann-Hurwitz closed form.
                gains = [m, 0, 0]  # sector-3 moves gain sector 1
                assert got == expected_pullback(n, gains)
                chi_sigma = (n + 1) - locus.bridge_points
                assert chi_sigma == 1 - 2 * got.genus

    def test_all_single_and_double_pleat_combinations(self):
        for n in (1, 2, 3):
            for moves in itertools.product((1, 2, 3), repeat=2):
                locus = pleated_locus(n, list(moves))
                gains = [0, 0, 0]
                for lam in moves:
                    gains[lam % 3] += 1
                got = pullback_trisection(STANDARD_B4, locus, standard_rho(n))
                assert got == expected_pullback(n, gains)
                assert validate_params(got).valid

    def test_intransitive_style_rho_with_two_boundary_circles(self):
        # Two disks, both meridians (1 2): the double cover of the 4-ball
        # branched over two disks, an S^1 x B^3.
        rho = MonodromyRep(2, (transposition(1, 2, 2), transposition(1, 2, 2)))
        got = pullback_trisection(STANDARD_B4, trivial_disks(2), rho)
        assert got == RelTrisectionParams(0, (1, 1, 1), 0, 2)

    def test_meridian_count_mismatch(self):
        with pytest.raises(ValueError):
            pullback_trisection(STANDARD_B4, trivial_disks(2), standard_rho(1))

    def test_nonstandard_base_rejected(self):
        base = RelTrisectionParams(1, (0, 0, 0), 0, 1)
        with pytest.raises(ValueError):
            pullback_trisection(base, trivial_disks(1), standard_rho(1))

    def test_total_space_riemann_hurwitz(self):
        for n in (1, 2, 4):
            for moves in ([], [1], [2, 2], [1, 2, 3]):
                locus = pleated_locus(n, moves)
                rho = standard_rho(n)
                lifts = pullback_strata(locus, rho)
                chi_total = (sum(lifts[f"sector{l}"].euler_char for l in (1, 2, 3))
                             - sum(lifts[f"wall{l}"].euler_char for l in (1, 2, 3))
                             + lifts["sigma"].euler_char)
                assert chi_total == rho.degree * 1 - surface_euler(locus)

    def test_boundary_product_is_full_cycle(self):
        for n in range(1, 6):
            prod = boundary_product(standard_rho(n))
            assert len(prod.cycles()) == 1


class TestPerturbationStabilization:
    def test_paper_cases(self):
        assert perturbation_stabilization_check(trivial_disks(1),
                                                standard_rho(1), 3)
        assert perturbation_stabilization_check(trivial_disks(2),
                                                standard_rho(2), 1)

    def test_exhaustive_small(self):
        for n in range(1, 5):
            rho = standard_rho(n)
            for lam in (1, 2, 3):
                assert perturbation_stabilization_check(trivial_disks(n),
                                                        rho, lam)

    def test_from_already_perturbed_loci(self):
        for n in (1, 2):
            rho = standard_rho(n)
            for prior in itertools.product((1, 2, 3), repeat=2):
                locus = pleated_locus(n, list(prior))
                for lam in (1, 2, 3):
                    assert perturbation_stabilization_check(locus, rho, lam)
