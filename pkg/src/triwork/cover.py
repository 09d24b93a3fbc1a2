"""Simple branched-cover lifting of trisected strata via permutation
monodromy: orbit counting, Riemann-Hurwitz bookkeeping, and the pullback
of the standard 4-ball trisection.

Sheets are labelled 1..d.  Every branch-point monodromy must be a
transposition (the covering is simple), so each branch point costs one
unit of Euler characteristic upstairs.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import chain

from .bridge import BridgeSurfaceData, PerturbationMove, perturb, \
    require_valid_bridge, surface_euler
from .params import RelTrisectionParams, STANDARD_B4, cyc, require_valid, \
    stabilize, validate_params


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..d}, stored as the image tuple (images[i-1] = s(i))."""

    images: tuple[int, ...]

    def __post_init__(self):
        d = len(self.images)
        if sorted(self.images) != list(range(1, d + 1)):
            raise ValueError(f"not a bijection of 1..{d}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition acting left: (s*t)(i) = s(t(i))."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def moved_points(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.degree + 1) if self(i) != i)

    def is_identity(self) -> bool:
        return not self.moved_points()

    def is_transposition(self) -> bool:
        return len(self.moved_points()) == 2

    def cycles(self):
        """Cycle decomposition including fixed points, sorted by minimum."""
        seen = set()
        out = []
        for i in range(1, self.degree + 1):
            if i in seen:
                continue
            cyc_pts = [i]
            seen.add(i)
            j = self(i)
            while j != i:
                cyc_pts.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc_pts))
        return out


def identity(d: int) -> Permutation:
    return Permutation(tuple(range(1, d + 1)))


def transposition(i: int, j: int, d: int) -> Permutation:
    if not (1 <= i <= d and 1 <= j <= d) or i == j:
        raise ValueError(f"bad transposition ({i} {j}) in degree {d}")
    images = list(range(1, d + 1))
    images[i - 1], images[j - 1] = j, i
    return Permutation(tuple(images))


def orbits(perms, degree: int):
    """Orbits of <perms> on {1..degree}, as a sorted tuple of sorted tuples."""
    parent = list(range(degree + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        if p.degree != degree:
            raise ValueError("permutation degree mismatch")
        for i in range(1, degree + 1):
            a, b = find(i), find(p(i))
            if a != b:
                parent[max(a, b)] = min(a, b)
    buckets = {}
    for i in range(1, degree + 1):
        buckets.setdefault(find(i), []).append(i)
    return tuple(tuple(sorted(v)) for _, v in sorted(buckets.items()))


@dataclass(frozen=True)
class MonodromyRep:
    """Simple, transitive monodromy: one transposition per branch meridian."""

    degree: int
    meridians: tuple[Permutation, ...]

    def __post_init__(self):
        for p in self.meridians:
            if p.degree != self.degree:
                raise ValueError("meridian degree mismatch")
            if not p.is_transposition():
                raise ValueError("covering not simple: meridian is not a transposition")
        if len(orbits(self.meridians, self.degree)) != 1:
            raise ValueError("monodromy not transitive")


def standard_rho(n: int) -> MonodromyRep:
    """Degree n+1 monodromy sending the k-th meridian to (k k+1)."""
    if n < 1:
        raise ValueError("need at least one branch disk")
    d = n + 1
    return MonodromyRep(degree=d,
                        meridians=tuple(transposition(k, k + 1, d)
                                        for k in range(1, n + 1)))


@dataclass(frozen=True)
class StratumLift:
    """Euler data of the preimage of one stratum."""

    euler_char: int
    components: int
    per_component_euler: tuple[int, ...]

    def __post_init__(self):
        if sum(self.per_component_euler) != self.euler_char:
            raise ValueError("per-component Euler characteristics do not sum")
        if self.components != len(self.per_component_euler):
            raise ValueError("component count mismatch")


def lift_stratum(chi: int, branch_point_perms, ambient_perms,
                 degree: int) -> StratumLift:
    """Lift a stratum of Euler characteristic chi through a simple cover.

    Each branch point (a transposition) has deficiency exactly 1, so the
    lift has Euler characteristic degree*chi - #branch points.  The
    components are the orbits of the ambient monodromy on the sheets;
    each branch point is charged to the single orbit its transposition
    moves (a transposition across two orbits would mean the ambient
    monodromy omitted a meridian, which is rejected).
    """
    branch_point_perms = tuple(branch_point_perms)
    ambient_perms = tuple(ambient_perms)
    for p in chain(branch_point_perms, ambient_perms):
        if p.degree != degree:
            raise ValueError("permutation degree mismatch")
    for p in branch_point_perms:
        if not p.is_transposition():
            raise ValueError("covering not simple: branch image is not a transposition")

    orbs = orbits(ambient_perms, degree)
    orbit_of = {}
    for idx, orb in enumerate(orbs):
        for sheet in orb:
            orbit_of[sheet] = idx
    charges = [0] * len(orbs)
    for p in branch_point_perms:
        i, j = p.moved_points()
        if orbit_of[i] != orbit_of[j]:
            raise ValueError(
                "branch transposition spans two ambient orbits; "
                "ambient monodromy is missing a meridian")
        charges[orbit_of[i]] += 1
    per = tuple(len(orb) * chi - c for orb, c in zip(orbs, charges))
    return StratumLift(euler_char=degree * chi - len(branch_point_perms),
                       components=len(orbs),
                       per_component_euler=per)


def boundary_product(rho: MonodromyRep) -> Permutation:
    """Monodromy of the boundary of the branch disk arrangement: the
    ordered product of the meridians, k = 1..n."""
    acc = identity(rho.degree)
    for p in rho.meridians:
        acc = p * acc
    return acc


def _expanded_branch_data(locus: BridgeSurfaceData, rho: MonodromyRep):
    """Per-stratum branch transposition lists for the standard-base pullback.

    Aggregate counts don't say which component carries the extra bridge
    points/patches/arcs, so the surplus is charged to the first
    component; with transitive monodromy every derived count is
    independent of that choice (multiplicities stay odd on the boundary
    product and orbits ignore multiplicity).
    """
    n = locus.braid_index
    mers = list(rho.meridians)
    sigma = [mers[0]] * (locus.bridge_points - (n - 1)) + mers[1:]
    sectors = []
    for lam in (1, 2, 3):
        extra = locus.patches[lam - 1] - n
        if extra < 0:
            raise ValueError("fewer patches than branch components in a sector")
        sectors.append([mers[0]] * (1 + extra) + mers[1:])
    walls = []
    for lam in (1, 2, 3):
        extra = locus.arcs[lam - 1] - n
        if extra < 0:
            raise ValueError("fewer arcs than branch components in a handlebody")
        walls.append([mers[0]] * (1 + extra) + mers[1:])
    page = mers
    return sigma, sectors, walls, page


def pullback_strata(locus: BridgeSurfaceData, rho: MonodromyRep):
    """StratumLift for every stratum of the pulled-back trisection of
    the standard 4-ball, keyed 'sigma', 'sector1..3', 'wall1..3', 'page'."""
    require_valid_bridge(locus)
    if locus.closed_ambient:
        raise ValueError("pullback base is the 4-ball; locus must be relative")
    if locus.braid_index < 1:
        raise ValueError("empty branch locus")
    if len(rho.meridians) != locus.braid_index:
        raise ValueError(
            f"monodromy has {len(rho.meridians)} meridians for "
            f"{locus.braid_index} branch components")
    sigma, sectors, walls, page = _expanded_branch_data(locus, rho)
    d = rho.degree
    out = {"sigma": lift_stratum(1, sigma, sigma, d)}
    for lam in (1, 2, 3):
        out[f"sector{lam}"] = lift_stratum(1, sectors[lam - 1], rho.meridians, d)
        out[f"wall{lam}"] = lift_stratum(1, walls[lam - 1], rho.meridians, d)
    out["page"] = lift_stratum(1, page, rho.meridians, d)
    return out


def pullback_trisection(base: RelTrisectionParams, locus: BridgeSurfaceData,
                        rho: MonodromyRep) -> RelTrisectionParams:
    """Parameters of the pullback of the standard 4-ball trisection.

    The central surface, sector, wall and page lifts are assembled from
    lift_stratum; the binding upstairs is the cover of the binding
    circle, i.e. the cycles of the ordered meridian product.
    """
    require_valid(base)
    if base != STANDARD_B4:
        raise ValueError("only the standard 4-ball base trisection is supported")
    lifts = pullback_strata(locus, rho)
    for key, lift in lifts.items():
        if lift.components != 1:
            raise ValueError(f"disconnected lift of stratum {key}")

    b_up = len(boundary_product(rho).cycles())
    chi_sigma = lifts["sigma"].euler_char
    if (2 - b_up - chi_sigma) % 2:
        raise ValueError("central surface lift has inconsistent Euler characteristic")
    g_up = (2 - b_up - chi_sigma) // 2

    chi_page = lifts["page"].euler_char
    if (2 - b_up - chi_page) % 2:
        raise ValueError("page lift has inconsistent Euler characteristic")
    p_up = (2 - b_up - chi_page) // 2

    k_up = tuple(1 - lifts[f"sector{lam}"].euler_char for lam in (1, 2, 3))

    # Wall lifts must be genus-g_up compression bodies over genus-p_up pages.
    for lam in (1, 2, 3):
        if lifts[f"wall{lam}"].euler_char != 2 - g_up - p_up - b_up:
            raise ValueError(f"wall {lam} lift inconsistent with central surface")
    # Riemann-Hurwitz at the 4-manifold level, via inclusion-exclusion.
    chi_total = (sum(1 - k for k in k_up)
                 - 3 * (2 - g_up - p_up - b_up) + chi_sigma)
    if chi_total != rho.degree - surface_euler(locus):
        raise ValueError("total-space Euler characteristic fails Riemann-Hurwitz")

    result = RelTrisectionParams(genus=g_up, k=k_up, page_genus=p_up,
                                 boundary_components=b_up)
    rep = validate_params(result)
    if not rep.valid:
        raise ValueError(f"pullback produced invalid parameters: {rep.violations}")
    return result


def perturbation_stabilization_check(locus: BridgeSurfaceData,
                                     rho: MonodromyRep, lam: int) -> bool:
    """Pulling back a sector-lam perturbed locus equals stabilizing the
    pullback in sector lam+1."""
    lhs = pullback_trisection(STANDARD_B4, perturb(locus, PerturbationMove(cyc(lam))), rho)
    rhs = stabilize(pullback_trisection(STANDARD_B4, locus, rho), cyc(lam + 1))
    return lhs == rhs
