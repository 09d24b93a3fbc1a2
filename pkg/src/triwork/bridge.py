"""Counting data for (relative) bridge-trisected surfaces and the
bridge-perturbation move.

Conventions for a surface with boundary in the 4-ball: the surface meets
the central surface in 2b + n points (b the bridge index, n the braid
index of the boundary), and each of the n braid strands contributes one
tangle endpoint per handlebody, so every handlebody carries b + n arcs.
"""
from __future__ import annotations

from dataclasses import dataclass

from .params import Triple, ValidationReport, cyc


@dataclass(frozen=True)
class BridgeSurfaceData:
    """Per-stratum counts of a surface in (relative) bridge position."""

    braid_index: int          # n; 0 for a closed ambient surface
    bridge_index: int         # b
    bridge_points: int        # |K ∩ Σ|
    arcs: Triple              # tangle components per handlebody
    patches: Triple           # disk components per sector
    closed_ambient: bool = False


@dataclass(frozen=True)
class PerturbationMove:
    """A finger perturbation through the wall opposite sector+1."""

    sector: int

    def __post_init__(self):
        if self.sector not in (1, 2, 3):
            raise ValueError("perturbation sector must be 1, 2 or 3")


def validate_bridge(s: BridgeSurfaceData) -> ValidationReport:
    """Check the point/arc count invariants; report-style, never raises."""
    bad = []
    for name in ("braid_index", "bridge_index", "bridge_points"):
        if getattr(s, name) < 0:
            bad.append(f"{name} < 0")
    if any(a < 0 for a in s.arcs):
        bad.append("negative arc count")
    if any(c < 0 for c in s.patches):
        bad.append("negative patch count")
    if bad:
        return ValidationReport.from_violations(bad)

    if s.closed_ambient:
        if s.braid_index != 0:
            bad.append("closed surface carries a braid index")
        if s.bridge_points != 2 * s.bridge_index:
            bad.append("bridge_points != 2b")
        for lam in (1, 2, 3):
            if 2 * s.arcs[lam - 1] != s.bridge_points:
                bad.append(f"2*arcs[{lam}] != bridge_points")
    else:
        if s.bridge_points != 2 * s.bridge_index + s.braid_index:
            bad.append("bridge_points != 2b + n")
        # One boundary endpoint per strand per handlebody (n_d = n).
        for lam in (1, 2, 3):
            if 2 * s.arcs[lam - 1] != s.bridge_points + s.braid_index:
                bad.append(f"2*arcs[{lam}] != bridge_points + n")
    return ValidationReport.from_violations(bad)


def require_valid_bridge(s: BridgeSurfaceData) -> None:
    rep = validate_bridge(s)
    if not rep.valid:
        raise ValueError(f"invalid bridge data: {', '.join(rep.violations)}")


def trivial_disks(n: int) -> BridgeSurfaceData:
    """n unknotted disks, one bridge point each, no perturbations."""
    if n < 1:
        raise ValueError("need at least one disk")
    return BridgeSurfaceData(braid_index=n, bridge_index=0, bridge_points=n,
                             arcs=(n, n, n), patches=(n, n, n))


def perturb(s: BridgeSurfaceData, m: PerturbationMove) -> BridgeSurfaceData:
    """Apply a sector-lam finger perturbation.

    The bridge index grows by 1 (two new bridge points), every
    handlebody gains one arc, and the sector opposite the pleated wall
    -- sector lam+1 -- gains one patch.  The braid index never changes.
    """
    require_valid_bridge(s)
    gain = cyc(m.sector + 1)
    patches = tuple(s.patches[i] + (1 if i == gain - 1 else 0) for i in range(3))
    return BridgeSurfaceData(
        braid_index=s.braid_index,
        bridge_index=s.bridge_index + 1,
        bridge_points=s.bridge_points + 2,
        arcs=tuple(a + 1 for a in s.arcs),
        patches=patches,
        closed_ambient=s.closed_ambient,
    )


def surface_euler(s: BridgeSurfaceData) -> int:
    """Euler characteristic of the surface from its stratum counts.

    Inclusion-exclusion over the closed strata: patches are disks, arcs
    and points are contractible, and for surfaces with boundary the
    braid cells cancel (see the cell-count oracle in the tests).
    """
    require_valid_bridge(s)
    return s.bridge_points - sum(s.arcs) + sum(s.patches)
