"""Bridge-position certification for families of graph surfaces, and the
containment check for the straightening isotopy of the linear family.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..bridge import (BridgeSurfaceData, PerturbationMove, perturb,
                      trivial_disks, validate_bridge)
from ..params import cyc
from .graphs import (GraphSurface, BridgePoint, bridge_points,
                     pleat_gain_sector)
from .qm import PolyhedronQM
from .trace import GRID_ARCS, GRID_PATCHES, patch_components, tangle_trace

#: pairwise bridge-point separation required, as a multiple of tol
SEPARATION_FACTOR = 1e3


@dataclass(frozen=True)
class BridgeCertificate:
    """Measured stratum counts for a family, against declared ones."""

    valid: bool
    points: tuple[BridgePoint, ...]
    arcs: tuple[int, int, int]        # per handlebody H_lam
    patches: tuple[int, int, int]     # per sector Z_lam
    declared: BridgeSurfaceData
    measured: BridgeSurfaceData
    tolerance: float
    min_margin: float
    min_separation: float
    ambiguous_cells: int
    failures: tuple[str, ...]


def declared_bridge_data(family) -> BridgeSurfaceData:
    """Bridge data a family should produce: one trivial disk per member,
    perturbed once per pleated member in the sector its rotation selects."""
    members = list(family)
    if not members:
        raise ValueError("empty family")
    data = trivial_disks(len(members))
    for g in members:
        if g.pleated:
            gain = pleat_gain_sector(g.theta)
            data = perturb(data, PerturbationMove(cyc(gain - 1)))
    return data


def certify_bridge_position(family, q: PolyhedronQM, R: float,
                            tol: float = 1e-9,
                            grid_arcs: int = GRID_ARCS,
                            grid_patches: int = GRID_PATCHES) -> BridgeCertificate:
    """Measure bridge points, wall arcs and sector patches of a family
    and compare with the declared counts.

    R is the family's declared spacing scale and is informational only;
    separation is measured directly.  The certificate fails when any
    Newton residual exceeds tol, any transversality margin falls below
    tol, the family's bridge points come closer than tol * 1e3 to one
    another, or a measured count disagrees with the declaration.
    """
    members = list(family)
    declared = declared_bridge_data(members)
    failures = []

    all_points: list[BridgePoint] = []
    arcs = [0, 0, 0]
    patches = [0, 0, 0]
    ambiguous = 0
    for g in members:
        pts = bridge_points(g, q, tol=tol)
        all_points.extend(pts)
        for lam in (1, 2, 3):
            # H_lam is the wall inside {phi_{lam-1} = 0}.
            t = tangle_trace(g, cyc(lam - 1), grid_n=grid_arcs, wall_only=True)
            arcs[lam - 1] += t.components
            ambiguous += t.ambiguous_cells
            patches[lam - 1] += patch_components(g, lam, grid_n=grid_patches)

    min_margin = min((bp.margin for bp in all_points), default=math.inf)
    if any(bp.residual >= tol for bp in all_points):
        failures.append("bridge-point residual above tolerance")
    if min_margin < tol:
        failures.append("transversality margin below tolerance")

    min_sep = math.inf
    for i in range(len(all_points)):
        for j in range(i + 1, len(all_points)):
            a, b = all_points[i].point, all_points[j].point
            d = math.dist(a.as_tuple(), b.as_tuple())
            min_sep = min(min_sep, d)
    if min_sep < tol * SEPARATION_FACTOR:
        failures.append("family bridge points are not separated")

    measured = BridgeSurfaceData(
        braid_index=len(members),
        bridge_index=(len(all_points) - len(members)) // 2
        if len(all_points) >= len(members) else 0,
        bridge_points=len(all_points),
        arcs=tuple(arcs),
        patches=tuple(patches),
    )
    if not validate_bridge(measured).valid:
        failures.append("measured counts violate bridge invariants")
    if measured != declared:
        failures.append("measured counts disagree with declared bridge data")

    return BridgeCertificate(
        valid=not failures,
        points=tuple(all_points),
        arcs=tuple(arcs),
        patches=tuple(patches),
        declared=declared,
        measured=measured,
        tolerance=tol,
        min_margin=min_margin,
        min_separation=min_sep,
        ambiguous_cells=ambiguous,
        failures=tuple(failures),
    )


@dataclass(frozen=True)
class IsotopyResult:
    ok: bool
    first_violation: tuple | None = None


def isotopy_check(g: GraphSurface, q: PolyhedronQM,
                  samples: int = 10_000) -> IsotopyResult:
    """Sample the straightening homotopy of a linear family member and
    verify containment.

    At time t the member k (slope 1/M, offset kR) is carried to

        (y/M, (t-1) x/M + kR, x, (1-t) y + t M + (1-t) k R)

    over |x|, |y| <= 1/M; every t < 1 sample must lie in the polyhedron
    and every t = 1 sample on its face {y2 = M}.
    """
    if g.kind != "linear":
        raise ValueError("the straightening isotopy applies to linear members")
    M = q.M
    kR = g.translation[1].imag
    n = max(2, round(samples ** (1.0 / 3.0)))
    coords = np.linspace(-1.0 / M, 1.0 / M, n)
    x, y = np.meshgrid(coords, coords, indexing="ij")
    for t in np.linspace(0.0, 1.0, n):
        x1 = y / M
        y1 = (t - 1.0) * x / M + kR
        x2 = x
        y2 = (1.0 - t) * y + t * M + (1.0 - t) * kR
        if t < 1.0:
            bad = ((np.abs(x1) > 1.0 / M) | (np.abs(x2) > 1.0 / M)
                   | (np.abs(y1) > M) | (np.abs(y2) > M))
        else:
            bad = y2 != M
        if bad.any():
            i, j = map(int, np.argwhere(bad)[0])
            sample = (float(x1[i, j]), float(y1[i, j]),
                      float(x2[i, j]), float(y2[i, j]))
            return IsotopyResult(ok=False, first_violation=(
                float(t), float(x[i, j]), float(y[i, j]), sample))
    return IsotopyResult(ok=True)
