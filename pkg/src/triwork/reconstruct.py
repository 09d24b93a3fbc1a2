"""Reducibility data, prime splitting, reconstruction of the inner
domain from spine data, and the glued boundary-distance function.

The glue function combines three per-sector evaluators G_lam >= 0, each
vanishing exactly on its sector's target set, into the upper
semicontinuous envelope: G_lam on the open sector, max(G_lam, G_{lam-1})
on the wall H_lam, and max of all three on the central stratum.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .geometry.qm import CLASSIFY_TOL, PointC2, phi, sector_candidates
from .homology import (SpineEncoding, TrisectionDiagram, lattice_contains,
                       spine_equal)
from .params import (RelTrisectionParams, Triple, TrisectionParams,
                     connected_sum, require_valid, validate_params)


@dataclass(frozen=True)
class ReducibleTrisection:
    """A trisection presented as a connected sum along a reducing curve.

    delta is the curve's homology class (zero for separating curves);
    the summands realize the parameters as a connected sum.
    """

    params: TrisectionParams
    delta: tuple[int, ...]
    summands: tuple[TrisectionParams, TrisectionParams]

    def __post_init__(self):
        if connected_sum(*self.summands) != self.params:
            raise ValueError("summands do not realize the parameters")
        if len(self.delta) != 2 * self.params.genus:
            raise ValueError("reducing class lives in the wrong lattice")


def make_reducible(a: TrisectionParams, b: TrisectionParams) -> ReducibleTrisection:
    """Connected sum of two trisections, reducible along the separating
    (nullhomologous) curve of the sum decomposition."""
    require_valid(a)
    require_valid(b)
    total = connected_sum(a, b)
    return ReducibleTrisection(params=total,
                               delta=(0,) * (2 * total.genus),
                               summands=(a, b))


def reducibility_necessary(d: TrisectionDiagram, delta) -> bool:
    """Necessary homological condition for delta to bound a disk in all
    three handlebodies: membership in the integer span of every cut
    system.  Not sufficient; a True answer only says "possibly reducible
    along delta"."""
    delta = tuple(int(x) for x in delta)
    if len(delta) != 2 * d.genus:
        raise ValueError("class lives on a surface of different genus")
    return all(lattice_contains(system, delta) for system in d.cut_systems)


@dataclass(frozen=True)
class SplittingData:
    """Per-sector splitting k_lam = j1_lam + j2_lam of the handle counts."""

    j1: Triple
    j2: Triple

    def __post_init__(self):
        if any(x < 0 for x in self.j1 + self.j2):
            raise ValueError("splitting entries must be non-negative")

    def splits(self, params: TrisectionParams) -> bool:
        return all(self.j1[i] + self.j2[i] == params.k[i] for i in range(3))


@dataclass(frozen=True)
class ReconstructionResult:
    z_params: RelTrisectionParams
    z_sector_ranks: Triple
    spine: Optional[SpineEncoding]
    verdict: str   # "diffeomorphic-by-spine" | "indeterminate"

    def __post_init__(self):
        if self.z_sector_ranks != self.z_params.k:
            raise ValueError("sector ranks disagree with parameters")
        if self.verdict not in ("diffeomorphic-by-spine", "indeterminate"):
            raise ValueError(f"unknown verdict {self.verdict!r}")


def reconstruct_Z(r: ReducibleTrisection, s: SplittingData,
                  rel_base: RelTrisectionParams,
                  spine_z: Optional[SpineEncoding] = None,
                  spine_b: Optional[SpineEncoding] = None) -> ReconstructionResult:
    """Assemble the inner domain's parameters from a splitting.

    Each sector of the inner domain is a 1-handlebody of rank j2_lam;
    its boundary data (genus, page, binding) comes from the ambient
    relative base.  The verdict is "diffeomorphic-by-spine" only when
    both spines are supplied and agree; spine equality is sufficient for
    diffeomorphism, so nothing stronger is ever claimed.
    """
    require_valid(rel_base)
    if not s.splits(r.params):
        raise ValueError("splitting does not sum to the trisection's handle counts")
    z_params = RelTrisectionParams(genus=rel_base.genus, k=s.j2,
                                   page_genus=rel_base.page_genus,
                                   boundary_components=rel_base.boundary_components)
    rep = validate_params(z_params)
    if not rep.valid:
        raise ValueError(f"splitting yields invalid parameters: {rep.violations}")
    verdict = "indeterminate"
    if spine_z is not None and spine_b is not None and spine_equal(spine_z, spine_b):
        verdict = "diffeomorphic-by-spine"
    return ReconstructionResult(z_params=z_params, z_sector_ranks=s.j2,
                                spine=spine_z, verdict=verdict)


def complementary_splitting(s: SplittingData) -> SplittingData:
    return SplittingData(j1=s.j2, j2=s.j1)


# ---------------------------------------------------------------------------
# The glued boundary function.

Evaluator = Callable[[PointC2], float]


@dataclass(frozen=True)
class ShilovGlue:
    """Three non-negative per-sector evaluators plus a classifier band."""

    evaluators: tuple[Evaluator, Evaluator, Evaluator]
    tol: float = CLASSIFY_TOL


def qm_model_glue(tol: float = CLASSIFY_TOL) -> ShilovGlue:
    """The built-in model: G_lam = max(phi_lam, -phi_{lam-1}, 0),
    vanishing exactly on the closed sector lam."""
    def make(lam):
        def g(p: PointC2) -> float:
            return max(phi(lam, p), -phi(lam - 1 if lam > 1 else 3, p), 0.0)
        return g
    return ShilovGlue(evaluators=(make(1), make(2), make(3)), tol=tol)


def grid_glue(x1_axis, x2_axis, values, tol: float = CLASSIFY_TOL) -> ShilovGlue:
    """Evaluators interpolated bilinearly from sampled grids.

    values is a triple of 2d arrays over (x1_axis, x2_axis); the fields
    may only depend on the real parts, matching the built-in model.
    """
    import numpy as np

    x1_axis = np.asarray(x1_axis, dtype=float)
    x2_axis = np.asarray(x2_axis, dtype=float)
    grids = [np.asarray(v, dtype=float) for v in values]
    if len(grids) != 3:
        raise ValueError("need one sampled grid per sector")
    for g in grids:
        if g.shape != (x1_axis.size, x2_axis.size):
            raise ValueError("grid shape disagrees with its axes")
        if (g < 0).any():
            raise ValueError("glue evaluators must be non-negative")

    def make(grid):
        def g(p: PointC2) -> float:
            i = np.clip(np.searchsorted(x1_axis, p.x1) - 1, 0, x1_axis.size - 2)
            j = np.clip(np.searchsorted(x2_axis, p.x2) - 1, 0, x2_axis.size - 2)
            tx = (p.x1 - x1_axis[i]) / (x1_axis[i + 1] - x1_axis[i])
            ty = (p.x2 - x2_axis[j]) / (x2_axis[j + 1] - x2_axis[j])
            tx = min(max(tx, 0.0), 1.0)
            ty = min(max(ty, 0.0), 1.0)
            return float((1 - tx) * (1 - ty) * grid[i, j]
                         + tx * (1 - ty) * grid[i + 1, j]
                         + (1 - tx) * ty * grid[i, j + 1]
                         + tx * ty * grid[i + 1, j + 1])
        return g
    return ShilovGlue(evaluators=tuple(make(g) for g in grids), tol=tol)


def shilov_glue_eval(glue: ShilovGlue, p: PointC2) -> float:
    """Evaluate the glued function: the max of the evaluators of every
    stratum candidate at p (upper semicontinuous envelope)."""
    cands = sector_candidates(p, glue.tol)
    return max(glue.evaluators[lam - 1](p) for lam in cands)
