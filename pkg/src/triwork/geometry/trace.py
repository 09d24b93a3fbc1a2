"""Implicit-curve tracing and region counting on parameter grids.

tangle_trace extracts the level set {phi_lam(G(x, y)) = 0} over a graph
surface's parameter rectangle with a marching-squares pass and counts
its connected components; with wall gating it keeps only the portion
lying in the handlebody wall inside {phi_lam = 0} (the wall between
sectors lam and lam+1), which is what the tangle counts of a bridge
certificate need.  patch_components flood-fills the open sector regions
{phi_lam < 0 < phi_{lam-1}}.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from .graphs import GraphSurface
from .qm import phi_values

#: grid defaults; pleated members need the fine grid to resolve the
#: near-wall tongues (width ~ 2/M at the default scales).
GRID_ARCS = 256
GRID_PATCHES = 512

# Crossed cell-edge pairs per corner-sign case.  Edges 0..3 are bottom,
# right, top, left; bit k of the case index is corner k of the cell in
# the order (i,j), (i+1,j), (i+1,j+1), (i,j+1), with x along axis 0.
_CASES = {
    1: [(3, 0)], 2: [(0, 1)], 3: [(3, 1)], 4: [(1, 2)],
    6: [(0, 2)], 7: [(3, 2)], 8: [(2, 3)], 9: [(0, 2)],
    11: [(1, 2)], 12: [(1, 3)], 13: [(0, 1)], 14: [(3, 0)],
}
_AMBIGUOUS = {5, 10}


@dataclass(frozen=True)
class LevelTrace:
    """Connected components of a traced level set."""

    components: int
    polylines: tuple
    ambiguous_cells: int

    @property
    def coarse_flag(self) -> bool:
        return self.ambiguous_cells > 0


def _edge_key(i, j, edge):
    """Global id of the grid edge a cell-local edge 0..3 sits on."""
    if edge == 0:
        return (i, j, "h")
    if edge == 1:
        return (i + 1, j, "v")
    if edge == 2:
        return (i, j + 1, "h")
    return (i, j, "v")


def _crossing(key, f, xs, ys):
    """Zero crossing on a grid edge by linear interpolation."""
    i, j, kind = key
    if kind == "h":
        a, b = f[i, j], f[i + 1, j]
        t = a / (a - b)
        return (xs[i] + t * (xs[i + 1] - xs[i]), ys[j])
    a, b = f[i, j], f[i, j + 1]
    t = a / (a - b)
    return (xs[i], ys[j] + t * (ys[j + 1] - ys[j]))


def trace_level_set(f: np.ndarray, xs: np.ndarray, ys: np.ndarray,
                    keep: np.ndarray = None) -> LevelTrace:
    """Marching squares over node values f[i, j] at (xs[i], ys[j]).

    Exact zeros on nodes count as positive so the sign field is total.
    Ambiguous (saddle) cells are resolved by the sign of the corner
    average and counted; a nonzero count flags a too-coarse grid.  When
    a node mask `keep` is given, cells with an excluded corner produce
    no segments (the level set is clipped to the kept region).
    """
    pos = f >= 0.0
    adjacency: dict = {}
    ambiguous = 0

    changed = ~((pos[:-1, :-1] == pos[1:, :-1])
                & (pos[:-1, :-1] == pos[1:, 1:])
                & (pos[:-1, :-1] == pos[:-1, 1:]))
    if keep is not None:
        changed &= (keep[:-1, :-1] & keep[1:, :-1]
                    & keep[1:, 1:] & keep[:-1, 1:])
    for i, j in zip(*np.nonzero(changed)):
        idx = ((1 if pos[i, j] else 0) | (2 if pos[i + 1, j] else 0)
               | (4 if pos[i + 1, j + 1] else 0) | (8 if pos[i, j + 1] else 0))
        if idx in _AMBIGUOUS:
            ambiguous += 1
            center = (f[i, j] + f[i + 1, j] + f[i + 1, j + 1] + f[i, j + 1]) >= 0
            if (idx == 5) == center:
                pairs = [(3, 2), (0, 1)]
            else:
                pairs = [(3, 0), (1, 2)]
        else:
            pairs = _CASES[idx]
        for e0, e1 in pairs:
            k0, k1 = _edge_key(i, j, e0), _edge_key(i, j, e1)
            adjacency.setdefault(k0, []).append(k1)
            adjacency.setdefault(k1, []).append(k0)

    polylines = []
    seen: set = set()
    for start in sorted(adjacency):
        if start in seen:
            continue
        comp = set()
        stack = [start]
        while stack:
            k = stack.pop()
            if k in comp:
                continue
            comp.add(k)
            stack.extend(n for n in adjacency[k] if n not in comp)
        seen |= comp
        ends = sorted(k for k in comp if len(adjacency[k]) == 1)
        walk = [ends[0] if ends else min(comp)]
        prev = None
        while True:
            options = [n for n in adjacency[walk[-1]] if n != prev]
            if not options:
                break
            prev = walk[-1]
            nxt = options[0]
            if nxt == walk[0]:
                walk.append(nxt)  # close the loop
                break
            if nxt in walk:
                break
            walk.append(nxt)
        polylines.append(np.array([_crossing(k, f, xs, ys) for k in walk]))
    return LevelTrace(components=len(polylines), polylines=tuple(polylines),
                      ambiguous_cells=ambiguous)


def _member_grid(g: GraphSurface, grid_n: int):
    xmin, xmax, ymin, ymax = g.domain
    xs = np.linspace(xmin, xmax, grid_n + 1)
    ys = np.linspace(ymin, ymax, grid_n + 1)
    w = xs[:, None] + 1j * ys[None, :]
    z1, z2 = g.chart(w)
    return xs, ys, z1, z2


def _qm_mask(q, z1, z2):
    inv, m = 1.0 / q.M, q.M
    return ((np.abs(np.real(z1)) <= inv) & (np.abs(np.real(z2)) <= inv)
            & (np.abs(np.imag(z1)) <= m) & (np.abs(np.imag(z2)) <= m))


def _gate_split(polyline: np.ndarray, g: GraphSurface, lam: int,
                min_run: int = 3) -> int:
    """Count maximal sub-arcs of a level polyline satisfying the wall
    gates phi_{lam+1} <= 0 <= phi_{lam-1} strictly at the vertices.

    Runs shorter than min_run vertices are discarded: a genuine arc
    spans many grid cells, while interpolation jitter next to a bridge
    point (where all three functionals vanish) can flip a lone vertex.
    """
    z1, z2 = g.chart(polyline[:, 0] + 1j * polyline[:, 1])
    f = phi_values(np.real(z1), np.real(z2))
    ok = (f[lam % 3] <= 0.0) & (f[(lam - 2) % 3] >= 0.0)
    runs = 0
    length = 0
    for flag in ok:
        if flag:
            length += 1
        else:
            runs += length >= min_run
            length = 0
    runs += length >= min_run
    # A closed loop sampled as first == last: a run wrapping the seam is
    # counted twice; merge it.
    if (len(polyline) > 2 and np.allclose(polyline[0], polyline[-1])
            and ok[0] and ok[-1] and not ok.all() and runs > 1):
        runs -= 1
    return int(runs)


def tangle_trace(g: GraphSurface, lam: int, grid_n: int = GRID_ARCS,
                 wall_only: bool = False, q=None):
    """Trace {phi_lam(G(x, y)) = 0} over the parameter rectangle.

    With q given the level set is clipped to the polyhedron (pleated
    members are certified on their full declared window instead, since
    only a thin band of a pleat meets the polyhedron).  With wall_only
    the component count is replaced by the number of arcs lying in the
    wall between sectors lam and lam+1 (the polylines still show the
    full level set).
    """
    if grid_n < 64:
        raise ValueError("grid too coarse for tangle tracing")
    lam = ((lam - 1) % 3) + 1
    xs, ys, z1, z2 = _member_grid(g, grid_n)
    f = phi_values(np.real(z1), np.real(z2))[lam - 1]
    keep = None if q is None else _qm_mask(q, z1, z2)
    full = trace_level_set(f, xs, ys, keep=keep)
    if not wall_only:
        return full
    count = sum(_gate_split(p, g, lam) for p in full.polylines if len(p) >= 2)
    return LevelTrace(components=count, polylines=full.polylines,
                      ambiguous_cells=full.ambiguous_cells)


def patch_components(g: GraphSurface, lam: int,
                     grid_n: int = GRID_PATCHES) -> int:
    """Components of the open sector region {phi_lam < 0 < phi_{lam-1}}
    on the parameter grid, by 4-connected flood fill."""
    lam = ((lam - 1) % 3) + 1
    _, _, z1, z2 = _member_grid(g, grid_n)
    f = phi_values(np.real(z1), np.real(z2))
    mask = (f[lam - 1] < 0.0) & (f[(lam - 2) % 3] > 0.0)
    structure = np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]])
    _, count = ndimage.label(mask, structure=structure)
    return int(count)
