"""Numerical verification of the one-variable model covering
f(x) = x^(n+1) - eps (n+1) x.

f is an (n+1)-sheeted covering of the plane, simply ramified over n
critical values; the checks below recover the ramification points, the
sheet count over regular values, the disk Euler characteristic by
Riemann-Hurwitz, and the branch monodromy by analytic continuation of
the fiber around each critical value.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from ..cover import Permutation, lift_stratum, orbits

MONODROMY_STEPS = 96
MAX_STEP_DOUBLINGS = 4


def critical_points(n: int, eps: float):
    """Exact ramification points: the n-th roots of eps."""
    r = eps ** (1.0 / n)
    return [r * cmath.exp(2j * math.pi * k / n) for k in range(n)]


def critical_values(n: int, eps: float):
    """f at the ramification points; these lie on a circle of radius
    n * eps^((n+1)/n)."""
    return [x ** (n + 1) - eps * (n + 1) * x for x in critical_points(n, eps)]


def fiber(n: int, eps: float, w: complex) -> np.ndarray:
    """All complex solutions of f(x) = w."""
    c = [0.0] * (n + 2)
    c[0] = 1.0
    c[-2] = -eps * (n + 1)
    c[-1] = -w
    return np.roots(c)


def _continue_fiber(current: np.ndarray, new: np.ndarray):
    """Match a transported fiber to the next root set; None if ambiguous.

    Minimum-cost assignment, accepted only when every matched move is
    well below the smallest separation inside the new fiber."""
    dist = np.abs(current[:, None] - new[None, :])
    rows, cols = linear_sum_assignment(dist)
    moved = float(dist[rows, cols].max())
    d = len(new)
    sep = min(abs(new[i] - new[j]) for i in range(d) for j in range(i + 1, d))
    if moved > 0.45 * sep:
        return None
    images = np.empty(d, dtype=int)
    images[rows] = cols
    return images


def _path_monodromy(n: int, eps: float, path):
    """Permutation of the base fiber after continuation along a closed
    w-path (path[0] == path[-1]); None when continuation is ambiguous."""
    base = fiber(n, eps, path[0])
    track = np.arange(len(base))  # track[i]: position of sheet i in `current`
    current = base.copy()
    for w in path[1:]:
        new = fiber(n, eps, w)
        images = _continue_fiber(current, new)
        if images is None:
            return None
        track = images[track]
        current = new
    closing = _continue_fiber(current, base)
    if closing is None:
        return None
    final = closing[track]
    return Permutation(tuple(int(j) + 1 for j in final))


def meridian_path(center: complex, radius: float, steps: int,
                  basepoint: complex = 0j):
    """Closed path from the basepoint: radial segment to the loop circle
    around center, one positive loop, and the segment back."""
    start = center * (1.0 - radius / abs(center))
    seg = [basepoint + (start - basepoint) * s / steps for s in range(steps + 1)]
    phase = cmath.phase(start - center)
    loop = [center + radius * cmath.exp(1j * (phase + 2.0 * math.pi * s / steps))
            for s in range(1, steps + 1)]
    return seg + loop + seg[::-1][1:]


def loop_monodromy(n: int, eps: float, k: int,
                   steps: int = MONODROMY_STEPS):
    """Fiber permutation of the meridian of the k-th critical value
    (0-based), based at the regular value w = 0; None if ambiguous.

    All meridians share the basepoint, so the returned permutations are
    comparable and generate the covering monodromy group.
    """
    vals = critical_values(n, eps)
    v = vals[k]
    others = [u for u in vals if abs(u - v) > 1e-12 * abs(v)]
    gap = min((abs(v - u) for u in others), default=abs(v))
    radius = 0.25 * min(gap, abs(v))
    return _path_monodromy(n, eps, meridian_path(v, radius, steps))


@dataclass(frozen=True)
class PolyCoverReport:
    n: int
    eps: float
    degree: int
    critical_point_error: float     # Hausdorff distance, numeric vs exact
    sheet_counts_ok: bool
    regular_values_tested: int
    rh_euler_char: int | None       # disk preimage chi, when monodromy resolved
    rh_components: int | None
    monodromy_simple: bool
    monodromy_transitive: bool
    monodromy_pairs: tuple          # moved pairs of each branch transposition

    @property
    def ok(self) -> bool:
        return (self.critical_point_error < 1e-10 and self.sheet_counts_ok
                and self.rh_euler_char == 1 and self.rh_components == 1
                and self.monodromy_simple and self.monodromy_transitive)


def polynomial_cover_check(n: int, eps: float, n_regular: int = 100,
                           seed: int = 0) -> PolyCoverReport:
    if n < 1:
        raise ValueError("need n >= 1 branch points")
    if eps <= 0:
        raise ValueError("degenerate slope")
    d = n + 1

    # (a) ramification points from root-finding on f'.
    dcoeffs = [float(d)] + [0.0] * (n - 1) + [-eps * d]
    numeric = np.roots(dcoeffs)
    exact = critical_points(n, eps)
    err = max(max(min(abs(x - e) for e in exact) for x in numeric),
              max(min(abs(x - e) for x in numeric) for e in exact))

    # (b) sheet count over random regular values.
    rng = np.random.default_rng(seed)
    vals = critical_values(n, eps)
    scale = max(abs(v) for v in vals) + 1.0
    counts_ok = True
    tested = 0
    while tested < n_regular:
        w = complex(*rng.uniform(-2.0 * scale, 2.0 * scale, size=2))
        if min(abs(w - v) for v in vals) < 1e-6 * scale:
            continue
        roots = fiber(n, eps, w)
        sep = min(abs(a - b) for i, a in enumerate(roots)
                  for b in roots[i + 1:])
        if len(roots) != d or sep < 1e-8:
            counts_ok = False
        tested += 1

    # (d) monodromy around each critical value by continuation from the
    # shared basepoint w = 0.
    meridians = []
    simple = True
    for k in range(n):
        perm = None
        steps = MONODROMY_STEPS
        for _ in range(MAX_STEP_DOUBLINGS):
            perm = loop_monodromy(n, eps, k, steps)
            if perm is not None:
                break
            steps *= 2
        if perm is None or not perm.is_transposition():
            simple = False
        else:
            meridians.append(perm)

    transitive = (len(meridians) == n
                  and len(orbits(meridians, d)) == 1)

    # (c) Riemann-Hurwitz for the disk preimage, fed by the measured
    # monodromy; requires a clean simple covering.
    if simple and len(meridians) == n:
        lift = lift_stratum(1, meridians, meridians, d)
        rh_chi, rh_comp = lift.euler_char, lift.components
    else:
        rh_chi, rh_comp = None, None

    return PolyCoverReport(
        n=n, eps=eps, degree=d,
        critical_point_error=float(err),
        sheet_counts_ok=counts_ok,
        regular_values_tested=tested,
        rh_euler_char=rh_chi,
        rh_components=rh_comp,
        monodromy_simple=simple,
        monodromy_transitive=transitive,
        monodromy_pairs=tuple(sorted(m.moved_points() for m in meridians)),
    )
