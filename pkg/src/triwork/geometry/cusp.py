"""Fiber counting for the local pleat model {x = z^3 - y z}.

Projecting out z, the model maps onto the (x, y) plane with a fold
along the semicubical curve (x, y) = (-2t^3, 3t^2) and a cusp at the
origin.  The number of real solutions z of z^3 - y z - x = 0 is decided
by the discriminant 4 y^3 - 27 x^2: three inside the cusp, one outside,
two on the fold away from the origin.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

#: relative half-width of the fold band in discriminant units
FOLD_BAND = 1e-9


def discriminant(x, y):
    return 4.0 * y ** 3 - 27.0 * x ** 2


def fold_point(t: float):
    """The critical image, parametrized so the double root is z = t."""
    return (-2.0 * t ** 3, 3.0 * t ** 2)


def real_root_count(x: float, y: float, merge_tol: float = 1e-6) -> int:
    """Distinct real solutions z of z^3 - y z - x = 0.

    Nearly-equal real roots (within merge_tol relative to the root
    scale) are merged so fold points report two fibers.
    """
    roots = np.roots([1.0, 0.0, -y, -x])
    scale = max(1.0, float(np.abs(roots).max()))
    real = sorted(float(r.real) for r in roots
                  if abs(r.imag) <= merge_tol * scale)
    merged = []
    for r in real:
        if not merged or r - merged[-1] > merge_tol * scale:
            merged.append(r)
    return len(merged)


@dataclass(frozen=True)
class RegionCount:
    expected_fibers: int
    samples: int
    mismatches: int


@dataclass(frozen=True)
class CuspReport:
    interior: RegionCount
    exterior: RegionCount
    fold: RegionCount
    cusp_point_fibers: int
    fold_parametrization_residual: float
    band: float

    @property
    def ok(self) -> bool:
        return (self.interior.mismatches == 0
                and self.exterior.mismatches == 0
                and self.fold.mismatches == 0
                and self.interior.expected_fibers == 3
                and self.exterior.expected_fibers == 1
                and self.fold.expected_fibers == 2
                and self.cusp_point_fibers == 1
                and self.fold_parametrization_residual < 1e-12)


def cusp_analysis(n_samples: int = 10_000, seed: int = 0, box: float = 3.0,
                  band: float = FOLD_BAND, n_fold: int = 100,
                  samples=None) -> CuspReport:
    """Count fibers over sampled (x, y), classified by discriminant sign.

    Samples default to a seeded uniform draw from [-box, box]^2; an
    explicit (m, 2) array overrides them.  Samples landing within the
    band around the discriminant zero set are classified as fold, never
    as interior/exterior.  Fold samples are generated on the critical
    image away from the origin.
    """
    if samples is None:
        rng = np.random.default_rng(seed)
        pts = rng.uniform(-box, box, size=(n_samples, 2))
    else:
        pts = np.asarray(samples, dtype=float).reshape(-1, 2)
    disc = discriminant(pts[:, 0], pts[:, 1])
    disc_scale = np.maximum(1.0, np.abs(pts[:, 0]) ** 2 + np.abs(pts[:, 1]) ** 3)

    int_n = int_bad = ext_n = ext_bad = 0
    for (x, y), d, s in zip(pts, disc, disc_scale):
        if abs(d) <= band * s:
            continue  # fold band: excluded from the open regions
        count = real_root_count(float(x), float(y))
        if d > 0:
            int_n += 1
            int_bad += count != 3
        else:
            ext_n += 1
            ext_bad += count != 1

    fold_bad = 0
    resid = 0.0
    ts = np.linspace(0.3, box ** 0.5 / 3.0 ** 0.5, n_fold)
    for t in ts:
        x, y = fold_point(float(t))
        resid = max(resid, abs(discriminant(x, y)))
        fold_bad += real_root_count(x, y) != 2

    return CuspReport(
        interior=RegionCount(3, int_n, int_bad),
        exterior=RegionCount(1, ext_n, ext_bad),
        fold=RegionCount(2, len(ts), fold_bad),
        cusp_point_fibers=real_root_count(0.0, 0.0),
        fold_parametrization_residual=float(resid),
        band=band,
    )
