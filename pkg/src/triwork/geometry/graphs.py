"""Exactly parametrized branch-locus components in C^2.

A graph surface is the image of a rectangle in the w = x + i y plane
under a holomorphic chart, rotated and translated:

    linear:  w |-> (-i eps w, w)
    cubic:   w |-> (i eps (w^3 - w), w)

The rotation acts on the column vector (z1, z2) by the real matrix
[[cos t, sin t], [-sin t, cos t]]; the translation is an arbitrary
vector of C^2, applied after the rotation.  Real parts are always
derived from the complex chart, never from separate real formulas.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from .qm import PointC2, PolyhedronQM, qm_membership, sector_of

log = logging.getLogger(__name__)

LINEAR = "linear"
CUBIC = "cubic"

#: Newton seeding grid per axis and the dedup radius as a fraction of the
#: domain diameter.
NEWTON_GRID = 32
NEWTON_MAX_ITER = 60
DEDUP_FACTOR = 1e-6


@dataclass(frozen=True)
class GraphSurface:
    """One parametrized branch-locus component."""

    kind: str
    epsilon: float
    theta: float = 0.0
    translation: tuple[complex, complex] = (0j, 0j)
    domain: tuple[float, float, float, float] = (-1.0, 1.0, -1.0, 1.0)
    pleated: bool = False

    def __post_init__(self):
        if self.kind not in (LINEAR, CUBIC):
            raise ValueError(f"unknown graph kind {self.kind!r}")
        if self.epsilon <= 0:
            raise ValueError("graph slope must be positive")
        xmin, xmax, ymin, ymax = self.domain
        if not (xmin < xmax and ymin < ymax):
            raise ValueError("empty parameter domain")

    # -- chart ---------------------------------------------------------

    def _raw(self, w):
        if self.kind == LINEAR:
            return -1j * self.epsilon * w, w
        return 1j * self.epsilon * (w ** 3 - w), w

    def _raw_derivative(self, w):
        if self.kind == LINEAR:
            return -1j * self.epsilon * np.ones_like(w), np.ones_like(w)
        return 1j * self.epsilon * (3.0 * w ** 2 - 1.0), np.ones_like(w)

    def _rotate(self, z1, z2):
        c, s = math.cos(self.theta), math.sin(self.theta)
        return c * z1 + s * z2, -s * z1 + c * z2

    def chart(self, w):
        """Complex pair (z1, z2); accepts scalars or numpy arrays."""
        z1, z2 = self._rotate(*self._raw(w))
        return z1 + self.translation[0], z2 + self.translation[1]

    def chart_derivative(self, w):
        return self._rotate(*self._raw_derivative(w))

    def contains_param(self, x: float, y: float, slack: float = 0.0) -> bool:
        xmin, xmax, ymin, ymax = self.domain
        return (xmin - slack <= x <= xmax + slack
                and ymin - slack <= y <= ymax + slack)

    def param_diameter(self) -> float:
        xmin, xmax, ymin, ymax = self.domain
        return math.hypot(xmax - xmin, ymax - ymin)


def graph_point(g: GraphSurface, x: float, y: float) -> PointC2:
    """Evaluate the chart at an in-domain parameter."""
    if not g.contains_param(x, y):
        raise ValueError(f"parameter ({x}, {y}) outside the declared domain")
    z1, z2 = g.chart(complex(x, y))
    return PointC2.from_complex(z1, z2)


def linear_family_member(k: int, M: float, R: float) -> GraphSurface:
    """The k-th disk of the standard family: slope 1/M, translated by
    (ikR, ikR), parametrized over |x| <= 1/M, |y| <= 1."""
    return GraphSurface(kind=LINEAR, epsilon=1.0 / M,
                        translation=(1j * k * R, 1j * k * R),
                        domain=(-1.0 / M, 1.0 / M, -1.0, 1.0))


PLEAT_WINDOW = (-2.0, 1.0, -2.0, 2.0)


def pleated_family_member(k: int, M: float, R: float, eps_prime: float,
                          theta: float) -> GraphSurface:
    """A pleated (cubic) disk: the pleat offset <0, 1+eps'> is rotated
    along with the surface, then shifted by the imaginary (ikR, ikR)."""
    c, s = math.cos(theta), math.sin(theta)
    off = complex(0.0), complex(1.0 + eps_prime)
    t = (c * off[0] + s * off[1] + 1j * k * R,
         -s * off[0] + c * off[1] + 1j * k * R)
    return GraphSurface(kind=CUBIC, epsilon=1.0 / M, theta=theta,
                        translation=t, domain=PLEAT_WINDOW, pleated=True)


def pleat_gain_sector(theta: float) -> int:
    """Sector whose patch count a pleat at this rotation increases.

    The extra patches of the cubic model sit along the image direction
    of (-1, 0) in the (x1, x2) plane; classify that direction.
    """
    c, s = math.cos(theta), math.sin(theta)
    d1, d2 = -c, s  # column action on (-1, 0)
    label = sector_of(PointC2(d1, 0.0, d2, 0.0), tol=1e-9)
    if not label.startswith("Z"):
        raise ValueError(f"rotation {theta} is not adapted to the sector walls")
    return int(label[1])


def pleat_theta_for_sector(lam: int) -> float:
    """Rotation angle (a multiple of 2 pi / 3) whose pleat gains a patch
    in sector lam."""
    for j in (1, 2, 3):
        theta = 2.0 * math.pi * j / 3.0
        if pleat_gain_sector(theta) == lam:
            return theta
    raise ValueError(f"no third-turn rotation targets sector {lam}")


# -- bridge points -----------------------------------------------------

@dataclass(frozen=True)
class BridgePoint:
    """A transverse intersection of the surface with the central plane."""

    param: tuple[float, float]
    point: PointC2
    residual: float
    margin: float        # |det| of the real 2x2 system in (x, y)


def bridge_points(g: GraphSurface, q: PolyhedronQM, tol: float = 1e-9,
                  grid: int = NEWTON_GRID):
    """All zeros of (Re z1, Re z2) on the parameter domain.

    Grid-seeded Newton iteration with deduplication; each returned point
    carries its residual and the transversality margin |det J| of the
    real 2x2 system (for holomorphic u, v the Jacobian of (Re u, Re v)
    in (x, y) is [[Re u', -Im u'], [Re v', -Im v']], so det =
    Im(u' conj v')).  Seeds that fail to converge are logged and
    skipped; points outside the polyhedron (beyond tol) are discarded.
    """
    xmin, xmax, ymin, ymax = g.domain
    xs = np.linspace(xmin, xmax, grid)
    ys = np.linspace(ymin, ymax, grid)
    wx, wy = np.meshgrid(xs, ys)
    w = (wx + 1j * wy).ravel()

    alive = np.ones(w.shape, dtype=bool)
    for _ in range(NEWTON_MAX_ITER):
        z1, z2 = g.chart(w)
        f1, f2 = np.real(z1), np.real(z2)
        du, dv = g.chart_derivative(w)
        a, b = np.real(du), -np.imag(du)
        c, d = np.real(dv), -np.imag(dv)
        det = a * d - b * c
        ok = np.abs(det) > 1e-300
        alive &= ok
        det_safe = np.where(ok, det, 1.0)
        dx = (d * f1 - b * f2) / det_safe
        dy = (-c * f1 + a * f2) / det_safe
        step = np.where(alive, dx + 1j * dy, 0.0)
        w = w - step
        if bool(np.all(np.abs(step) < 1e-15)):
            break

    z1, z2 = g.chart(w)
    res = np.hypot(np.real(z1), np.real(z2))
    converged = alive & (res < tol)
    n_failed = int(np.count_nonzero(~converged))
    if n_failed:
        log.debug("bridge_points: %d of %d seeds did not converge",
                  n_failed, w.size)

    dedup_radius = DEDUP_FACTOR * g.param_diameter()
    found: list[BridgePoint] = []
    order = np.argsort(res)
    for idx in order:
        if not converged[idx]:
            continue
        x, y = float(w[idx].real), float(w[idx].imag)
        if not g.contains_param(x, y, slack=dedup_radius):
            continue
        if any(math.hypot(x - bp.param[0], y - bp.param[1]) < dedup_radius
               for bp in found):
            continue
        point = PointC2.from_complex(complex(z1[idx]), complex(z2[idx]))
        if qm_membership(q, point).margin < -tol:
            continue
        du, dv = g.chart_derivative(w[idx])
        det = float(np.imag(du * np.conj(dv)))
        found.append(BridgePoint(param=(x, y), point=point,
                                 residual=float(res[idx]),
                                 margin=abs(det)))
    found.sort(key=lambda bp: bp.param)
    return found
