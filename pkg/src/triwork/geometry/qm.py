"""The model polyhedron in C^2, its trisecting functionals, and the
stratum classifier.

Coordinates are z_j = x_j + i y_j.  The polyhedron is |x_j| <= 1/M,
|y_j| <= M for a scale M > 1.  The three functionals

    phi_1 = x_2,  phi_2 = -sqrt(3) x_1 - x_2,  phi_3 = sqrt(3) x_1 - x_2

cut the (x_1, x_2) square into three 120-degree sectors; sector lam is
{max(phi_lam, -phi_{lam-1}) <= 0}.  Handlebody walls are labelled by
H_lam = Z_{lam-1} meet Z_lam, which lies in {phi_{lam-1} = 0}.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

SQRT3 = math.sqrt(3.0)

#: default tolerance band for stratum classification
CLASSIFY_TOL = 1e-7


@dataclass(frozen=True)
class PointC2:
    """A point of C^2 in real coordinates (x1, y1, x2, y2)."""

    x1: float
    y1: float
    x2: float
    y2: float

    def __post_init__(self):
        for v in (self.x1, self.y1, self.x2, self.y2):
            if not math.isfinite(v):
                raise ValueError("coordinates must be finite")

    @classmethod
    def from_complex(cls, z1: complex, z2: complex) -> "PointC2":
        return cls(z1.real, z1.imag, z2.real, z2.imag)

    @property
    def z1(self) -> complex:
        return complex(self.x1, self.y1)

    @property
    def z2(self) -> complex:
        return complex(self.x2, self.y2)

    def as_tuple(self):
        return (self.x1, self.y1, self.x2, self.y2)


@dataclass(frozen=True)
class PolyhedronQM:
    """The analytic polyhedron |x_j| <= 1/M, |y_j| <= M."""

    M: float

    def __post_init__(self):
        if not (self.M > 1.0):
            raise ValueError("polyhedron scale must exceed 1")

    def margin(self, p: PointC2) -> float:
        """Minimum slack over the four defining bounds (negative outside)."""
        inv = 1.0 / self.M
        return min(inv - abs(p.x1), inv - abs(p.x2),
                   self.M - abs(p.y1), self.M - abs(p.y2))

    def moduli(self, p: PointC2):
        """The eight defining moduli, normalized so all are <= 1 on the
        polyhedron: exp(+-x_j - 1/M) for the real faces (exponents
        +-z_j - 1/M) and exp(+-y_j - M) for the imaginary faces
        (exponents -+ i z_j - M)."""
        inv = 1.0 / self.M
        return tuple(
            math.exp(t)
            for t in (p.x1 - inv, -p.x1 - inv, p.x2 - inv, -p.x2 - inv,
                      p.y1 - self.M, -p.y1 - self.M,
                      p.y2 - self.M, -p.y2 - self.M))


@dataclass(frozen=True)
class MembershipResult:
    inside: bool
    margin: float


def qm_membership(q: PolyhedronQM, p: PointC2) -> MembershipResult:
    """Closed membership with the minimum slack as margin (0 on the boundary)."""
    m = q.margin(p)
    return MembershipResult(inside=m >= 0.0, margin=m)


def phi_values(x1, x2):
    """(phi_1, phi_2, phi_3) from the real parts; works on floats or arrays."""
    return (x2, -SQRT3 * x1 - x2, SQRT3 * x1 - x2)


def phi(lam: int, p: PointC2) -> float:
    return phi_values(p.x1, p.x2)[(lam - 1) % 3]


@dataclass(frozen=True)
class TriFunctional:
    """One of the three trisecting functionals, linear in (x1, x2) only."""

    index: int

    def __post_init__(self):
        if self.index not in (1, 2, 3):
            raise ValueError("functional index must be 1, 2 or 3")

    def __call__(self, p: PointC2) -> float:
        return phi(self.index, p)


def sector_candidates(p: PointC2, tol: float = CLASSIFY_TOL):
    """Sectors whose closed conditions hold within tol at p.

    The tol-closures of the three sectors cover everything, so the
    result has one entry away from the walls, two on a wall and three
    near the central plane.
    """
    f = phi_values(p.x1, p.x2)
    return tuple(lam for lam in (1, 2, 3)
                 if f[lam - 1] <= tol and f[(lam - 2) % 3] >= -tol)


def sector_of(p: PointC2, tol: float = CLASSIFY_TOL) -> str:
    """Stratum label: 'Sigma', 'Z1'..'Z3' or 'H1'..'H3'.

    Sigma needs x1 = x2 = 0 within tol (the central plane i R^2); a wall
    label H_lam means p lies in the tol-closures of exactly the sectors
    lam-1 and lam.
    """
    if abs(p.x1) <= tol and abs(p.x2) <= tol:
        return "Sigma"
    cands = sector_candidates(p, tol)
    if len(cands) == 1:
        return f"Z{cands[0]}"
    if len(cands) == 2:
        a, b = cands
        # cyclically adjacent pair (lam-1, lam) -> H_lam
        lam = b if (a, b) in ((1, 2), (2, 3)) else 1
        return f"H{lam}"
    # All three conditions within tol forces |x1|, |x2| <~ tol; treat as
    # central just like the explicit test above.
    return "Sigma"


def sector_label_array(x1, x2, tol: float = CLASSIFY_TOL):
    """Vectorized classifier over numpy arrays of real parts.

    Returns integer codes: 0 Sigma, 1..3 the open sectors, 4..6 the
    walls H1..H3.
    """
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    f1, f2, f3 = phi_values(x1, x2)
    in1 = (f1 <= tol) & (f3 >= -tol)
    in2 = (f2 <= tol) & (f1 >= -tol)
    in3 = (f3 <= tol) & (f2 >= -tol)
    count = in1.astype(int) + in2.astype(int) + in3.astype(int)
    sigma = (np.abs(x1) <= tol) & (np.abs(x2) <= tol) | (count == 3)
    codes = np.zeros(x1.shape, dtype=np.int8)
    only1 = in1 & ~in2 & ~in3
    only2 = in2 & ~in1 & ~in3
    only3 = in3 & ~in1 & ~in2
    codes[only1] = 1
    codes[only2] = 2
    codes[only3] = 3
    codes[in3 & in1] = 4   # closures of Z3 and Z1 -> wall H1
    codes[in1 & in2] = 5
    codes[in2 & in3] = 6
    codes[sigma] = 0
    return codes
