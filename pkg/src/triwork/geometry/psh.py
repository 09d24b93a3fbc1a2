"""Sub-mean-value sampling for scalar fields on C^2.

A plurisubharmonic function satisfies psi(center) <= circle average of
psi along every complex line; the checker samples one circle.  Fields
are callables on PointC2; fields that also accept coordinate arrays
(x1, y1, x2, y2) are evaluated vectorized.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .qm import PointC2


@dataclass(frozen=True)
class ComplexLine:
    """The affine line base + zeta * direction, zeta in C."""

    base: tuple[complex, complex]
    direction: tuple[complex, complex]

    def __post_init__(self):
        if abs(self.direction[0]) + abs(self.direction[1]) == 0.0:
            raise ValueError("degenerate line direction")

    def at(self, zeta):
        z1 = self.base[0] + zeta * self.direction[0]
        z2 = self.base[1] + zeta * self.direction[1]
        return z1, z2


@dataclass(frozen=True)
class PshResult:
    passed: bool
    average: float
    center_value: float

    @property
    def defect(self) -> float:
        """average - center; negative means the sub-mean inequality failed."""
        return self.average - self.center_value


def _evaluate(psi, z1, z2):
    x1, y1 = np.real(z1), np.imag(z1)
    x2, y2 = np.real(z2), np.imag(z2)
    try:
        vals = psi(x1, y1, x2, y2)
        return np.asarray(vals, dtype=float)
    except TypeError:
        return np.array([psi(PointC2(float(a), float(b), float(c), float(d)))
                         for a, b, c, d in zip(x1, y1, x2, y2)])


def circle_values(psi, line: ComplexLine, center: complex, radius: float,
                  m_samples: int):
    """psi along the circle |zeta - center| = radius on the line."""
    angles = 2.0 * np.pi * np.arange(m_samples) / m_samples
    zeta = center + radius * np.exp(1j * angles)
    z1, z2 = line.at(zeta)
    return _evaluate(psi, z1, z2)


def subharmonicity_check(psi, line: ComplexLine, center: complex = 0j,
                         radius: float = 1.0, m_samples: int = 256,
                         tol: float = 1e-9) -> PshResult:
    """Sub-mean-value test: circle average >= psi(center) - tol.

    The average uses equispaced samples (the trapezoid rule on a full
    circle, exact for trigonometric polynomials); pluriharmonic fields
    pass with equality up to tol.
    """
    if radius <= 0:
        raise ValueError("radius must be positive")
    if m_samples < 64:
        raise ValueError("too few circle samples")
    vals = circle_values(psi, line, center, radius, m_samples)
    avg = float(np.mean(vals))
    z1, z2 = line.at(np.asarray([center]))
    center_value = float(_evaluate(psi, z1, z2)[0])
    return PshResult(passed=avg >= center_value - tol, average=avg,
                     center_value=center_value)
