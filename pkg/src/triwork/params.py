"""Integer parameter calculus for closed and relative trisections.

A closed trisection is recorded by its genus g and the triple
(k1, k2, k3) of sector 1-handlebody ranks; a relative trisection
additionally carries the page genus p and the number b of binding
components of the induced open book.  All values are plain ints and all
operations are pure.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

Triple = tuple[int, int, int]

SECTORS = (1, 2, 3)


def cyc(lam: int) -> int:
    """Normalize a sector index into {1, 2, 3} cyclically."""
    return ((lam - 1) % 3) + 1


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a constraint check: valid iff violations is empty."""

    valid: bool
    violations: tuple[str, ...] = ()

    def __post_init__(self):
        if self.valid != (len(self.violations) == 0):
            raise ValueError("valid flag inconsistent with violations list")

    @classmethod
    def from_violations(cls, violations) -> "ValidationReport":
        v = tuple(violations)
        return cls(valid=not v, violations=v)


@dataclass(frozen=True)
class TrisectionParams:
    """(g; k1,k2,k3) invariants of a trisected closed 4-manifold."""

    genus: int
    k: Triple

    def handle_count(self, lam: int) -> int:
        return self.k[cyc(lam) - 1]


@dataclass(frozen=True)
class RelTrisectionParams:
    """(g, k1,k2,k3; p, b) invariants of a relative trisection.

    p is the page genus and b the number of binding circles of the open
    book induced on the boundary.
    """

    genus: int
    k: Triple
    page_genus: int
    boundary_components: int

    def handle_count(self, lam: int) -> int:
        return self.k[cyc(lam) - 1]


Params = Union[TrisectionParams, RelTrisectionParams]

#: The unique relative trisection of the 4-ball with disk central surface.
STANDARD_B4 = RelTrisectionParams(genus=0, k=(0, 0, 0), page_genus=0,
                                  boundary_components=1)


def _check_triple(k) -> None:
    if len(k) != 3 or not all(isinstance(x, int) for x in k):
        raise ValueError("handle counts must be a triple of integers")


def validate_params(p: Params) -> ValidationReport:
    """Check the realizability constraints of a parameter tuple.

    Invalid input yields a report listing every violated constraint; it
    never raises.
    """
    _check_triple(p.k)
    bad = []
    if p.genus < 0:
        bad.append("g < 0")
    for lam in SECTORS:
        if p.k[lam - 1] < 0:
            bad.append(f"k{lam} < 0")
    if isinstance(p, RelTrisectionParams):
        if p.page_genus < 0:
            bad.append("p < 0")
        if p.boundary_components < 1:
            bad.append("b < 1")
        if p.genus < p.page_genus:
            bad.append("g < p")
        # Sector rank is carried by the bounding compression bodies; see
        # the standard-4-ball cell count in the test oracles.
        bound = p.genus + p.boundary_components - 1
        for lam in SECTORS:
            if p.k[lam - 1] > bound:
                bad.append(f"k{lam} > g + b - 1")
    else:
        for lam in SECTORS:
            if p.k[lam - 1] > p.genus:
                bad.append(f"k{lam} > g")
    return ValidationReport.from_violations(bad)


def require_valid(p: Params) -> None:
    rep = validate_params(p)
    if not rep.valid:
        raise ValueError(f"invalid trisection parameters: {', '.join(rep.violations)}")


def euler_char_closed(p: TrisectionParams) -> int:
    """Euler characteristic of the closed 4-manifold: 2 + g - (k1+k2+k3).

    Inclusion-exclusion over three sectors (each chi = 1 - k_lam), three
    genus-g handlebody walls (chi = 1 - g) and the central surface
    (chi = 2 - 2g).
    """
    if not isinstance(p, TrisectionParams):
        raise ValueError("euler_char_closed expects closed trisection parameters")
    require_valid(p)
    return 2 + p.genus - sum(p.k)


def connected_sum(a: TrisectionParams, b: TrisectionParams) -> TrisectionParams:
    """Genus and handle counts add componentwise."""
    if not (isinstance(a, TrisectionParams) and isinstance(b, TrisectionParams)):
        raise ValueError("connected_sum expects closed trisection parameters")
    require_valid(a)
    require_valid(b)
    return TrisectionParams(
        genus=a.genus + b.genus,
        k=(a.k[0] + b.k[0], a.k[1] + b.k[1], a.k[2] + b.k[2]),
    )


def stabilize(p: Params, sector: int) -> Params:
    """Sector stabilization: genus + 1 and k_sector + 1, all else fixed.

    For relative parameters this is the interior move, so (p, b) are
    unchanged.
    """
    require_valid(p)
    lam = cyc(sector)
    k = tuple(p.k[i] + (1 if i == lam - 1 else 0) for i in range(3))
    if isinstance(p, RelTrisectionParams):
        return RelTrisectionParams(p.genus + 1, k, p.page_genus,
                                   p.boundary_components)
    return TrisectionParams(p.genus + 1, k)


def stabilization_delta(target: Params, base: Params):
    """Per-sector stabilization counts taking base to target, if any.

    Returns the triple (n1, n2, n3) with n_lam = k_lam(target) -
    k_lam(base) when all three are non-negative and sum to the genus
    difference; otherwise None.
    """
    if type(target) is not type(base):
        raise ValueError("stabilization_delta requires parameters of the same kind")
    require_valid(target)
    require_valid(base)
    if isinstance(target, RelTrisectionParams):
        if (target.page_genus != base.page_genus
                or target.boundary_components != base.boundary_components):
            raise ValueError("stabilization_delta requires matching (p, b)")
    delta = tuple(target.k[i] - base.k[i] for i in range(3))
    if any(d < 0 for d in delta):
        return None
    if sum(delta) != target.genus - base.genus:
        return None
    return delta
