"""Homological diagram calculus: cut systems, Smith normal form, spines.

Diagram curves live at the homology level as primitive integer vectors
in Z^{2g}.  The symplectic pairing uses the basis ordering
(a1, b1, a2, b2, ...), i.e. <e_{2i}, e_{2i+1}> = 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .params import ValidationReport

Vector = tuple[int, ...]
CutSystem = tuple[Vector, ...]


def sym_pairing(u, v) -> int:
    """Standard skew pairing on Z^{2g} in the (a1, b1, ...) basis."""
    if len(u) != len(v) or len(u) % 2:
        raise ValueError("pairing needs two integer vectors of equal even length")
    total = 0
    for i in range(0, len(u), 2):
        total += u[i] * v[i + 1] - u[i + 1] * v[i]
    return total


def is_primitive(v) -> bool:
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g == 1


# ---------------------------------------------------------------------------
# Smith normal form over Z, with unimodular transforms.

def smith_normal_form(rows):
    """Return (S, U, V) with U*A*V = S diagonal, U and V unimodular.

    S's diagonal entries d1 | d2 | ... are non-negative, divisibility
    ordered; all matrices are lists of lists of Python ints.  The pivot
    of minimal magnitude is re-selected after every remainder-creating
    step, and clean eliminations only ever use exact quotients, which
    keeps intermediate entries from exploding.
    """
    A = [list(map(int, r)) for r in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    if any(len(r) != n for r in A):
        raise ValueError("ragged matrix")
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_op(i, j, q):  # row_i -= q * row_j
        A[i] = [a - q * b for a, b in zip(A[i], A[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in A:
            r[i] -= q * r[j]
        for r in V:
            r[i] -= q * r[j]

    def swap_rows(i, j):
        if i != j:
            A[i], A[j] = A[j], A[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for r in A:
                r[i], r[j] = r[j], r[i]
            for r in V:
                r[i], r[j] = r[j], r[i]

    t = 0
    while t < min(m, n):
        # Move a pivot of minimal absolute value into position (t, t).
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (pivot is None
                                or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        d = A[t][t]

        # A non-divisible entry in the pivot column or row leaves a
        # remainder strictly smaller than the pivot; go re-select.
        remainder = False
        for i in range(t + 1, m):
            if A[i][t] % d:
                row_op(i, t, A[i][t] // d)
                remainder = True
                break
        if remainder:
            continue
        for j in range(t + 1, n):
            if A[t][j] % d:
                col_op(j, t, A[t][j] // d)
                remainder = True
                break
        if remainder:
            continue

        # Everything divides the pivot: clear its row and column exactly.
        for i in range(t + 1, m):
            if A[i][t]:
                row_op(i, t, A[i][t] // d)
        for j in range(t + 1, n):
            if A[t][j]:
                col_op(j, t, A[t][j] // d)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]

        # Divisibility fix-up: fold any entry the pivot misses back into
        # the pivot row; the next pass shrinks the pivot to their gcd.
        dirty = False
        for i in range(t + 1, m):
            if any(A[i][j] % A[t][t] for j in range(t + 1, n)):
                A[t] = [a + b for a, b in zip(A[t], A[i])]
                U[t] = [a + b for a, b in zip(U[t], U[i])]
                dirty = True
                break
        if dirty:
            continue
        t += 1
    return A, U, V


def invariant_factors(rows, ambient_rank=None):
    """Invariant factors of the cokernel Z^m / col-span(A).

    Torsion factors (> 1) come first in divisibility order, followed by
    one 0 per free Z summand; unit factors are dropped.  ambient_rank
    defaults to the number of rows.
    """
    A = [list(r) for r in rows]
    m = len(A)
    if ambient_rank is None:
        ambient_rank = m
    if m == 0:
        return (0,) * ambient_rank
    S, _, _ = smith_normal_form(A)
    diag = [S[i][i] for i in range(min(len(S), len(S[0])))]
    rank = sum(1 for d in diag if d != 0)
    torsion = tuple(d for d in diag if d > 1)
    return torsion + (0,) * (ambient_rank - rank)


def group_name(factors) -> str:
    """Readable abelian group name, e.g. () -> '0', (0,) -> 'Z', (2, 0) -> 'Z/2 + Z'."""
    if not factors:
        return "0"
    parts = [("Z" if d == 0 else f"Z/{d}") for d in factors]
    return " + ".join(parts)


def lattice_contains(vectors, target) -> bool:
    """Whether target lies in the integer span of the given vectors."""
    target = tuple(int(x) for x in target)
    vectors = [tuple(int(x) for x in v) for v in vectors]
    if any(len(v) != len(target) for v in vectors):
        raise ValueError("vector length mismatch")
    if all(x == 0 for x in target):
        return True
    if not vectors:
        return False
    # Columns of A are the spanning vectors; solve A x = target over Z.
    n = len(target)
    A = [[v[i] for v in vectors] for i in range(n)]
    S, U, _ = smith_normal_form(A)
    t = [sum(U[i][j] * target[j] for j in range(n)) for i in range(n)]
    k = len(vectors)
    for i in range(n):
        d = S[i][i] if i < min(n, k) else 0
        if d == 0:
            if t[i] != 0:
                return False
        elif t[i] % d:
            return False
    return True


# ---------------------------------------------------------------------------
# Diagrams and spines.

@dataclass(frozen=True)
class TrisectionDiagram:
    """Genus, boundary count and three homological cut systems."""

    genus: int
    boundary_components: int
    cut_systems: tuple[CutSystem, CutSystem, CutSystem]

    def cut_system(self, lam: int) -> CutSystem:
        return self.cut_systems[((lam - 1) % 3)]


def validate_diagram(d: TrisectionDiagram) -> ValidationReport:
    bad = []
    if d.genus < 0:
        bad.append("g < 0")
    if d.boundary_components < 0:
        bad.append("boundary_components < 0")
    if len(d.cut_systems) != 3:
        bad.append("need exactly three cut systems")
        return ValidationReport.from_violations(bad)
    dim = 2 * d.genus
    for lam, system in enumerate(d.cut_systems, start=1):
        if d.boundary_components == 0:
            if len(system) != d.genus:
                bad.append(f"cut system {lam} has {len(system)} curves, expected {d.genus}")
        elif len(system) > d.genus + d.boundary_components - 1:
            bad.append(f"cut system {lam} has too many curves")
        for i, v in enumerate(system):
            if len(v) != dim:
                bad.append(f"cut system {lam} curve {i} not in Z^{dim}")
                continue
            if not is_primitive(v):
                bad.append(f"cut system {lam} curve {i} not primitive")
        for i in range(len(system)):
            for j in range(i + 1, len(system)):
                if len(system[i]) == dim and len(system[j]) == dim:
                    if sym_pairing(system[i], system[j]) != 0:
                        bad.append(
                            f"cut system {lam} curves {i},{j} have nonzero pairing")
    return ValidationReport.from_violations(bad)


def pairing_matrix(a: CutSystem, b: CutSystem):
    return [[sym_pairing(u, v) for v in b] for u in a]


def heegaard_h1(a: CutSystem, b: CutSystem):
    """H1 of the Heegaard splitting H_a union H_b along the diagram surface.

    Returns the invariant factors of the cokernel of M_ij = <a_i, b_j>,
    computed by Smith normal form: () is the trivial group, (0,) is Z,
    (2,) is Z/2, and so on.
    """
    if len(a) != len(b):
        raise ValueError("cut systems have different sizes")
    if a and len(a[0]) != len(b[0]):
        raise ValueError("cut systems live on surfaces of different genus")
    if not a:
        return ()
    return invariant_factors(pairing_matrix(a, b))


def _normalize_vector(v: Vector) -> Vector:
    for x in v:
        if x > 0:
            return v
        if x < 0:
            return tuple(-y for y in v)
    return v


def canonical_diagram(d: TrisectionDiagram) -> TrisectionDiagram:
    """Deterministic normal form: sign-normalize each curve, sort each system."""
    systems = tuple(
        tuple(sorted(_normalize_vector(tuple(v)) for v in system))
        for system in d.cut_systems
    )
    return TrisectionDiagram(d.genus, d.boundary_components, systems)


@dataclass(frozen=True)
class SpineEncoding:
    """A diagram together with its canonical form; equality of canonical
    forms certifies diffeomorphism of the trisected manifolds."""

    diagram: TrisectionDiagram
    canonical_form: TrisectionDiagram = field(default=None)

    def __post_init__(self):
        if self.canonical_form is None:
            object.__setattr__(self, "canonical_form",
                               canonical_diagram(self.diagram))


def spine_of(d: TrisectionDiagram) -> SpineEncoding:
    return SpineEncoding(diagram=d)


def spine_equal(a: SpineEncoding, b: SpineEncoding) -> bool:
    """True iff the canonical forms coincide (sufficient, not necessary,
    for diffeomorphism of the underlying 4-manifolds)."""
    return a.canonical_form == b.canonical_form


def unbalanced_s4_diagram(lam: int) -> TrisectionDiagram:
    """Genus-1 diagram with two parallel curves and one dual curve.

    Sector lam is the S^1 x B^3 sector; the parallel pair sits in cut
    systems lam, lam+1 and the dual curve in system lam+2 (indices mod
    3), so lam = 1 gives ((1,0), (1,0), (0,1)).
    """
    if lam not in (1, 2, 3):
        raise ValueError("sector index must be 1, 2 or 3")
    parallel = ((1, 0),)
    dual = ((0, 1),)
    systems = [None, None, None]
    systems[(lam - 1) % 3] = parallel
    systems[lam % 3] = parallel
    systems[(lam + 1) % 3] = dual
    return TrisectionDiagram(genus=1, boundary_components=0,
                             cut_systems=tuple(systems))
