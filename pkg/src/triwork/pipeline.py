"""End-to-end verification pipelines.

run_stein_b4 drives the full chain for a stabilization target
(n1, n2, n3): build the branch-locus family (one disk per requested
stabilization, pleated with the rotation whose patch gain lands in the
requested sector), certify bridge position numerically, pull the
standard trisection back through the standard monodromy, and check that
the upstairs parameters are exactly the requested stabilization of the
standard 4-ball trisection.

Exit-code contract: 0 success, 1 mathematical assertion failed,
2 numerical certification failed, 3 malformed input (raised upstream).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bridge import BridgeSurfaceData, validate_bridge
from .cover import pullback_trisection, standard_rho
from .geometry.certify import (BridgeCertificate, certify_bridge_position,
                               declared_bridge_data)
from .geometry.graphs import (GraphSurface, pleat_theta_for_sector,
                              pleated_family_member)
from .geometry.qm import PolyhedronQM
from .params import (RelTrisectionParams, STANDARD_B4, Triple,
                     stabilization_delta)
from .serialize import (certificate_to_dict, graph_to_dict,
                        monodromy_to_dict, params_to_dict, tagged)

EXIT_OK = 0
EXIT_ASSERTION = 1
EXIT_CERTIFICATION = 2
EXIT_INPUT = 3


@dataclass(frozen=True)
class PipelineConfig:
    """Scales, tolerances and the stabilization target of a pipeline run."""

    stabilizations: Triple = (0, 0, 0)
    M: float = 100.0
    R: float = 10.0
    eps_prime: float = 0.01
    tol: float = 1e-9
    band: float = 1e-7
    seed: int = 0

    def __post_init__(self):
        if any(n < 0 for n in self.stabilizations):
            raise ValueError("stabilization counts must be non-negative")
        if not (1.0 / self.M < 1.0 < self.R < self.M):
            raise ValueError("scales must satisfy 1/M < 1 < R < M")
        if self.eps_prime <= 0:
            raise ValueError("pleat offset must be positive")
        if self.tol <= 0 or self.band <= 0:
            raise ValueError("tolerances must be positive")


def build_scene(cfg: PipelineConfig) -> tuple[GraphSurface, ...]:
    """One pleated disk per requested stabilization: the k-th member
    targets the sector that still needs one."""
    members = []
    k = 0
    for lam in (1, 2, 3):
        theta = pleat_theta_for_sector(lam)
        for _ in range(cfg.stabilizations[lam - 1]):
            k += 1
            members.append(pleated_family_member(k, cfg.M, cfg.R,
                                                 cfg.eps_prime, theta))
    return tuple(members)


@lru_cache(maxsize=256)
def _member_counts(member: GraphSurface, M: float, tol: float):
    """Certify a single member; memoized because pipeline sweeps reuse
    members across runs."""
    cert = certify_bridge_position([member], PolyhedronQM(M), R=0.0, tol=tol)
    return cert


def _family_certificate(members, cfg: PipelineConfig) -> BridgeCertificate:
    """Assemble the family certificate from per-member certificates.

    Per-member counts are independent (the operations are pure), so the
    family data is their sum; the cross-member separation check runs on
    the aggregated bridge points."""
    import math

    per = [_member_counts(m, cfg.M, cfg.tol) for m in members]
    points = tuple(bp for c in per for bp in c.points)
    arcs = tuple(sum(c.arcs[i] for c in per) for i in range(3))
    patches = tuple(sum(c.patches[i] for c in per) for i in range(3))
    declared = declared_bridge_data(members)
    failures = [f for c in per for f in c.failures
                if f != "family bridge points are not separated"]

    min_sep = math.inf
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            d = math.dist(points[i].point.as_tuple(), points[j].point.as_tuple())
            min_sep = min(min_sep, d)
    if min_sep < cfg.tol * 1e3:
        failures.append("family bridge points are not separated")

    measured = BridgeSurfaceData(
        braid_index=len(members),
        bridge_index=(len(points) - len(members)) // 2
        if len(points) >= len(members) else 0,
        bridge_points=len(points),
        arcs=arcs,
        patches=patches,
    )
    if not validate_bridge(measured).valid:
        failures.append("measured counts violate bridge invariants")
    if measured != declared:
        failures.append("measured counts disagree with declared bridge data")
    failures = sorted(set(failures))
    return BridgeCertificate(
        valid=not failures,
        points=points,
        arcs=arcs,
        patches=patches,
        declared=declared,
        measured=measured,
        tolerance=cfg.tol,
        min_margin=min((bp.margin for bp in points), default=math.inf),
        min_separation=min_sep,
        ambiguous_cells=sum(c.ambiguous_cells for c in per),
        failures=tuple(failures),
    )


def run_stein_b4(cfg: PipelineConfig) -> dict:
    """Full pipeline; always returns a report dict with an exit_code."""
    n = sum(cfg.stabilizations)
    report = tagged(
        "stein_b4_report",
        config={
            "stabilizations": list(cfg.stabilizations),
            "M": cfg.M, "R": cfg.R, "eps_prime": cfg.eps_prime,
            "tol": cfg.tol, "band": cfg.band, "seed": cfg.seed,
        },
        base=params_to_dict(STANDARD_B4),
    )

    if n == 0:
        # Nothing to stabilize: the identity covering of the standard ball.
        report.update(
            scene=[], certificate=None, monodromy=None,
            upstairs=params_to_dict(STANDARD_B4),
            expected_upstairs=params_to_dict(STANDARD_B4),
            stabilization_delta=[0, 0, 0],
            status="ok", exit_code=EXIT_OK,
        )
        return report

    members = build_scene(cfg)
    cert = _family_certificate(members, cfg)
    rho = standard_rho(n)
    report.update(
        scene=[graph_to_dict(m) for m in members],
        certificate=certificate_to_dict(cert),
        monodromy=monodromy_to_dict(rho),
    )
    if not cert.valid:
        report.update(upstairs=None, expected_upstairs=None,
                      stabilization_delta=None,
                      status="certification-failed",
                      exit_code=EXIT_CERTIFICATION)
        return report

    upstairs = pullback_trisection(STANDARD_B4, cert.measured, rho)
    expected = RelTrisectionParams(genus=n, k=cfg.stabilizations,
                                   page_genus=0, boundary_components=1)
    delta = stabilization_delta(upstairs, STANDARD_B4)
    report.update(
        upstairs=params_to_dict(upstairs),
        expected_upstairs=params_to_dict(expected),
        stabilization_delta=None if delta is None else list(delta),
    )
    if upstairs == expected and delta == cfg.stabilizations:
        report.update(status="ok", exit_code=EXIT_OK)
    else:
        report.update(status="assertion-failed", exit_code=EXIT_ASSERTION)
    return report
