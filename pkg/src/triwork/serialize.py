"""Canonical JSON encoding of the workbench types (schema tw/1).

Reports must be byte-identical across runs for identical inputs, so all
dumps sort keys, use a fixed separator style, and contain no host or
timing information.  Integers stay exact; floats use shortest
round-trip repr.
"""
from __future__ import annotations

import json
from typing import Any

from . import SCHEMA_VERSION
from .bridge import BridgeSurfaceData
from .cover import MonodromyRep
from .geometry.certify import BridgeCertificate, IsotopyResult
from .geometry.cusp import CuspReport
from .geometry.graphs import GraphSurface
from .geometry.polycover import PolyCoverReport
from .geometry.qm import PointC2
from .homology import TrisectionDiagram, group_name
from .params import RelTrisectionParams, TrisectionParams, ValidationReport


def dumps_canonical(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2,
                      separators=(",", ": "), allow_nan=False) + "\n"


def tagged(kind: str, **fields) -> dict:
    d = {"schema": SCHEMA_VERSION, "type": kind}
    d.update(fields)
    return d


def params_to_dict(p) -> dict:
    if isinstance(p, RelTrisectionParams):
        return tagged("rel_trisection_params", genus=p.genus, k=list(p.k),
                      p=p.page_genus, b=p.boundary_components)
    if isinstance(p, TrisectionParams):
        return tagged("trisection_params", genus=p.genus, k=list(p.k))
    raise TypeError(f"not a parameter tuple: {p!r}")


def diagram_to_dict(d: TrisectionDiagram) -> dict:
    return tagged("trisection_diagram", genus=d.genus,
                  boundary_components=d.boundary_components,
                  cut_systems=[[list(v) for v in s] for s in d.cut_systems])


def bridge_to_dict(s: BridgeSurfaceData) -> dict:
    return tagged("bridge_surface", braid_index=s.braid_index,
                  bridge_index=s.bridge_index, bridge_points=s.bridge_points,
                  arcs=list(s.arcs), patches=list(s.patches),
                  closed_ambient=s.closed_ambient)


def monodromy_to_dict(rho: MonodromyRep) -> dict:
    return tagged("monodromy", degree=rho.degree,
                  meridians=[list(m.moved_points()) for m in rho.meridians])


def validation_to_dict(rep: ValidationReport) -> dict:
    return {"valid": rep.valid, "violations": list(rep.violations)}


def point_to_list(p: PointC2) -> list:
    return [p.x1, p.y1, p.x2, p.y2]


def graph_to_dict(g: GraphSurface) -> dict:
    return {
        "kind": g.kind,
        "epsilon": g.epsilon,
        "theta": g.theta,
        "translation": [g.translation[0].real, g.translation[0].imag,
                        g.translation[1].real, g.translation[1].imag],
        "domain": list(g.domain),
        "pleated": g.pleated,
    }


def certificate_to_dict(cert: BridgeCertificate) -> dict:
    return tagged(
        "bridge_certificate",
        valid=cert.valid,
        bridge_points=[{
            "param": list(bp.param),
            "point": point_to_list(bp.point),
            "residual": bp.residual,
            "margin": bp.margin,
        } for bp in cert.points],
        arcs=list(cert.arcs),
        patches=list(cert.patches),
        declared=bridge_to_dict(cert.declared),
        measured=bridge_to_dict(cert.measured),
        tolerance=cert.tolerance,
        min_margin=None if cert.min_margin == float("inf") else cert.min_margin,
        min_separation=None if cert.min_separation == float("inf")
        else cert.min_separation,
        ambiguous_cells=cert.ambiguous_cells,
        failures=list(cert.failures),
    )


def cusp_report_to_dict(rep: CuspReport) -> dict:
    def rc(r):
        return {"expected_fibers": r.expected_fibers, "samples": r.samples,
                "mismatches": r.mismatches}
    return tagged("cusp_report", interior=rc(rep.interior),
                  exterior=rc(rep.exterior), fold=rc(rep.fold),
                  cusp_point_fibers=rep.cusp_point_fibers,
                  fold_parametrization_residual=rep.fold_parametrization_residual,
                  band=rep.band, ok=rep.ok)


def polycover_to_dict(rep: PolyCoverReport) -> dict:
    return tagged("polynomial_cover_report", n=rep.n, eps=rep.eps,
                  degree=rep.degree,
                  critical_point_error=rep.critical_point_error,
                  sheet_counts_ok=rep.sheet_counts_ok,
                  regular_values_tested=rep.regular_values_tested,
                  rh_euler_char=rep.rh_euler_char,
                  rh_components=rep.rh_components,
                  monodromy_simple=rep.monodromy_simple,
                  monodromy_transitive=rep.monodromy_transitive,
                  monodromy_pairs=[list(p) for p in rep.monodromy_pairs],
                  ok=rep.ok)


def isotopy_to_dict(res: IsotopyResult) -> dict:
    viol = None
    if res.first_violation is not None:
        t, x, y, sample = res.first_violation
        viol = {"t": t, "x": x, "y": y, "sample": list(sample)}
    return {"ok": res.ok, "first_violation": viol}


def invariants_to_dict(factors) -> dict:
    return {"invariant_factors": list(factors), "group": group_name(factors)}
