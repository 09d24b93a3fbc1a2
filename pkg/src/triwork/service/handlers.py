"""Verification handlers: validated request models in, report dicts out.

Every report embeds the tolerances and scales it used and carries an
exit_code field (0 pass, 1 mathematical assertion failed, 2 numerical
certification failed); malformed input never reaches a handler.
"""
from __future__ import annotations

import numpy as np

from ..bridge import PerturbationMove, perturb, surface_euler, trivial_disks, \
    validate_bridge
from ..cover import (boundary_product, orbits, perturbation_stabilization_check,
                     pullback_trisection, standard_rho)
from ..geometry.certify import certify_bridge_position, isotopy_check
from ..geometry.cusp import cusp_analysis
from ..geometry.polycover import polynomial_cover_check
from ..geometry.psh import ComplexLine, subharmonicity_check
from ..geometry.qm import PointC2, PolyhedronQM, phi_values, sector_of
from ..homology import canonical_diagram, heegaard_h1, spine_of, validate_diagram
from ..params import (STANDARD_B4, TrisectionParams, euler_char_closed,
                      validate_params)
from ..pipeline import (EXIT_ASSERTION, EXIT_CERTIFICATION, EXIT_OK,
                        run_stein_b4)
from ..reconstruct import (grid_glue, make_reducible, qm_model_glue,
                           reconstruct_Z, reducibility_necessary,
                           shilov_glue_eval)
from ..serialize import (bridge_to_dict, certificate_to_dict, diagram_to_dict,
                         invariants_to_dict, isotopy_to_dict, params_to_dict,
                         polycover_to_dict, cusp_report_to_dict, tagged,
                         validation_to_dict)
from . import models


def handle_params(inp: models.ParamsIn) -> dict:
    p = inp.to_core()
    rep = validate_params(p)
    out = tagged("params_report", params=params_to_dict(p),
                 validation=validation_to_dict(rep))
    if rep.valid and isinstance(p, TrisectionParams):
        out["euler_char"] = euler_char_closed(p)
    out["exit_code"] = EXIT_OK if rep.valid else EXIT_ASSERTION
    return out


def handle_diagram_h1(inp: models.DiagramIn) -> dict:
    d = inp.to_core()
    rep = validate_diagram(d)
    out = tagged("diagram_h1_report", diagram=diagram_to_dict(d),
                 validation=validation_to_dict(rep))
    if rep.valid:
        pairs = []
        for lam in (1, 2, 3):
            a = d.cut_system(lam)
            b = d.cut_system(lam + 1)
            factors = heegaard_h1(a, b)
            pairs.append({"pair": [lam, 1 if lam == 3 else lam + 1],
                          **invariants_to_dict(factors)})
        out["splittings"] = pairs
        out["canonical_form"] = diagram_to_dict(canonical_diagram(d))
    out["exit_code"] = EXIT_OK if rep.valid else EXIT_ASSERTION
    return out


def handle_bridge(inp: models.BridgeVerifyIn) -> dict:
    s = inp.bridge_surface.to_core()
    rep = validate_bridge(s)
    out = tagged("bridge_report", bridge_surface=bridge_to_dict(s),
                 validation=validation_to_dict(rep))
    ok = rep.valid
    if rep.valid:
        chi = surface_euler(s)
        out["euler_char"] = chi
        steps = []
        for lam in inp.moves:
            s = perturb(s, PerturbationMove(lam))
            steps.append({"sector": lam, "result": bridge_to_dict(s),
                          "euler_char": surface_euler(s)})
            ok = ok and surface_euler(s) == chi
        out["perturbations"] = steps
        out["euler_preserved"] = ok
    out["exit_code"] = EXIT_OK if ok else EXIT_ASSERTION
    return out


def handle_cover(inp: models.CoverVerifyIn) -> dict:
    out = tagged("cover_report", degree=inp.monodromy.degree,
                 meridians=[list(m) for m in inp.monodromy.meridians])
    ok = True
    try:
        rho = inp.monodromy.to_core()
    except ValueError as e:
        out.update(simple="transposition" not in str(e), transitive=False,
                   error=str(e), exit_code=EXIT_ASSERTION)
        return out
    n = len(rho.meridians)
    out["simple"] = True
    out["transitive"] = True
    out["orbit_count"] = len(orbits(rho.meridians, rho.degree))
    out["boundary_cycles"] = len(boundary_product(rho).cycles())
    std = None
    if rho.degree == n + 1:
        std = rho == standard_rho(n)
    out["is_standard_chain"] = std

    if inp.locus is not None:
        locus = inp.locus.to_core()
        up = pullback_trisection(STANDARD_B4, locus, rho)
        out["pullback"] = params_to_dict(up)
        ok = ok and validate_params(up).valid

    if inp.sweep_max_disks:
        checks = []
        for m in range(1, inp.sweep_max_disks + 1):
            rho_m = standard_rho(m)
            for lam in (1, 2, 3):
                holds = perturbation_stabilization_check(trivial_disks(m),
                                                         rho_m, lam)
                checks.append({"disks": m, "sector": lam, "holds": holds})
                ok = ok and holds
        out["perturbation_stabilization_sweep"] = checks

    if inp.model_polynomial is not None:
        mp = inp.model_polynomial
        rep = polynomial_cover_check(mp.n, mp.eps, n_regular=mp.n_regular,
                                     seed=mp.seed)
        out["model_polynomial"] = polycover_to_dict(rep)
        ok = ok and rep.ok
    out["exit_code"] = EXIT_OK if ok else EXIT_ASSERTION
    return out


def handle_geometry(inp: models.SceneIn) -> dict:
    q = PolyhedronQM(inp.M)
    family = [g.to_core() for g in inp.graphs]
    cert = certify_bridge_position(family, q, R=inp.R, tol=inp.tol)
    out = tagged("geometry_report", M=inp.M, R=inp.R, tol=inp.tol,
                 certificate=certificate_to_dict(cert))
    iso = []
    for g, core in zip(inp.graphs, family):
        if core.kind == "linear":
            res = isotopy_check(core, q)
            iso.append(isotopy_to_dict(res))
    if iso:
        out["isotopy_checks"] = iso
    ok = cert.valid and all(r["ok"] for r in iso)
    out["exit_code"] = EXIT_OK if ok else EXIT_CERTIFICATION
    return out


def handle_cusp(inp: models.CuspIn) -> dict:
    rep = cusp_analysis(n_samples=inp.samples, seed=inp.seed, box=inp.box)
    out = tagged("cusp_verify_report", samples=inp.samples, seed=inp.seed,
                 box=inp.box, report=cusp_report_to_dict(rep))
    out["region_fiber_counts"] = {"interior": 3, "exterior": 1, "fold": 2}
    out["exit_code"] = EXIT_OK if rep.ok else EXIT_CERTIFICATION
    return out


def _random_sector_center(rng):
    # The sectors are cones in (x1, x2) and the glue is y-independent,
    # so centers are drawn at unit scale where circles of the default
    # radius fit inside one sector with useful probability.
    return PointC2(float(rng.uniform(-1, 1)), float(rng.uniform(-1, 1)),
                   float(rng.uniform(-1, 1)), float(rng.uniform(-1, 1)))


def handle_psh(inp: models.PshIn) -> dict:
    """Sector coverage, mean-value equality of the functionals, and
    sub-mean-value sampling of the glued function and its pieces."""
    M = inp.M
    rng = np.random.default_rng(inp.seed)
    out = tagged("psh_report", M=M, tol=inp.tol, radius=inp.radius,
                 n_lines=inp.n_lines, m_samples=inp.m_samples,
                 coverage_samples=inp.coverage_samples, seed=inp.seed)

    # 1. every sample lies in exactly one closed sector
    x1 = rng.uniform(-1 / M, 1 / M, inp.coverage_samples)
    x2 = rng.uniform(-1 / M, 1 / M, inp.coverage_samples)
    f1, f2, f3 = phi_values(x1, x2)
    count = (((f1 <= 0) & (f3 >= 0)).astype(np.int64)
             + ((f2 <= 0) & (f1 >= 0)).astype(np.int64)
             + ((f3 <= 0) & (f2 >= 0)).astype(np.int64))
    out["coverage_failures"] = int(np.count_nonzero(count != 1))

    # 2. the functionals are pluriharmonic: circle average == center
    if inp.glue_grid is not None:
        glue = grid_glue(inp.glue_grid.x1_axis, inp.glue_grid.x2_axis,
                         inp.glue_grid.values)
        out["glue_source"] = "grid"
    else:
        glue = qm_model_glue()
        out["glue_source"] = "builtin"
    mean_failures = 0
    mean_worst = 0.0
    for lam in (1, 2, 3):
        for _ in range(8):
            line = ComplexLine(
                base=(complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
                      complex(rng.uniform(-1, 1), rng.uniform(-1, 1))),
                direction=(complex(*rng.uniform(-1, 1, 2)),
                           complex(*rng.uniform(-1, 1, 2))))
            res = subharmonicity_check(
                lambda x1, y1, x2, y2, lam=lam: phi_values(x1, x2)[lam - 1],
                line, radius=inp.radius, m_samples=inp.m_samples, tol=inp.tol)
            mean_worst = max(mean_worst, abs(res.defect))
            mean_failures += abs(res.defect) > inp.tol
    out["mean_value_failures"] = int(mean_failures)
    out["mean_value_worst_defect"] = float(mean_worst)

    # 3a. each sector evaluator alone is subharmonic on every line
    piece_failures = 0
    for _ in range(max(1, inp.n_lines // 10)):
        line = ComplexLine(
            base=(complex(*rng.uniform(-0.5, 0.5, 2)),
                  complex(*rng.uniform(-0.5, 0.5, 2))),
            direction=(complex(*rng.uniform(-1, 1, 2)),
                       complex(*rng.uniform(-1, 1, 2))))
        for lam in (1, 2, 3):
            ev = glue.evaluators[lam - 1]
            res = subharmonicity_check(
                lambda x1, y1, x2, y2, ev=ev: np.array(
                    [ev(PointC2(a, b, c, d))
                     for a, b, c, d in zip(np.atleast_1d(x1), np.atleast_1d(y1),
                                           np.atleast_1d(x2), np.atleast_1d(y2))]),
                line, radius=inp.radius, m_samples=inp.m_samples, tol=inp.tol)
            piece_failures += not res.passed
    out["sector_evaluator_failures"] = int(piece_failures)

    # 3b. the glued function on circles avoiding the classifier band
    glue_failures = 0
    tested = 0
    attempts = 0
    while tested < inp.n_lines and attempts < 50 * inp.n_lines:
        attempts += 1
        center = _random_sector_center(rng)
        label = sector_of(center, tol=glue.tol)
        if not label.startswith("Z"):
            continue
        direction = (complex(*rng.uniform(-1, 1, 2)),
                     complex(*rng.uniform(-1, 1, 2)))
        line = ComplexLine(base=(center.z1, center.z2), direction=direction)
        # keep the whole circle inside the same open sector
        radius = inp.radius
        zs = [line.at(radius * np.exp(2j * np.pi * t / 16)) for t in range(16)]
        if any(sector_of(PointC2(z1.real, z1.imag, z2.real, z2.imag),
                         tol=glue.tol) != label for z1, z2 in zs):
            continue
        res = subharmonicity_check(
            lambda x1, y1, x2, y2: np.array(
                [shilov_glue_eval(glue, PointC2(a, b, c, d))
                 for a, b, c, d in zip(np.atleast_1d(x1), np.atleast_1d(y1),
                                       np.atleast_1d(x2), np.atleast_1d(y2))]),
            line, radius=radius, m_samples=inp.m_samples, tol=inp.tol)
        glue_failures += not res.passed
        tested += 1
    out["glue_circles_tested"] = tested
    out["glue_failures"] = int(glue_failures)

    ok = (out["coverage_failures"] == 0 and mean_failures == 0
          and piece_failures == 0 and glue_failures == 0
          and tested == inp.n_lines)
    out["exit_code"] = EXIT_OK if ok else EXIT_CERTIFICATION
    return out


def handle_reconstruct(inp: models.ReconstructIn) -> dict:
    a = inp.summand_a.to_core()
    b = inp.summand_b.to_core()
    r = make_reducible(a, b)
    result = reconstruct_Z(
        r, inp.splitting.to_core(), inp.rel_base.to_core(),
        spine_z=None if inp.spine_z is None else spine_of(inp.spine_z.to_core()),
        spine_b=None if inp.spine_b is None else spine_of(inp.spine_b.to_core()))
    out = tagged(
        "reconstruct_report",
        reducible={"params": params_to_dict(r.params),
                   "delta": list(r.delta),
                   "summands": [params_to_dict(a), params_to_dict(b)]},
        z_params=params_to_dict(result.z_params),
        z_sector_ranks=list(result.z_sector_ranks),
        verdict=result.verdict,
    )
    if inp.reducing_class is not None and inp.spine_z is not None:
        out["reducing_class_necessary_condition"] = reducibility_necessary(
            inp.spine_z.to_core(), inp.reducing_class)
    out["exit_code"] = EXIT_OK
    return out


def handle_stein_b4(inp: models.SteinB4In) -> dict:
    return run_stein_b4(inp.to_core())
