"""Exact-coordinate models in C^2 with numerical certification."""

from .certify import (BridgeCertificate, IsotopyResult, certify_bridge_position,
                      declared_bridge_data, isotopy_check)
from .cusp import CuspReport, cusp_analysis, discriminant, fold_point, \
    real_root_count
from .graphs import (CUBIC, LINEAR, BridgePoint, GraphSurface, bridge_points,
                     graph_point, linear_family_member, pleat_gain_sector,
                     pleat_theta_for_sector, pleated_family_member)
from .polycover import PolyCoverReport, loop_monodromy, polynomial_cover_check
from .psh import ComplexLine, PshResult, circle_values, subharmonicity_check
from .qm import (CLASSIFY_TOL, MembershipResult, PointC2, PolyhedronQM,
                 TriFunctional, phi, phi_values, qm_membership,
                 sector_candidates, sector_label_array, sector_of)
from .trace import LevelTrace, patch_components, tangle_trace, trace_level_set

__all__ = [
    "BridgeCertificate", "BridgePoint", "CLASSIFY_TOL", "CUBIC",
    "ComplexLine", "CuspReport", "GraphSurface", "IsotopyResult",
    "LINEAR", "LevelTrace", "MembershipResult", "PointC2", "PolyCoverReport",
    "PolyhedronQM", "PshResult", "TriFunctional", "bridge_points",
    "certify_bridge_position", "circle_values", "cusp_analysis",
    "declared_bridge_data", "discriminant", "fold_point", "graph_point",
    "isotopy_check", "linear_family_member", "loop_monodromy",
    "patch_components", "phi", "phi_values", "pleat_gain_sector",
    "pleat_theta_for_sector", "pleated_family_member",
    "polynomial_cover_check", "qm_membership", "real_root_count",
    "sector_candidates", "sector_label_array", "sector_of",
    "subharmonicity_check", "tangle_trace", "trace_level_set",
]
