"""Geometric engine for two-valued measures on rays of R^3.

Canonical sphere geometry, tangent-plane projection, constructive
reachability with verifiable certificates, derivation traces mechanizing
the value-propagation arguments, extraction of finite triad systems, and
an exhaustive coloring checker that independently confirms the extracted
systems admit no two-valued coloring.
"""

from .coloring import (
    ColoringResult,
    PartialColoring,
    SolveMode,
    count_colorings_by_enumeration,
    is_valid_coloring,
    refute_by_core_enumeration,
    solve,
)
from .demos import cover_index, demo_first_proof, demo_second_proof, qn_sequence
from .plane import PlaneLine, PlanePoint, Side, circle_image_line, project, side_of, unproject
from .reach import (
    N_MAX,
    ReachCertificate,
    ShellParams,
    VerifyReport,
    asymptotic_residual,
    choose_shell_n,
    reach,
    shell,
    step_one,
    verify_certificate,
)
from .sphere import (
    NORTH_POLE,
    TOL,
    GreatCircle,
    Ray,
    Rotation,
    Tolerance,
    Tripod,
    canonicalize,
    circle_of,
    complete_tripod,
    equator_partner,
    rotation_to_pole,
    third_point,
)
from .system import TriadSystem, load_system, save_system, validate_system
from .trace import (
    DerivationTrace,
    ValueFact,
    decision_core,
    extract_triad_system,
    rule_circle_zero,
    rule_lemma_zero,
    rule_orthogonal_zero,
    rule_triad_one,
    seed_north_pole,
)

__version__ = "0.1.0"

__all__ = [
    "ColoringResult",
    "DerivationTrace",
    "GreatCircle",
    "N_MAX",
    "NORTH_POLE",
    "PartialColoring",
    "PlaneLine",
    "PlanePoint",
    "Ray",
    "ReachCertificate",
    "Rotation",
    "ShellParams",
    "Side",
    "SolveMode",
    "TOL",
    "Tolerance",
    "TriadSystem",
    "Tripod",
    "ValueFact",
    "VerifyReport",
    "asymptotic_residual",
    "canonicalize",
    "choose_shell_n",
    "circle_image_line",
    "circle_of",
    "complete_tripod",
    "count_colorings_by_enumeration",
    "cover_index",
    "decision_core",
    "demo_first_proof",
    "demo_second_proof",
    "equator_partner",
    "extract_triad_system",
    "is_valid_coloring",
    "load_system",
    "project",
    "qn_sequence",
    "reach",
    "refute_by_core_enumeration",
    "rotation_to_pole",
    "rule_circle_zero",
    "rule_lemma_zero",
    "rule_orthogonal_zero",
    "rule_triad_one",
    "save_system",
    "seed_north_pole",
    "shell",
    "side_of",
    "solve",
    "step_one",
    "third_point",
    "unproject",
    "validate_system",
    "verify_certificate",
]
