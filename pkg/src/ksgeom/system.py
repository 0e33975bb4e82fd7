"""Finite systems of rays with tripod and orthogonal-pair constraints.

A coloring of a system assigns 0 or 1 to every ray so that each listed
triad gets exactly one 1 and no listed pair gets two 1s. The JSON document
format is the interchange surface shared with the CLI: a single object
{"eps", "rays", "triads", "pairs"} with shortest-round-trip decimal reals
and no extra keys, so save -> load -> save is byte identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ParseError, ValidationError
from .sphere import TOL, Ray, Tolerance, canonicalize


@dataclass(frozen=True)
class ValidationReport:
    accepted: bool
    worst_residual: float
    offenders: tuple[tuple[int, int], ...] = ()

    def __bool__(self) -> bool:
        return self.accepted


@dataclass(frozen=True)
class TriadSystem:
    rays: tuple[Ray, ...]
    triads: tuple[tuple[int, int, int], ...]
    pairs: tuple[tuple[int, int], ...] = ()
    eps: float = TOL.eps

    def __post_init__(self) -> None:
        n = len(self.rays)
        for t in self.triads:
            if len(set(t)) != 3 or not all(0 <= i < n for i in t):
                raise ValidationError(f"triad indices out of range or repeated: {t}")
        for p in self.pairs:
            if len(set(p)) != 2 or not all(0 <= i < n for i in p):
                raise ValidationError(f"pair indices out of range or repeated: {p}")

    @property
    def n_rays(self) -> int:
        return len(self.rays)


def validate_system(s: TriadSystem) -> ValidationReport:
    """Recompute every constrained pairwise dot; accept iff all within eps."""
    worst = 0.0
    offenders: list[tuple[int, int]] = []

    def check(i: int, j: int) -> None:
        nonlocal worst
        r = abs(s.rays[i].dot(s.rays[j]))
        if r > worst:
            worst = r
        if r > s.eps:
            offenders.append((i, j))

    for a, b, c in s.triads:
        check(a, b)
        check(a, c)
        check(b, c)
    for a, b in s.pairs:
        check(a, b)
    return ValidationReport(
        accepted=not offenders, worst_residual=worst, offenders=tuple(offenders)
    )


def _canonical_json(doc: dict) -> str:
    return json.dumps(doc, indent=1, separators=(",", ": ")) + "\n"


def save_system(s: TriadSystem) -> str:
    doc = {
        "eps": s.eps,
        "rays": [[r.x, r.y, r.z] for r in s.rays],
        "triads": [list(t) for t in s.triads],
        "pairs": [list(p) for p in s.pairs],
    }
    return _canonical_json(doc)


def _load_ray(v: list, tol: Tolerance) -> Ray:
    x, y, z = (float(c) for c in v)
    try:
        # Already-canonical coordinates are kept bit for bit so that
        # save -> load -> save round trips byte identically.
        return Ray(x, y, z)
    except ValueError:
        return canonicalize((x, y, z), tol)


def load_system(text: str) -> TriadSystem:
    """Parse and validate a triad-system document.

    ParseError carries line/column for malformed JSON; ValidationError is
    raised when the document's own eps is violated by its triads or pairs.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
    if not isinstance(doc, dict):
        raise ParseError("document root must be an object")
    extra = set(doc) - {"eps", "rays", "triads", "pairs"}
    if extra:
        raise ParseError(f"unexpected keys: {sorted(extra)}")
    for key in ("eps", "rays", "triads", "pairs"):
        if key not in doc:
            raise ParseError(f"missing key: {key}")
    try:
        eps = float(doc["eps"])
        tol = Tolerance(eps)
        rays = tuple(_load_ray(v, tol) for v in doc["rays"])
        triads = tuple((int(a), int(b), int(c)) for a, b, c in doc["triads"])
        pairs = tuple((int(a), int(b)) for a, b in doc["pairs"])
    except ValidationError:
        raise
    except (TypeError, ValueError) as exc:
        raise ParseError(f"malformed document: {exc}") from exc
    system = TriadSystem(rays=rays, triads=triads, pairs=pairs, eps=eps)
    report = validate_system(system)
    if not report:
        raise ValidationError(
            f"orthogonality violated at {report.offenders[:4]}, "
            f"worst residual {report.worst_residual!r}"
        )
    return system
