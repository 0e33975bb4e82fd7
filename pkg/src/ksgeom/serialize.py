"""JSON documents for certificates and derivation traces.

Shortest-round-trip decimal floats throughout (repr-based, what json emits
natively), fixed key order, one canonical writer, so save -> load -> save
is byte identical. The triad-system document lives in ksgeom.system; this
module owns the certificate and trace formats. Schemas:

certificate:
  {"eps": e, "shell_n": n | null, "points": [[x,y,z], ...],
   "residuals": [r0, ...]}        # one residual per consecutive link

trace:
  {"eps": e,
   "rays": [[x,y,z], ...],
   "facts": [{"ray": i, "value": 0|1, "rule": str, "premises": [...],
              "branch": b, "witness": W | null}, ...],
   "branches": [{"idx": b, "parent": p | null, "assumption": fid | null,
                 "split": {"tripod": [i,j,k], "member": i} | null,
                 "children": [b0,b1] | null,
                 "contradiction": [f1,f2] | null}, ...],
   "named_tripods": [[i,j,k], ...]}

fact witness W is {"tripod": [i,j,k]} for triad steps, or
  {"certificate": <certificate doc>, "frame": [[...],[...],[...]] | null}
for reach chains (frame rows rotate world into certificate coordinates).
"""

from __future__ import annotations

import json
import math

from .errors import ParseError
from .reach import ReachCertificate, VerifyReport
from .system import _canonical_json
from .trace import CertWitness, DerivationTrace, TriadWitness


def certificate_to_doc(cert: ReachCertificate, residuals: tuple[float, ...] | None = None) -> dict:
    return {
        "eps": cert.eps,
        "shell_n": cert.shell_n,
        "points": [list(p) for p in cert.points],
        "residuals": list(residuals) if residuals is not None else [],
    }


def save_certificate(cert: ReachCertificate, residuals: tuple[float, ...] | None = None) -> str:
    return _canonical_json(certificate_to_doc(cert, residuals))


def load_certificate(text: str) -> ReachCertificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
    if not isinstance(doc, dict):
        raise ParseError("certificate root must be an object")
    extra = set(doc) - {"eps", "shell_n", "points", "residuals"}
    if extra:
        raise ParseError(f"unexpected keys: {sorted(extra)}")
    for key in ("eps", "points"):
        if key not in doc:
            raise ParseError(f"missing key: {key}")
    try:
        points = tuple((float(x), float(y), float(z)) for x, y, z in doc["points"])
        shell_n = doc.get("shell_n")
        return ReachCertificate(
            points=points,
            eps=float(doc["eps"]),
            shell_n=int(shell_n) if shell_n is not None else None,
        )
    except (TypeError, ValueError) as exc:
        raise ParseError(f"malformed certificate: {exc}") from exc


def _witness_to_doc(w: TriadWitness | CertWitness | None) -> dict | None:
    if w is None:
        return None
    if isinstance(w, TriadWitness):
        return {"tripod": list(w.rays)}
    return {
        "certificate": certificate_to_doc(w.certificate),
        "frame": [list(row) for row in w.frame.rows] if w.frame is not None else None,
    }


def trace_to_doc(t: DerivationTrace) -> dict:
    return {
        "eps": t.tol.eps,
        "rays": [[r.x, r.y, r.z] for r in t.rays],
        "facts": [
            {
                "ray": f.ray,
                "value": f.value,
                "rule": f.rule,
                "premises": list(f.premises),
                "branch": f.branch,
                "witness": _witness_to_doc(f.witness),
            }
            for f in t.facts
        ],
        "branches": [
            {
                "idx": b.idx,
                "parent": b.parent,
                "assumption": b.assumption,
                "split": (
                    {"tripod": list(b.split.tripod), "member": b.split.member}
                    if b.split is not None
                    else None
                ),
                "children": list(b.children) if b.children is not None else None,
                "contradiction": list(b.contradiction) if b.contradiction is not None else None,
            }
            for b in t.branches
        ],
        "named_tripods": [list(tri) for tri in t.named_tripods],
    }


def save_trace(t: DerivationTrace) -> str:
    return _canonical_json(trace_to_doc(t))


def report_to_doc(report: VerifyReport) -> dict:
    def clean(x: float) -> float | None:
        return None if isinstance(x, float) and math.isnan(x) else x

    return {
        "accepted": report.accepted,
        "link_residuals": [clean(r) for r in report.link_residuals],
        "min_z": clean(report.min_z),
        "failures": list(report.failures),
        "first_bad_link": report.first_bad_link,
    }
