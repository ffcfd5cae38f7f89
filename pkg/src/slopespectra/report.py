"""Structured reports: stable key order, reproducible byte-for-byte.

A report is a plain dict rendered either as indented JSON with sorted keys
or as a flat "key: value" text block.  The report digest is computed over
the canonical JSON with the timing field removed, so re-running the same
command on the same inputs reproduces the digest even though timing varies.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from .conics import Conic
from .geometry import Direction, Point
from .pointfile import format_scalar
from .slopes import SlopeSpectrum
from .verifier import Certificate, ProofCase, Refutation

TIMING_KEY = "timing_ms"
DIGEST_KEY = "report_digest"


def scalar_json(v):
    if isinstance(v, Fraction):
        return format_scalar(v)
    if isinstance(v, float):
        return v
    if isinstance(v, int):
        return v
    return str(v)


def point_json(p: Point):
    return [scalar_json(p.x), scalar_json(p.y)]


def direction_json(d: Direction):
    if d.exact:
        return {"dx": scalar_json(d.dx), "dy": scalar_json(d.dy)}
    return {"angle": d.angle}


def conic_json(k: Conic):
    a, b, c, d, e, f = (scalar_json(v) for v in k.coeffs)
    return {"a": a, "b": b, "c": c, "d": d, "e": e, "f": f,
            "degenerate": k.degenerate}


def spectrum_json(spec: SlopeSpectrum):
    return {
        "count": spec.count,
        "classes": [
            {"direction": direction_json(cls.direction),
             "pairs": [list(p) for p in cls.pairs]}
            for cls in spec.classes
        ],
    }


def verdict_json(verdict):
    if isinstance(verdict, Certificate):
        return {
            "kind": "certificate",
            "conic": conic_json(verdict.conic),
            "base_point": point_json(verdict.base_point),
            "generator": point_json(verdict.generator),
            "residues": list(verdict.residues),
            "missing_vertex": point_json(verdict.missing_vertex),
            "gap_position": verdict.gap_position,
            "hull_order": list(verdict.hull_order),
            "full_chain_ok": verdict.full_chain_ok,
        }
    assert isinstance(verdict, Refutation)
    witness = verdict.witness
    if isinstance(witness, tuple):
        witness = list(witness)
    return {
        "kind": "refutation",
        "stage": verdict.stage.value,
        "reason": verdict.reason,
        "witness": witness,
    }


def case_json(case: ProofCase):
    return {
        "case": case.tag.value,
        "rotation": case.rotation,
        "reflected": case.reflected,
        "witness": case.witness,
        "hull_order": list(case.hull_order),
    }


def input_digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def build_report(command: str, backend_kind: str, eps: float,
                 digest: str, payload: dict, timing_ms: float) -> dict:
    report = {
        "command": command,
        "backend": backend_kind,
        "eps": eps,
        "input_sha256": digest,
        "payload": payload,
    }
    canonical = json.dumps(report, sort_keys=True, separators=(",", ":"))
    report[DIGEST_KEY] = hashlib.sha256(canonical.encode()).hexdigest()
    report[TIMING_KEY] = round(timing_ms, 3)
    return report


def to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def _flatten(prefix: str, value, out: list[str]):
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else str(k), value[k], out)
    elif isinstance(value, list):
        out.append(f"{prefix}: {json.dumps(value, sort_keys=True)}")
    else:
        out.append(f"{prefix}: {value}")


def to_text(report: dict) -> str:
    ordered = ["command", "backend", "eps", "input_sha256", "payload",
               DIGEST_KEY, TIMING_KEY]
    lines: list[str] = []
    for key in ordered:
        if key in report:
            _flatten(key, report[key], lines)
    return "\n".join(lines) + "\n"
