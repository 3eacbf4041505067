"""JSON rendering of results.

Rationals are rendered as "p/q" strings, never floats; cyclotomic
values as coefficient vectors over the power basis.  The shapes
produced here are described by schemas/asphere-output-v1.schema.json.
"""

from __future__ import annotations

from .certify import Certificate
from .cyclotomic import Cyclotomic
from .params import CherednikConversion, HCoordinates, LambdaConversion, LambdaParam
from .rationals import format_rational
from .roots import SubsystemReport
from .shift import ShiftResult

SCHEMA_VERSION = 1


def rational_json(q) -> str:
    return format_rational(q)


def cyclotomic_json(value: Cyclotomic) -> dict:
    return {"order": value.order, "coeffs": [format_rational(c) for c in value.coeffs]}


def lambda_json(lam: LambdaParam) -> list[str]:
    return [format_rational(v) for v in lam.values]


def subsystem_json(report: SubsystemReport) -> dict:
    return {
        "simple_roots": [list(b) for b in report.simple_roots],
        "kind": report.kind,
        "period": report.period,
        "positivity_basis": report.positivity_basis,
    }


def certificate_json(cert: Certificate) -> dict:
    cond1 = cert.condition1
    cond2 = cert.condition2
    return {
        "verdict": cert.verdict,
        "condition1": {
            "holds": cond1.holds,
            "checked_simple_roots": [
                {
                    "root": list(entry.root),
                    "pairing": format_rational(entry.pairing),
                    "bound": format_rational(entry.bound),
                }
                for entry in cond1.checked_simple_roots
            ],
            "violator": list(cond1.violator) if cond1.violator is not None else None,
        },
        "condition2": {
            "kappa": format_rational(cond2.kappa),
            "holds": cond2.holds,
            "reason": cond2.reason,
        },
        "subsystem": subsystem_json(cert.subsystem),
        "parabolic_slices": [
            {"n0": s.n0, "parts": list(s.parts)} for s in cert.parabolic_slices
        ],
    }


def shift_json(result: ShiftResult) -> dict:
    return {
        "m": list(result.m),
        "lambda_prime": lambda_json(result.lambda_prime),
        "targets": list(result.targets),
        "certificate": certificate_json(result.certificate),
    }


def lambda_conversion_json(conv: LambdaConversion) -> dict:
    return {
        "rational": lambda_json(conv.rational) if conv.rational is not None else None,
        "cyclotomic": [cyclotomic_json(v) for v in conv.cyclotomic],
    }


def cherednik_conversion_json(conv: CherednikConversion) -> dict:
    return {
        "kappa": format_rational(conv.kappa),
        "c_rational": [format_rational(x) for x in conv.rational.c] if conv.rational is not None else None,
        "c_cyclotomic": [cyclotomic_json(v) for v in conv.c_cyclotomic],
    }


def h_coordinates_json(h: HCoordinates) -> list[dict]:
    return [
        {
            "name": cls.name,
            "size": cls.size,
            "values": [cyclotomic_json(v) for v in cls.values],
        }
        for cls in h.classes
    ]


def error_json(kind: str, message: str) -> dict:
    return {"schema_version": SCHEMA_VERSION, "error": {"type": kind, "message": message}}
