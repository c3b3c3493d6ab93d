"""JSON codecs shared by the CLI.

Integers that fit in 64 bits are emitted as JSON numbers; anything
larger becomes a decimal string so no consumer ever sees a rounded
value.  Matrix entries are always decimal strings.  Every parser accepts
both forms.
"""

from __future__ import annotations

from fractions import Fraction

from .cf_core import CFKind, RegularCF
from .gl2 import INFINITY, Axis, IntMat2
from .hecke_surface import SurfaceInvariants, surface_invariants
from .invariants import LaminationInvariant, SingularityData
from .legendre import LegendreStep
from .surd import QuadSurd

_I64_MIN = -(2 ** 63)
_I64_MAX = 2 ** 63 - 1


def int_out(v: int):
    return v if _I64_MIN <= v <= _I64_MAX else str(v)


def int_in(v) -> int:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ValueError(f"expected an integer, got {v!r}")
    return int(v)


def _field(obj, key):
    try:
        return obj[key]
    except (KeyError, TypeError):
        raise ValueError(f"missing field {key!r}") from None


# -- continued fractions ---------------------------------------------


def cf_to_obj(cf: RegularCF) -> dict:
    return {
        "prefix": [int_out(t) for t in cf.prefix],
        "period": None if cf.period is None else [int_out(t) for t in cf.period],
        "kind": cf.kind.value,
    }


def cf_from_obj(obj) -> RegularCF:
    if isinstance(obj, list):
        return RegularCF.finite(int_in(t) for t in obj)
    if not isinstance(obj, dict):
        raise ValueError(f"cannot read a fraction from {obj!r}")
    period = obj.get("period")
    if "kind" in obj:
        kind = CFKind(obj["kind"])
    else:
        # a bare object with a period can only mean the periodic kind
        kind = CFKind.PERIODIC if period else CFKind.FINITE
    prefix = [int_in(t) for t in obj.get("prefix", [])]
    if kind is CFKind.PERIODIC:
        return RegularCF.periodic(prefix, [int_in(t) for t in period or []])
    if period is not None:
        raise ValueError(f"a {kind.value} fraction cannot carry a period")
    if kind is CFKind.PREFIX:
        return RegularCF.prefix_only(prefix)
    return RegularCF.finite(prefix)


def fraction_to_obj(x: Fraction) -> dict:
    return {"numerator": int_out(x.numerator),
            "denominator": int_out(x.denominator)}


# -- matrices and axes ------------------------------------------------


def mat_to_obj(m: IntMat2) -> dict:
    return {"a": str(m.a), "b": str(m.b), "c": str(m.c), "d": str(m.d)}


def mat_from_obj(obj) -> IntMat2:
    if not isinstance(obj, dict):
        raise ValueError(f"cannot read a matrix from {obj!r}")
    return IntMat2(*(int_in(_field(obj, k)) for k in "abcd"))


def mat_from_text(text: str) -> IntMat2:
    """Matrix from 'a,b,c,d' or from the JSON object form."""
    text = text.strip()
    if text.startswith("{"):
        import json
        return mat_from_obj(json.loads(text))
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise ValueError(f"expected 4 comma-separated entries, got {text!r}")
    return IntMat2(*(int(p) for p in parts))


def point_to_obj(pt) -> dict:
    if pt is INFINITY:
        return {"type": "infinity"}
    if isinstance(pt, QuadSurd):
        return {"type": "surd", "p": int_out(pt.p), "q": int_out(pt.q),
                "r": int_out(pt.r), "D": int_out(pt.D)}
    x = Fraction(pt)
    return {"type": "rational", **fraction_to_obj(x)}


def axis_to_obj(axis: Axis) -> dict:
    return {
        "endpoints": [point_to_obj(e) for e in axis.endpoints],
        "trace": int_out(axis.trace),
        "length": axis.length,
    }


# -- surfaces ---------------------------------------------------------


def surface_to_obj(si: SurfaceInvariants) -> dict:
    return {
        "level": si.level,
        "index": si.index,
        "cusps": si.cusps,
        "elliptic2": si.elliptic2,
        "elliptic3": si.elliptic3,
        "genus": si.genus,
    }


# -- streams ----------------------------------------------------------


def step_to_obj(step: LegendreStep) -> dict:
    return {
        "k": step.k,
        "term": int_out(step.term),
        "gamma": mat_to_obj(step.gamma),
        "trace": int_out(step.trace),
        "det": step.det,
        "in_gamma0N": step.in_gamma0N,
        "axis_length": step.axis_length,
    }


def step_from_obj(obj) -> LegendreStep:
    return LegendreStep(
        k=int_in(_field(obj, "k")),
        term=int_in(_field(obj, "term")),
        gamma=mat_from_obj(_field(obj, "gamma")),
        trace=int_in(_field(obj, "trace")),
        in_gamma0N=bool(obj.get("in_gamma0N", False)),
        axis_length=obj.get("axis_length"),
    )


# -- invariants -------------------------------------------------------


def invariant_to_obj(inv: LaminationInvariant) -> dict:
    return {
        "level": inv.level,
        "theta": cf_to_obj(inv.theta),
        "delta": [int_out(d) for d in inv.delta.doubled],
        "approximate": inv.approximate,
    }


def invariant_from_obj(obj) -> LaminationInvariant:
    level = int_in(_field(obj, "level"))
    genus = surface_invariants(level).genus
    delta = SingularityData(tuple(int_in(d) for d in obj.get("delta", [])), genus)
    return LaminationInvariant(cf_from_obj(_field(obj, "theta")), delta, level)


def parse_parts(text: str) -> list[Fraction]:
    """Half-integer orders from '2' or '3/2,1/2' style notation."""
    text = text.strip()
    if not text:
        return []
    return [Fraction(tok.strip()) for tok in text.split(",")]
