"""JSON encodings for every exchangeable object.

Complex numbers travel as [re, im] pairs throughout.  Formats:

* quaternion   {"e": [[re,im] x4]} in basis-coefficient order, or
               {"ijk": [[re,im] x4]} in classical-basis order
* triple       {"a1": [re,im], "a2": [re,im], "b1": [re,im], "b2": [re,im]}
               or the preset string "laplace-t0"
* point        [x, y, z]
* function     {"poly": [[re,im], ...]}
               {"series": {"center": [re,im], "coeffs": [...], "radius": r}}
               {"exp": {"amp": [re,im], "rate": [re,im]}}
               {"lincomb": [[[re,im], <function>], ...]}
* map          {"side": "right"|"left", "triple": <triple>,
                "F1": <function>, ..., "F4": <function>}
* series       {"side": ..., "triple": <triple>, "coeffs": [<quaternion>, ...]}
* operator     {"n": order, "terms": [{"a":..,"b":..,"g":..,"c":..}, ...]}
               or a preset name ("laplace3d", "example5")
"""

from __future__ import annotations

from typing import Any

from .algebra import IjkQuaternion, Quaternion
from .analytic import (AnalyticFunction, ExpScaled, LinearCombination,
                       Polynomial, PowerSeries)
from .mappings import GMonogenicMap, QuaternionSeries, Side
from .pde import PRESETS, PdeOperator, Term
from .space import LAPLACE_T0, Point3, Triple

TRIPLE_PRESETS: dict[str, Triple] = {"laplace-t0": LAPLACE_T0}


class FormatError(ValueError):
    """Malformed JSON payload for one of the wire formats."""


def _pair(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _unpair(obj: Any, what: str) -> complex:
    if isinstance(obj, (int, float)):
        return complex(obj)
    if (isinstance(obj, (list, tuple)) and len(obj) == 2
            and all(isinstance(v, (int, float)) for v in obj)):
        return complex(obj[0], obj[1])
    raise FormatError(f"{what} must be [re, im], got {obj!r}")


def quaternion_to_json(q: Quaternion | IjkQuaternion) -> dict:
    if isinstance(q, IjkQuaternion):
        return {"ijk": [_pair(c) for c in q.coefficients]}
    return {"e": [_pair(c) for c in q.coefficients]}


def quaternion_from_json(obj: Any) -> Quaternion:
    if not isinstance(obj, dict):
        raise FormatError(f"quaternion must be an object, got {obj!r}")
    if "e" in obj:
        parts = obj["e"]
    elif "ijk" in obj:
        parts = obj["ijk"]
    else:
        raise FormatError('quaternion needs an "e" or "ijk" key')
    if not isinstance(parts, list) or len(parts) != 4:
        raise FormatError("quaternion needs exactly 4 coefficient pairs")
    cs = [_unpair(c, "coefficient") for c in parts]
    if "e" in obj:
        return Quaternion(*cs)
    return IjkQuaternion(*cs).to_quaternion()


def triple_to_json(t: Triple) -> dict:
    return {"a1": _pair(t.a1), "a2": _pair(t.a2),
            "b1": _pair(t.b1), "b2": _pair(t.b2)}


def triple_from_json(obj: Any) -> Triple:
    if isinstance(obj, str):
        try:
            return TRIPLE_PRESETS[obj]
        except KeyError:
            raise FormatError(f"unknown triple preset {obj!r}") from None
    if not isinstance(obj, dict):
        raise FormatError(f"triple must be an object or preset name, got {obj!r}")
    try:
        return Triple(_unpair(obj["a1"], "a1"), _unpair(obj["a2"], "a2"),
                      _unpair(obj["b1"], "b1"), _unpair(obj["b2"], "b2"))
    except KeyError as missing:
        raise FormatError(f"triple is missing key {missing}") from None


def point_from_json(obj: Any) -> Point3:
    if (not isinstance(obj, (list, tuple)) or len(obj) != 3
            or not all(isinstance(v, (int, float)) for v in obj)):
        raise FormatError(f"point must be [x, y, z], got {obj!r}")
    return (float(obj[0]), float(obj[1]), float(obj[2]))


def function_to_json(fn: AnalyticFunction) -> dict:
    if isinstance(fn, Polynomial):
        return {"poly": [_pair(c) for c in fn.coeffs]}
    if isinstance(fn, PowerSeries):
        return {"series": {"center": _pair(fn.center),
                           "coeffs": [_pair(c) for c in fn.coeffs],
                           "radius": fn.radius}}
    if isinstance(fn, ExpScaled):
        return {"exp": {"amp": _pair(fn.amplitude), "rate": _pair(fn.rate)}}
    if isinstance(fn, LinearCombination):
        return {"lincomb": [[_pair(c), function_to_json(sub)] for c, sub in fn.terms]}
    raise FormatError(f"cannot encode {type(fn).__name__}")


def function_from_json(obj: Any) -> AnalyticFunction:
    if not isinstance(obj, dict) or len(obj) != 1:
        raise FormatError(f"function must be an object with one tag key, got {obj!r}")
    tag, body = next(iter(obj.items()))
    if tag == "poly":
        if not isinstance(body, list):
            raise FormatError("poly body must be a coefficient list")
        return Polynomial(tuple(_unpair(c, "coefficient") for c in body))
    if tag == "series":
        try:
            return PowerSeries(_unpair(body["center"], "center"),
                               tuple(_unpair(c, "coefficient") for c in body["coeffs"]),
                               float(body["radius"]))
        except (KeyError, TypeError) as exc:
            raise FormatError(f"bad series body: {exc}") from None
    if tag == "exp":
        try:
            return ExpScaled(_unpair(body["amp"], "amp"), _unpair(body["rate"], "rate"))
        except (KeyError, TypeError) as exc:
            raise FormatError(f"bad exp body: {exc}") from None
    if tag == "lincomb":
        if not isinstance(body, list):
            raise FormatError("lincomb body must be a list of [coeff, function]")
        terms = []
        for item in body:
            if not isinstance(item, list) or len(item) != 2:
                raise FormatError("each lincomb term must be [coeff, function]")
            terms.append((_unpair(item[0], "coefficient"), function_from_json(item[1])))
        return LinearCombination(tuple(terms))
    raise FormatError(f"unknown function tag {tag!r}")


def _side_from_json(obj: Any) -> Side:
    if obj == "right":
        return Side.RIGHT
    if obj == "left":
        return Side.LEFT
    raise FormatError(f'side must be "right" or "left", got {obj!r}')


def map_to_json(m: GMonogenicMap) -> dict:
    return {"side": m.side.value, "triple": triple_to_json(m.triple),
            "F1": function_to_json(m.f1), "F2": function_to_json(m.f2),
            "F3": function_to_json(m.f3), "F4": function_to_json(m.f4)}


def map_from_json(obj: Any) -> GMonogenicMap:
    if not isinstance(obj, dict):
        raise FormatError(f"map must be an object, got {obj!r}")
    try:
        return GMonogenicMap(_side_from_json(obj["side"]),
                             triple_from_json(obj["triple"]),
                             function_from_json(obj["F1"]),
                             function_from_json(obj["F2"]),
                             function_from_json(obj["F3"]),
                             function_from_json(obj["F4"]))
    except KeyError as missing:
        raise FormatError(f"map is missing key {missing}") from None


def series_to_json(s: QuaternionSeries) -> dict:
    return {"side": s.side.value, "triple": triple_to_json(s.triple),
            "coeffs": [quaternion_to_json(c) for c in s.coeffs]}


def series_from_json(obj: Any) -> QuaternionSeries:
    if not isinstance(obj, dict):
        raise FormatError(f"series must be an object, got {obj!r}")
    try:
        return QuaternionSeries(_side_from_json(obj["side"]),
                                triple_from_json(obj["triple"]),
                                tuple(quaternion_from_json(c) for c in obj["coeffs"]))
    except KeyError as missing:
        raise FormatError(f"series is missing key {missing}") from None


def operator_to_json(op: PdeOperator) -> dict:
    return {"n": op.order,
            "terms": [{"a": t.alpha, "b": t.beta, "g": t.gamma, "c": t.c}
                      for t in op.terms]}


def operator_from_json(obj: Any) -> PdeOperator:
    if isinstance(obj, str):
        try:
            return PRESETS[obj]()
        except KeyError:
            raise FormatError(f"unknown operator preset {obj!r}") from None
    if not isinstance(obj, dict):
        raise FormatError(f"operator must be an object or preset name, got {obj!r}")
    try:
        terms = tuple(Term(int(t["a"]), int(t["b"]), int(t["g"]), float(t["c"]))
                      for t in obj["terms"])
        return PdeOperator(int(obj["n"]), terms)
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad operator body: {exc}") from None
