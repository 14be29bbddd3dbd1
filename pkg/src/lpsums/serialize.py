"""JSON wire formats.

Component space::

    {"kind": "euclidean"|"lr"|"l1"|"linf"|"polygon",
     "dim": int, "r": number?, "vertices": [[x, y], ...]?}

Sum space::

    {"p": number, "components": [ComponentSpace, ...]}

``p`` is 0 for the c0-style sum; the string "inf" is accepted and
emitted for the sup-norm container that arises as the dual of a p = 1
sum (JSON has no infinity literal).

Vectors and functionals::

    {"entries": [{"index": int, "coords": [number, ...]}, ...]}

All emitted numbers carry 17 significant digits, dictionaries keep
insertion order and no randomness is involved, so reports are
byte-stable across runs.
"""

from __future__ import annotations

import json
import math

from .components import ComponentSpace, euclidean, l1, linf, lr, polygon
from .errors import ValidationError
from .sums import SumFunctional, SumSpace, SumVector, sum_space


def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValidationError("cannot serialize a non-finite number")
    return format(float(x), ".17g")


def dumps(obj) -> str:
    """Deterministic JSON text with 17-significant-digit numbers."""
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        parts = [f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()]
        return "{" + ", ".join(parts) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    try:
        return _fmt_float(float(obj))
    except (TypeError, ValueError):
        raise ValidationError(f"cannot serialize object of type {type(obj).__name__}")


def component_space_to_jsonable(space: ComponentSpace) -> dict:
    out = {"kind": space.kind, "dim": space.dim}
    if space.kind == "lr":
        out["r"] = space.r
    if space.kind == "polygon":
        out["vertices"] = [list(v) for v in space.vertices]
    return out


def component_space_from_jsonable(data) -> ComponentSpace:
    if not isinstance(data, dict):
        raise ValidationError("component space must be a JSON object")
    kind = data.get("kind")
    if kind == "euclidean":
        return euclidean(_expect_int(data, "dim"))
    if kind == "lr":
        if "r" not in data:
            raise ValidationError("lr space needs an exponent r")
        return lr(_expect_int(data, "dim"), float(data["r"]))
    if kind == "l1":
        return l1(_expect_int(data, "dim"))
    if kind == "linf":
        return linf(_expect_int(data, "dim"))
    if kind == "polygon":
        verts = data.get("vertices")
        if not isinstance(verts, list):
            raise ValidationError("polygon space needs a vertex list")
        return polygon(verts)
    raise ValidationError(f"unknown space kind {kind!r}")


def _expect_int(data: dict, key: str) -> int:
    value = data.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValidationError(f"field {key!r} must be an integer")
    return value


def sum_space_to_jsonable(space: SumSpace) -> dict:
    p = "inf" if space.p == math.inf else space.p
    return {
        "p": p,
        "components": [component_space_to_jsonable(c) for c in space.components],
    }


def sum_space_from_jsonable(data) -> SumSpace:
    if not isinstance(data, dict):
        raise ValidationError("sum space must be a JSON object")
    p = data.get("p")
    if p == "inf":
        p = math.inf
    if not isinstance(p, (int, float)) or isinstance(p, bool):
        raise ValidationError("sum space needs a numeric exponent p (or \"inf\")")
    comps = data.get("components")
    if not isinstance(comps, list) or not comps:
        raise ValidationError("sum space needs a nonempty component list")
    return sum_space(float(p), [component_space_from_jsonable(c) for c in comps])


def _entries_to_jsonable(element) -> dict:
    return {
        "entries": [
            {"index": i, "coords": [float(c) for c in v]}
            for i, v in element.entries
        ]
    }


def vector_to_jsonable(x: SumVector) -> dict:
    return _entries_to_jsonable(x)


def functional_to_jsonable(f: SumFunctional) -> dict:
    return _entries_to_jsonable(f)


def _entries_from_jsonable(data, cls):
    if not isinstance(data, dict) or not isinstance(data.get("entries"), list):
        raise ValidationError("element must be {\"entries\": [...]}")
    pairs = []
    for item in data["entries"]:
        if not isinstance(item, dict):
            raise ValidationError("entries must be objects with index and coords")
        index = item.get("index")
        coords = item.get("coords")
        if not isinstance(index, int) or isinstance(index, bool):
            raise ValidationError("entry index must be an integer")
        if not isinstance(coords, list) or not all(
            isinstance(c, (int, float)) and not isinstance(c, bool) for c in coords
        ):
            raise ValidationError("entry coords must be a list of numbers")
        pairs.append((index, coords))
    try:
        return cls(pairs)
    except ValidationError:
        raise
    except Exception as exc:  # malformed shapes surface as validation errors
        raise ValidationError(str(exc))


def vector_from_jsonable(data) -> SumVector:
    return _entries_from_jsonable(data, SumVector)


def functional_from_jsonable(data) -> SumFunctional:
    return _entries_from_jsonable(data, SumFunctional)


def support_set_to_jsonable(sset) -> dict:
    """JSON form of a sum-level support-functional description."""
    return {
        "p": "inf" if sset.space.p == math.inf else sset.space.p,
        "parts": [
            {
                "index": i,
                "scale": float(scale),
                "singleton": part.singleton,
                "functionals": [[float(c) for c in g] for g in part.functionals],
            }
            for i, scale, part in sset.parts
        ],
        "free_indices": list(sset.free_indices),
        "simplex_over_max_indices": sset.space.p == 0.0,
    }
