"""JSON interchange for every domain type.

``to_json_*`` returns plain dicts and lists; ``dumps`` serializes them with
sorted keys so that output is byte-stable. Parsers raise
:class:`~graphcob.errors.MalformedJson` for structurally wrong input and let
domain errors (an involution with a fixed point, a morphism that is not a
tree collapse, ...) propagate.
"""

import json

from graphcob.catalog import NerveData
from graphcob.cospan import CospanNF, NFComponent
from graphcob.errors import MalformedJson
from graphcob.gaf import Gaf
from graphcob.grading import ColoredMorphism, Coloring
from graphcob.morphism import GafMorphism, validate_morphism

__all__ = [
    "dumps",
    "loads",
    "gaf_to_json",
    "gaf_from_json",
    "morphism_to_json",
    "morphism_from_json",
    "coloring_to_json",
    "coloring_from_json",
    "colored_morphism_to_json",
    "colored_morphism_from_json",
    "nf_to_json",
    "nf_from_json",
    "nerve_to_json",
    "nerve_from_json",
    "to_json",
]


def dumps(obj):
    return json.dumps(to_json(obj), sort_keys=True, separators=(",", ":"))


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedJson(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from None


def _field(d, key, kind):
    if not isinstance(d, dict):
        raise MalformedJson(f"expected an object with key {key!r}", key=key)
    if key not in d:
        raise MalformedJson(f"missing key {key!r}", key=key)
    value = d[key]
    if kind == "int":
        if not isinstance(value, int) or isinstance(value, bool):
            raise MalformedJson(f"{key!r} must be an integer", key=key)
    elif kind == "ints":
        if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
            raise MalformedJson(f"{key!r} must be a list of integers", key=key)
    elif kind == "list":
        if not isinstance(value, list):
            raise MalformedJson(f"{key!r} must be a list", key=key)
    return value


def gaf_to_json(G):
    return {
        "a": G.a_size,
        "b": G.b_size,
        "v": G.v_size,
        "h": G.h_size,
        "rho": list(G.rho),
        "sigma": list(G.sigma),
        "upsilon": list(G.upsilon),
    }


def gaf_from_json(d):
    return Gaf(
        _field(d, "a", "int"),
        _field(d, "b", "int"),
        _field(d, "v", "int"),
        _field(d, "h", "int"),
        _field(d, "rho", "ints"),
        _field(d, "sigma", "ints"),
        _field(d, "upsilon", "ints"),
    )


def morphism_to_json(f):
    return {
        "source": gaf_to_json(f.source),
        "target": gaf_to_json(f.target),
        "map_a": list(f.map_a),
        "map_b": list(f.map_b),
        "map_v": list(f.map_v),
        "map_h": list(f.map_h),
    }


def morphism_from_json(d, validate=True):
    f = GafMorphism(
        gaf_from_json(_field(d, "source", None)),
        gaf_from_json(_field(d, "target", None)),
        _field(d, "map_a", "ints"),
        _field(d, "map_b", "ints"),
        _field(d, "map_v", "ints"),
        _field(d, "map_h", "ints"),
    )
    return validate_morphism(f) if validate else f


def coloring_to_json(c):
    return {"gaf": gaf_to_json(c.base), "palette": c.palette_size, "color_v": list(c.color_v), "color_e": list(c.color_e)}


def coloring_from_json(d):
    return Coloring(
        gaf_from_json(_field(d, "gaf", None)),
        _field(d, "palette", "int"),
        _field(d, "color_v", "ints") + _field(d, "color_e", "ints"),
    )


def colored_morphism_to_json(fm):
    return {"morphism": morphism_to_json(fm.underlying), "palette": fm.palette_size, "mark": list(fm.marking)}


def colored_morphism_from_json(d):
    return ColoredMorphism(
        morphism_from_json(_field(d, "morphism", None)),
        _field(d, "palette", "int"),
        _field(d, "mark", "ints"),
    )


def nf_to_json(nf):
    return {
        "components": [
            {"a_legs": list(c.a_legs), "b_legs": list(c.b_legs), "rank": c.rank} for c in nf.components
        ]
    }


def nf_from_json(d):
    comps = []
    for c in _field(d, "components", "list"):
        comps.append(NFComponent(tuple(_field(c, "a_legs", "ints")), tuple(_field(c, "b_legs", "ints")), _field(c, "rank", "int")))
    try:
        return CospanNF.from_components(comps)
    except ValueError as exc:
        raise MalformedJson(str(exc)) from None


def nerve_to_json(n):
    return {
        "objects": [gaf_to_json(G) for G in n.objects],
        "morphisms": [{"src": i, "tgt": j, "map": morphism_to_json(f)} for i, j, f in n.morphisms],
        "compose": sorted([i, j, k] for (i, j), k in n.compose.items()),
        "identities": list(n.identities),
    }


def nerve_from_json(d):
    objects = tuple(gaf_from_json(G) for G in _field(d, "objects", "list"))
    morphisms = tuple(
        (_field(m, "src", "int"), _field(m, "tgt", "int"), morphism_from_json(_field(m, "map", None)))
        for m in _field(d, "morphisms", "list")
    )
    compose = {}
    for row in _field(d, "compose", "list"):
        if not (isinstance(row, list) and len(row) == 3 and all(isinstance(x, int) for x in row)):
            raise MalformedJson("compose rows are [i, j, k] triples")
        compose[(row[0], row[1])] = row[2]
    return NerveData(objects, morphisms, compose, tuple(_field(d, "identities", "ints")))


_WRITERS = (
    (Gaf, gaf_to_json),
    (GafMorphism, morphism_to_json),
    (Coloring, coloring_to_json),
    (ColoredMorphism, colored_morphism_to_json),
    (CospanNF, nf_to_json),
    (NerveData, nerve_to_json),
)


def to_json(obj):
    """Recursively convert domain objects (and containers of them) to JSON values."""
    for cls, writer in _WRITERS:
        if isinstance(obj, cls):
            return writer(obj)
    if isinstance(obj, dict):
        return {str(k): to_json(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_json(x) for x in obj]
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if hasattr(obj, "__dataclass_fields__"):
        return {k: to_json(getattr(obj, k)) for k in obj.__dataclass_fields__ if not k.startswith("_")}
    raise TypeError(f"cannot serialize {type(obj).__name__}")
