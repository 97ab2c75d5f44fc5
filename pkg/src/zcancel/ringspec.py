"""JSON ring-spec files: parsing, validation and emission.

Schema (``spec_version`` 1), indices 1-based::

    {"spec_version": 1, "family": "skew", "generators": ["x1", "x2"],
     "order": 2, "free_params": 0,
     "params": [{"i": 1, "j": 2, "torsion": 1, "free": []}]}

    {"spec_version": 1, "family": "weyl", "generators": ["x", "y"],
     "order": 3, "q": 1, "weyl_orientation": "xy-qyx-1"}

    {"spec_version": 1, "family": "tensor", "factors": [<skew or weyl spec>, ...]}

``order`` is the root-of-unity order m; 0 (or 1) means no torsion part.
A skew parameter is p_ij = zeta_m^torsion * q_1^free_1 ... q_r^free_r with
r = ``free_params``.  A Weyl ``q`` is the torsion exponent of zeta_m.
"""

import json

from .errors import ValidationError
from .rings import WEYL_ORIENTATIONS, ParamExponent, SkewRing, TensorRing, WeylRing

__all__ = ["SPEC_VERSION", "SpecError", "parse_ring_spec", "loads_ring_spec", "ring_from_dict",
           "emit_ring_spec", "ring_to_dict"]

SPEC_VERSION = 1


class SpecError(ValidationError):
    """Malformed or invalid ring spec; ``field`` names the offending location."""

    def __init__(self, message, field=None, line=None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field:
            where.append(f"field {field}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


def parse_ring_spec(path):
    with open(path, "r", encoding="utf-8") as fh:
        return loads_ring_spec(fh.read())


def loads_ring_spec(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"parse error: {exc.msg}", line=exc.lineno) from None
    if not isinstance(data, dict):
        raise SpecError("top level must be an object")
    version = data.get("spec_version")
    if version != SPEC_VERSION:
        raise SpecError(f"unsupported spec_version {version!r} (expected {SPEC_VERSION})",
                        field="spec_version")
    return ring_from_dict(data, top=True)


def _int(value, field, minimum=None):
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpecError(f"expected an integer, got {value!r}", field=field)
    if minimum is not None and value < minimum:
        raise SpecError(f"must be >= {minimum}", field=field)
    return value


def _keys(d, allowed, path):
    extra = sorted(set(d) - set(allowed))
    if extra:
        raise SpecError(f"unknown keys {extra}", field=path or "<root>")


def _generators(d, path, default=None):
    g = d.get("generators", default)
    if g is None:
        raise SpecError("missing generator list", field=f"{path}generators")
    if not isinstance(g, list) or not all(isinstance(x, str) and x for x in g):
        raise SpecError("must be a list of non-empty strings", field=f"{path}generators")
    if len(set(g)) != len(g):
        raise SpecError("duplicate generator names", field=f"{path}generators")
    return tuple(g)


def _order(d, path):
    m = _int(d.get("order", 1), f"{path}order", minimum=0)
    return max(m, 1)


def ring_from_dict(d, top=False, path=""):
    if not isinstance(d, dict):
        raise SpecError("expected an object", field=path or "<root>")
    family = d.get("family")
    common = {"family", "spec_version"} if top else {"family"}
    try:
        if family == "skew":
            _keys(d, common | {"generators", "order", "free_params", "params"}, path)
            names = _generators(d, path)
            m = _order(d, path)
            r = _int(d.get("free_params", 0), f"{path}free_params", minimum=0)
            params = {}
            entries = d.get("params", [])
            if not isinstance(entries, list):
                raise SpecError("must be a list", field=f"{path}params")
            for k, e in enumerate(entries):
                f = f"{path}params[{k}]"
                if not isinstance(e, dict):
                    raise SpecError("expected an object", field=f)
                _keys(e, {"i", "j", "torsion", "free"}, f)
                i = _int(e.get("i"), f"{f}.i", minimum=1)
                j = _int(e.get("j"), f"{f}.j", minimum=1)
                if not i < j:
                    raise SpecError("entries need i < j; p_ji and p_ii are derived", field=f)
                if j > len(names):
                    raise SpecError(f"index {j} exceeds n = {len(names)}", field=f"{f}.j")
                if (i, j) in params:
                    raise SpecError(f"duplicate entry for ({i}, {j})", field=f)
                t = _int(e.get("torsion", 0), f"{f}.torsion")
                if d.get("order", 1) == 0 and t:
                    raise SpecError("order 0 allows no torsion part", field=f"{f}.torsion")
                free = e.get("free", [])
                if not isinstance(free, list) or len(free) != r:
                    raise SpecError(f"expected a list of {r} integers", field=f"{f}.free")
                free = tuple(_int(x, f"{f}.free") for x in free)
                params[(i, j)] = ParamExponent(t % m, free)
            return SkewRing(len(names), m, {(i - 1, j - 1): p for (i, j), p in params.items()},
                            free_rank=r, names=names)
        if family == "weyl":
            _keys(d, common | {"generators", "order", "q", "weyl_orientation"}, path)
            names = _generators(d, path, default=["x", "y"])
            if len(names) != 2:
                raise SpecError("a Weyl ring has exactly two generators", field=f"{path}generators")
            m = _order(d, path)
            q = _int(d.get("q"), f"{path}q")
            orient = d.get("weyl_orientation", "xy-qyx-1")
            if orient not in WEYL_ORIENTATIONS:
                raise SpecError(f"must be one of {list(WEYL_ORIENTATIONS)}",
                                field=f"{path}weyl_orientation")
            if q % m == 0:
                raise SpecError("q must differ from 1", field=f"{path}q")
            return WeylRing(m, q, orient, names)
        if family == "tensor":
            _keys(d, common | {"factors"}, path)
            factors = d.get("factors")
            if not isinstance(factors, list) or not factors:
                raise SpecError("must be a non-empty list", field=f"{path}factors")
            return TensorRing(tuple(ring_from_dict(f, path=f"{path}factors[{k}].")
                                    for k, f in enumerate(factors)))
    except SpecError:
        raise
    except ValidationError as exc:
        raise SpecError(str(exc), field=path.rstrip(".") or "<root>") from None
    raise SpecError(f"family must be skew, weyl or tensor, got {family!r}", field=f"{path}family")


def ring_to_dict(ring, top=True):
    out = {"spec_version": SPEC_VERSION} if top else {}
    if isinstance(ring, SkewRing):
        out.update({
            "family": "skew",
            "generators": list(ring.names),
            "order": ring.m,
            "free_params": ring.free_rank,
            "params": [{"i": i + 1, "j": j + 1, "torsion": p.torsion, "free": list(p.free)}
                       for (i, j), p in ring.params],
        })
    elif isinstance(ring, WeylRing):
        out.update({"family": "weyl", "generators": list(ring.names), "order": ring.m,
                    "q": ring.q_torsion, "weyl_orientation": ring.orientation})
    elif isinstance(ring, TensorRing):
        out.update({"family": "tensor", "factors": [ring_to_dict(f, top=False) for f in ring.factors]})
    else:
        raise TypeError(f"not a presentation: {ring!r}")
    return out


def emit_ring_spec(ring):
    return json.dumps(ring_to_dict(ring), indent=2, sort_keys=True) + "\n"
