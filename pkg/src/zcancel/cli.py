"""Command-line front end.

Exit codes: 0 success, 1 computation unsupported, 2 input error.
Bounds come from --degree-bound/--index-bound, else ZCANCEL_DEGREE_BOUND /
ZCANCEL_INDEX_BOUND, else the library defaults.
"""

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path

from . import __version__
from .center import center_lattice
from .derivations import (
    DEFAULT_DEGREE_BOUND,
    DEFAULT_INDEX_BOUND,
    divided_power_derivation,
    lnd_witness,
    ml_h,
    skew_view,
    t_set,
    verify_higher_leibniz,
    verify_iterative,
    verify_locally_nilpotent,
    is_central_generator,
)
from .discriminant import classify_effectiveness, discriminant
from .errors import DegenerateDiscriminantError, NonTorsionError, UnsupportedError, ValidationError
from .ringspec import loads_ring_spec
from .serialize import (
    center_dict,
    check_dict,
    derivation_dict,
    discriminant_dict,
    effectiveness_dict,
    ml_dict,
    tset_dict,
    verdict_dict,
)
from .verdict import analyze

COMMANDS = ("center", "tsets", "ml", "discriminant", "effectiveness", "witness",
            "verify-witness", "verdict")


class InputError(Exception):
    pass


def _bound(flag, env, default):
    if flag is not None:
        return flag
    raw = os.environ.get(env)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"{env} must be an integer, got {raw!r}") from None
    if value < 1:
        raise InputError(f"{env} must be positive")
    return value


def _require_skew(ring):
    try:
        return skew_view(ring)
    except ValidationError as exc:
        raise UnsupportedError(str(exc)) from None


def _checks(der, degree_bound, index_bound):
    return {
        "higher_leibniz": check_dict(verify_higher_leibniz(der, degree_bound, index_bound)),
        "iterative": check_dict(verify_iterative(der, degree_bound, index_bound)),
        "locally_nilpotent": check_dict(verify_locally_nilpotent(der, degree_bound, index_bound)),
    }


def run(command, ring, degree_bound=DEFAULT_DEGREE_BOUND, index_bound=DEFAULT_INDEX_BOUND,
        generator=None):
    """Result payload (a plain dict) for one subcommand."""
    names = ring.names
    if command == "center":
        return center_dict(center_lattice(ring))
    if command == "tsets":
        _require_skew(ring)
        if not ring.is_torsion:
            raise UnsupportedError("T_s sets are computed for root-of-unity parameters only")
        return {"t_sets": [tset_dict(t_set(ring, s), names) for s in range(ring.ngens)]}
    if command == "ml":
        _require_skew(ring)
        return ml_dict(ml_h(ring), names, "T_s emptiness")
    if command in ("discriminant", "effectiveness"):
        if not ring.is_torsion:
            raise UnsupportedError("discriminants need root-of-unity parameters")
        d = discriminant(ring)
        out = {"discriminant": discriminant_dict(d)}
        if command == "effectiveness":
            out["effectiveness"] = effectiveness_dict(classify_effectiveness(d.normalized, ring))
        return out
    if command == "witness":
        _require_skew(ring)
        if not ring.is_torsion:
            raise UnsupportedError("witnesses are built for root-of-unity parameters only")
        if generator is None:
            raise InputError("witness needs --generator s")
        if not 1 <= generator <= ring.ngens:
            raise InputError(f"--generator must lie in 1..{ring.ngens}")
        t = t_set(ring, generator - 1)
        out = {"t_set": tset_dict(t, names)}
        if t.witness is not None:
            der = lnd_witness(ring, t.s, t.witness, index_bound)
            out["derivation"] = derivation_dict(der, t.s, names)
        return out
    if command == "verify-witness":
        _require_skew(ring)
        if not ring.is_torsion:
            raise UnsupportedError("witnesses are built for root-of-unity parameters only")
        items = []
        for s in range(ring.ngens):
            if generator is not None and s != generator - 1:
                continue
            t = t_set(ring, s)
            if t.witness is not None:
                der = lnd_witness(ring, s, t.witness, index_bound)
                items.append({"generator": names[s], "kind": "t-set-witness",
                              "witness": list(t.witness),
                              "checks": _checks(der, degree_bound, index_bound)})
            if is_central_generator(ring, s):
                der = divided_power_derivation(ring, s, index_bound)
                items.append({"generator": names[s], "kind": "divided-power",
                              "checks": _checks(der, degree_bound, index_bound)})
        return {"degree_bound": degree_bound, "index_bound": index_bound, "derivations": items,
                "all_passed": all(c["passed"] for it in items for c in it["checks"].values())}
    if command == "verdict":
        return verdict_dict(analyze(ring))
    raise InputError(f"unknown command {command!r}")


def _render_text(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_atom(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}-")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_atom(v)}")
    else:
        lines.append(pad + _atom(obj))
    return lines


def _atom(v):
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (dict, list)):
        return "[]" if isinstance(v, list) else "{}"
    return str(v)


def render(doc, fmt):
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    return "\n".join(_render_text(doc)) + "\n"


def build_parser():
    p = argparse.ArgumentParser(prog="zcancel",
                                description="Centers, discriminants, T_s sets, ML^H and "
                                            "cancellation verdicts for quantum-parameter algebras.")
    p.add_argument("--version", action="version", version=f"zcancel {__version__}")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("spec", help="ring-spec JSON file, or - for stdin")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--degree-bound", type=int)
    p.add_argument("--index-bound", type=int)
    p.add_argument("--generator", type=int, help="1-based generator index")
    p.add_argument("--bless", action="store_true",
                   help="write the JSON report as a golden file <goldens>/<spec stem>.<command>.json")
    p.add_argument("--goldens", default=os.environ.get("ZCANCEL_GOLDENS", "tests/goldens"))
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    doc = {"tool": "zcancel", "version": __version__, "command": args.command}
    code = 0
    try:
        if args.spec == "-":
            raw = sys.stdin.buffer.read()
        else:
            try:
                raw = Path(args.spec).read_bytes()
            except OSError as exc:
                raise InputError(f"cannot read {args.spec}: {exc.strerror}") from None
        doc["input_sha256"] = hashlib.sha256(raw).hexdigest()
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError:
            raise InputError("spec file is not UTF-8") from None
        ring = loads_ring_spec(text)
        for flag in (args.degree_bound, args.index_bound):
            if flag is not None and flag < 1:
                raise InputError("bounds must be positive")
        db = _bound(args.degree_bound, "ZCANCEL_DEGREE_BOUND", DEFAULT_DEGREE_BOUND)
        ib = _bound(args.index_bound, "ZCANCEL_INDEX_BOUND", DEFAULT_INDEX_BOUND)
        doc["result"] = run(args.command, ring, db, ib, args.generator)
    except (InputError, ValidationError) as exc:
        code = 2
        doc["error"] = {"kind": "input", "message": str(exc)}
    except (UnsupportedError, NonTorsionError, DegenerateDiscriminantError) as exc:
        code = 1
        doc["error"] = {"kind": "unsupported", "message": str(exc)}
    fmt = "json" if args.bless else args.format
    out = render(doc, fmt)
    target = args.out
    if args.bless:
        target = str(Path(args.goldens) / f"{Path(args.spec).stem}.{args.command}.json")
        Path(args.goldens).mkdir(parents=True, exist_ok=True)
    if target:
        Path(target).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)
    if code and args.format == "text" and not args.bless:
        sys.stderr.write(f"error: {doc['error']['message']}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
