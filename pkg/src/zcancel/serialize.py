"""Plain-data views of computation results, for JSON and text reports."""

from .center import central_basis
from .lattice import coordinate_gcds
from .rings import format_element, format_monomial
from .scalars import Cyclo

__all__ = ["scalar", "poly_terms", "center_dict", "tset_dict", "ml_dict", "discriminant_dict",
           "effectiveness_dict", "derivation_dict", "check_dict", "verdict_dict"]


def scalar(c):
    if isinstance(c, Cyclo):
        return str(c)
    return str(c)


def poly_terms(terms, names):
    return {
        "text": format_element(terms, names),
        "terms": [{"monomial": list(mono), "coefficient": scalar(c)}
                  for mono, c in sorted(terms.items(), reverse=True)],
    }


def _rank(r):
    return None if r == float("inf") else int(r)


def center_dict(center):
    names = center.ring.names
    out = {
        "lattice_basis": [list(b) for b in center.lattice.basis],
        "rank_w": _rank(center.rank),
        "rectangular": list(center.rectangular) if center.rectangular else None,
        "trivial": center.trivial,
        "coordinate_gcds": list(coordinate_gcds(center.lattice)),
    }
    if center.rectangular:
        out["central_generators"] = [format_monomial(
            tuple(a if k == i else 0 for k in range(len(names))), names)
            for i, a in enumerate(center.rectangular)]
        out["free_basis_size"] = len(central_basis(center))
    return out


def tset_dict(t, names):
    out = {"s": t.s + 1, "generator": names[t.s], "empty": t.empty, "certified": t.certified,
           "witness": list(t.witness) if t.witness is not None else None}
    if t.witness is not None:
        out["image"] = format_monomial(t.full_exponent(), names)
    return out


def ml_dict(ml, names, source=None):
    out = {"invariant": "ML^H", "generators": [names[i] for i in ml.generators],
           "is_full": ml.is_full, "is_trivial": ml.is_trivial}
    if source:
        out["source"] = source
    return out


def discriminant_dict(d):
    names = d.ring.names
    return {
        "rank_w": d.rank,
        "normalized": poly_terms(d.normalized.terms, names),
        "unit": scalar(d.unit),
        "leading_monomial": format_monomial(d.leading_monomial(), names),
    }


def effectiveness_dict(e):
    return {"effective": e.effective.value, "dominating": e.dominating.value, "rule": e.rule}


def derivation_dict(der, s, names):
    ring = der.ring
    return {
        "tag": der.tag,
        "first_order_images": {names[i]: str(der.apply(1, g)) for i, g in enumerate(ring.gens())},
        "generator": names[s],
    }


def check_dict(res):
    out = {"passed": res.passed}
    if not res.passed:
        out["counterexample"] = [list(x) if isinstance(x, tuple) else x
                                 for x in (res.counterexample or ())]
        out["detail"] = res.detail
    return out


def verdict_dict(rep):
    names = rep.ring.names
    return {
        "ring": rep.ring_summary,
        "center": center_dict(rep.center),
        "t_sets": [tset_dict(t, names) for t in rep.t_sets] if rep.t_sets is not None else None,
        "ml": ml_dict(rep.ml, names, rep.ml_source) if rep.ml is not None else None,
        "discriminant": discriminant_dict(rep.discriminant) if rep.discriminant else None,
        "effectiveness": effectiveness_dict(rep.effectiveness) if rep.effectiveness else None,
        "theorem57": ({str(k): v for k, v in rep.theorem57.items()}
                      if rep.theorem57 is not None else None),
        "conclusion": rep.conclusion.value,
        "open_reason": rep.open_reason.value if rep.open_reason else None,
        "citations": [c.to_dict() for c in rep.citations],
        "notes": list(rep.notes),
    }
