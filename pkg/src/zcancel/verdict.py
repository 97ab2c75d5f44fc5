"""Cancellation verdicts assembled from center, T_s, ML^H and discriminant data."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .center import center_lattice
from .citations import BASE_FIELD_CAVEAT, cite
from .derivations import MLResult, skew_view, t_set
from .discriminant import Tri, classify_effectiveness, discriminant
from .errors import DegenerateDiscriminantError, UnsupportedError
from .lattice import coordinate_gcds
from .rings import SkewRing, TensorRing, WeylRing, gk_dimension

__all__ = [
    "Conclusion",
    "OpenReason",
    "EquivalenceViolation",
    "VerdictReport",
    "theorem57_conditions",
    "analyze",
    "ring_summary",
]


class Conclusion(str, Enum):
    STRONGLY = "StronglyCancellative"
    UNIVERSALLY = "UniversallyCancellative"
    CANCELLATIVE = "Cancellative"
    OPEN = "OpenCase"
    UNSUPPORTED = "Unsupported"


class OpenReason(str, Enum):
    NO_RESULT = "no-applicable-theorem"
    UNSUPPORTED = "computation-unsupported"


class EquivalenceViolation(AssertionError):
    """Computed conditions of the skew-ring equivalence chain disagree."""


def _family(ring):
    if isinstance(ring, SkewRing):
        return "skew"
    if isinstance(ring, WeylRing):
        return "weyl"
    return "tensor"


def ring_summary(ring):
    out = {
        "family": _family(ring),
        "generators": list(ring.names),
        "order": ring.m,
        "free_rank": ring.free_rank,
        "gk_dimension": gk_dimension(ring),
        "torsion": ring.is_torsion,
        "commutative": ring.is_commutative,
    }
    if isinstance(ring, TensorRing):
        out["factors"] = [ring_summary(f) for f in ring.factors]
    return out


def _is_skew(ring):
    return isinstance(ring, SkewRing) or (isinstance(ring, TensorRing) and ring.all_skew())


def _tri_bool(t):
    return {Tri.YES: True, Tri.NO: False}.get(t)


def theorem57_conditions(ring, center=None, disc=None, tsets=None, effectiveness=None):
    """Values of conditions (1)-(7) for a torsion skew ring; None means not computed.

    (3) is read off the coordinate gcds of the center lattice, (5) off the
    discriminant's support, (6) and (7) off the T_s sets, (2) and (4) off
    the syntactic effectiveness test.  Computed values must agree.
    """
    if not _is_skew(ring) or not ring.is_torsion:
        raise UnsupportedError("the equivalence chain is stated for skew rings with root-of-unity parameters")
    if ring.is_commutative:
        raise UnsupportedError("the equivalence chain needs a noncommutative ring")
    center = center or center_lattice(ring)
    tsets = tsets if tsets is not None else [t_set(ring, s) for s in range(ring.ngens)]
    conds = {k: None for k in range(1, 8)}
    conds[3] = all(g >= 2 for g in coordinate_gcds(center.lattice))
    rigid = all(t.empty for t in tsets)
    if all(t.certified for t in tsets):
        conds[6] = conds[7] = rigid
    if disc is not None:
        poly = disc.normalized
        conds[5] = all(min(mono[i] for mono in poly.terms) >= 1 for i in range(ring.ngens))
        if effectiveness is None:
            effectiveness = classify_effectiveness(poly, ring)
    if effectiveness is not None:
        conds[2] = _tri_bool(effectiveness.dominating)
        conds[4] = _tri_bool(effectiveness.effective)
    values = {v for v in conds.values() if v is not None}
    if len(values) > 1:
        raise EquivalenceViolation(f"conditions disagree: {conds}")
    return conds


@dataclass
class VerdictReport:
    ring: object
    ring_summary: dict
    center: object
    t_sets: Optional[list]
    ml: Optional[MLResult]
    ml_source: Optional[str]
    discriminant: object = None
    effectiveness: object = None
    theorem57: Optional[dict] = None
    conclusion: Conclusion = Conclusion.OPEN
    open_reason: Optional[OpenReason] = None
    citations: list = field(default_factory=list)
    notes: list = field(default_factory=list)


def analyze(ring, compute_discriminant=True):
    """Walk the implication chains and return a :class:`VerdictReport`.

    Routes are tried in order: trivial center, rigidity or effective
    discriminant, GK-dimension two, and otherwise an open case.
    """
    report = VerdictReport(ring, ring_summary(ring), None, None, None, None)
    report.center = center_lattice(ring)
    if ring.is_commutative:
        report.conclusion = Conclusion.UNSUPPORTED
        report.notes.append("commutative ring: outside the skew, Weyl and tensor families handled here")
        return report

    skew = _is_skew(ring)
    torsion = ring.is_torsion
    if skew and torsion:
        report.t_sets = [t_set(ring, s) for s in range(ring.ngens)]
        gens = tuple(t.s for t in report.t_sets if t.empty)
        report.ml = MLResult(gens, ring.ngens)
        report.ml_source = "Theorem 6.2(2)"
    elif not torsion:
        report.notes.append("T_s and ML^H are computed for root-of-unity parameters only")
    else:
        report.notes.append("T_s sets are defined for skew rings; this ring has a Weyl factor")

    unsupported = []
    if compute_discriminant and torsion and not report.center.trivial:
        try:
            report.discriminant = discriminant(ring, report.center)
            report.effectiveness = classify_effectiveness(report.discriminant.normalized, ring)
        except UnsupportedError as exc:
            unsupported.append(f"discriminant: {exc}")
        except DegenerateDiscriminantError as exc:
            unsupported.append(f"discriminant: {exc}")
    elif compute_discriminant and not torsion:
        unsupported.append("discriminant: needs root-of-unity parameters")

    if skew and torsion:
        report.theorem57 = theorem57_conditions(ring, report.center, report.discriminant,
                                                report.t_sets, report.effectiveness)
    eff = report.effectiveness
    if report.ml is None and eff is not None and eff.effective == Tri.YES:
        report.ml = MLResult(tuple(range(ring.ngens)), ring.ngens)
        report.ml_source = "Theorem 5.2(2)"

    # (i) center is the base field
    if report.center.trivial:
        report.conclusion = Conclusion.UNIVERSALLY
        report.citations = [cite("Proposition 1.3")]
        if skew and not torsion:
            report.citations.append(cite("Example 1.4(2)"))
        return report

    # (ii) rigidity or an effective/dominating discriminant
    rigid = report.t_sets is not None and all(t.empty and t.certified for t in report.t_sets)
    if rigid or (eff is not None and Tri.YES in (eff.effective, eff.dominating)):
        report.conclusion = Conclusion.STRONGLY
        cites = []
        if rigid:
            cites += [cite("Theorem 6.2(2)"), cite("Theorem 5.7")]
        if eff is not None and eff.dominating == Tri.YES:
            cites.append(cite("Theorem 4.7(2)"))
        if eff is not None and eff.effective == Tri.YES:
            cites.append(cite("Theorem 5.2(1)"))
        if rigid and not any(c.theorem == "Theorem 4.7(2)" for c in cites):
            cites.append(cite("Theorem 4.7(2)"))
        report.citations = cites
        return report

    # (iii) noncommutative domain of GK dimension two
    if gk_dimension(ring) == 2:
        report.conclusion = Conclusion.CANCELLATIVE
        report.citations = [cite("Theorem 0.5", BASE_FIELD_CAVEAT)]
        return report

    # (iv) nothing applies
    report.conclusion = Conclusion.OPEN
    # with every T_s decided, the equivalence chain already excludes the
    # discriminant routes, so a failed discriminant does not leave a gap
    decided = report.t_sets is not None and all(t.certified for t in report.t_sets)
    report.open_reason = OpenReason.UNSUPPORTED if unsupported and not decided else OpenReason.NO_RESULT
    report.notes.extend(unsupported)
    caveat = () if _uniform_odd(ring) else (
        "stated for k_q[x_1..x_n] with n odd; cited as the nearest open question",)
    report.citations = [cite("Remark 0.9", *caveat),
                        cite("Remark 0.9(1)", informational=True),
                        cite("Remark 0.9(2)", informational=True)]
    return report


def _uniform_odd(ring):
    if not _is_skew(ring) or ring.ngens % 2 == 0:
        return False
    sk = skew_view(ring)
    ps = {sk.p(i, j).reduced(sk.m) for i in range(sk.n) for j in range(i + 1, sk.n)}
    return len(ps) == 1 and not next(iter(ps)).is_identity(sk.m)
