"""Cancellation verdicts across the supported families."""

from zcancel.rings import ParamExponent, SkewRing, WeylRing, tensor
from zcancel.verdict import analyze

rings = {
    "k_{-1}[x1,x2]": SkewRing.uniform(2, 2, 1),
    "k_q[x1,x2], q generic": SkewRing(2, 1, {(0, 1): ParamExponent(0, (1,))}, free_rank=1),
    "k_{-1}[x1,x2,x3]": SkewRing.uniform(3, 2, 1),
    "k_w[x1,x2,x3,x4], w of order 3": SkewRing.uniform(4, 3, 1),
    "quantum Weyl, q of order 3": WeylRing(3, 1),
    "k_{-1}[x1,x2] (x) k_{-1}[y1,y2]": tensor([SkewRing.uniform(2, 2, 1),
                                               SkewRing.uniform(2, 2, 1, names=("y1", "y2"))]),
    "k[x1,x2] (commutative)": SkewRing(2),
}

for label, R in rings.items():
    r = analyze(R)
    reason = f" [{r.open_reason.value}]" if r.open_reason else ""
    print(f"{label}: {r.conclusion.value}{reason}")
    for c in r.citations:
        tag = " (informational)" if c.informational else ""
        print(f"    {c.theorem}{tag}")
        for cav in c.caveats:
            print(f"      caveat: {cav}")
    if r.theorem57:
        print("    conditions:", {k: v for k, v in r.theorem57.items() if v is not None})
