"""Citation table used in verdict reports.

Each entry maps a result identifier to the exact statement fragment it
stands for, so a reader can audit a conclusion without running the tool.
"""

from dataclasses import dataclass

__all__ = ["Citation", "QUOTES", "cite", "BASE_FIELD_CAVEAT"]

QUOTES = {
    "Proposition 1.3": "Let $k$ be a field and $A$ be an algebra with center being $k$. "
                       "Then $A$ is universally cancellative.",
    "Example 1.4(2)": "If $n\\geq 2$ and $q$ is not a root of unity, then $C(A)=k$. "
                      "So $A$ is universally cancellative.",
    "Theorem 4.7(2)": "If $A$ has finite GK-dimension, then $A$ is strongly cancellative.",
    "Example 4.8": "By Theorem 4.7(2), these algebras are strongly cancellative.",
    "Theorem 5.2(1)": "As a consequence, $A$ is strongly cancellative.",
    "Theorem 5.2(2)": "$A$ is strongly $\\LND^H$-rigid.",
    "Theorem 5.7": "The following are equivalent.",
    "Theorem 6.2(2)": "$\\ML^H(A)$ is the subalgebra of $A$ generated by $\\{x_s\\mid T_s=\\emptyset\\}$.",
    "Theorem 0.5": "If $A$ is not commutative, then $A$ is cancellative.",
    "Remark 0.9": "It is an open question whether $k_q[x_1,\\cdots,x_n]$ is cancellative.",
    "Remark 0.9(1)": "If $k_q[x_1,\\cdots,x_n] [t]\\cong B[t]$ as algebras, then "
                     "$k_q[x_1,\\cdots,x_n]\\cong B$ as graded algebras.",
    "Remark 0.9(2)": "Veronese subrings of $k_q[x_1,\\cdots,x_n]^{(v)}$ is cancellative when "
                     "$m$ and $v$ are not coprime",
}

BASE_FIELD_CAVEAT = ("conditional on base-field hypotheses: stated over an algebraically closed "
                     "field of characteristic zero; computations here run over Q(zeta_m)")


@dataclass(frozen=True)
class Citation:
    theorem: str
    quote: str
    caveats: tuple = ()
    informational: bool = False

    def to_dict(self):
        return {"theorem": self.theorem, "quote": self.quote,
                "caveats": list(self.caveats), "informational": self.informational}


def cite(theorem, *caveats, informational=False):
    return Citation(theorem, QUOTES[theorem], tuple(caveats), informational)
