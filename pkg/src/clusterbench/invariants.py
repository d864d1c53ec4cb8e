"""Rule engine for Picard, K0, and automorphism invariants of cluster algebras.

Each rule encodes one cited theorem and is applied to a RingDescriptor; every
produced value carries the name of the rule that fired, so a report is an
auditable derivation.  Quotient rings whose Picard groups the cited results
do not cover come back as Unknown, never as a guess.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial

from .groupexpr import (
    TRIVIAL,
    Z,
    GroupExpr,
    cyclic,
    dihedral,
    ga,
    ga2_amalgam,
    product,
    render,
    repeated,
    semidirect,
    simplify,
    sym,
    unknown,
)
from .laurent import LaurentPoly
from .quiver import DynkinType, LevelError


@dataclass(frozen=True)
class RingDescriptor:
    """Shape of a commutative ring as far as the rules can see.

    n_poly / n_laurent count free polynomial and Laurent generators; the
    seminormal/anodal/ufd flags are inputs (no decision procedures here).
    """

    base: str = "Q"  # "Q" | "Z"
    n_poly: int = 0
    n_laurent: int = 0
    relations: tuple[LaurentPoly, ...] = ()
    seminormal: bool | None = None
    anodal: bool | None = None
    ufd: bool | None = None
    finite_type_tag: DynkinType | None = None

    def __post_init__(self):
        if self.base not in ("Q", "Z"):
            raise ValueError(f"unsupported base {self.base!r}")
        if self.relations and self.n_laurent:
            raise ValueError("a free Laurent ring descriptor cannot carry relations")


def free_poly_ring(n: int, base: str = "Q") -> RingDescriptor:
    return RingDescriptor(base=base, n_poly=n, seminormal=True, ufd=True)


@dataclass(frozen=True)
class Ruled:
    """A derived group expression together with the rule that produced it."""

    expr: GroupExpr
    rule: str

    def to_json_dict(self) -> dict:
        d = self.expr.to_json_dict()
        d["rule"] = self.rule
        return d


def pic_com_ruled(r: RingDescriptor) -> Ruled:
    """Picard group of the underlying commutative ring; first match wins."""
    if r.base == "Q" and not r.relations:
        # zero-dimensional base: Pic of (Laurent) polynomial extensions vanishes
        return Ruled(TRIVIAL, "Weibel 1.6: Pic of (Laurent) polynomial ring over a field is 0")
    if r.base == "Z" and not r.relations and r.n_laurent == 0 and r.seminormal:
        return Ruled(TRIVIAL, "Coykendall 2.2: Pic Z[x_1..x_n] = 0 (Z seminormal)")
    if r.n_laurent > 0 and not r.relations:
        base_part = RingDescriptor(
            base=r.base,
            n_poly=r.n_poly,
            seminormal=r.seminormal,
            anodal=r.anodal,
            ufd=r.ufd,
        )
        pic_a = pic_com_ruled(base_part).expr
        m = r.n_laurent
        lpic = TRIVIAL if r.anodal else unknown("LPic(A)")
        factors: list[GroupExpr] = [pic_a, repeated(lpic, m)]
        for k in range(1, m + 1):
            npic = TRIVIAL if r.seminormal else unknown(f"N^{k}Pic(A)")
            factors.append(repeated(npic, 2**k * comb(m, k)))
        return Ruled(
            simplify(product(*factors)),
            "Weibel: Pic(A[t_1^±..t_m^±]) = Pic(A) ⊕ LPic ⊕ NPic terms",
        )
    return Ruled(unknown("needs geometry"), "no cited rule covers a quotient ring")


def pic_com(r: RingDescriptor) -> GroupExpr:
    return pic_com_ruled(r).expr


def aut_ruled(r: RingDescriptor) -> Ruled:
    """Full Q-algebra (or Z-algebra) automorphism group, symbolically."""
    if not r.relations and r.n_laurent == 0 and r.n_poly >= 1:
        return Ruled(ga(r.n_poly, r.base), "definition of GA_n as Aut of the free polynomial ring")
    return Ruled(unknown("Aut"), "no cited rule identifies Aut for this ring")


def pic_bimodule_ruled(r: RingDescriptor) -> Ruled:
    """Pic with bimodules: Aut ⋉ Pic_com, collapsing when Pic_com vanishes."""
    a = aut_ruled(r)
    p = pic_com_ruled(r)
    return Ruled(
        simplify(semidirect(a.expr, p.expr)),
        f"Yekutieli: Pic_k(A) = Aut_k(A) ⋉ Pic_com(A); {a.rule}; {p.rule}",
    )


def pic_bimodule(r: RingDescriptor) -> GroupExpr:
    return pic_bimodule_ruled(r).expr


def k0_ruled(r: RingDescriptor, grassmannian: tuple[int, int] | None = None) -> Ruled:
    if grassmannian is not None:
        k, m = grassmannian
        return Ruled(
            product(Z, unknown(f"Pic(Gr({k},{m}) coord ring)"), unknown("⊕_{p,k} H^p(X, Ω^p(k))")),
            "CHWW: K0 of a homogeneous coordinate ring = Z ⊕ Pic ⊕ cohomology terms",
        )
    if r.base == "Q" and not r.relations and r.n_laurent == 0:
        return Ruled(Z, "Quillen-Suslin: projectives over Q[x_1..x_n] are free")
    return Ruled(unknown("K0"), "no cited rule computes K0 for this ring")


def k0(r: RingDescriptor, grassmannian: tuple[int, int] | None = None) -> GroupExpr:
    return k0_ruled(r, grassmannian).expr


AUT_CL_RULE = "Chang-Zhu: cluster automorphisms of finite-type principal parts"


def aut_cl_table(t: DynkinType) -> GroupExpr:
    """Chang-Zhu cluster-automorphism table for principal parts at level 1."""
    if t.family == "A":
        return cyclic(2) if t.rank == 1 else dihedral(t.rank + 3)
    if t.family == "D":
        if t.rank == 4:
            return product(dihedral(4), sym(3))
        return product(dihedral(t.rank), cyclic(2))
    return {6: dihedral(14), 7: dihedral(10), 8: dihedral(16)}[t.rank]


# Friedland: maximal orders of finite subgroups of GL_n(Q).  Outside the
# exceptional dimensions the orthogonal/hyperoctahedral group 2^n n! wins.
_FRIEDLAND_EXCEPTIONS: dict[int, tuple[int, str]] = {
    2: (12, "W(G2)"),
    4: (1152, "W(F4)"),
    6: (103680, "W(E6) x Z2"),
    7: (2903040, "W(E7)"),
    8: (696729600, "W(E8)"),
    9: (1393459200, "W(E8) x W(A1)"),
    10: (8360755200, "W(E8) x W(G2)"),
}


def max_finite_subgroup_order(n: int) -> tuple[int, str]:
    if n < 1:
        raise ValueError("dimension must be >= 1")
    if n in _FRIEDLAND_EXCEPTIONS:
        return _FRIEDLAND_EXCEPTIONS[n]
    return (2**n * factorial(n), "orthogonal")


def grassmannian_for_type(t: DynkinType) -> tuple[int, int] | None:
    """Grassmannian whose homogeneous coordinate ring realizes the type.

    The cited list covers A_n, D4, E6, and E8 (E7 is absent from it).
    """
    if t.family == "A":
        return (2, t.rank + 3)
    if t.family == "D" and t.rank == 4:
        return (3, 6)
    if t.family == "E" and t.rank == 6:
        return (3, 7)
    if t.family == "E" and t.rank == 8:
        return (3, 8)
    return None


def principal_part_type(t: DynkinType, l: int) -> DynkinType | None:
    """Finite type of the mutable part of the level quiver, when covered.

    For A1 the level quiver is an A_{l+1} path with a frozen end, so the
    principal part is A_l; at level 1 the principal part is the Dynkin quiver
    itself.  Other (type, level) combinations are outside the table's scope.
    """
    if t.family == "A" and t.rank == 1:
        return DynkinType("A", l)
    if l == 1:
        return t
    return None


@dataclass(frozen=True)
class InvariantReport:
    """All report cells for one (type, level), each entry rule-annotated."""

    dynkin: DynkinType
    level: int
    n_generators: int
    pic_com_A: Ruled
    aut_A: Ruled
    pic_A: Ruled
    k0_A: Ruled
    k0_AxA: Ruled
    aut_cl_Aex: Ruled
    pic_com_Aex: Ruled
    grassmannian: tuple[int, int] | None
    cl_Aex: Ruled | None
    notes: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "type": str(self.dynkin),
            "level": self.level,
            "n_generators": self.n_generators,
            "A": {
                "pic_com": self.pic_com_A.to_json_dict(),
                "aut": self.aut_A.to_json_dict(),
                "pic": self.pic_A.to_json_dict(),
                "k0": self.k0_A.to_json_dict(),
                "k0_tensor_square": self.k0_AxA.to_json_dict(),
            },
            "Aex": {
                "aut_cl": self.aut_cl_Aex.to_json_dict(),
                "pic_com": self.pic_com_Aex.to_json_dict(),
                "grassmannian": (
                    f"Gr({self.grassmannian[0]},{self.grassmannian[1]})"
                    if self.grassmannian
                    else None
                ),
                "cl": self.cl_Aex.to_json_dict() if self.cl_Aex else None,
            },
            "notes": list(self.notes),
        }


def invariant_report(t: DynkinType, l: int) -> InvariantReport:
    """Assemble the invariant diagram for the level-l cluster algebra of t.

    The ambient algebra is a free polynomial ring on n(l+1) generators; the
    exchangeable part's cells come from the finite-type tables when the
    mutable quiver is covered by them, and are Unknown otherwise.
    """
    if l < 1:
        raise LevelError(f"level must be >= 1, got {l}")
    m = t.rank * (l + 1)
    amb = free_poly_ring(m)
    amb_sq = free_poly_ring(2 * m)
    eff = principal_part_type(t, l)

    if eff is not None:
        aut_cl = Ruled(aut_cl_table(eff), AUT_CL_RULE)
    else:
        aut_cl = Ruled(
            unknown("outside finite-type table scope"),
            "Chang-Zhu table covers level 1 and the A1 tower only",
        )
    if eff is not None and eff.family == "A" and eff.rank == 1:
        # the exchangeable part is the Laurent ring Q[x^±]
        pic_ex = Ruled(TRIVIAL, "Weibel 1.6 applied to Q[x^±]")
    else:
        pic_ex = Ruled(unknown("cluster variety geometry"), "Picard group of the cluster hypersurface left open")
    gr = grassmannian_for_type(eff) if eff is not None else None
    cl = (
        Ruled(TRIVIAL, "Scott/Laface: Grassmannian coordinate rings are UFDs, so Cl = 0")
        if gr is not None
        else None
    )

    notes = [
        f"A is a free polynomial ring on n(l+1) = {m} generators (K0 lemma for the level category)",
    ]
    if m == 2:
        notes.append(
            f"GA_2 structure (Jung-van der Kulk): {render(ga2_amalgam())}"
        )
    if eff is not None:
        notes.append(f"exchangeable part has finite type {eff}")

    return InvariantReport(
        dynkin=t,
        level=l,
        n_generators=m,
        pic_com_A=pic_com_ruled(amb),
        aut_A=aut_ruled(amb),
        pic_A=pic_bimodule_ruled(amb),
        k0_A=k0_ruled(amb),
        k0_AxA=k0_ruled(amb_sq),
        aut_cl_Aex=aut_cl,
        pic_com_Aex=pic_ex,
        grassmannian=gr,
        cl_Aex=cl,
        notes=tuple(notes),
    )
