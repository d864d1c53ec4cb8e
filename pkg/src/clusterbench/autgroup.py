"""Cluster-automorphism groups of finite-type cluster algebras.

A cluster automorphism sends clusters to clusters and commutes with mutation.
Candidates are generated Chang-Zhu style: for every seed S of the exchange
graph and every quiver isomorphism phi from the initial quiver to Q_S
(direct) or to the opposite of Q_S (inverse), map each initial variable x_i
to the variable of S at phi(i) and extend to the whole variable census by
substitution.  Candidates whose extension leaves the census are discarded;
the survivors are closed under composition into a permutation group on the
census indices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .laurent import LaurentPoly, RationalFn, rf_equal, substitute
from .quiver import isomorphisms
from .seeds import Census, ExchangeGraph, Seed

CLOSURE_BUDGET = 10**6


class ClosureBudgetError(RuntimeError):
    """Group closure exceeded the element budget."""


@dataclass(frozen=True)
class ClusterPerm:
    """A permutation of census variable indices with its provenance."""

    perm: tuple[int, ...]
    kind: str  # "direct" | "inverse"
    source: str = ""

    def compose(self, other: "ClusterPerm") -> "ClusterPerm":
        # direct o direct = direct, direct o inverse = inverse, etc.
        kind = "direct" if self.kind == other.kind else "inverse"
        return ClusterPerm(tuple(self.perm[i] for i in other.perm), kind)

    def inverse(self) -> "ClusterPerm":
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return ClusterPerm(tuple(inv), self.kind)

    def order(self) -> int:
        n = 1
        p = self
        ident = tuple(range(len(self.perm)))
        while p.perm != ident:
            p = p.compose(self)
            n += 1
        return n


@dataclass(frozen=True)
class PermGroup:
    elements: tuple[ClusterPerm, ...]
    generators: tuple[ClusterPerm, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_order_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for e in self.elements:
            o = _perm_order(e.perm)
            hist[o] = hist.get(o, 0) + 1
        return hist

    def is_abelian(self) -> bool:
        gens = self.generators or self.elements
        return all(
            a.compose(b).perm == b.compose(a).perm for a in gens for b in gens
        )

    def to_json_dict(self, identified: str) -> dict:
        return {
            "order": self.order,
            "identified": identified,
            "generators": [list(g.perm) for g in self.generators],
        }


def _perm_order(p: tuple[int, ...]) -> int:
    order = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        order = _lcm(order, length)
    return order


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a * b // gcd(a, b)


def _match_census(
    value: RationalFn,
    variables: tuple[LaurentPoly, ...],
    probe: dict[str, Fraction],
) -> int | None:
    """Index of the census variable equal to value, or None.

    A random-point evaluation prescreens the candidates; the single survivor
    is confirmed by exact cross-multiplication.
    """
    try:
        num = value.num.eval(probe)
        den = value.den.eval(probe)
        target = None if den == 0 else num / den
    except ZeroDivisionError:
        target = None
    for idx, v in enumerate(variables):
        if target is not None and v.eval(probe) != target:
            continue
        if rf_equal(value, RationalFn(v)):
            return idx
    return None


def candidate_maps(
    graph: ExchangeGraph, census: Census, initial: Seed
) -> list[ClusterPerm]:
    """All cluster permutations induced by seed/quiver-isomorphism pairs."""
    q0 = initial.quiver
    if q0.n_frozen:
        raise ValueError("candidate generation expects a principal (frozen-free) seed")
    variables = census.variables
    varset = initial.varset
    rng = random.Random(20240817)
    probe = {v: Fraction(rng.randint(2, 97)) for v in varset}
    seen: set[tuple[int, ...]] = set()
    out: list[ClusterPerm] = []
    for sidx, seed in enumerate(graph.seeds):
        for kind, target_q in (
            ("direct", seed.quiver),
            ("inverse", seed.quiver.opposite()),
        ):
            for phi in isomorphisms(q0, target_q):
                images = {
                    varset[i]: RationalFn(seed.certs[phi[i]])
                    for i in range(q0.n_mut)
                }
                perm = []
                for v in variables:
                    j = _match_census(substitute(v, images), variables, probe)
                    if j is None:
                        break
                    perm.append(j)
                else:
                    key = tuple(perm)
                    if len(set(key)) == len(key) and key not in seen:
                        seen.add(key)
                        out.append(ClusterPerm(key, kind, f"seed {sidx}"))
    return out


def close_group(cands: list[ClusterPerm]) -> PermGroup:
    """Close a candidate set under composition; candidates become generators."""
    if not cands:
        raise ValueError("empty candidate set")
    n = len(cands[0].perm)
    ident = tuple(range(n))
    elements: dict[tuple[int, ...], ClusterPerm] = {
        ident: ClusterPerm(ident, "direct")
    }
    for c in cands:
        elements.setdefault(c.perm, c)
    work = list(elements.values())
    while work:
        a = work.pop()
        for b in cands:
            for c in (a.compose(b), b.compose(a), a.inverse()):
                if c.perm not in elements:
                    if len(elements) >= CLOSURE_BUDGET:
                        raise ClosureBudgetError("group closure exceeded budget")
                    elements[c.perm] = c
                    work.append(c)
    ordered = tuple(elements[k] for k in sorted(elements))
    return PermGroup(ordered, tuple(dict.fromkeys(c for c in cands).keys()))


def maps_clusters_to_clusters(g: ExchangeGraph, census: Census, p: ClusterPerm) -> bool:
    """Exhaustively check the cluster hypergraph is preserved by p."""
    from .laurent import render

    index_of = {render(v): i for i, v in enumerate(census.variables)}
    cluster_set = set()
    for seed in g.seeds:
        cluster_set.add(
            frozenset(index_of[render(c)] for c in seed.certs[: seed.quiver.n_mut])
        )
    return all(
        frozenset(p.perm[i] for i in cl) in cluster_set for cl in cluster_set
    )


# -- structural identification ----------------------------------------------


def _dihedral_model(n: int) -> set[tuple[int, ...]]:
    """The 2n symmetries of a regular n-gon as permutations of its vertices."""
    elems = set()
    for s in range(n):
        elems.add(tuple((i + s) % n for i in range(n)))
        elems.add(tuple((s - i) % n for i in range(n)))
    return elems


def _cyclic_model(n: int) -> set[tuple[int, ...]]:
    return {tuple((i + s) % n for i in range(n)) for s in range(n)}


def _sym_model(n: int) -> set[tuple[int, ...]]:
    from itertools import permutations as _perms

    return set(_perms(range(n)))


def _direct_product_model(
    a: set[tuple[int, ...]], b: set[tuple[int, ...]]
) -> set[tuple[int, ...]]:
    """Direct product acting on the disjoint union of the two point sets."""
    na = len(next(iter(a)))
    return {pa + tuple(x + na for x in pb) for pa in a for pb in b}


def _fingerprint(perms: set[tuple[int, ...]]) -> tuple:
    """Isomorphism-sensitive probe data: order, element-order histogram,
    center order, and abelianness.  A fingerprint match is the identification
    contract for the direct-product table rows, not a proof of isomorphism."""
    hist: dict[int, int] = {}
    for p in perms:
        o = _perm_order(p)
        hist[o] = hist.get(o, 0) + 1

    def comp(p, q):
        return tuple(p[i] for i in q)

    center = sum(1 for p in perms if all(comp(p, q) == comp(q, p) for q in perms))
    abelian = center == len(perms)
    return (len(perms), tuple(sorted(hist.items())), center, abelian)


def _dihedral_probe(g: PermGroup) -> int | None:
    """Return m when g passes the order-2m dihedral probe, else None:
    an element r of order m plus an involution t with t r t = r^-1,
    together generating all of g (order equality suffices)."""
    if g.order % 2:
        return None
    m = g.order // 2
    rotations = [e for e in g.elements if _perm_order(e.perm) == m]
    involutions = [e for e in g.elements if _perm_order(e.perm) == 2]
    for r in rotations:
        r_inv = r.inverse()
        for t in involutions:
            if t.compose(r).compose(t).perm == r_inv.perm:
                if len(_closure_perms([r.perm, t.perm])) == g.order:
                    return m
    return None


def _closure_perms(gens: list[tuple[int, ...]]) -> set[tuple[int, ...]]:
    n = len(gens[0])
    ident = tuple(range(n))
    out = {ident}
    work = [ident]
    while work:
        a = work.pop()
        for b in gens:
            c = tuple(a[i] for i in b)
            if c not in out:
                out.add(c)
                work.append(c)
    return out


def identify(g: PermGroup):
    """Structural identification of a computed group against the table rows.

    Recognizes cyclic and dihedral groups exactly, probes the D4 x S3 and
    D_n x Z2 product rows by invariant fingerprint, and reports
    Unknown(order) otherwise.  Never guesses.
    """
    from .groupexpr import GroupExpr, cyclic, dihedral, product, sym, unknown

    n = g.order
    if n == 1:
        return GroupExpr("trivial")
    if any(_perm_order(e.perm) == n for e in g.elements):
        return cyclic(n)
    m = _dihedral_probe(g)
    if m is not None:
        return dihedral(m)
    fp = _fingerprint({e.perm for e in g.elements})
    if n == 48 and fp == _fingerprint(
        _direct_product_model(_dihedral_model(4), _sym_model(3))
    ):
        return product(dihedral(4), sym(3))
    if n % 4 == 0:
        k = n // 4
        if k >= 3 and fp == _fingerprint(
            _direct_product_model(_dihedral_model(k), _cyclic_model(2))
        ):
            return product(dihedral(k), cyclic(2))
    return unknown(str(n))
