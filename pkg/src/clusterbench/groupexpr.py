"""Symbolic group expressions: the value type of the invariants rule engine.

A GroupExpr is a small tagged tree.  Leaves are known groups (trivial, Z,
Z_n, dihedral D_n of order 2n, symmetric S_n, GA_n/Af_n/J_n/Bf_n over a
base) or named unknowns; interior nodes are products, semidirect products,
amalgams, and repeated direct factors.  Unknown is a first-class citizen:
the engine never fabricates a group it cannot derive from a cited rule.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class GroupExpr:
    kind: str
    args: tuple = ()
    parts: tuple["GroupExpr", ...] = ()

    def to_json_dict(self) -> dict:
        d: dict = {"kind": self.kind}
        if self.args:
            d["args"] = list(self.args)
        if self.parts:
            d["parts"] = [p.to_json_dict() for p in self.parts]
        d["text"] = render(self)
        return d


TRIVIAL = GroupExpr("trivial")
Z = GroupExpr("Z")


def cyclic(n: int) -> GroupExpr:
    return TRIVIAL if n == 1 else GroupExpr("Zn", (n,))


def dihedral(n: int) -> GroupExpr:
    """Dihedral group of the regular n-gon, order 2n."""
    return GroupExpr("dihedral", (n,))


def sym(n: int) -> GroupExpr:
    return GroupExpr("sym", (n,))


def product(*parts: GroupExpr) -> GroupExpr:
    return GroupExpr("product", (), tuple(parts))


def semidirect(actor: GroupExpr, normal: GroupExpr) -> GroupExpr:
    return GroupExpr("semidirect", (), (actor, normal))


def ga(n: int, base: str = "Q") -> GroupExpr:
    return GroupExpr("GA", (n, base))


def affine_group(n: int, base: str = "Q") -> GroupExpr:
    return GroupExpr("Af", (n, base))


def jonquiere_group(n: int, base: str = "Q") -> GroupExpr:
    return GroupExpr("Jonq", (n, base))


def bf(n: int, base: str = "Q") -> GroupExpr:
    """Intersection of the affine and triangular subgroups."""
    return GroupExpr("Bf", (n, base))


def amalgam(left: GroupExpr, right: GroupExpr, over: GroupExpr) -> GroupExpr:
    return GroupExpr("amalgam", (), (left, right, over))


def unknown(tag: str) -> GroupExpr:
    return GroupExpr("unknown", (tag,))


def repeated(expr: GroupExpr, count: int) -> GroupExpr:
    """count direct-sum copies of expr (kept unexpanded)."""
    return GroupExpr("repeated", (count,), (expr,))


def ga2_amalgam(base: str = "Q") -> GroupExpr:
    """The Jung-van der Kulk amalgam presentation of GA_2."""
    return amalgam(affine_group(2, base), jonquiere_group(2, base), bf(2, base))


def simplify(e: GroupExpr) -> GroupExpr:
    """Normalize: flatten products, drop trivial factors, collapse trivial
    semidirect complements and degenerate repeats.  Idempotent."""
    if e.kind == "product":
        flat: list[GroupExpr] = []
        for p in e.parts:
            p = simplify(p)
            if p.kind == "trivial":
                continue
            if p.kind == "product":
                flat.extend(p.parts)
            else:
                flat.append(p)
        if not flat:
            return TRIVIAL
        if len(flat) == 1:
            return flat[0]
        return GroupExpr("product", (), tuple(flat))
    if e.kind == "semidirect":
        actor, normal = (simplify(p) for p in e.parts)
        if normal.kind == "trivial":
            return actor
        if actor.kind == "trivial":
            return normal
        return GroupExpr("semidirect", (), (actor, normal))
    if e.kind == "repeated":
        (count,) = e.args
        inner = simplify(e.parts[0])
        if count == 0 or inner.kind == "trivial":
            return TRIVIAL
        if count == 1:
            return inner
        return GroupExpr("repeated", (count,), (inner,))
    if e.parts:
        return GroupExpr(e.kind, e.args, tuple(simplify(p) for p in e.parts))
    return e


def render(e: GroupExpr) -> str:
    if e.kind == "trivial":
        return "1"
    if e.kind == "Z":
        return "Z"
    if e.kind == "Zn":
        return f"Z{e.args[0]}"
    if e.kind == "dihedral":
        return f"D{e.args[0]}"
    if e.kind == "sym":
        return f"S{e.args[0]}"
    if e.kind == "product":
        return " x ".join(_paren(p) for p in e.parts)
    if e.kind == "semidirect":
        return f"{_paren(e.parts[0])} |x {_paren(e.parts[1])}"
    if e.kind == "GA":
        return f"GA_{e.args[0]}({e.args[1]})"
    if e.kind == "Af":
        return f"Af_{e.args[0]}({e.args[1]})"
    if e.kind == "Jonq":
        return f"J_{e.args[0]}({e.args[1]})"
    if e.kind == "Bf":
        return f"Bf_{e.args[0]}({e.args[1]})"
    if e.kind == "amalgam":
        left, right, over = e.parts
        return f"{_paren(left)} *_{{{render(over)}}} {_paren(right)}"
    if e.kind == "unknown":
        return f"Unknown({e.args[0]})"
    if e.kind == "repeated":
        return f"{_paren(e.parts[0])}^{e.args[0]}"
    raise ValueError(f"unknown GroupExpr kind {e.kind!r}")


def _paren(e: GroupExpr) -> str:
    s = render(e)
    return f"({s})" if e.kind in ("product", "semidirect", "amalgam") else s


def group_order(e: GroupExpr) -> int | None:
    """Order of the group when finite and known, else None."""
    if e.kind == "trivial":
        return 1
    if e.kind == "Zn":
        return e.args[0]
    if e.kind == "dihedral":
        return 2 * e.args[0]
    if e.kind == "sym":
        import math

        return math.factorial(e.args[0])
    if e.kind == "product":
        total = 1
        for p in e.parts:
            o = group_order(p)
            if o is None:
                return None
            total *= o
        return total
    if e.kind == "repeated":
        o = group_order(e.parts[0])
        return None if o is None else o ** e.args[0]
    return None
