"""Endomorphisms of polynomial rings given by generator images.

Covers the triangular (Jonquiere) and affine constructors, the Nagata
automorphism with its self-verified inverse, and symbolic composition.  The
Nagata element is non-tame over a proper domain base; the flag records that
fact from the cited source rather than re-deriving it (tameness decision is
out of scope).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .laurent import LaurentPoly, RationalFn, render, substitute


class TriangularityError(ValueError):
    """A Jonquiere image touches a variable at or above its own index."""


class UnitError(ValueError):
    """A scalar that must be invertible is zero (or a matrix is singular)."""


class InternalError(AssertionError):
    """A self-check failed; indicates an arithmetic bug, not bad input."""


@dataclass(frozen=True)
class PolyEndo:
    """Endomorphism of a polynomial ring: one polynomial image per generator."""

    varset: tuple[str, ...]
    images: tuple[LaurentPoly, ...]
    tame_word: tuple[str, ...] = ()  # construction word, e.g. ("affine", "jonquiere")
    non_tame: bool = False

    def __post_init__(self):
        if len(self.images) != len(self.varset):
            raise ValueError("one image per variable required")
        for img in self.images:
            if img.vars != self.varset:
                raise ValueError("images must live on the endomorphism's varset")
            if not img.is_polynomial():
                raise ValueError(f"image {render(img)} is not a polynomial")

    def apply(self, p: LaurentPoly) -> LaurentPoly:
        """Image of a polynomial under this endomorphism."""
        if not p.is_polynomial():
            raise ValueError("PolyEndo acts on polynomials only")
        out = LaurentPoly.zero(self.varset)
        for exp, c in p.terms.items():
            term = LaurentPoly.const(self.varset, c)
            for img, e in zip(self.images, exp):
                term = term * img**e
            out = out + term
        return out


def identity_endo(varset: Sequence[str]) -> PolyEndo:
    vs = tuple(varset)
    return PolyEndo(vs, tuple(LaurentPoly.var(vs, v) for v in vs))


def jonquiere(
    varset: Sequence[str],
    alphas: Sequence[Fraction | int],
    fs: Sequence[LaurentPoly],
) -> PolyEndo:
    """Triangular endomorphism x_i -> alpha_i x_i + f_i(x_1..x_{i-1})."""
    vs = tuple(varset)
    if len(alphas) != len(vs) or len(fs) != len(vs):
        raise ValueError("need one alpha and one f per variable")
    images = []
    for i, (a, f) in enumerate(zip(alphas, fs)):
        a = Fraction(a)
        if a == 0:
            raise UnitError(f"alpha_{i + 1} must be nonzero")
        forbidden = f.variables_used() & set(vs[i:])
        if forbidden:
            raise TriangularityError(
                f"f_{i + 1} may only involve earlier variables, uses {sorted(forbidden)}"
            )
        images.append(LaurentPoly.var(vs, vs[i]).scale(a) + f)
    return PolyEndo(vs, tuple(images), tame_word=("jonquiere",))


def is_triangular(f: PolyEndo) -> bool:
    vs = f.varset
    for i, img in enumerate(f.images):
        linear = img.terms.get(
            tuple(1 if j == i else 0 for j in range(len(vs))), Fraction(0)
        )
        if linear == 0:
            return False
        rest = img - LaurentPoly.var(vs, vs[i]).scale(linear)
        if rest.variables_used() & set(vs[i:]):
            return False
    return True


def _det(m: list[list[Fraction]]) -> Fraction:
    """Determinant by fraction-free-enough Gaussian elimination (exact)."""
    n = len(m)
    m = [row[:] for row in m]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = Fraction(1) / m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            for c in range(col, n):
                m[r][c] -= factor * m[col][c]
    return det


def affine(
    varset: Sequence[str],
    matrix: Sequence[Sequence[Fraction | int]],
    shift: Sequence[Fraction | int] | None = None,
    base: str = "Q",
) -> PolyEndo:
    """Affine endomorphism x -> A x + b; A must be invertible over the base."""
    vs = tuple(varset)
    n = len(vs)
    a = [[Fraction(x) for x in row] for row in matrix]
    b = [Fraction(x) for x in (shift if shift is not None else [0] * n)]
    if len(a) != n or any(len(row) != n for row in a) or len(b) != n:
        raise ValueError("matrix/shift shape mismatch")
    d = _det(a)
    if d == 0 or (base == "Z" and d not in (1, -1)):
        raise UnitError(f"matrix not invertible over {base} (det = {d})")
    images = []
    for i in range(n):
        img = LaurentPoly.const(vs, b[i])
        for j in range(n):
            if a[i][j]:
                img = img + LaurentPoly.var(vs, vs[j]).scale(a[i][j])
        images.append(img)
    return PolyEndo(vs, tuple(images), tame_word=("affine",))


def _nagata_images(
    vs: tuple[str, ...], a: Fraction, sign: int
) -> tuple[LaurentPoly, LaurentPoly]:
    """Images of X, Y for the Nagata map (sign=+1) or its inverse (sign=-1),
    with Delta = a*Y - X^2 (the invariant of the map)."""
    x = LaurentPoly.var(vs, vs[0])
    y = LaurentPoly.var(vs, vs[1])
    delta = y.scale(a) - x * x
    img_x = x + delta.scale(sign * a)
    img_y = y + (x * delta).scale(2 * sign) + (delta * delta).scale(a)
    return img_x, img_y


def nagata(a: Fraction | int, extra_vars: Sequence[str] = ()) -> PolyEndo:
    """The Nagata automorphism X -> X + a*Delta, Y -> Y + 2X*Delta + a*Delta^2
    with Delta = a*Y - X^2.  Extra variables are carried as fixed generators
    (the base-ring extension D_2 = Q[x_1..x_{n-2}]).

    Non-tame over a proper domain base; over Q every nonzero a is a unit, so
    the flag records where the non-tameness claim lives rather than a
    property of this particular base.
    """
    a = Fraction(a)
    if a == 0:
        raise UnitError("a must be nonzero")
    vs = ("X", "Y") + tuple(extra_vars)
    img_x, img_y = _nagata_images(vs, a, +1)
    fixed = tuple(LaurentPoly.var(vs, v) for v in vs[2:])
    return PolyEndo(vs, (img_x, img_y) + fixed, non_tame=True)


def nagata_inverse(a: Fraction | int, extra_vars: Sequence[str] = ()) -> PolyEndo:
    """Inverse of the Nagata map, self-verified before being returned."""
    a = Fraction(a)
    if a == 0:
        raise UnitError("a must be nonzero")
    vs = ("X", "Y") + tuple(extra_vars)
    img_x, img_y = _nagata_images(vs, a, -1)
    fixed = tuple(LaurentPoly.var(vs, v) for v in vs[2:])
    inv = PolyEndo(vs, (img_x, img_y) + fixed, non_tame=True)
    fwd = nagata(a, extra_vars)
    if not (is_identity(compose(fwd, inv)) and is_identity(compose(inv, fwd))):
        raise InternalError("nagata_inverse failed its round-trip self-check")
    return inv


def compose(f: PolyEndo, g: PolyEndo) -> PolyEndo:
    """Composite endomorphism: f's images substituted into g's images."""
    if f.varset != g.varset:
        raise ValueError("varset mismatch")
    images = tuple(f.apply(img) for img in g.images)
    return PolyEndo(
        f.varset,
        images,
        tame_word=f.tame_word + g.tame_word,
        non_tame=f.non_tame or g.non_tame,
    )


def is_identity(f: PolyEndo) -> bool:
    return all(
        img == LaurentPoly.var(f.varset, v) for v, img in zip(f.varset, f.images)
    )


def to_json_dict(f: PolyEndo) -> dict:
    from .laurent import to_json_dict as poly_json

    return {"vars": list(f.varset), "images": [poly_json(i) for i in f.images]}


def delta_invariance(a: Fraction | int) -> bool:
    """Substituting the Nagata images into a*Y - X^2 returns it unchanged."""
    a = Fraction(a)
    n = nagata(a)
    vs = n.varset
    delta = LaurentPoly.var(vs, "Y").scale(a) - LaurentPoly.var(vs, "X") ** 2
    return n.apply(delta) == delta
