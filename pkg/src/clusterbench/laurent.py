"""Exact sparse multivariate Laurent polynomial and rational function arithmetic.

A Laurent polynomial is a finite map from integer exponent vectors (one entry
per variable, negative entries allowed) to nonzero rational coefficients.  All
coefficients are :class:`fractions.Fraction`; nothing here ever touches a
float, so every identity check in the package is exact.

Term order is graded lexicographic with the variable order fixed by the
varset: terms compare first by total degree (sum of exponents), then
lexicographically on the exponent vector.  Serialized forms always list terms
in descending graded-lex order, which makes rendered strings and JSON
canonical and byte-stable.

Rational functions are kept unreduced (no multivariate gcd); equality is
decided by exact cross-multiplication.  The denominator is sign-normalized so
that its graded-lex leading coefficient is positive.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping

Exponent = tuple[int, ...]


class VarSetError(ValueError):
    """Two operands do not share the same ordered variable set."""


class NotDivisible(ArithmeticError):
    """Exact division has no Laurent-polynomial quotient."""


class SubstitutionError(KeyError):
    """A variable occurring in the polynomial has no substitution image."""


class EvalDomainError(ZeroDivisionError):
    """Zero was assigned to a variable occurring with negative exponent."""


def grlex_key(exp: Exponent) -> tuple[int, Exponent]:
    """Sort key realizing graded-lex order (larger key = larger monomial)."""
    return (sum(exp), exp)


class LaurentPoly:
    """Immutable sparse Laurent polynomial over Q.

    ``vars`` is the ordered tuple of variable names; ``terms`` maps exponent
    tuples of length ``len(vars)`` to nonzero Fractions.  Instances are
    treated as frozen values: no method mutates ``self``.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Iterable[str], terms: Mapping[Exponent, Fraction | int]):
        vs = tuple(vars)
        if len(set(vs)) != len(vs):
            raise ValueError(f"duplicate variable names in {vs}")
        n = len(vs)
        clean: dict[Exponent, Fraction] = {}
        for exp, c in terms.items():
            e = tuple(int(x) for x in exp)
            if len(e) != n:
                raise ValueError(f"exponent {e} has length {len(e)}, expected {n}")
            c = Fraction(c)
            if c != 0:
                clean[e] = c
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, vars: Iterable[str]) -> "LaurentPoly":
        return cls(vars, {})

    @classmethod
    def const(cls, vars: Iterable[str], c) -> "LaurentPoly":
        vs = tuple(vars)
        return cls(vs, {(0,) * len(vs): Fraction(c)})

    @classmethod
    def var(cls, vars: Iterable[str], name: str) -> "LaurentPoly":
        vs = tuple(vars)
        exp = [0] * len(vs)
        exp[vs.index(name)] = 1
        return cls(vs, {tuple(exp): Fraction(1)})

    @classmethod
    def monomial(cls, vars: Iterable[str], exp: Exponent, c=1) -> "LaurentPoly":
        return cls(vars, {tuple(exp): Fraction(c)})

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * len(self.vars): Fraction(1)}

    def is_polynomial(self) -> bool:
        return all(all(e >= 0 for e in exp) for exp in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in descending graded-lex order (the canonical order)."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[Exponent, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=grlex_key)
        return exp, self.terms[exp]

    def variables_used(self) -> set[str]:
        used: set[str] = set()
        for exp in self.terms:
            for v, e in zip(self.vars, exp):
                if e != 0:
                    used.add(v)
        return used

    # -- ring operations ----------------------------------------------------

    def _check_vars(self, other: "LaurentPoly") -> None:
        if self.vars != other.vars:
            raise VarSetError(f"varset mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_vars(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, Fraction(0)) + c
            if s == 0:
                out.pop(exp, None)
            else:
                out[exp] = s
        return LaurentPoly(self.vars, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_vars(other)
        out: dict[Exponent, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, Fraction(0)) + ca * cb
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return LaurentPoly(self.vars, out)

    def scale(self, c) -> "LaurentPoly":
        c = Fraction(c)
        return LaurentPoly(self.vars, {e: k * c for e, k in self.terms.items()})

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            # Only monomials are units in the Laurent ring.
            if not self.is_monomial():
                raise NotDivisible("negative power of a non-monomial")
            ((exp, c),) = self.terms.items()
            return LaurentPoly(self.vars, {tuple(n * e for e in exp): c**n})
        acc = LaurentPoly.const(self.vars, 1)
        base = self
        k = n
        while k:
            if k & 1:
                acc = acc * base
            k >>= 1
            if k:
                base = base * base
        return acc

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash((self.vars, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"LaurentPoly({render(self)!r})"

    # -- evaluation and substitution ----------------------------------------

    def eval(self, point: Mapping[str, Fraction | int]) -> Fraction:
        vals = []
        for v in self.vars:
            if v not in point:
                raise SubstitutionError(v)
            vals.append(Fraction(point[v]))
        total = Fraction(0)
        for exp, c in self.terms.items():
            term = c
            for val, e in zip(vals, exp):
                if e == 0:
                    continue
                if val == 0 and e < 0:
                    raise EvalDomainError(
                        "zero assigned to a variable with negative exponent"
                    )
                term *= val ** e
            total += term
        return total

    def subs_const(self, assignment: Mapping[str, Fraction | int]) -> "LaurentPoly":
        """Set some variables to constants; the result lives on the remaining vars.

        Used to specialize frozen generators (typically to 1).  Assigning zero
        to a variable that occurs with negative exponent raises
        EvalDomainError.
        """
        keep = [i for i, v in enumerate(self.vars) if v not in assignment]
        new_vars = tuple(self.vars[i] for i in keep)
        out: dict[Exponent, Fraction] = {}
        for exp, c in self.terms.items():
            coef = c
            for i, v in enumerate(self.vars):
                if v in assignment:
                    e = exp[i]
                    if e == 0:
                        continue
                    val = Fraction(assignment[v])
                    if val == 0 and e < 0:
                        raise EvalDomainError(v)
                    coef *= val ** e
            new_exp = tuple(exp[i] for i in keep)
            s = out.get(new_exp, Fraction(0)) + coef
            if s == 0:
                out.pop(new_exp, None)
            else:
                out[new_exp] = s
        return LaurentPoly(new_vars, out)


# -- module-level operation names matching the package's public contract ----


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def _min_exponents(p: LaurentPoly) -> Exponent:
    """Componentwise minimum exponent over all terms (0 for the zero poly)."""
    n = len(p.vars)
    if not p.terms:
        return (0,) * n
    mins = [min(exp[i] for exp in p.terms) for i in range(n)]
    return tuple(mins)


def _shift(p: LaurentPoly, by: Exponent) -> LaurentPoly:
    return LaurentPoly(
        p.vars, {tuple(e + s for e, s in zip(exp, by)): c for exp, c in p.terms.items()}
    )


def exact_divide(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return q with q * b == a, if a Laurent-polynomial quotient exists.

    Both operands are shifted by monomials so each variable has minimum
    exponent 0 (this makes divisibility in the Laurent ring equivalent to
    divisibility of the shifted polynomials), then ordinary multivariate
    exact division by leading-term elimination runs under graded-lex order.
    Raises NotDivisible when no quotient exists.
    """
    a._check_vars(b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return LaurentPoly.zero(a.vars)
    sa = _min_exponents(a)
    sb = _min_exponents(b)
    A = _shift(a, tuple(-e for e in sa))
    B = _shift(b, tuple(-e for e in sb))
    lt_exp, lt_c = B.leading_term()
    q_terms: dict[Exponent, Fraction] = {}
    r = A
    while not r.is_zero():
        r_exp, r_c = r.leading_term()
        t = tuple(x - y for x, y in zip(r_exp, lt_exp))
        if any(e < 0 for e in t):
            raise NotDivisible(render(a) + " is not divisible by " + render(b))
        c = r_c / lt_c
        q_terms[t] = q_terms.get(t, Fraction(0)) + c
        r = r - LaurentPoly.monomial(r.vars, t, c) * B
    q = LaurentPoly(a.vars, q_terms)
    return _shift(q, tuple(x - y for x, y in zip(sa, sb)))


class RationalFn:
    """Quotient of two Laurent polynomials, unreduced, sign-normalized.

    The denominator's graded-lex leading coefficient is kept positive, giving
    a canonical representative for display; equality between fractions is by
    exact cross-multiplication (see rf_equal), so no gcd reduction is needed.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if den is None:
            den = LaurentPoly.const(num.vars, 1)
        num._check_vars(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den.leading_term()[1] < 0:
            num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFn is immutable")

    @property
    def vars(self) -> tuple[str, ...]:
        return self.num.vars

    @classmethod
    def const(cls, vars: Iterable[str], c) -> "RationalFn":
        return cls(LaurentPoly.const(vars, c))

    @classmethod
    def var(cls, vars: Iterable[str], name: str) -> "RationalFn":
        return cls(LaurentPoly.var(vars, name))

    def __add__(self, other: "RationalFn") -> "RationalFn":
        return RationalFn(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.num, self.den)

    def __sub__(self, other: "RationalFn") -> "RationalFn":
        return self + (-other)

    def __mul__(self, other: "RationalFn") -> "RationalFn":
        return RationalFn(self.num * other.num, self.den * other.den)

    def inverse(self) -> "RationalFn":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalFn(self.den, self.num)

    def __pow__(self, n: int) -> "RationalFn":
        if n < 0:
            return self.inverse() ** (-n)
        acc = RationalFn.const(self.vars, 1)
        for _ in range(n):
            acc = acc * self
        return acc

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalFn) and rf_equal(self, other)

    def __hash__(self):
        raise TypeError("RationalFn is unhashable (equality is cross-multiplied)")

    def __repr__(self) -> str:
        if self.den.is_one():
            return f"RationalFn({render(self.num)!r})"
        return f"RationalFn({render(self.num)!r} / {render(self.den)!r})"


def rf_equal(a: RationalFn, b: RationalFn) -> bool:
    """Exact equality of fractions by cross-multiplication."""
    if a.vars != b.vars:
        raise VarSetError(f"varset mismatch: {a.vars} vs {b.vars}")
    return a.num * b.den == b.num * a.den


def substitute(p: LaurentPoly, images: Mapping[str, RationalFn]) -> RationalFn:
    """Formal substitution of rational functions for the variables of p.

    Every variable actually occurring in p must have an image; all images must
    share a common target varset.
    """
    used = p.variables_used()
    missing = used - set(images)
    if missing:
        raise SubstitutionError(f"no image for {sorted(missing)}")
    targets = {im.vars for im in images.values()}
    if len(targets) > 1:
        raise VarSetError(f"images disagree on target varset: {targets}")
    target = targets.pop() if targets else p.vars
    total = RationalFn.const(target, 0)
    for exp, c in p.terms.items():
        term = RationalFn.const(target, c)
        for v, e in zip(p.vars, exp):
            if e != 0:
                term = term * images[v] ** e
        total = total + term
    return total


def poly_eval(p: LaurentPoly, point: Mapping[str, Fraction | int]) -> Fraction:
    return p.eval(point)


# -- canonical text / JSON serialization ------------------------------------


def _render_coef(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render(p: LaurentPoly) -> str:
    """Canonical text form: graded-lex-ordered terms joined by ' + '."""
    if not p.terms:
        return "0"
    parts = []
    for exp, c in p.sorted_terms():
        factors = [_render_coef(c)]
        for v, e in zip(p.vars, exp):
            if e != 0:
                factors.append(f"{v}^{e}")
        parts.append(" * ".join(factors))
    return " + ".join(parts)


def render_rf(r: RationalFn) -> str:
    if r.den.is_one():
        return render(r.num)
    return f"({render(r.num)}) / ({render(r.den)})"


def parse(text: str, vars: Iterable[str]) -> LaurentPoly:
    """Parse the canonical text form back into a LaurentPoly."""
    vs = tuple(vars)
    text = text.strip()
    if text == "0":
        return LaurentPoly.zero(vs)
    terms: dict[Exponent, Fraction] = {}
    for chunk in text.split(" + "):
        factors = [f.strip() for f in chunk.split("*")]
        coef = Fraction(factors[0])
        exp = [0] * len(vs)
        for f in factors[1:]:
            name, _, e = f.partition("^")
            if name not in vs:
                raise ValueError(f"unknown variable {name!r}")
            exp[vs.index(name)] += int(e) if e else 1
        key = tuple(exp)
        terms[key] = terms.get(key, Fraction(0)) + coef
    return LaurentPoly(vs, terms)


def to_json_dict(p: LaurentPoly) -> dict:
    return {
        "vars": list(p.vars),
        "terms": [
            {"exp": list(exp), "num": str(c.numerator), "den": str(c.denominator)}
            for exp, c in p.sorted_terms()
        ],
    }


def from_json_dict(d: dict) -> LaurentPoly:
    terms = {
        tuple(t["exp"]): Fraction(int(t["num"]), int(t["den"])) for t in d["terms"]
    }
    return LaurentPoly(tuple(d["vars"]), terms)


def to_json(p: LaurentPoly) -> str:
    return json.dumps(to_json_dict(p), separators=(",", ":"))


def from_json(s: str) -> LaurentPoly:
    return from_json_dict(json.loads(s))
