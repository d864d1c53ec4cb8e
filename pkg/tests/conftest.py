import random
from fractions import Fraction

import pytest

from clusterbench.laurent import LaurentPoly


def rand_poly(
    rng: random.Random,
    vars: tuple[str, ...],
    max_deg: int = 4,
    max_terms: int = 4,
    laurent: bool = False,
) -> LaurentPoly:
    """Small random (Laurent) polynomial with rational coefficients."""
    lo = -max_deg if laurent else 0
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exp = tuple(rng.randint(lo, max_deg) for _ in vars)
        num = rng.randint(-5, 5)
        den = rng.randint(1, 4)
        terms[exp] = terms.get(exp, Fraction(0)) + Fraction(num, den)
    return LaurentPoly(vars, terms)


def rand_nonzero_poly(rng, vars, **kw) -> LaurentPoly:
    while True:
        p = rand_poly(rng, vars, **kw)
        if not p.is_zero():
            return p


@pytest.fixture
def rng() -> random.Random:
    return random.Random(1729)
