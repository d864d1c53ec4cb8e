from fractions import Fraction
from itertools import product as iproduct

import pytest

from clusterbench.laurent import LaurentPoly, parse, render
from clusterbench.polyauto import (
    PolyEndo,
    TriangularityError,
    UnitError,
    affine,
    compose,
    delta_invariance,
    identity_endo,
    is_identity,
    is_triangular,
    jonquiere,
    nagata,
    nagata_inverse,
    to_json_dict,
)

XY = ("x", "y")
XYZ = ("x", "y", "z")


def lift(text, vs=XYZ):
    return parse(text, vs)


class TestJonquiere:
    def test_identity(self):
        f = jonquiere(XYZ, [1, 1, 1], [LaurentPoly.zero(XYZ)] * 3)
        assert is_identity(f)

    def test_shear(self):
        f = jonquiere(XY, [1, 1], [LaurentPoly.zero(XY), parse("1 * x^2", XY)])
        assert render(f.images[1]) == "1 * x^2 + 1 * y^1"
        assert is_triangular(f)

    def test_closed_under_composition(self):
        f = jonquiere(XYZ, [2, 1, 3], [
            LaurentPoly.const(XYZ, 5), lift("1 * x^2"), lift("1 * x^1 * y^1"),
        ])
        g = jonquiere(XYZ, [1, -1, 1], [
            LaurentPoly.zero(XYZ), lift("3 * x^1"), lift("1 * y^2"),
        ])
        assert is_triangular(compose(f, g))
        assert is_triangular(compose(g, f))

    def test_rejects_zero_alpha(self):
        with pytest.raises(UnitError):
            jonquiere(XY, [1, 0], [LaurentPoly.zero(XY)] * 2)

    def test_rejects_forward_reference(self):
        with pytest.raises(TriangularityError):
            jonquiere(XY, [1, 1], [parse("1 * y^1", XY), LaurentPoly.zero(XY)])

    def test_rejects_self_reference(self):
        with pytest.raises(TriangularityError):
            jonquiere(XY, [1, 1], [LaurentPoly.zero(XY), parse("1 * y^2", XY)])


class TestAffine:
    def test_identity_matrix(self):
        assert is_identity(affine(XY, [[1, 0], [0, 1]]))

    def test_singular_rejected(self):
        with pytest.raises(UnitError):
            affine(XY, [[1, 2], [2, 4]])

    def test_integer_base_needs_unit_determinant(self):
        with pytest.raises(UnitError):
            affine(XY, [[2, 0], [0, 1]], base="Z")
        affine(XY, [[0, 1], [-1, 0]], base="Z")  # det 1: fine

    def test_composition_law(self, rng):
        # substituting f1's images into f2's realizes matrix A2*A1 and
        # shift A2*b1 + b2 (generator images compose contravariantly)
        for _ in range(50):
            a1 = [[Fraction(rng.randint(-3, 3)) for _ in range(2)] for _ in range(2)]
            a2 = [[Fraction(rng.randint(-3, 3)) for _ in range(2)] for _ in range(2)]
            b1 = [Fraction(rng.randint(-3, 3)) for _ in range(2)]
            b2 = [Fraction(rng.randint(-3, 3)) for _ in range(2)]
            try:
                f1 = affine(XY, a1, b1)
                f2 = affine(XY, a2, b2)
            except UnitError:
                continue
            prod = [
                [sum(a2[i][k] * a1[k][j] for k in range(2)) for j in range(2)]
                for i in range(2)
            ]
            shift = [sum(a2[i][k] * b1[k] for k in range(2)) + b2[i] for i in range(2)]
            assert compose(f1, f2).images == affine(XY, prod, shift).images

    def test_permutation_matrices_exhaustive(self):
        # all invertible 0/1 matrices in dimension <= 3 give automorphisms
        # permuting the variables
        for n, vs in ((2, XY), (3, XYZ)):
            count = 0
            for bits in iproduct((0, 1), repeat=n * n):
                m = [list(bits[i * n : (i + 1) * n]) for i in range(n)]
                try:
                    f = affine(vs, m)
                except UnitError:
                    continue
                count += 1
                if all(sum(row) == 1 for row in m):
                    assert sorted(render(i) for i in f.images) == sorted(
                        f"1 * {v}^1" for v in vs
                    )
            # invertible 0/1 matrices: more than the n! permutations for n >= 2
            assert count >= [None, 1, 6, 174][n] if n < 4 else True


class TestNagata:
    @pytest.mark.parametrize("a", [1, -1, 2, Fraction(1, 2)])
    def test_roundtrip(self, a):
        f = nagata(a)
        g = nagata_inverse(a)
        assert is_identity(compose(f, g))
        assert is_identity(compose(g, f))

    def test_images(self):
        f = nagata(1)
        vs = f.varset
        x, y = LaurentPoly.var(vs, "X"), LaurentPoly.var(vs, "Y")
        delta = y - x * x
        assert f.images[0] == x + delta
        assert f.images[1] == y + (x * delta).scale(2) + delta * delta

    @pytest.mark.parametrize("a", [1, -1, 2, Fraction(1, 2)])
    def test_delta_invariance(self, a):
        assert delta_invariance(a)

    def test_numeric_spot_check(self):
        # at (X, Y) = (2, 3) with a = 1: Delta = -1, so images evaluate to
        # (2 - 1, 3 - 4 + 1) = (1, 0)
        f = nagata(1)
        pt = {"X": 2, "Y": 3}
        assert f.images[0].eval(pt) == 1
        assert f.images[1].eval(pt) == 0

    def test_extra_vars_fixed(self):
        f = nagata(2, extra_vars=("t",))
        assert f.images[2] == LaurentPoly.var(f.varset, "t")
        g = nagata_inverse(2, extra_vars=("t",))
        assert is_identity(compose(f, g))

    def test_zero_parameter_rejected(self):
        with pytest.raises(UnitError):
            nagata(0)

    def test_non_tame_flag(self):
        assert nagata(1).non_tame
        assert not affine(XY, [[1, 0], [0, 1]]).non_tame
        assert compose(nagata(1), identity_endo(nagata(1).varset)).non_tame


class TestCompose:
    def test_identity_neutral(self):
        f = jonquiere(XY, [2, 3], [LaurentPoly.const(XY, 1), parse("1 * x^1", XY)])
        e = identity_endo(XY)
        assert compose(f, e).images == f.images
        assert compose(e, f).images == f.images

    def test_associativity(self, rng):
        f = nagata(1)
        vs = f.varset
        g = affine(vs, [[0, 1], [1, 0]])
        h = jonquiere(vs, [1, 2], [LaurentPoly.zero(vs), parse("1 * X^3", vs)])
        lhs = compose(compose(f, g), h)
        rhs = compose(f, compose(g, h))
        assert lhs.images == rhs.images

    def test_apply_agrees_with_composition(self, rng):
        f = nagata(1)
        g = affine(f.varset, [[1, 1], [0, 1]])
        p = parse("2 * X^2 * Y^1 + -1 * Y^3 + 5", f.varset)
        assert compose(f, g).apply(p) == f.apply(g.apply(p))

    def test_varset_mismatch(self):
        with pytest.raises(ValueError):
            compose(identity_endo(XY), identity_endo(XYZ))


class TestValidation:
    def test_laurent_image_rejected(self):
        with pytest.raises(ValueError):
            PolyEndo(("x",), (parse("1 * x^-1", ("x",)),))

    def test_json_shape(self):
        d = to_json_dict(identity_endo(XY))
        assert d["vars"] == ["x", "y"]
        assert len(d["images"]) == 2
