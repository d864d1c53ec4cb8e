import pytest

from clusterbench.laurent import (
    LaurentPoly,
    RationalFn,
    parse,
    render,
    rf_equal,
    substitute,
)
from clusterbench.presentations import (
    Presentation,
    a2_presentation,
    a3_presentation,
    homogenize,
    substitution_trace,
    verify_presentation,
)
from clusterbench.quiver import DynkinType, dynkin_quiver
from clusterbench.seeds import census, exchange_graph, initial_seed


class TestA2Presentation:
    def test_relation_holds(self):
        assert verify_presentation(a2_presentation())

    def test_perturbed_relation_fails(self):
        p = a2_presentation()
        bad = p.relation + LaurentPoly.const(p.relation.vars, -1)  # constant -2
        assert not verify_presentation(
            Presentation(p.name, p.initial_vars, p.generator_names,
                         p.generators, bad, p.projective_degree)
        )

    def test_generator_product_identity(self):
        # w * x1 - 1 = x2 for w = (1+x2)/x1
        p = a2_presentation()
        by_name = dict(zip(p.generator_names, p.generators))
        vs = p.initial_vars
        w, u = by_name["w"], by_name["u"]
        lhs = w * u - RationalFn.const(vs, 1)
        assert rf_equal(lhs, RationalFn(LaurentPoly.var(vs, "x2")))

    def test_generators_are_cluster_variables(self):
        vars_ = census(
            exchange_graph(initial_seed(dynkin_quiver(DynkinType("A", 2))))
        ).variables
        for g in a2_presentation().generators:
            assert any(rf_equal(g, RationalFn(v)) for v in vars_)

    def test_trace(self):
        tr = substitution_trace(a2_presentation())
        assert tr["verified"]
        assert tr["substituted_numerator"] == "0"


class TestA3Presentation:
    def test_relation_holds(self):
        assert verify_presentation(a3_presentation())

    def test_generators_are_cluster_variables(self):
        vars_ = census(
            exchange_graph(initial_seed(dynkin_quiver(DynkinType("A", 3))))
        ).variables
        for g in a3_presentation().generators:
            assert any(rf_equal(g, RationalFn(v)) for v in vars_)

    def test_generator_values(self):
        p = a3_presentation()
        by_name = dict(zip(p.generator_names, p.generators))
        vs = p.initial_vars
        assert rf_equal(by_name["w"],
                        RationalFn(parse("1 * x2^1 + 1", vs),
                                   parse("1 * x1^1", vs)))
        assert rf_equal(by_name["t"],
                        RationalFn(parse("1 * x1^1 * x3^1 + 1 * x2^1 + 1", vs),
                                   parse("1 * x2^1 * x3^1", vs)))

    def test_projective_degree(self):
        assert a2_presentation().projective_degree == 3
        assert a3_presentation().projective_degree == 4


class TestHomogenize:
    def test_a2_cubic(self):
        # u*v*w - u - v - 1 homogenizes to u*v*w - u*z^2 - v*z^2 - z^3
        h = homogenize(a2_presentation().relation)
        assert h.vars == ("u", "v", "w", "z")
        assert h.terms == {
            (1, 1, 1, 0): 1,
            (1, 0, 0, 2): -1,
            (0, 1, 0, 2): -1,
            (0, 0, 0, 3): -1,
        }

    def test_a3_quartic(self):
        # t*w*x1*x3 - t*x3*z^2 - w*x1*z^2 - x1*x3*z^2
        h = homogenize(a3_presentation().relation)
        assert h.terms == {
            (1, 1, 1, 1, 0): 1,
            (1, 0, 0, 1, 2): -1,
            (0, 1, 1, 0, 2): -1,
            (0, 0, 1, 1, 2): -1,
        }

    def test_result_is_homogeneous(self):
        h = homogenize(a3_presentation().relation)
        degrees = {sum(exp) for exp in h.terms}
        assert degrees == {4}

    def test_rejects_laurent_input(self):
        with pytest.raises(ValueError):
            homogenize(parse("1 * x^-1", ("x",)))


class TestJson:
    def test_shape(self):
        d = a2_presentation().to_json_dict()
        assert d["name"] == "A2"
        assert set(d["generators"]) == {"u", "v", "w"}
        assert d["projective_degree"] == 3
