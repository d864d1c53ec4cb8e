import pytest

from clusterbench.autgroup import (
    ClusterPerm,
    PermGroup,
    _closure_perms,
    _cyclic_model,
    _dihedral_model,
    _direct_product_model,
    _sym_model,
    candidate_maps,
    close_group,
    identify,
    maps_clusters_to_clusters,
)
from clusterbench.groupexpr import cyclic, dihedral, product, render, sym
from clusterbench.quiver import DynkinType, dynkin_quiver
from clusterbench.seeds import census, exchange_graph, initial_seed


def symmetry_group(family: str, rank: int):
    s = initial_seed(dynkin_quiver(DynkinType(family, rank)))
    g = exchange_graph(s)
    c = census(g)
    cands = candidate_maps(g, c, s)
    return g, c, cands, close_group(cands)


A1 = symmetry_group("A", 1)
A2 = symmetry_group("A", 2)
A3 = symmetry_group("A", 3)


class TestClusterPerm:
    def test_compose_and_inverse(self):
        a = ClusterPerm((1, 2, 0), "direct")
        b = ClusterPerm((0, 2, 1), "inverse")
        assert a.compose(a.inverse()).perm == (0, 1, 2)
        assert a.compose(b).perm == tuple(a.perm[i] for i in b.perm)

    def test_kind_bookkeeping(self):
        # direct o direct = direct, inverse o inverse = direct, mixed = inverse
        d = ClusterPerm((0, 1), "direct")
        i = ClusterPerm((1, 0), "inverse")
        assert d.compose(d).kind == "direct"
        assert i.compose(i).kind == "direct"
        assert d.compose(i).kind == "inverse"
        assert i.compose(d).kind == "inverse"
        assert i.inverse().kind == "inverse"

    def test_order(self):
        assert ClusterPerm((1, 2, 0, 4, 3), "direct").order() == 6


class TestGroupComputation:
    @pytest.mark.parametrize(
        "data,order,n_cands",
        [(A1, 2, 2), (A2, 10, 10), (A3, 12, 12)],
        ids=["A1", "A2", "A3"],
    )
    def test_orders_and_candidate_counts(self, data, order, n_cands):
        _, _, cands, grp = data
        assert len(cands) == n_cands
        assert grp.order == order

    @pytest.mark.parametrize("data", [A1, A2, A3], ids=["A1", "A2", "A3"])
    def test_group_axioms(self, data):
        _, _, _, grp = data
        perms = {e.perm for e in grp.elements}
        n = len(next(iter(perms)))
        assert tuple(range(n)) in perms
        for a in grp.elements:
            assert a.inverse().perm in perms
            for b in grp.elements:
                assert a.compose(b).perm in perms

    @pytest.mark.parametrize("data", [A1, A2, A3], ids=["A1", "A2", "A3"])
    def test_every_element_preserves_clusters(self, data):
        g, c, _, grp = data
        for e in grp.elements:
            assert maps_clusters_to_clusters(g, c, e)

    def test_direct_elements_form_index_two_subgroup_a3(self):
        _, _, _, grp = A3
        direct = [e for e in grp.elements if e.kind == "direct"]
        assert len(direct) * 2 == grp.order

    def test_a2_contains_order_five_rotation(self):
        _, _, _, grp = A2
        assert 5 in grp.element_order_histogram()


class TestIdentify:
    def test_a1_is_z2(self):
        assert render(identify(A1[3])) == "Z2"

    def test_a2_is_d5(self):
        assert render(identify(A2[3])) == "D5"

    def test_a3_is_d6(self):
        assert render(identify(A3[3])) == "D6"

    def test_dihedral_model_identified(self):
        for n in (3, 4, 5, 7):
            grp = PermGroup(
                tuple(
                    ClusterPerm(p, "direct")
                    for p in sorted(_dihedral_model(n))
                ),
                (),
            )
            assert identify(grp) == dihedral(n)

    def test_cyclic_model_identified(self):
        for n in (2, 3, 6):
            grp = PermGroup(
                tuple(ClusterPerm(p, "direct") for p in sorted(_cyclic_model(n))),
                (),
            )
            assert identify(grp) == cyclic(n)

    def test_d4_x_s3_model_identified(self):
        elems = _direct_product_model(_dihedral_model(4), _sym_model(3))
        grp = PermGroup(
            tuple(ClusterPerm(p, "direct") for p in sorted(elems)), ()
        )
        assert identify(grp) == product(dihedral(4), sym(3))

    def test_dn_x_z2_model_identified(self):
        # n must be even here: for odd n the product D_n x Z2 is itself
        # dihedral and the dihedral probe correctly reports D_{2n}
        elems = _direct_product_model(_dihedral_model(6), _cyclic_model(2))
        grp = PermGroup(
            tuple(ClusterPerm(p, "direct") for p in sorted(elems)), ()
        )
        assert identify(grp) == product(dihedral(6), cyclic(2))

    def test_odd_dn_x_z2_reported_as_larger_dihedral(self):
        elems = _direct_product_model(_dihedral_model(5), _cyclic_model(2))
        grp = PermGroup(
            tuple(ClusterPerm(p, "direct") for p in sorted(elems)), ()
        )
        assert identify(grp) == dihedral(10)


class TestClosureHelpers:
    def test_closure_of_dihedral_generators(self):
        rot = (1, 2, 3, 4, 0)
        flip = (0, 4, 3, 2, 1)
        assert len(_closure_perms([rot, flip])) == 10

    def test_close_group_identity_only(self):
        grp = close_group([ClusterPerm((0, 1, 2), "direct")])
        assert grp.order == 1


@pytest.mark.slow
class TestD4:
    def test_order_48_and_identification(self):
        _, _, _, grp = symmetry_group("D", 4)
        assert grp.order == 48
        assert identify(grp) == product(dihedral(4), sym(3))
