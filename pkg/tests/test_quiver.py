import random

import pytest

from clusterbench.quiver import (
    DynkinType,
    LevelError,
    MutationError,
    Quiver,
    build_hl_quiver,
    dynkin_edges,
    dynkin_quiver,
    isomorphisms,
    isomorphisms_brute,
)

ALL_TYPES = (
    [DynkinType("A", n) for n in range(1, 9)]
    + [DynkinType("D", n) for n in range(4, 9)]
    + [DynkinType("E", n) for n in (6, 7, 8)]
)


def labelled_arrows(q: Quiver) -> set[tuple[str, str]]:
    out = set()
    for s, d, m in q.arrows():
        assert m == 1
        out.add((q.labels[s], q.labels[d]))
    return out


def rand_quiver(rng: random.Random, n_mut: int, n_frozen: int = 0) -> Quiver:
    n = n_mut + n_frozen
    b = [[0] * n_mut for _ in range(n)]
    for i in range(n_mut):
        for k in range(i + 1, n_mut):
            v = rng.randint(-3, 3)
            b[i][k], b[k][i] = v, -v
    for i in range(n_mut, n):
        for k in range(n_mut):
            b[i][k] = rng.randint(-3, 3)
    labels = tuple(f"v{i}" for i in range(n))
    return Quiver(n_mut, n_frozen, labels, tuple(tuple(r) for r in b))


class TestDynkinType:
    def test_valid(self):
        assert str(DynkinType("A", 1)) == "A1"
        assert str(DynkinType("E", 8)) == "E8"

    @pytest.mark.parametrize("family,rank", [("B", 2), ("A", 0), ("D", 3), ("E", 9), ("F", 4)])
    def test_invalid(self, family, rank):
        with pytest.raises(TypeError):
            DynkinType(family, rank)


class TestDynkinDiagram:
    def test_a4_path(self):
        assert dynkin_edges(DynkinType("A", 4)) == [(1, 2), (2, 3), (3, 4)]

    def test_d5_fork(self):
        assert set(dynkin_edges(DynkinType("D", 5))) == {(1, 2), (2, 3), (3, 4), (3, 5)}

    def test_e6_branch(self):
        assert set(dynkin_edges(DynkinType("E", 6))) == {
            (1, 3), (3, 4), (4, 5), (5, 6), (2, 4),
        }


class TestDynkinQuiver:
    def test_a1(self):
        q = dynkin_quiver(DynkinType("A", 1))
        assert q.n_mut == 1 and q.arrows() == []

    def test_a2(self):
        q = dynkin_quiver(DynkinType("A", 2))
        assert labelled_arrows(q) == {("x2", "x1")}

    def test_a4(self):
        q = dynkin_quiver(DynkinType("A", 4))
        assert labelled_arrows(q) == {("x2", "x1"), ("x2", "x3"), ("x4", "x3")}

    @pytest.mark.parametrize("t", ALL_TYPES, ids=str)
    def test_every_vertex_source_or_sink(self, t):
        q = dynkin_quiver(t)
        for v in range(q.n_mut):
            outs = sum(1 for s, _, _ in q.arrows() if s == v)
            ins = sum(1 for _, d, _ in q.arrows() if d == v)
            assert outs == 0 or ins == 0


class TestLevelQuiver:
    def test_a4_level1_shape(self):
        q = build_hl_quiver(DynkinType("A", 4), 1)
        assert q.n_mut == 4 and q.n_frozen == 4
        assert q.arrow_count() == 13

    def test_a4_level1_arrows(self):
        q = build_hl_quiver(DynkinType("A", 4), 1)
        assert labelled_arrows(q) == {
            ("V_2_1", "V_1_1"), ("V_2_1", "V_3_1"), ("V_4_1", "V_3_1"),
            ("W_2_2", "W_1_2"), ("W_2_2", "W_3_2"), ("W_4_2", "W_3_2"),
            ("V_1_1", "W_2_2"), ("V_3_1", "W_2_2"), ("V_3_1", "W_4_2"),
            ("W_1_2", "V_1_1"), ("W_2_2", "V_2_1"),
            ("W_3_2", "V_3_1"), ("W_4_2", "V_4_1"),
        }

    @pytest.mark.parametrize("t", ALL_TYPES, ids=str)
    @pytest.mark.parametrize("l", [1, 2, 3, 4])
    def test_arrow_count_formula(self, t, l):
        # (l+1) copies of each diagram edge, l diagonal copies, and n*l
        # downward arrows between consecutive levels
        q = build_hl_quiver(t, l)
        e = len(dynkin_edges(t))
        assert q.arrow_count() == (l + 1) * e + l * e + t.rank * l
        assert q.n_mut == t.rank * l and q.n_frozen == t.rank

    def test_bad_level(self):
        with pytest.raises(LevelError):
            build_hl_quiver(DynkinType("A", 2), 0)

    def test_frozen_arrows_survive_mutation_untouched(self):
        q = build_hl_quiver(DynkinType("A", 4), 1)
        assert q.mutate(0).frozen_arrows == q.frozen_arrows


def arrows_after_rule_mutation(q: Quiver, k: int) -> set[tuple[int, int]]:
    """Oracle: arrow-level mutation rule restricted to tracked arrows.

    (1) add i -> j for each path i -> k -> j, (2) reverse arrows at k,
    (3) cancel 2-cycles; arrows between two frozen vertices are untouched.
    """
    from collections import Counter

    cnt: Counter[tuple[int, int]] = Counter()
    for s, d, m in q.arrows(include_frozen_pairs=False):
        cnt[(s, d)] += m
    new = Counter(cnt)
    for (s1, d1), m1 in cnt.items():
        if d1 != k:
            continue
        for (s2, d2), m2 in cnt.items():
            if s2 == k and not (s1 >= q.n_mut and d2 >= q.n_mut):
                new[(s1, d2)] += m1 * m2
    for (s, d), m in cnt.items():
        if s == k or d == k:
            new[(s, d)] -= m
            new[(d, s)] += m
    for s, d in list(new):
        if s < d:
            c = min(new[(s, d)], new[(d, s)])
            new[(s, d)] -= c
            new[(d, s)] -= c
    return {(s, d) for (s, d), m in new.items() if m > 0}


class TestMutation:
    def test_a2_swap(self):
        q = dynkin_quiver(DynkinType("A", 2))
        assert labelled_arrows(q.mutate(0)) == {("x1", "x2")}

    def test_frozen_vertex_rejected(self):
        q = build_hl_quiver(DynkinType("A", 2), 1)
        with pytest.raises(MutationError):
            q.mutate(q.n_mut)

    def test_level_quiver_neighborhood_flip(self):
        # mutating the level quiver of A4 at V_1_1 reverses exactly the
        # arrows incident to it and composes V_2_1 -> V_1_1 -> W_2_2 into an
        # arrow that cancels the existing W_2_2 -> V_2_1
        q = build_hl_quiver(DynkinType("A", 4), 1)
        arr = labelled_arrows(q.mutate(0))
        assert ("V_1_1", "V_2_1") in arr
        assert ("W_2_2", "V_1_1") in arr
        assert ("V_1_1", "W_1_2") in arr
        assert ("W_2_2", "V_2_1") not in arr
        assert ("V_2_1", "W_2_2") not in arr

    def test_involution_random(self, rng):
        for _ in range(300):
            q = rand_quiver(rng, rng.randint(2, 5), rng.randint(0, 3))
            k = rng.randrange(q.n_mut)
            assert q.mutate(k).mutate(k) == q

    def test_skew_symmetry_preserved(self, rng):
        for _ in range(100):
            q = rand_quiver(rng, 4, 2)
            q2 = q.mutate(rng.randrange(4))
            Quiver(q2.n_mut, q2.n_frozen, q2.labels, q2.b)  # revalidates

    def test_matches_arrow_rule_oracle(self, rng):
        for t, l in [(DynkinType("A", 4), 1), (DynkinType("A", 2), 2),
                     (DynkinType("D", 4), 1)]:
            q = build_hl_quiver(t, l)
            for _ in range(25):
                k = rng.randrange(q.n_mut)
                expect = arrows_after_rule_mutation(q, k)
                q = q.mutate(k)
                got = {(s, d) for s, d, _ in q.arrows(include_frozen_pairs=False)}
                assert got == expect


class TestOpposite:
    def test_involutive(self, rng):
        q = rand_quiver(rng, 4, 2)
        assert q.opposite().opposite() == q

    def test_reverses_arrows(self):
        q = dynkin_quiver(DynkinType("A", 3))
        fwd = {(s, d) for s, d, _ in q.arrows()}
        rev = {(d, s) for s, d, _ in q.arrows()}
        assert {(s, d) for s, d, _ in q.opposite().arrows()} == rev != fwd


class TestSerialization:
    def test_roundtrip(self):
        q = build_hl_quiver(DynkinType("A", 4), 1)
        assert Quiver.from_json_dict(q.to_json_dict()) == q

    def test_principal_part(self):
        q = build_hl_quiver(DynkinType("A", 2), 1)
        pp = q.principal_part()
        assert pp.n_frozen == 0
        assert pp.b == dynkin_quiver(DynkinType("A", 2)).b


class TestIsomorphisms:
    def test_a3_linear_symmetry(self):
        q = dynkin_quiver(DynkinType("A", 3))
        # the bipartite A3 quiver 2->1, 2->3 has the flip 1<->3
        assert sorted(isomorphisms(q, q)) == [(0, 1, 2), (2, 1, 0)]

    def test_opposite_not_isomorphic_pointwise_a2(self):
        q = dynkin_quiver(DynkinType("A", 2))
        assert isomorphisms(q, q.opposite()) == [(1, 0)]

    def test_matches_brute_force(self, rng):
        for _ in range(40):
            q1 = rand_quiver(rng, rng.randint(2, 4), rng.randint(0, 2))
            perm = list(range(q1.n_mut))
            rng.shuffle(perm)
            fperm = list(range(q1.n_mut, q1.n_vertices))
            rng.shuffle(fperm)
            sigma = perm + fperm
            b2 = [[0] * q1.n_mut for _ in range(q1.n_vertices)]
            for i in range(q1.n_vertices):
                for k in range(q1.n_mut):
                    b2[sigma[i]][sigma[k]] = q1.b[i][k]
            q2 = Quiver(q1.n_mut, q1.n_frozen, q1.labels,
                        tuple(tuple(r) for r in b2))
            for setwise in (True, False):
                assert sorted(isomorphisms(q1, q2, setwise)) == sorted(
                    isomorphisms_brute(q1, q2, setwise)
                )

    def test_pointwise_fixes_frozen(self):
        q = build_hl_quiver(DynkinType("A", 2), 1)
        for sigma in isomorphisms(q, q, frozen_setwise=False):
            assert all(sigma[v] == v for v in range(q.n_mut, q.n_vertices))
