import math

import pytest

from sylowlens.corpus import (alternating_group, build_corpus,
                              c7_c3, construct_named, cyclic_group,
                              dihedral_group, direct_product,
                              elementary_abelian_group, frobenius_20,
                              regular_from_multiplication_table,
                              semidirect_c3c3_c2, semidirect_from_generators,
                              symmetric_group)
from sylowlens.perm import Perm
from sylowlens.sylow import sylow_number


class TestNamedConstructors:
    def test_symmetric_orders(self):
        for n in range(1, 8):
            assert symmetric_group(n).order() == math.factorial(n), n

    def test_alternating_orders(self):
        for n in range(3, 8):
            assert alternating_group(n).order() == math.factorial(n) // 2, n

    def test_alternating_is_even(self):
        A6 = alternating_group(6)
        for g in A6.generators:
            moved = len(g.images) - sum(1 for c in g.cycles() for _ in c)
            sign = (-1) ** sum(len(c) - 1 for c in g.cycles())
            assert sign == 1

    def test_cyclic(self):
        assert cyclic_group(1).order() == 1
        assert cyclic_group(12).order() == 12
        assert cyclic_group(12).is_abelian()

    def test_dihedral(self):
        D8 = dihedral_group(8)
        assert D8.order() == 8
        assert not D8.is_abelian()
        assert sylow_number(D8, 2) == 1  # it is its own Sylow 2-subgroup
        assert dihedral_group(4).order() == 4
        assert dihedral_group(4).is_abelian()  # Klein four-group
        with pytest.raises(ValueError):
            dihedral_group(7)

    def test_elementary_abelian(self):
        E = elementary_abelian_group(3, 2)
        assert E.order() == 9
        assert E.exponent() == 3
        with pytest.raises(ValueError):
            elementary_abelian_group(4, 2)

    def test_direct_product(self):
        G = direct_product(cyclic_group(3), cyclic_group(3))
        assert G.order() == 9
        assert G.is_abelian()
        H = direct_product(symmetric_group(3), cyclic_group(5))
        assert H.order() == 30

    def test_semidirect_18(self):
        G = semidirect_c3c3_c2()
        assert G.order() == 18
        assert not G.is_abelian()

    def test_semidirect_order_assertion(self):
        with pytest.raises(ValueError):
            semidirect_from_generators(3, [Perm([1, 2, 0])], expected_order=6)

    def test_fixture_groups(self):
        assert frobenius_20().order() == 20
        assert c7_c3().order() == 21

    def test_regular_from_table_cyclic(self):
        n = 5
        table = [[(i + j) % n for j in range(n)] for i in range(n)]
        G = regular_from_multiplication_table(table)
        assert G.order() == 5
        assert G.is_abelian()

    def test_regular_from_table_rejects_non_associative(self):
        table = [[0, 1, 2], [1, 2, 0], [2, 1, 0]]  # not a group
        with pytest.raises(ValueError):
            regular_from_multiplication_table(table)

    def test_regular_from_table_rejects_bad_identity(self):
        table = [[1, 0], [0, 1]]
        with pytest.raises(ValueError):
            regular_from_multiplication_table(table)

    def test_construct_named_dispatch(self):
        assert construct_named("symmetric", 4).order() == 24
        assert construct_named("cyclic", 6).order() == 6
        assert construct_named("dihedral", 10).order() == 10
        assert construct_named("elementary_abelian", 2, 3).order() == 8
        with pytest.raises(ValueError):
            construct_named("sporadic", 1)


class TestBuildCorpus:
    def test_max_order_one(self):
        corpus = build_corpus(1)
        assert len(corpus) == 1
        assert corpus[0].order() == 1

    def test_contains_required_groups_at_24(self):
        names = {g.name for g in build_corpus(24)}
        for wanted in ("S3", "S4", "A4", "D8"):
            assert wanted in names, names
        orders = {g.order() for g in build_corpus(24)}
        assert orders == set(range(1, 25))

    def test_alternating_only_includes_a5(self):
        corpus = build_corpus(60, families={"alternating"})
        assert [g.name for g in corpus] == ["A4", "A5"]

    def test_products_present(self):
        names = {g.name for g in build_corpus(24)}
        assert any("x" in n for n in names)

    def test_deterministic(self):
        c1 = build_corpus(36)
        c2 = build_corpus(36)
        assert [(g.name, g.order()) for g in c1] \
            == [(g.name, g.order()) for g in c2]
        assert [[p.images for p in g.generators] for g in c1] \
            == [[p.images for p in g.generators] for g in c2]

    def test_respects_max_order(self):
        assert all(g.order() <= 30 for g in build_corpus(30))

    def test_no_duplicate_fingerprints_unless_histogram_differs(self):
        corpus = build_corpus(36)
        seen = {}
        for g in corpus:
            fp = (g.order(), g.is_abelian(), g.exponent())
            seen.setdefault(fp, []).append(g)
        from sylowlens.corpus import _order_histogram

        for fp, members in seen.items():
            if len(members) > 1:
                hists = {_order_histogram(g) for g in members}
                assert len(hists) == len(members), fp

    def test_sorted_by_order(self):
        corpus = build_corpus(40)
        orders = [g.order() for g in corpus]
        assert orders == sorted(orders)
