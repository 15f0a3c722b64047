"""Property-based tests for the algebraic invariants."""

import random

from hypothesis import given, settings, strategies as st

from sylowlens.corpus import build_corpus
from sylowlens.group import Group, quotient
from sylowlens.lattice import all_subgroups, intersection, join, permutes
from sylowlens.perm import Perm
from sylowlens.sylow import (factorize, hall_admissible, sylow_number,
                             tau_int, tau_p_int)


def perms(degree):
    return st.permutations(list(range(degree))).map(Perm)


@given(perms(6), perms(6), perms(6))
def test_composition_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(perms(7))
def test_inverse_cancels(p):
    assert (p * p.inverse()).is_identity()
    assert (p.inverse() * p).is_identity()
    assert p.inverse().inverse() == p


@given(perms(6), perms(6))
def test_inverse_antihomomorphism(a, b):
    assert (a * b).inverse() == b.inverse() * a.inverse()


@given(perms(6))
def test_order_annihilates(p):
    assert (p ** p.order()).is_identity()


@given(st.integers(min_value=1, max_value=100000))
def test_factorize_reconstructs(n):
    fd = factorize(n)
    product = 1
    for p, a in fd.factors:
        product *= p ** a
    assert product == n
    primes = [p for p, _ in fd.factors]
    assert primes == sorted(set(primes))


@given(st.integers(min_value=1, max_value=100000),
       st.sampled_from([2, 3, 5, 7, 11]))
def test_tau_p_is_p_adic_valuation(n, p):
    a = tau_p_int(p, n)
    assert n % p ** a == 0
    assert n % p ** (a + 1) != 0
    assert tau_int(n) >= a


@given(st.integers(min_value=1, max_value=5000),
       st.sampled_from([2, 3, 5, 7]))
def test_hall_admissible_consistent_with_factors(n, p):
    expected = all(pow(q, a, p) == 1 % p for q, a in factorize(n).factors)
    assert hall_admissible(n, p) == expected


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_random_generated_groups_satisfy_lagrange(data):
    degree = data.draw(st.integers(min_value=2, max_value=5))
    k = data.draw(st.integers(min_value=1, max_value=2))
    gens = [data.draw(perms(degree)) for _ in range(k)]
    G = Group(degree, gens)
    if G.order() > 200:
        return
    rng = random.Random(data.draw(st.integers(0, 10)))
    els = G.elements()
    H = G.subgroup(rng.sample(els, min(2, len(els))))
    assert G.order() % H.order() == 0


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_sylow_congruence_on_random_groups(data):
    degree = data.draw(st.integers(min_value=3, max_value=5))
    gens = [data.draw(perms(degree)) for _ in range(2)]
    G = Group(degree, gens)
    for p in G.prime_divisors():
        n = sylow_number(G, p)
        assert n % p == 1


class TestCorpusProperties:
    """Deterministic property sweeps over a small corpus."""

    CORPUS = None

    @classmethod
    def corpus(cls):
        if cls.CORPUS is None:
            cls.CORPUS = build_corpus(20)
        return cls.CORPUS

    def test_order_equals_element_count(self):
        for G in self.corpus():
            assert G.chain.order() == len(G.elements()), G.name

    def test_quotient_order_product(self):
        for G in self.corpus():
            for N in all_subgroups(G).normal_subgroups():
                q = quotient(G, N)
                assert q.image.order() * N.order() == G.order(), G.name

    def test_permutes_symmetry_and_formula(self):
        rng = random.Random(3)
        for G in self.corpus():
            subs = all_subgroups(G).subgroups
            sample = rng.sample(subs, min(6, len(subs)))
            for H in sample:
                for K in sample:
                    lhs = permutes(H, K)
                    assert lhs == permutes(K, H)
                    if lhs:
                        inter = len(H.element_set() & K.element_set())
                        assert join(H, K).order() \
                            == H.order() * K.order() // inter

    def test_intersection_divides_gcd(self):
        import math

        rng = random.Random(9)
        for G in self.corpus():
            subs = all_subgroups(G).subgroups
            sample = rng.sample(subs, min(5, len(subs)))
            for H in sample:
                for K in sample:
                    m = intersection(H, K).order()
                    assert math.gcd(H.order(), K.order()) % m == 0

    def test_sylow_number_divides_coprime_part(self):
        from sylowlens.sylow import p_part

        for G in self.corpus():
            for p in G.prime_divisors():
                n = sylow_number(G, p)
                assert (G.order() // p_part(G.order(), p)) % n == 0, G.name

    def test_quotient_sylow_number_divides(self):
        for G in self.corpus():
            for N in all_subgroups(G).normal_subgroups():
                if N.order() in (1, G.order()):
                    continue
                img = quotient(G, N).image
                for q in img.prime_divisors():
                    assert sylow_number(G, q) % sylow_number(img, q) == 0, \
                        (G.name, N.order(), q)
