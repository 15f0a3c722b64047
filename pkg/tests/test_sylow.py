import math

import pytest

from sylowlens.corpus import (alternating_group, cyclic_group, dihedral_group,
                              direct_product, symmetric_group)
from sylowlens.sylow import (factorize, hall_admissible,
                             is_prime, p_part, sylow_conjugate_count,
                             sylow_number, sylow_subgroup, tau_group, tau_int,
                             tau_p_group, tau_p_int, tau_profile)


class TestFactorize:
    @pytest.mark.parametrize("n,expected", [
        (12, ((2, 2), (3, 1))),
        (1, ()),
        (360, ((2, 3), (3, 2), (5, 1))),
        (97, ((97, 1),)),
    ])
    def test_examples(self, n, expected):
        assert factorize(n).factors == expected

    def test_product_reconstructs(self):
        for n in range(1, 500):
            fd = factorize(n)
            assert math.prod(p ** a for p, a in fd.factors) == n
            assert all(is_prime(p) for p, _ in fd.factors)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            factorize(0)


class TestTauIntegers:
    def test_tau_p_examples(self):
        assert tau_p_int(2, 12) == 2
        assert tau_p_int(3, 12) == 1
        assert tau_p_int(5, 12) == 0

    def test_tau_examples(self):
        assert tau_int(12) == 2
        assert tau_int(1) == 0  # empty-max convention
        assert tau_int(360) == 3

    def test_tau_of_one(self):
        assert tau_p_int(2, 1) == 0
        assert tau_int(1) == 0


class TestHall:
    def test_examples(self):
        assert hall_admissible(4, 3)       # 4 = 1 mod 3
        assert not hall_admissible(6, 5)   # neither 2 nor 3 is 1 mod 5
        assert hall_admissible(1, 7)

    def test_sylow_congruence_implied(self):
        # admissible n automatically satisfies n = 1 (mod p)
        for n in range(1, 200):
            for p in (2, 3, 5):
                if hall_admissible(n, p):
                    assert n % p == 1 % p


class TestSylowSubgroup:
    def test_s4_sylow2_is_order_8_nonabelian(self, s4):
        P = sylow_subgroup(s4, 2)
        assert P.order() == 8
        assert not P.group.is_abelian()

    def test_p_not_dividing_gives_trivial(self, s4):
        assert sylow_subgroup(s4, 5).order() == 1

    def test_cyclic12_sylow2(self):
        P = sylow_subgroup(cyclic_group(12), 2)
        assert P.order() == 4

    def test_order_is_full_p_part(self):
        for G in (symmetric_group(4), symmetric_group(5), dihedral_group(24),
                  alternating_group(5),
                  direct_product(symmetric_group(3), cyclic_group(4))):
            for p in G.prime_divisors():
                P = sylow_subgroup(G, p)
                assert P.order() == p_part(G.order(), p), (G.name, p)

    def test_deterministic(self, s5):
        P1 = sylow_subgroup(s5, 2)
        import sylowlens.corpus as corpus

        P2 = sylow_subgroup(corpus.symmetric_group(5), 2)
        assert P1.element_set() == P2.element_set()

    def test_rejects_composite(self, s4):
        with pytest.raises(ValueError):
            sylow_subgroup(s4, 6)


class TestSylowNumber:
    def test_s4(self, s4):
        assert sylow_number(s4, 2) == 3
        assert sylow_number(s4, 3) == 4

    def test_a4(self, a4):
        assert sylow_number(a4, 2) == 1
        assert sylow_number(a4, 3) == 4

    def test_abelian_all_one(self):
        G = cyclic_group(30)
        for p in (2, 3, 5):
            assert sylow_number(G, p) == 1

    def test_a5(self, a5):
        assert sylow_number(a5, 2) == 5
        assert sylow_number(a5, 3) == 10
        assert sylow_number(a5, 5) == 6

    def test_congruence_and_divisibility(self):
        for G in (symmetric_group(4), symmetric_group(5),
                  alternating_group(5), dihedral_group(30)):
            for p in G.prime_divisors():
                n = sylow_number(G, p)
                assert n % p == 1
                assert (G.order() // p_part(G.order(), p)) % n == 0

    def test_normalizer_index_equals_conjugate_count(self):
        # the spec's dual oracle
        for G in (symmetric_group(4), symmetric_group(5),
                  alternating_group(5), dihedral_group(20),
                  direct_product(symmetric_group(3), symmetric_group(3))):
            for p in G.prime_divisors():
                assert sylow_number(G, p) == sylow_conjugate_count(G, p), \
                    (G.name, p)


class TestTauProfile:
    def test_remark_values(self, a4):
        D8 = dihedral_group(8)
        assert tau_p_group(a4, 2) == 2
        assert tau_p_group(D8, 2) == 0

    def test_tau_s4(self, s4):
        # n_2 = 3 and n_3 = 4, so tau = max(tau(3), tau(4)) = 2
        assert tau_group(s4) == 2

    def test_abelian_tau_zero(self):
        assert tau_group(cyclic_group(60)) == 0
        assert tau_p_group(cyclic_group(60), 2) == 0

    def test_profile_consistency(self, s4):
        prof = tau_profile(s4)
        assert prof.group_order == 24
        assert dict(prof.sylow_numbers) == {2: 3, 3: 4}
        assert prof.tau_of_group == max(
            tau_int(n) for _, n in prof.sylow_numbers
        )
        for p, value in prof.tau_p_of_group:
            assert value == max(tau_p_int(p, n) for _, n in prof.sylow_numbers)

    def test_tau_zero_iff_nilpotent(self):
        from sylowlens.series import is_nilpotent

        for G in (symmetric_group(4), dihedral_group(8), cyclic_group(36),
                  alternating_group(4), dihedral_group(12),
                  direct_product(dihedral_group(8), cyclic_group(3))):
            all_normal = all(sylow_number(G, q) == 1
                             for q in G.prime_divisors())
            assert (tau_group(G) == 0) == all_normal == is_nilpotent(G), G.name
