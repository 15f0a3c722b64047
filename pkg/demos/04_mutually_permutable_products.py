"""Mutually permutable factorizations and the structural lemma suite.

G = AB is mutually permutable when A permutes with every subgroup of B and
B with every subgroup of A. Run with:
python demos/04_mutually_permutable_products.py
"""

from sylowlens import (Perm, alternating_group, bea_lemma_suite,
                       find_factorizations, is_mutually_permutable,
                       lemma_2_6_check, symmetric_group)
from sylowlens.corpus import semidirect_c3c3_c2

S4 = symmetric_group(4)
A4 = S4.subgroup([Perm([1, 2, 0, 3]), Perm([0, 2, 3, 1])], name="A4")
D8 = S4.subgroup([Perm([1, 2, 3, 0]), Perm([2, 1, 0, 3])], name="D8")

w = is_mutually_permutable(S4, A4, D8)
print("S4 = A4 * D8 mutually permutable:", w.holds,
      f"({w.pairs_checked} subgroup pairs checked)")

# Exhaustive search over the subgroup lattice finds every covering pair.
print("\nmutually permutable factorizations of S4:")
for witness in find_factorizations(S4, require_mut_perm=True):
    tag = " (trivial)" if witness.is_trivial else ""
    print(f"   |A| = {witness.a.order():3d}  |B| = {witness.b.order():3d}{tag}")

# A negative example: A5 = A4 * C5 covers but is not mutually permutable.
A5 = alternating_group(5)
A4_in_5 = A5.subgroup([Perm([1, 2, 0, 3, 4]), Perm([0, 2, 3, 1, 4])], name="A4")
C5 = A5.subgroup([Perm([1, 2, 3, 4, 0])], name="C5")
neg = is_mutually_permutable(A5, A4_in_5, C5)
side, bad = neg.counterexample
print(f"\nA5 = A4 * C5: covers = {neg.product_covers}, holds = {neg.holds}")
print(f"   first violation: factor {side} does not permute with a subgroup "
      f"of order {bad.order()}")

# The structural facts about mutually permutable products, checked on the
# S4 instance: quotient stability, core product nontriviality, minimal
# normal intersections, and closure under subgroup intersections.
print("\nlemma suite on S4 = A4 * D8:")
for verdict in bea_lemma_suite(S4, A4, D8):
    print(f"   {verdict.claim_id}: {'ok' if verdict.holds else 'FAILED'}")

# The split-extension index identity |H : N_H(Q)| = |G : A N_G(Q)|.
G = semidirect_c3c3_c2()
A = G.subgroup([Perm([1, 2, 0, 3, 4, 5]), Perm([0, 1, 2, 4, 5, 3])])
H = G.subgroup([Perm([0, 2, 1, 3, 5, 4])])
v = lemma_2_6_check(G, A, H, 2)
print(f"\n(C3xC3):C2 index identity: {v.display} -> {v.holds}")
