"""The exact-arithmetic bound checks, and scans over a generated corpus.

Run with: python demos/05_bound_checks_and_scans.py
"""

from sylowlens import (Perm, build_corpus, conjecture_1_4_scan, hall_check,
                       lemma_2_7_check, scan_corpus, symmetric_group,
                       thm_1_1_check, thm_1_2a_check, thm_1_2b_check,
                       zhang_p_nilpotency_check)

S4 = symmetric_group(4)
A4 = S4.subgroup([Perm([1, 2, 0, 3]), Perm([0, 2, 3, 1])], name="A4")
D8 = S4.subgroup([Perm([1, 2, 3, 0]), Perm([2, 1, 0, 3])], name="D8")

# p-length bound: l_p(G) <= 1 + max(tau_p(A), tau_p(B)) / 2, compared as
# 2 (l_p - 1) <= max tau_p in exact integers. S4 is an equality instance.
v = thm_1_1_check(S4, A4, D8, 2)
print("p-length bound on S4:", v.display, "->", "holds" if v.holds else "FAILS",
      "(equality)" if v.is_equality else "")

# Fitting and Frattini-quotient derived-length bounds, logarithms cleared.
print("Fitting bound:", thm_1_2a_check(S4, A4, D8).display)
print("derived bound:", thm_1_2b_check(S4, A4, D8).display)

# Single-group claims.
print("\nsingle-group checks on S4:")
print("  ", lemma_2_7_check(S4, 2).display)
for v in hall_check(S4):
    print("  ", v.display)
for v in zhang_p_nilpotency_check(S4):
    print("  ", v.display)

# A corpus scan runs every requested claim over every mutually permutable
# factorization of every generated group and tallies the verdicts.
corpus = build_corpus(30)
result = scan_corpus(corpus, description="demo corpus, max_order=30")
print(f"\nscan over {len(corpus)} groups:", result.stats)
print("per claim:", {k: (v['checked'], v['failed'])
                     for k, v in result.claim_stats.items()})

# The unconditional p-length bound: search for violations (none expected)
# and collect the instances where the bound is tight.
conj = conjecture_1_4_scan(corpus, description="demo conjecture scan")
print("\nconjecture scan:", conj.stats)
tight = [e for e in conj.equality_instances if (e["lhs"] or 0) >= 2]
print("nontrivially tight instances:", tight if tight else "none at this size")
