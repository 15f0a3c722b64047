"""Sylow subgroups, Sylow numbers, and the tau invariants.

Run with: python demos/02_sylow_tau_profiles.py
"""

from sylowlens import (alternating_group, dihedral_group, hall_admissible,
                       sylow_conjugate_count, sylow_number, sylow_subgroup,
                       symmetric_group, tau_group, tau_p_group, tau_profile)

S4 = symmetric_group(4)
A4 = alternating_group(4)
D8 = dihedral_group(8)

# A Sylow p-subgroup is grown by normalizer ascent from a p-element.
P = sylow_subgroup(S4, 2)
print("Sylow 2-subgroup of S4 has order", P.order())

# n_p(G) is the index of the normalizer; counting conjugates directly is the
# independent cross-check.
for p in (2, 3):
    print(f"n_{p}(S4) =", sylow_number(S4, p),
          " (conjugate count:", sylow_conjugate_count(S4, p), ")")

# tau_p(G) is the largest power of p appearing in any Sylow number of G.
print("\ntau profile of A4:", tau_profile(A4))
print("tau_2(A4) =", tau_p_group(A4, 2), "   (n_3(A4) = 4 = 2^2)")
print("tau_2(D8) =", tau_p_group(D8, 2), "   (a 2-group: all Sylow numbers 1)")
print("tau(S4)  =", tau_group(S4))

# Sylow numbers of solvable groups factor as prime powers q^a = 1 (mod p).
print("\nHall admissibility of n = 4 for p = 3:", hall_admissible(4, 3))
print("Hall admissibility of n = 6 for p = 5:", hall_admissible(6, 5))
