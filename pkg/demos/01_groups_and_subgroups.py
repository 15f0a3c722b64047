"""Tour of the permutation-group core: groups, subgroups, quotients.

Run with: python demos/01_groups_and_subgroups.py
"""

from sylowlens import (Perm, all_subgroups, core, frattini,
                       minimal_normal_subgroups, normalizer, quotient,
                       symmetric_group)

# The symmetric group on four points, generated by a 4-cycle and a swap.
S4 = symmetric_group(4)
print("S4:", S4, "order", S4.order())
print("generators:", S4.generators)

# Membership goes through the stabilizer chain, no enumeration needed.
print("(0 1 2 3) in S4:", S4.contains(Perm.from_cycles(4, [[0, 1, 2, 3]])))

# Subgroups are handles inside an ambient group; identity is the element set.
A4 = S4.subgroup([Perm([1, 2, 0, 3]), Perm([0, 2, 3, 1])], name="A4")
D8 = S4.subgroup([Perm([1, 2, 3, 0]), Perm([2, 1, 0, 3])], name="D8")
print("\nA4:", A4, "normal:", A4.is_normal())
print("D8:", D8, "normal:", D8.is_normal())

# The full subgroup lattice of S4 has exactly 30 members.
lattice = all_subgroups(S4)
orders = {}
for H in lattice.subgroups:
    orders[H.order()] = orders.get(H.order(), 0) + 1
print("\nS4 has", len(lattice), "subgroups; count by order:", orders)
print("maximal subgroup orders:",
      sorted(m.order() for m in lattice.maximal_subgroups()))
print("Frattini subgroup order:", frattini(S4).order())
print("minimal normal subgroups:",
      [m.order() for m in minimal_normal_subgroups(S4)])

# Normalizers are brute force over the ambient elements, fine at this scale.
C3 = S4.subgroup([Perm([1, 2, 0, 3])], name="C3")
print("\n|N_S4(C3)| =", normalizer(S4, C3).order())
print("core of D8 in S4 has order", core(S4, D8).order())

# Quotients are realized as coset actions; for V4 the image is Sym(3).
V4 = S4.subgroup([Perm([1, 0, 3, 2]), Perm([2, 3, 0, 1])], name="V4")
q = quotient(S4, V4)
print("\nS4/V4: order", q.image.order(), "abelian:", q.image.is_abelian())
x = Perm.from_cycles(4, [[0, 1]])
print("projection of (0 1):", q.project(x))
