"""Characteristic series and the three length invariants.

Run with: python demos/03_series_and_lengths.py
"""

from sylowlens import (alternating_group, derived_length, derived_series,
                       fitting_length, fitting_series, fitting_subgroup,
                       is_p_nilpotent, is_p_solvable, is_solvable,
                       lower_p_series, o_p, o_upper_pi, p_length,
                       symmetric_group)

S4 = symmetric_group(4)
S3 = symmetric_group(3)
A5 = alternating_group(5)

# Derived series: S4 > A4 > V4 > 1, so dl(S4) = 3.
print("derived series of S4:", derived_series(S4).orders())
print("dl(S3) =", derived_length(S3), "  dl(S4) =", derived_length(S4))
print("dl(A5) =", derived_length(A5), "  (None marks non-solvable)")

# The lower 2-series of S4 alternates maximal 2'- and 2-quotients.
record = lower_p_series(S4, 2)
print("\nlower 2-series of S4:", record.orders())
for step in record.steps:
    print("   quotient of order", step.quotient_order, "-", step.classification)
print("l_2(S4) =", p_length(S4, 2), "  l_3(S4) =", p_length(S4, 3))

# O_p is the Sylow intersection, O^{pi} the normal closure of the
# complementary Sylow subgroups.
print("\nO_2(S4) order:", o_p(S4, 2).order())
print("O^{2'}(S4) order:", o_upper_pi(S4, {3}).order())

# Fitting series: V4 < A4 < S4, so the Fitting length is 3.
print("\nF(S4) order:", fitting_subgroup(S4).order())
print("fitting series of S4:", fitting_series(S4).orders())
print("F_l(S3) =", fitting_length(S3), "  F_l(S4) =", fitting_length(S4))

# Solvability predicates; A5 is 7-solvable only because 7 does not divide 60.
print("\nsolvable:", {"S4": is_solvable(S4), "A5": is_solvable(A5)})
print("A5 2-solvable:", is_p_solvable(A5, 2),
      " 7-solvable:", is_p_solvable(A5, 7))
print("S3 2-nilpotent:", is_p_nilpotent(S3, 2),
      " S4 2-nilpotent:", is_p_nilpotent(S4, 2))
