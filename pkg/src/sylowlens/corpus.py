"""Named group constructors and deterministic corpus generation.

The corpus is family-generated (cyclic, dihedral, symmetric, alternating,
elementary abelian, pairwise direct products), deduplicated by the coarse
fingerprint (order, abelianness, exponent). It is a desk-scale stand-in for
"all small groups": completeness up to isomorphism is explicitly not claimed.
"""

from __future__ import annotations

import math
from typing import Iterable, Optional, Sequence

from .group import Group
from .perm import Perm

# Parameter guards keeping corpus generation affordable: single cyclic and
# dihedral groups are generated up to this order, and direct-product factors
# are drawn from singles no larger than _PRODUCT_FACTOR_CAP.
_LINEAR_FAMILY_CAP = 360
_PRODUCT_FACTOR_CAP = 72


def cyclic_group(n: int) -> Group:
    if n < 1:
        raise ValueError(f"cyclic group needs n >= 1, got {n}")
    if n == 1:
        return Group(1, [], name="C1")
    cycle = Perm._raw(tuple(list(range(1, n)) + [0]))
    return Group(n, [cycle], name=f"C{n}")


def symmetric_group(n: int) -> Group:
    if n < 1:
        raise ValueError(f"symmetric group needs n >= 1, got {n}")
    if n == 1:
        return Group(1, [], name="S1")
    if n == 2:
        return Group(2, [Perm._raw((1, 0))], name="S2")
    cycle = Perm._raw(tuple(list(range(1, n)) + [0]))
    swap = Perm._raw(tuple([1, 0] + list(range(2, n))))
    return Group(n, [cycle, swap], name=f"S{n}")


def alternating_group(n: int) -> Group:
    if n < 1:
        raise ValueError(f"alternating group needs n >= 1, got {n}")
    if n <= 2:
        return Group(max(n, 1), [], name=f"A{n}")
    if n == 3:
        return Group(3, [Perm._raw((1, 2, 0))], name="A3")
    three_cycle = Perm._raw(tuple([1, 2, 0] + list(range(3, n))))
    if n % 2 == 1:
        big = Perm._raw(tuple(list(range(1, n)) + [0]))
    else:
        big = Perm._raw(tuple([0] + list(range(2, n)) + [1]))
    return Group(n, [three_cycle, big], name=f"A{n}")


def dihedral_group(order: int) -> Group:
    """Dihedral group of the given (even) order on order/2 points.

    Order 4 is realized as the Klein four-group on four points.
    """
    if order < 4 or order % 2 != 0:
        raise ValueError(f"dihedral order must be even and >= 4, got {order}")
    n = order // 2
    if n == 2:
        return Group(4, [Perm._raw((1, 0, 2, 3)), Perm._raw((0, 1, 3, 2))],
                     name="D4")
    rotation = Perm._raw(tuple(list(range(1, n)) + [0]))
    reflection = Perm._raw(tuple((n - i) % n for i in range(n)))
    return Group(n, [rotation, reflection], name=f"D{order}")


def elementary_abelian_group(p: int, k: int) -> Group:
    """(C_p)^k on p*k points."""
    from .sylow import is_prime

    if not is_prime(p) or k < 1:
        raise ValueError(f"elementary abelian needs a prime p and k >= 1")
    gens = []
    degree = p * k
    for block in range(k):
        images = list(range(degree))
        for i in range(p):
            images[block * p + i] = block * p + (i + 1) % p
        gens.append(Perm._raw(tuple(images)))
    return Group(degree, gens, name=f"E{p}^{k}")


def direct_product(*factors: Group, name: Optional[str] = None) -> Group:
    """Direct product acting on the disjoint union of the factors' points."""
    if not factors:
        raise ValueError("direct product needs at least one factor")
    degree = sum(f.degree for f in factors)
    gens = []
    offset = 0
    for f in factors:
        for g in f.generators:
            images = list(range(degree))
            for i, j in enumerate(g.images):
                images[offset + i] = offset + j
            gens.append(Perm._raw(tuple(images)))
        offset += f.degree
    label = name or "x".join(f.name or "?" for f in factors)
    return Group(degree, gens, name=label)


def semidirect_from_generators(degree: int, gens: Iterable,
                               expected_order: Optional[int] = None,
                               name: Optional[str] = None) -> Group:
    """Group from explicit generators, with an optional order assertion.

    Used for split extensions given concretely, e.g. (C3 x C3) : C2 with the
    inverting involution.
    """
    G = Group(degree, [g if isinstance(g, Perm) else Perm(g) for g in gens],
              name=name)
    if expected_order is not None and G.order() != expected_order:
        raise ValueError(
            f"generators give order {G.order()}, expected {expected_order}"
        )
    return G


def regular_from_multiplication_table(table: Sequence[Sequence[int]],
                                      name: Optional[str] = None) -> Group:
    """The right regular representation of a group given by its table.

    ``table[i][j]`` is the product i*j with 0 as the identity. Associativity,
    the identity row/column and bijectivity are all verified.
    """
    n = len(table)
    if n < 1:
        raise ValueError("empty multiplication table")
    for i, row in enumerate(table):
        if len(row) != n or sorted(row) != list(range(n)):
            raise ValueError(f"row {i} is not a permutation of 0..{n - 1}")
        if table[0][i] != i or table[i][0] != i:
            raise ValueError("element 0 must be the identity")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise ValueError(
                        f"table is not associative at ({a}, {b}, {c})"
                    )
    gens = [Perm._raw(tuple(table[x][g] for x in range(n))) for g in range(n)]
    G = Group(n, gens, name=name or f"T{n}")
    if G.order() != n:
        raise ValueError("table does not describe a group")
    return G


def mod_multiplication_action(n: int, multiplier: int) -> Perm:
    """The permutation x -> multiplier * x (mod n) of {0, .., n-1}."""
    if math.gcd(multiplier, n) != 1:
        raise ValueError(f"{multiplier} is not invertible mod {n}")
    return Perm._raw(tuple((multiplier * x) % n for x in range(n)))


def semidirect_c3c3_c2() -> Group:
    """(C3 x C3) : C2 with the complement inverting both factors; order 18."""
    a = Perm._raw((1, 2, 0, 3, 4, 5))
    b = Perm._raw((0, 1, 2, 4, 5, 3))
    t = Perm._raw((0, 2, 1, 3, 5, 4))
    return semidirect_from_generators(6, [a, b, t], expected_order=18,
                                      name="(C3xC3):C2")


def frobenius_20() -> Group:
    """C5 : C4 acting faithfully; order 20 on 5 points."""
    return semidirect_from_generators(
        5, [Perm._raw((1, 2, 3, 4, 0)), mod_multiplication_action(5, 2)],
        expected_order=20, name="F20")


def c7_c3() -> Group:
    """C7 : C3 (the nonabelian group of order 21) on 7 points."""
    return semidirect_from_generators(
        7, [Perm._raw((1, 2, 3, 4, 5, 6, 0)), mod_multiplication_action(7, 2)],
        expected_order=21, name="C7:C3")


FAMILIES = ("cyclic", "dihedral", "symmetric", "alternating",
            "elementary_abelian", "direct_product",
            "semidirect_from_generators", "regular_from_multiplication_table")


def construct_named(family: str, *params) -> Group:
    """Dispatch on a family name; see ``FAMILIES`` for the supported set."""
    if family == "cyclic":
        return cyclic_group(*params)
    if family == "dihedral":
        return dihedral_group(*params)
    if family == "symmetric":
        return symmetric_group(*params)
    if family == "alternating":
        return alternating_group(*params)
    if family == "elementary_abelian":
        return elementary_abelian_group(*params)
    if family == "direct_product":
        return direct_product(*params)
    if family == "semidirect_from_generators":
        return semidirect_from_generators(*params)
    if family == "regular_from_multiplication_table":
        return regular_from_multiplication_table(*params)
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def _order_histogram(G: Group) -> tuple[tuple[int, int], ...]:
    counts: dict[int, int] = {}
    for x in G.elements():
        o = x.order()
        counts[o] = counts.get(o, 0) + 1
    return tuple(sorted(counts.items()))


def build_corpus(max_order: int, families: Optional[Iterable[str]] = None
                 ) -> list[Group]:
    """Deterministic family-generated corpus up to ``max_order``.

    Groups are deduplicated by (order, abelianness, exponent); buckets that
    collide on that coarse fingerprint are split further by element-order
    histogram, so non-isomorphic named groups (A4 vs D12, S4 vs D24) all
    survive. Families are seeded in priority order, so the symmetric and
    alternating representatives win their buckets. The result is sorted by
    (order, name). Cyclic and dihedral parameters are additionally capped at
    order 360, and direct-product factors at order 72, to keep generation
    affordable; both guards are irrelevant below those sizes.
    """
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    wanted = set(families) if families is not None else set(FAMILIES)
    singles: list[Group] = []
    if "symmetric" in wanted:
        n = 3
        while math.factorial(n) <= max_order:
            singles.append(symmetric_group(n))
            n += 1
    if "alternating" in wanted:
        n = 4
        while math.factorial(n) // 2 <= max_order:
            singles.append(alternating_group(n))
            n += 1
    if "dihedral" in wanted:
        for order in range(4, min(max_order, _LINEAR_FAMILY_CAP) + 1, 2):
            singles.append(dihedral_group(order))
    if "elementary_abelian" in wanted:
        for p in (2, 3, 5, 7, 11):
            k = 2
            while p ** k <= max_order:
                singles.append(elementary_abelian_group(p, k))
                k += 1
    if "cyclic" in wanted:
        for n in range(1, min(max_order, _LINEAR_FAMILY_CAP) + 1):
            singles.append(cyclic_group(n))

    groups = list(singles)
    if "direct_product" in wanted:
        factors = [g for g in singles
                   if 1 < g.order() <= min(_PRODUCT_FACTOR_CAP, max_order)]
        for i, a in enumerate(factors):
            for b in factors[i:]:
                if a.order() * b.order() <= max_order:
                    groups.append(direct_product(a, b))

    buckets: dict[tuple, list[Group]] = {}
    for g in groups:
        buckets.setdefault((g.order(), g.is_abelian(), g.exponent()), []).append(g)
    out: list[Group] = []
    for members in buckets.values():
        if len(members) == 1:
            out.append(members[0])
            continue
        by_histogram: dict[tuple, Group] = {}
        for g in members:
            hist = _order_histogram(g)
            if hist not in by_histogram:
                by_histogram[hist] = g
        out.extend(by_histogram.values())
    out.sort(key=lambda g: (g.order(), g.name or ""))
    return out
