"""Sylow subgroups, Sylow numbers, and the integer tau / Hall layer.

For a positive integer n = p1^a1 ... pt^at, tau_p(n) is the exponent of p in
n and tau(n) is the largest exponent. For a group, tau_p(G) and tau(G) are
the maxima of those quantities over the Sylow numbers n_q(G), q running over
the prime divisors of |G|. The empty-max convention tau(1) = tau_p(1) = 0 is
forced by groups whose Sylow subgroups are all normal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .group import Group, SubgroupHandle
from .lattice import normalizer


@dataclass(frozen=True)
class FactorDecomposition:
    """Prime factorization with strictly increasing primes."""

    n: int
    factors: tuple[tuple[int, int], ...]


def factorize(n: int) -> FactorDecomposition:
    """Trial-division factorization; n = 1 has an empty factor list."""
    if n < 1:
        raise ValueError(f"factorize expects a positive integer, got {n}")
    factors = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            factors.append((p, a))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return FactorDecomposition(n=n, factors=tuple(factors))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factorize(n).factors == ((n, 1),)


def tau_p_int(p: int, n: int) -> int:
    """Exponent of the prime p in n (0 when p does not divide n)."""
    if n < 1:
        raise ValueError("tau_p is defined for positive integers")
    a = 0
    while n % p == 0:
        n //= p
        a += 1
    return a


def tau_int(n: int) -> int:
    """Largest exponent in the prime factorization of n; tau(1) = 0."""
    return max((a for _, a in factorize(n).factors), default=0)


def hall_admissible(n: int, p: int) -> bool:
    """Whether every prime-power factor q^a of n satisfies q^a = 1 (mod p).

    This is the shape every Sylow p-number of a solvable group must have;
    n = 1 is admissible.
    """
    return all(pow(q, a, p) == 1 % p for q, a in factorize(n).factors)


def p_part(n: int, p: int) -> int:
    return p ** tau_p_int(p, n)


def sylow_subgroup(G: Group, p: int) -> SubgroupHandle:
    """A Sylow p-subgroup of G, built by deterministic normalizer ascent.

    Starting from the cyclic group on the first p-element in canonical order,
    the current p-subgroup P is extended by the first p-power-order element
    of N_G(P) outside P; since that element normalizes P the extension is
    again a p-group. Returns the trivial subgroup when p does not divide |G|.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    cache = G._cache.setdefault("sylow", {})
    if p in cache:
        return cache[p]
    target = p_part(G.order(), p)
    if target == 1:
        handle = G.trivial_subgroup()
        cache[p] = handle
        return handle
    seed = next(x for x in G.elements()
                if not x.is_identity() and _is_p_power(x.order(), p))
    P = G.subgroup([seed])
    while P.order() < target:
        N = normalizer(G, P)
        members = P.element_set()
        ext = next(x for x in N.elements()
                   if x not in members and _is_p_power(x.order(), p))
        P = G.subgroup(list(P.generators) + [ext])
    cache[p] = P
    return P


def _is_p_power(n: int, p: int) -> bool:
    if n <= 1:
        return False
    while n % p == 0:
        n //= p
    return n == 1


def sylow_number(G: Group, p: int) -> int:
    """The Sylow p-number n_p(G) = |G : N_G(P)|; 1 when p does not divide |G|."""
    cache = G._cache.setdefault("sylow_number", {})
    if p in cache:
        return cache[p]
    if G.order() % p != 0:
        cache[p] = 1
        return 1
    if G.is_abelian():
        cache[p] = 1
        return 1
    P = sylow_subgroup(G, p)
    n = G.order() // normalizer(G, P).order()
    cache[p] = n
    return n


def sylow_conjugate_count(G: Group, p: int) -> int:
    """Number of distinct conjugates of a Sylow p-subgroup (dual oracle).

    Counts the orbit of the Sylow subgroup's element set under conjugation by
    the group generators; independent of the normalizer-index route.
    """
    if G.order() % p != 0:
        return 1
    P = sylow_subgroup(G, p)
    start = frozenset(x.images for x in P.element_set())
    seen = {start}
    queue = [start]
    while queue:
        cur = queue.pop(0)
        for g in G.generators:
            g_t, ginv_t = g.images, g.inverse().images
            conj = frozenset(
                tuple(map(g_t.__getitem__, map(t.__getitem__, ginv_t)))
                for t in cur
            )
            if conj not in seen:
                seen.add(conj)
                queue.append(conj)
    return len(seen)


@dataclass(frozen=True)
class TauProfile:
    """Per-prime Sylow data for one group."""

    group_order: int
    sylow_numbers: tuple[tuple[int, int], ...]  # (q, n_q) for q in pi(G)
    tau_of_group: int
    tau_p_of_group: tuple[tuple[int, int], ...]  # (p, tau_p(G)) for p in pi(G)

    def sylow_number_of(self, q: int) -> int:
        for prime, n in self.sylow_numbers:
            if prime == q:
                return n
        return 1

    def tau_p(self, p: int) -> int:
        for prime, value in self.tau_p_of_group:
            if prime == p:
                return value
        return max((tau_p_int(p, n) for _, n in self.sylow_numbers), default=0)


def tau_profile(G: Group) -> TauProfile:
    """Sylow numbers of G together with tau(G) and all tau_p(G)."""
    if "tau_profile" in G._cache:
        return G._cache["tau_profile"]
    primes = G.prime_divisors()
    numbers = tuple((q, sylow_number(G, q)) for q in primes)
    tau_g = max((tau_int(n) for _, n in numbers), default=0)
    tau_p_g = tuple(
        (p, max((tau_p_int(p, n) for _, n in numbers), default=0))
        for p in primes
    )
    profile = TauProfile(
        group_order=G.order(),
        sylow_numbers=numbers,
        tau_of_group=tau_g,
        tau_p_of_group=tau_p_g,
    )
    G._cache["tau_profile"] = profile
    return profile


def tau_group(G: Group) -> int:
    """tau(G) = max over q in pi(G) of tau(n_q(G))."""
    return tau_profile(G).tau_of_group


def tau_p_group(G: Group, p: int) -> int:
    """tau_p(G) = max over q in pi(G) of tau_p(n_q(G))."""
    return tau_profile(G).tau_p(p)
