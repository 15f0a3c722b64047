"""Canonical subgroups and characteristic series.

Covers O_p, O_pi (largest normal pi-subgroup), O^pi (smallest normal
subgroup with pi-quotient), the derived and Fitting series, the lower
p-series, and the derived / Fitting / p-length invariants together with the
solvability and nilpotency predicates.

Non-solvability is reported as the distinct marker ``None`` (never an
exception) so corpus scans can record it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .group import Group, SubgroupHandle, quotient, subgroup_from_elements
from .lattice import all_subgroups, join, normal_closure
from .perm import Perm
from .sylow import factorize, p_part, sylow_subgroup


@dataclass
class SeriesStep:
    quotient_order: int
    classification: str  # "p-group" | "p'-group" | "abelian" | "nilpotent"


@dataclass
class SeriesRecord:
    """An ordered chain of subgroups with per-step quotient annotations.

    ``terms`` is descending for the derived and lower-p series and ascending
    for the Fitting series. ``terminates`` is False when the series
    stabilizes before reaching its endpoint (non-solvable input).
    """

    kind: str  # "derived" | "fitting" | "lower_p"
    terms: list[SubgroupHandle]
    steps: list[SeriesStep]
    prime: Optional[int] = None
    terminates: bool = True

    def orders(self) -> list[int]:
        return [t.order() for t in self.terms]


def commutator_subgroup(G: Group, H: SubgroupHandle, K: SubgroupHandle) -> SubgroupHandle:
    """[H, K]: the normal closure in G of the generator commutators."""
    comms = []
    for a in H.generators:
        a_inv = a.inverse()
        for b in K.generators:
            c = a_inv * b.inverse() * a * b
            if not c.is_identity():
                comms.append(c)
    if not comms:
        return G.trivial_subgroup()
    return normal_closure(G, comms)


def derived_subgroup(G: Group) -> SubgroupHandle:
    """The commutator subgroup of G."""
    whole = G.as_handle()
    return commutator_subgroup(G, whole, whole)


def derived_series(G: Group) -> SeriesRecord:
    """G >= G' >= G'' >= ... until it stabilizes."""
    if "derived_series" in G._cache:
        return G._cache["derived_series"]
    terms = [G.as_handle()]
    steps: list[SeriesStep] = []
    current = G
    while True:
        nxt = derived_subgroup(current)
        lifted = SubgroupHandle(G, nxt.generators, _trusted=True,
                                _group=nxt.group)
        if lifted.order() == terms[-1].order():
            break
        steps.append(SeriesStep(
            quotient_order=terms[-1].order() // lifted.order(),
            classification="abelian",
        ))
        terms.append(lifted)
        if lifted.order() == 1:
            break
        current = lifted.group
    record = SeriesRecord(kind="derived", terms=terms, steps=steps,
                          terminates=terms[-1].order() == 1)
    G._cache["derived_series"] = record
    return record


def derived_length(G: Group) -> Optional[int]:
    """Number of strict steps in the derived series; None when non-solvable.

    The derived series realizes the shortest abelian series, so this is the
    derived length. dl(trivial) = 0.
    """
    record = derived_series(G)
    if not record.terminates:
        return None
    return len(record.terms) - 1


def is_solvable(G: Group) -> bool:
    return derived_length(G) is not None


def o_p(G: Group, p: int) -> SubgroupHandle:
    """Largest normal p-subgroup: the intersection of the Sylow p-subgroups."""
    cache = G._cache.setdefault("o_p", {})
    if p in cache:
        return cache[p]
    P = sylow_subgroup(G, p)
    if P.order() == 1:
        cache[p] = G.trivial_subgroup()
        return cache[p]
    start = frozenset(x.images for x in P.element_set())
    seen = {start}
    queue = [start]
    common = set(start)
    while queue and len(common) > 1:
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
                common &= conj
    result = subgroup_from_elements(G, (Perm._raw(t) for t in common))
    cache[p] = result
    return result


def o_upper_pi(G: Group, pi: Iterable[int]) -> SubgroupHandle:
    """O^pi(G): smallest normal subgroup whose quotient is a pi-group.

    Realized as the normal closure of the Sylow q-subgroups for the primes
    q of |G| outside pi.
    """
    pi = set(pi)
    seeds: list[Perm] = []
    for q in G.prime_divisors():
        if q not in pi:
            seeds.extend(sylow_subgroup(G, q).generators)
    if not seeds:
        return G.trivial_subgroup()
    return normal_closure(G, seeds)


def lower_central_series_reaches_trivial(G: Group) -> bool:
    whole = G.as_handle()
    current = whole
    while True:
        nxt = commutator_subgroup(G, whole, current)
        if nxt.order() == current.order():
            return current.order() == 1
        current = nxt
        if current.order() == 1:
            return True


def is_nilpotent(G: Group) -> bool:
    """Whether the lower central series reaches the trivial subgroup."""
    if "nilpotent" not in G._cache:
        if G.is_abelian():
            G._cache["nilpotent"] = True
        else:
            G._cache["nilpotent"] = lower_central_series_reaches_trivial(G)
    return G._cache["nilpotent"]


def o_pi(G: Group, pi: Iterable[int]) -> SubgroupHandle:
    """Largest normal subgroup of G whose order is a pi-number.

    Computed from the normal-subgroup list of the lattice; nilpotent groups
    take the direct route (product of the Sylow q-subgroups, q in pi). Fails
    with ``CapExceeded`` above the lattice cap, by design.
    """
    pi = set(pi)
    primes = set(G.prime_divisors())
    if primes <= pi:
        return G.as_handle()
    if is_nilpotent(G):
        result = G.trivial_subgroup()
        for q in sorted(primes & pi):
            result = join(result, sylow_subgroup(G, q))
        return result
    result = G.trivial_subgroup()
    for N in all_subgroups(G).normal_subgroups():
        if all(q in pi for q, _ in factorize(N.order()).factors):
            result = join(result, N)
    return result


def lower_p_series(G: Group, p: int) -> SeriesRecord:
    """Alternately strip the largest p'-quotient and p-quotient off the top.

    The chain is G >= O^{p'}(G) >= O^{p',p}(G) >= ..., always starting with
    the O^{p'} step. When G is p-solvable it reaches 1; otherwise the record
    is returned with ``terminates`` False.
    """
    cache = G._cache.setdefault("lower_p_series", {})
    if p in cache:
        return cache[p]
    terms = [G.as_handle()]
    steps: list[SeriesStep] = []
    take_p_prime = True
    while terms[-1].order() > 1:
        current = terms[-1]
        if take_p_prime:
            nxt = o_upper_pi(current.group, {q for q in current.group.prime_divisors()
                                             if q != p})
            label = "p'-group"
        else:
            nxt = o_upper_pi(current.group, {p})
            label = "p-group"
        lifted = SubgroupHandle(G, nxt.generators, _trusted=True)
        ratio = current.order() // lifted.order()
        if ratio == 1 and not take_p_prime and len(steps) >= 1 \
                and steps[-1].quotient_order == 1:
            # a full p'/p round with no progress: stabilized above 1
            record = SeriesRecord(kind="lower_p", terms=terms, steps=steps,
                                  prime=p, terminates=False)
            cache[p] = record
            return record
        steps.append(SeriesStep(quotient_order=ratio, classification=label))
        terms.append(lifted)
        take_p_prime = not take_p_prime
    record = SeriesRecord(kind="lower_p", terms=terms, steps=steps, prime=p,
                          terminates=True)
    cache[p] = record
    return record


def is_p_solvable(G: Group, p: int) -> bool:
    """Whether the lower p-series of G terminates at the trivial subgroup."""
    return lower_p_series(G, p).terminates


def p_length(G: Group, p: int) -> int:
    """Number of nontrivial p-group quotients along the lower p-series.

    Raises ``ValueError`` when G is not p-solvable.
    """
    record = lower_p_series(G, p)
    if not record.terminates:
        raise ValueError(f"group is not {p}-solvable; p-length undefined")
    return sum(1 for s in record.steps
               if s.classification == "p-group" and s.quotient_order > 1)


def fitting_subgroup(G: Group) -> SubgroupHandle:
    """F(G): the join of O_p(G) over the primes p dividing |G|."""
    if "fitting" in G._cache:
        return G._cache["fitting"]
    result = G.trivial_subgroup()
    for p in G.prime_divisors():
        result = join(result, o_p(G, p))
    G._cache["fitting"] = result
    return result


def fitting_series(G: Group) -> SeriesRecord:
    """Ascending chain 1 <= F_1 <= F_2 <= ... with nilpotent quotients.

    F_1 = F(G) and F_{i+1} is the preimage of F(G / F_i). Stabilizes below G
    exactly when some nontrivial quotient has trivial Fitting subgroup, i.e.
    when G is not solvable.
    """
    if "fitting_series" in G._cache:
        return G._cache["fitting_series"]
    terms = [G.trivial_subgroup()]
    steps: list[SeriesStep] = []
    record = None
    while terms[-1].order() < G.order():
        kernel = terms[-1]
        if kernel.order() == 1:
            nxt = fitting_subgroup(G)
        else:
            q = quotient(G, kernel)
            f_image = fitting_subgroup(q.image)
            if f_image.order() == 1:
                record = SeriesRecord(kind="fitting", terms=terms, steps=steps,
                                      terminates=False)
                break
            nxt = q.preimage_subgroup(f_image)
        if nxt.order() == kernel.order():
            record = SeriesRecord(kind="fitting", terms=terms, steps=steps,
                                  terminates=False)
            break
        steps.append(SeriesStep(
            quotient_order=nxt.order() // kernel.order(),
            classification="nilpotent",
        ))
        terms.append(nxt)
    if record is None:
        record = SeriesRecord(kind="fitting", terms=terms, steps=steps,
                              terminates=True)
    G._cache["fitting_series"] = record
    return record


def fitting_length(G: Group) -> Optional[int]:
    """Length of the ascending Fitting series; None for non-solvable groups.

    F_l(trivial) = 0; F_l of a nontrivial nilpotent group is 1.
    """
    record = fitting_series(G)
    if not record.terminates:
        return None
    return len(record.terms) - 1


def is_p_nilpotent(G: Group, p: int) -> bool:
    """Whether G has a normal p-complement.

    Checks that the largest normal p'-subgroup accounts for the whole
    p'-part of |G|.
    """
    cache = G._cache.setdefault("p_nilpotent", {})
    if p in cache:
        return cache[p]
    order = G.order()
    co_part = order // p_part(order, p)
    complement = o_pi(G, {q for q in G.prime_divisors() if q != p})
    result = complement.order() == co_part
    cache[p] = result
    return result
