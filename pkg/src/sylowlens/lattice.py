"""Subgroup-level operations and full subgroup-lattice enumeration.

Normalizers and centralizers are brute force over the ambient element list;
that is the documented scaling bottleneck and is adequate at desk scale.
Subgroup identity is always the element set, never a generator list.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from . import config
from .config import CapExceeded
from .group import (Group, SubgroupHandle, _mulclose, _shared_subgroup_group,
                    subgroup_from_elements)
from .perm import Perm


def _require_same_ambient(H: SubgroupHandle, K: SubgroupHandle) -> Group:
    if H.ambient is not K.ambient:
        raise ValueError("subgroups live in different ambient groups")
    return H.ambient


def _divisors(n: int) -> list[int]:
    small, large = [], []
    for d in range(1, int(math.isqrt(n)) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def intersection(H: SubgroupHandle, K: SubgroupHandle) -> SubgroupHandle:
    """The subgroup of elements lying in both H and K."""
    G = _require_same_ambient(H, K)
    h_set, k_set = H.element_set(), K.element_set()
    cache = G._cache.setdefault("meet", {})
    pair = (h_set, k_set) if len(h_set) <= len(k_set) else (k_set, h_set)
    hit = cache.get(pair)
    if hit is not None:
        return hit
    if h_set <= k_set:
        result = H
    elif k_set <= h_set:
        result = K
    else:
        result = subgroup_from_elements(G, h_set & k_set)
    cache[pair] = result
    return result


def intersection_order(H: SubgroupHandle, K: SubgroupHandle) -> int:
    _require_same_ambient(H, K)
    return len(H.element_set() & K.element_set())


def join(H: SubgroupHandle, K: SubgroupHandle) -> SubgroupHandle:
    """The subgroup generated by H and K together."""
    G = _require_same_ambient(H, K)
    h_set, k_set = H.element_set(), K.element_set()
    cache = G._cache.setdefault("join", {})
    pair = (h_set, k_set) if len(h_set) <= len(k_set) else (k_set, h_set)
    hit = cache.get(pair)
    if hit is not None:
        return hit
    if h_set <= k_set:
        cache[pair] = K
        return K
    if k_set <= h_set:
        cache[pair] = H
        return H

    order_g = G.order()
    product_size = len(h_set) * len(k_set) // len(h_set & k_set)
    lower = math.lcm(len(h_set), len(k_set))
    candidates = [d for d in _divisors(order_g)
                  if d % lower == 0 and d >= product_size]
    if candidates == [order_g]:
        # Lagrange leaves no room below the whole group
        result = G.as_handle()
    else:
        gens = list(H.generators) + list(K.generators)
        closed = _mulclose(G.degree, [g.images for g in gens],
                           seed=(p.images for p in h_set | k_set))
        if len(closed) == order_g:
            result = G.as_handle()
        else:
            ordered = tuple(Perm._raw(t) for t in sorted(closed))
            grp = _shared_subgroup_group(G, gens, ordered)
            result = SubgroupHandle(G, grp.generators, _trusted=True,
                                    _group=grp)
    cache[pair] = result
    return result


def permutes(H: SubgroupHandle, K: SubgroupHandle) -> bool:
    """Whether the set product HK equals KH, i.e. HK is a subgroup.

    Equivalent to |<H, K>| == |H||K| / |H n K|; computed here by checking the
    product set for inverse closure, which is the cheaper certificate.
    """
    G = _require_same_ambient(H, K)
    if G.is_abelian():
        return True
    h_set, k_set = H.element_set(), K.element_set()
    cache = G._cache.setdefault("permutes", {})
    pair = (h_set, k_set) if len(h_set) <= len(k_set) else (k_set, h_set)
    hit = cache.get(pair)
    if hit is not None:
        return hit
    if H.is_whole_group() or K.is_whole_group() \
            or h_set <= k_set or k_set <= h_set \
            or H.is_normal() or K.is_normal():
        cache[pair] = True
        return True
    product = {tuple(map(k.images.__getitem__, h.images))
               for h in h_set for k in k_set}
    result = all(tuple(_inv(t)) in product for t in product)
    cache[pair] = result
    return result


def _inv(t: tuple) -> list[int]:
    out = [0] * len(t)
    for i, j in enumerate(t):
        out[j] = i
    return out


def normalizer(G: Group, H: SubgroupHandle) -> SubgroupHandle:
    """N_G(H) = {g in G : H^g = H}, by brute force over the elements of G."""
    if H.ambient is not G:
        H = H.rebase(G)
    members = H.element_set()
    gens = H.generators
    keep = [g for g in G.elements()
            if all(s.conjugated_by(g) in members for s in gens)]
    return subgroup_from_elements(G, keep)


def centralizer(G: Group, H: SubgroupHandle) -> SubgroupHandle:
    """C_G(H) = {g in G : gh = hg for all h in H}, by brute force."""
    if H.ambient is not G:
        H = H.rebase(G)
    gens = H.generators
    keep = [g for g in G.elements()
            if all(g * s == s * g for s in gens)]
    return subgroup_from_elements(G, keep)


def normal_closure(G: Group, S: SubgroupHandle | Iterable[Perm]) -> SubgroupHandle:
    """Smallest normal subgroup of G containing S.

    Fixed-point iteration: conjugate the current generators by the group
    generators and absorb anything new until the element set stabilizes.
    """
    if isinstance(S, SubgroupHandle):
        seed_gens = list(S.generators)
    else:
        seed_gens = [g for g in S if not g.is_identity()]
    gens = list(seed_gens)
    closed = _mulclose(G.degree, [g.images for g in gens])
    changed = True
    while changed:
        changed = False
        for t in list(gens):
            for g in G.generators:
                c = t.conjugated_by(g)
                if c.images not in closed:
                    gens.append(c)
                    closed = _mulclose(G.degree, [x.images for x in gens],
                                       seed=closed)
                    changed = True
    return subgroup_from_elements(G, (Perm._raw(t) for t in closed))


def core(G: Group, H: SubgroupHandle) -> SubgroupHandle:
    """Largest normal subgroup of G contained in H.

    Computed as the intersection of the conjugates of H, which is exactly the
    kernel of the action of G on the cosets of H.
    """
    if H.ambient is not G:
        H = H.rebase(G)
    cache = G._cache.setdefault("core", {})
    hit = cache.get(H.key)
    if hit is not None:
        return hit
    if H.is_normal():
        cache[H.key] = H
        return H
    index = G.order() // H.order()
    if index > config.enumeration_cap():
        raise CapExceeded(f"coset space of size {index} is too large for core")
    start = frozenset(p.images for p in H.element_set())
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
    cache[H.key] = result
    return result


@dataclass
class SubgroupLattice:
    """Every subgroup of a group, with normality, maximality and inclusion."""

    ambient: Group
    subgroups: list[SubgroupHandle]
    normal: list[bool]
    maximal: list[bool]
    # strict inclusion, as index sets: supersets[i] lists j with subs[i] < subs[j]
    supersets: list[frozenset[int]] = field(repr=False)

    def __len__(self) -> int:
        return len(self.subgroups)

    def index_of(self, H: SubgroupHandle) -> int:
        key = H.key
        for i, s in enumerate(self.subgroups):
            if s.key == key:
                return i
        raise KeyError("subgroup not in lattice")

    def normal_subgroups(self) -> list[SubgroupHandle]:
        return [s for s, n in zip(self.subgroups, self.normal) if n]

    def maximal_subgroups(self) -> list[SubgroupHandle]:
        return [s for s, m in zip(self.subgroups, self.maximal) if m]

    def subsets_of(self, i: int) -> list[int]:
        return [j for j in range(len(self.subgroups)) if i in self.supersets[j]]


def all_subgroups(G: Group) -> SubgroupLattice:
    """Enumerate every subgroup of G exactly once.

    Seeds with all cyclic subgroups and closes under pairwise join; complete
    because every subgroup is the join of the cyclic subgroups generated by
    its generators. Deduplication is by element set. Subject to the lattice
    cap on |G| and the subgroup-count cap.
    """
    if "lattice" in G._cache:
        return G._cache["lattice"]
    cap = config.lattice_cap()
    if G.order() > cap:
        raise CapExceeded(f"|G| = {G.order()} exceeds the lattice cap {cap}")
    count_cap = config.subgroup_count_cap()

    found: dict[frozenset[Perm], SubgroupHandle] = {}
    triv = G.trivial_subgroup()
    found[triv.key] = triv
    for x in G.elements():
        if x.is_identity():
            continue
        powers = [G.identity()]
        p = x
        while not p.is_identity():
            powers.append(p)
            p = p * x
        key = frozenset(powers)
        if key not in found:
            grp = _shared_subgroup_group(G, [x], tuple(sorted(powers)))
            found[key] = SubgroupHandle(G, [x], _trusted=True, _group=grp)
            if len(found) > count_cap:
                raise CapExceeded(
                    f"subgroup count exceeds cap {count_cap} during lattice build"
                )

    # closing joins against the cyclic seeds suffices: every subgroup is an
    # iterated join of the cyclic subgroups of its generators
    seeds = list(found.values())
    order_g = G.order()
    frontier = list(found.values())
    while frontier:
        fresh: list[SubgroupHandle] = []
        for h in frontier:
            if h.order() == order_g:
                continue
            for c in seeds:
                j = join(h, c)
                if j.key not in found:
                    found[j.key] = j
                    fresh.append(j)
                    if len(found) > count_cap:
                        raise CapExceeded(
                            f"subgroup count exceeds cap {count_cap} "
                            "during lattice build"
                        )
        frontier = fresh

    whole = G.as_handle()
    if whole.key not in found:
        found[whole.key] = whole

    subs = sorted(found.values(),
                  key=lambda s: (s.order(), tuple(p.images for p in s.elements())))
    n = len(subs)
    orders = [s.order() for s in subs]
    sets = [s.element_set() for s in subs]
    supersets: list[set[int]] = [set() for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and orders[j] % orders[i] == 0 and orders[i] < orders[j] \
                    and sets[i] <= sets[j]:
                supersets[i].add(j)
    top = n - 1
    maximal = [supersets[i] == {top} for i in range(n)]
    normal_flags = [s.is_normal() for s in subs]
    lattice = SubgroupLattice(
        ambient=G,
        subgroups=subs,
        normal=normal_flags,
        maximal=maximal,
        supersets=[frozenset(s) for s in supersets],
    )
    G._cache["lattice"] = lattice
    return lattice


def maximal_subgroups(G: Group) -> list[SubgroupHandle]:
    """Proper subgroups maximal under inclusion."""
    return all_subgroups(G).maximal_subgroups()


def frattini(G: Group) -> SubgroupHandle:
    """Intersection of all maximal subgroups; the whole group when trivial."""
    if "frattini" in G._cache:
        return G._cache["frattini"]
    if G.order() == 1:
        result = G.as_handle()
    else:
        common = set(G.element_set())
        for m in maximal_subgroups(G):
            common &= m.element_set()
        result = subgroup_from_elements(G, common, name="Phi")
    G._cache["frattini"] = result
    return result


def minimal_normal_subgroups(G: Group) -> list[SubgroupHandle]:
    """Nontrivial normal subgroups minimal among nontrivial normal subgroups."""
    if "minimal_normals" in G._cache:
        return G._cache["minimal_normals"]
    lat = all_subgroups(G)
    normal_idx = [i for i, flag in enumerate(lat.normal)
                  if flag and lat.subgroups[i].order() > 1]
    out = []
    for i in normal_idx:
        if not any(j != i and i in lat.supersets[j] for j in normal_idx):
            out.append(lat.subgroups[i])
    G._cache["minimal_normals"] = out
    return out
