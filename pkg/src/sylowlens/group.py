"""Permutation groups, subgroup handles and quotients by normal subgroups.

A ``Group`` is generated by permutations on a fixed point set. Order and
membership come from a deterministic stabilizer chain; full element lists
are computed by closure only on demand and only below the enumeration cap.
All caches are write-once fills of immutable mathematical data.
"""

from __future__ import annotations

import math
from typing import Iterable, Optional, Sequence

from . import config
from .config import CapExceeded
from .perm import DegreeMismatch, Perm, _invert


class NotASubgroupError(ValueError):
    """A claimed subgroup generator is not a member of the ambient group."""


class NotNormalError(ValueError):
    """Quotient construction was attempted over a non-normal subgroup."""


def _mulclose(degree: int, gen_tuples: Sequence[tuple], seed: Iterable[tuple] = (),
              cap: Optional[int] = None) -> set[tuple]:
    """Closure of ``seed`` (plus identity) under right multiplication by gens."""
    if cap is None:
        cap = config.enumeration_cap()
    identity = tuple(range(degree))
    elements = set(seed)
    elements.add(identity)
    frontier = list(elements)
    while frontier:
        fresh = []
        for t in frontier:
            for g in gen_tuples:
                u = tuple(map(g.__getitem__, t))
                if u not in elements:
                    if len(elements) >= cap:
                        raise CapExceeded(
                            f"element closure exceeded cap {cap}; "
                            "use chain-based methods instead"
                        )
                    elements.add(u)
                    fresh.append(u)
        frontier = fresh
    return elements


class _Level:
    __slots__ = ("point", "gens", "orbit")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[Perm] = []
        # orbit point -> (u, u_inv) as raw tuples, with u mapping base point there
        self.orbit: dict[int, tuple[tuple, tuple]] = {}


class StabilizerChain:
    """Deterministic Schreier-Sims stabilizer chain.

    The base is the ascending list of points moved by at least one generator,
    so identical generator lists always produce identical chains. Levels with
    singleton orbits are kept; they cost nothing and keep bookkeeping simple.
    """

    def __init__(self, degree: int, generators: Sequence[Perm]):
        self.degree = degree
        moved = sorted({
            i for g in generators for i in range(degree) if g.images[i] != i
        })
        self.base = moved
        self._levels = [_Level(pt) for pt in moved]
        identity = tuple(range(degree))
        for lvl in self._levels:
            lvl.orbit[lvl.point] = (identity, identity)
        for g in generators:
            if not g.is_identity():
                self._file_generator(0, g)
        self._close()

    def _file_generator(self, start: int, g: Perm) -> None:
        # g fixes base[:start]; it belongs to every level up to its first
        # moved base point
        images = g.images
        last = start
        for k in range(start, len(self._levels)):
            last = k
            if images[self._levels[k].point] != self._levels[k].point:
                break
        for k in range(start, last + 1):
            self._levels[k].gens.append(g)

    def _rebuild_orbit(self, i: int) -> None:
        lvl = self._levels[i]
        identity = tuple(range(self.degree))
        orbit = {lvl.point: (identity, identity)}
        queue = [lvl.point]
        gen_images = [g.images for g in lvl.gens]
        while queue:
            beta = queue.pop(0)
            u = orbit[beta][0]
            for gi in gen_images:
                gamma = gi[beta]
                if gamma not in orbit:
                    u_new = tuple(map(gi.__getitem__, u))
                    orbit[gamma] = (u_new, _invert(u_new))
                    queue.append(gamma)
        lvl.orbit = orbit

    def _sift_tuple(self, start: int, t: tuple) -> tuple[tuple, int]:
        """Reduce ``t`` through levels >= start; return (residue, stall level)."""
        for k in range(start, len(self._levels)):
            lvl = self._levels[k]
            beta = t[lvl.point]
            if beta == lvl.point:
                continue
            entry = lvl.orbit.get(beta)
            if entry is None:
                return t, k
            t = tuple(map(entry[1].__getitem__, t))
        return t, len(self._levels)

    def _close(self) -> None:
        identity = tuple(range(self.degree))
        i = len(self._levels) - 1
        while i >= 0:
            jump = self._check_level(i, identity)
            i = jump if jump is not None else i - 1

    def _check_level(self, i: int, identity: tuple) -> Optional[int]:
        lvl = self._levels[i]
        self._rebuild_orbit(i)
        for beta, (u, _u_inv) in list(lvl.orbit.items()):
            for s in lvl.gens:
                gamma = s.images[beta]
                u_gamma_inv = lvl.orbit[gamma][1]
                sg = tuple(map(u_gamma_inv.__getitem__,
                               map(s.images.__getitem__, u)))
                if sg == identity:
                    continue
                residue, m = self._sift_tuple(i + 1, sg)
                if residue != identity:
                    assert m < len(self._levels), "residue escaped the base"
                    self._file_generator(i + 1, Perm._raw(residue))
                    return m
        return None

    def order(self) -> int:
        n = 1
        for lvl in self._levels:
            n *= len(lvl.orbit)
        return n

    def contains(self, p: Perm) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatch(
                f"degree {p.degree} element tested against degree {self.degree} group"
            )
        residue, _ = self._sift_tuple(0, p.images)
        return all(i == j for i, j in enumerate(residue))


class Group:
    """A finite permutation group given by generators on ``degree`` points."""

    def __init__(self, degree: int, generators: Iterable[Perm | Sequence[int]],
                 name: Optional[str] = None):
        if degree < 1:
            raise ValueError(f"degree must be >= 1, got {degree}")
        self.degree = degree
        gens: list[Perm] = []
        seen: set[Perm] = set()
        for g in generators:
            if not isinstance(g, Perm):
                g = Perm(g)
            if g.degree != degree:
                raise DegreeMismatch(
                    f"generator degree {g.degree} != group degree {degree}"
                )
            if g.is_identity() or g in seen:
                continue
            gens.append(g)
            seen.add(g)
        self.generators = gens
        self.name = name
        self._chain: Optional[StabilizerChain] = None
        self._elements: Optional[tuple[Perm, ...]] = None
        self._element_set: Optional[frozenset[Perm]] = None
        self._cache: dict = {}

    def __repr__(self) -> str:
        label = self.name or f"<{len(self.generators)} gens>"
        return f"Group({label}, degree={self.degree})"

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain(self.degree, self.generators)
        return self._chain

    def order(self) -> int:
        # len(elements) when already enumerated, else the stabilizer chain;
        # the two routes are cross-checked by the oracle-equivalence tests
        if self._elements is not None:
            return len(self._elements)
        return self.chain.order()

    def contains(self, x: Perm) -> bool:
        """Membership via sifting through the stabilizer chain."""
        if self._element_set is not None:
            if x.degree != self.degree:
                raise DegreeMismatch(
                    f"degree {x.degree} element tested against degree {self.degree} group"
                )
            return x in self._element_set

        return self.chain.contains(x)

    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def elements(self, cap: Optional[int] = None) -> tuple[Perm, ...]:
        """All members in canonical (lexicographic) order, by closure.

        Independent of the stabilizer chain on purpose: chain order versus
        closure count is a standing cross-check. Raises ``CapExceeded`` above
        the enumeration cap.
        """
        if self._elements is None:
            closed = _mulclose(self.degree, [g.images for g in self.generators],
                               cap=cap)
            self._elements = tuple(Perm._raw(t) for t in sorted(closed))
            self._element_set = frozenset(self._elements)
        return self._elements

    def element_set(self, cap: Optional[int] = None) -> frozenset[Perm]:
        if self._element_set is None:
            self.elements(cap=cap)
        return self._element_set

    def is_abelian(self) -> bool:
        if "abelian" not in self._cache:
            gens = self.generators
            self._cache["abelian"] = all(
                a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:]
            )
        return self._cache["abelian"]

    def exponent(self) -> int:
        """lcm of element orders; for abelian groups from generators alone."""
        if "exponent" not in self._cache:
            if self.is_abelian():
                value = math.lcm(*(g.order() for g in self.generators), 1)
            else:
                value = math.lcm(*(p.order() for p in self.elements()), 1)
            self._cache["exponent"] = value
        return self._cache["exponent"]

    def prime_divisors(self) -> tuple[int, ...]:
        if "primes" not in self._cache:
            from .sylow import factorize

            self._cache["primes"] = tuple(
                p for p, _ in factorize(self.order()).factors
            )
        return self._cache["primes"]

    def subgroup(self, generators: Iterable[Perm | Sequence[int]],
                 name: Optional[str] = None) -> "SubgroupHandle":
        return SubgroupHandle(self, generators, name=name)

    def as_handle(self) -> "SubgroupHandle":
        """This group viewed as a subgroup of itself (shared caches)."""
        if "whole_handle" not in self._cache:
            handle = SubgroupHandle(self, self.generators, name=self.name,
                                    _trusted=True, _group=self)
            self._cache["whole_handle"] = handle
        return self._cache["whole_handle"]

    def trivial_subgroup(self) -> "SubgroupHandle":
        if "trivial_handle" not in self._cache:
            self._cache["trivial_handle"] = SubgroupHandle(
                self, [], name="1", _trusted=True
            )
        return self._cache["trivial_handle"]


def group_from_generators(degree: int, gens: Iterable[Perm | Sequence[int]],
                          name: Optional[str] = None) -> Group:
    """Build the closure of ``gens`` under composition and inverse.

    An empty generator list yields the trivial group on ``degree`` points.
    """
    return Group(degree, gens, name=name)


def group_order(G: Group) -> int:
    return G.order()


def contains(G: Group, x: Perm) -> bool:
    return G.contains(x)


def elements(G: Group, cap: Optional[int] = None) -> tuple[Perm, ...]:
    return G.elements(cap=cap)


class SubgroupHandle:
    """A subgroup of an ambient group, identified by its element set.

    Two handles name the same subgroup exactly when their element sets agree;
    generator lists are never used for identity. Handles are immutable after
    construction apart from idempotent cache fills.
    """

    def __init__(self, ambient: Group, generators: Iterable[Perm | Sequence[int]],
                 name: Optional[str] = None, _trusted: bool = False,
                 _group: Optional[Group] = None):
        self.ambient = ambient
        gens: list[Perm] = []
        seen: set[Perm] = set()
        for g in generators:
            if not isinstance(g, Perm):
                g = Perm(g)
            if g.degree != ambient.degree:
                raise DegreeMismatch(
                    f"generator degree {g.degree} != ambient degree {ambient.degree}"
                )
            if not _trusted and not ambient.contains(g):
                raise NotASubgroupError(f"generator {g!r} is not in the ambient group")
            if g.is_identity() or g in seen:
                continue
            gens.append(g)
            seen.add(g)
        self.generators = gens
        self.name = name
        self._group = _group
        self._normal: Optional[bool] = None
        self._order: Optional[int] = None
        self._key: Optional[frozenset] = None

    def __repr__(self) -> str:
        label = self.name or f"<{len(self.generators)} gens>"
        return f"SubgroupHandle({label}, order={self.order()})"

    @property
    def group(self) -> Group:
        """This subgroup as a standalone group.

        Equal subgroups of one ambient share a single Group object (looked up
        by element set), so lattices, Sylow data and series computed for one
        handle are reused by every other handle naming the same subgroup.
        """
        if self._group is None:
            try:
                closed = _mulclose(self.ambient.degree,
                                   [g.images for g in self.generators])
            except CapExceeded:
                # too large to enumerate; fall back to a chain-backed group
                self._group = Group(self.ambient.degree, self.generators,
                                    name=self.name)
                return self._group
            ordered = tuple(Perm._raw(t) for t in sorted(closed))
            self._group = _shared_subgroup_group(self.ambient, self.generators,
                                                 ordered, name=self.name)
        return self._group

    def order(self) -> int:
        if self._order is None:
            self._order = self.group.order()
        return self._order

    def elements(self) -> tuple[Perm, ...]:
        return self.group.elements()

    def element_set(self) -> frozenset[Perm]:
        if self._key is None:
            self._key = self.group.element_set()
        return self._key

    @property
    def key(self) -> frozenset[Perm]:
        """Canonical identity of the subgroup: its element set."""
        if self._key is None:
            self._key = self.group.element_set()
        return self._key

    def contains(self, x: Perm) -> bool:
        return self.group.contains(x)

    def is_trivial(self) -> bool:
        return self.order() == 1

    def is_whole_group(self) -> bool:
        return self.order() == self.ambient.order()

    def is_normal(self) -> bool:
        """Whether the subgroup is normal in its ambient group."""
        if self._normal is None:
            cache = self.ambient._cache.setdefault("normality", {})
            key = self.key
            hit = cache.get(key)
            if hit is None:
                members = self.element_set()
                hit = all(
                    s.conjugated_by(g) in members
                    for g in self.ambient.generators
                    for s in self.generators
                )
                cache[key] = hit
            self._normal = hit
        return self._normal

    def conjugated_by(self, g: Perm) -> "SubgroupHandle":
        return SubgroupHandle(self.ambient,
                              [s.conjugated_by(g) for s in self.generators],
                              _trusted=True)

    def rebase(self, new_ambient: Group, trusted: bool = False) -> "SubgroupHandle":
        """The same subgroup viewed inside a different ambient group.

        ``trusted`` skips membership validation; callers set it when the new
        ambient provably contains this subgroup (e.g. it contains the old
        ambient).
        """
        if new_ambient is self.ambient:
            return self
        if new_ambient.degree != self.ambient.degree:
            raise DegreeMismatch("cannot rebase across different point sets")
        return SubgroupHandle(new_ambient, self.generators, name=self.name,
                              _trusted=trusted, _group=self._group)


def _shared_subgroup_group(ambient: Group, gens: Sequence[Perm],
                           ordered: tuple[Perm, ...],
                           name: Optional[str] = None) -> Group:
    """One Group object per distinct subgroup of an ambient group.

    ``ordered`` must be the canonically sorted element tuple; it is prefilled
    into the cache so shared groups never need a stabilizer chain.
    """
    registry = ambient._cache.setdefault("subgroup_groups", {})
    key = frozenset(ordered)
    hit = registry.get(key)
    if hit is None:
        hit = Group(ambient.degree, gens, name=name)
        hit._elements = ordered
        hit._element_set = key
        registry[key] = hit
    return hit


def subgroup_from_elements(G: Group, members: Iterable[Perm],
                           name: Optional[str] = None) -> SubgroupHandle:
    """Handle for the subgroup whose element set is ``members``.

    Picks a short generating sequence greedily in canonical order and
    prefills the handle's element cache, so no stabilizer chain is ever
    needed for it. The input must already be closed under the group
    operations.
    """
    ordered = tuple(sorted(members))
    target = len(ordered)
    gens: list[Perm] = []
    closure: set[tuple] = {tuple(range(G.degree))}
    for p in ordered:
        if p.images in closure:
            continue
        gens.append(p)
        closure = _mulclose(G.degree, [g.images for g in gens])
        if len(closure) == target:
            break
    grp = _shared_subgroup_group(G, gens, ordered, name=name)
    return SubgroupHandle(G, grp.generators, name=name, _trusted=True,
                          _group=grp)


class QuotientImage:
    """The permutation action of G on the right cosets of a normal subgroup.

    For normal N the point stabilizer of the identity coset equals N, so the
    image is faithful for G/N and every image element has a unique coset
    representative, available through ``pull_back``.
    """

    def __init__(self, ambient: Group, kernel: SubgroupHandle, image: Group,
                 coset_reps: list[Perm], coset_index: dict[tuple, int]):
        self.ambient = ambient
        self.kernel = kernel
        self.image = image
        self.kernel_order = kernel.order()
        self._reps = coset_reps
        self._index = coset_index
        self._kernel_tuples = sorted(p.images for p in kernel.elements())

    def _coset_id(self, t: tuple) -> tuple:
        return min(tuple(map(t.__getitem__, n)) for n in self._kernel_tuples)

    def coset_index(self, g: Perm) -> int:
        try:
            return self._index[self._coset_id(g.images)]
        except KeyError:
            raise NotASubgroupError("element is not in the ambient group") from None

    def project(self, g: Perm) -> Perm:
        """Image of an ambient element: its permutation of coset indices."""
        g_t = g.images
        return Perm._raw(tuple(
            self._index[self._coset_id(tuple(map(g_t.__getitem__, r.images)))]
            for r in self._reps
        ))

    def project_handle(self, H: SubgroupHandle) -> SubgroupHandle:
        """Image HN/N of a subgroup H of the ambient group."""
        cache = self.image._cache.setdefault("projected", {})
        hit = cache.get(H.key)
        if hit is None:
            hit = SubgroupHandle(self.image,
                                 [self.project(g) for g in H.generators],
                                 _trusted=True)
            cache[H.key] = hit
        return hit

    def pull_back(self, y: Perm) -> Perm:
        """The unique coset representative projecting to ``y``."""
        return self._reps[y.images[0]]

    def preimage_subgroup(self, S: SubgroupHandle) -> SubgroupHandle:
        """Full preimage in the ambient group of a subgroup of the image."""
        gens = list(self.kernel.generators)
        gens.extend(self.pull_back(y) for y in S.generators)
        return SubgroupHandle(self.ambient, gens, _trusted=True)


def quotient(G: Group, N: SubgroupHandle) -> QuotientImage:
    """Quotient of G by a normal subgroup N, as a coset-action image.

    Raises ``NotASubgroupError`` / ``NotNormalError`` when N is not a normal
    subgroup of G, and ``CapExceeded`` when the coset count is infeasible.
    """
    if N.ambient is not G:
        for g in N.generators:
            if not G.contains(g):
                raise NotASubgroupError("N is not a subgroup of G")
        N = N.rebase(G)
    cache = G._cache.setdefault("quotient", {})
    cached = cache.get(N.key)
    if cached is not None:
        return cached
    if not N.is_normal():
        raise NotNormalError("N is not normal in G")
    order_g = G.order()
    order_n = N.order()
    index = order_g // order_n
    if index > config.enumeration_cap():
        raise CapExceeded(f"coset count {index} exceeds the enumeration cap")

    kernel_tuples = sorted(p.images for p in N.elements())

    def coset_id(t: tuple) -> tuple:
        return min(tuple(map(t.__getitem__, n)) for n in kernel_tuples)

    identity = tuple(range(G.degree))
    start = coset_id(identity)
    index_of: dict[tuple, int] = {start: 0}
    reps: list[tuple] = [start]
    gen_tuples = [g.images for g in G.generators]
    transitions: list[list[int]] = [[] for _ in gen_tuples]
    cursor = 0
    while cursor < len(reps):
        r = reps[cursor]
        for gi, g in enumerate(gen_tuples):
            t = tuple(map(g.__getitem__, r))
            cid = coset_id(t)
            j = index_of.get(cid)
            if j is None:
                j = len(reps)
                index_of[cid] = j
                reps.append(cid)
            while len(transitions[gi]) <= cursor:
                transitions[gi].append(-1)
            transitions[gi][cursor] = j
        cursor += 1

    n_cosets = len(reps)
    image_gens = []
    for gi in range(len(gen_tuples)):
        row = transitions[gi]
        row.extend(-1 for _ in range(n_cosets - len(row)))
        image_gens.append(Perm._raw(tuple(row)))
    label = f"{G.name or 'G'}/{N.name or f'N{order_n}'}"
    image = Group(max(n_cosets, 1), image_gens, name=label)
    if image.order() * order_n != order_g:
        raise AssertionError("coset action order mismatch; non-normal kernel?")
    rep_perms = [Perm._raw(t) for t in reps]
    result = QuotientImage(G, N, image, rep_perms, index_of)
    cache[N.key] = result
    return result
