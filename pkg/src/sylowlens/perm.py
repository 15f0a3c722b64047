"""Permutations of {0, ..., n-1} represented as image arrays.

Points are 0-based everywhere. ``images[i]`` is the image of point ``i``.
The composition convention is fixed as "apply the left factor first":
``(a * b)(i) == b(a(i))``. Cycle notation is accepted only at parse
boundaries; internally everything is an image tuple.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Iterator


class MalformedPermutation(ValueError):
    """The given image array is not a bijection on its point set."""


class DegreeMismatch(ValueError):
    """Permutations or groups over different point sets were combined."""


def _compose(a: tuple, b: tuple) -> tuple:
    # apply a first, then b
    return tuple(map(b.__getitem__, a))


def _invert(a: tuple) -> tuple:
    inv = [0] * len(a)
    for i, j in enumerate(a):
        inv[j] = i
    return tuple(inv)


class Perm:
    """An immutable permutation with precomputed hash.

    Perms sort lexicographically on their image arrays, which gives the
    canonical total order used for element lists and deterministic choices.
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        n = len(images)
        seen = [False] * n
        for x in images:
            if not isinstance(x, int) or not 0 <= x < n or seen[x]:
                raise MalformedPermutation(
                    f"image array is not a bijection on 0..{n - 1}: {images!r}"
                )
            seen[x] = True
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _raw(cls, images: tuple) -> "Perm":
        # fast path for internally produced (already valid) image tuples
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Iterable[int]]) -> "Perm":
        """Build a permutation of the given degree from disjoint-or-not cycles.

        Non-disjoint cycles are composed left to right, matching the textual
        form ``(0 1)(1 2)``.
        """
        result = tuple(range(degree))
        for cycle in cycles:
            cycle = list(cycle)
            if len(set(cycle)) != len(cycle):
                raise MalformedPermutation(f"repeated point in cycle {cycle}")
            images = list(range(degree))
            for i, pt in enumerate(cycle):
                if not 0 <= pt < degree:
                    raise MalformedPermutation(
                        f"cycle point {pt} out of range for degree {degree}"
                    )
                images[pt] = cycle[(i + 1) % len(cycle)]
            result = _compose(result, Perm(images).images)
        return cls._raw(result)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Perm") -> "Perm":
        if len(self.images) != len(other.images):
            raise DegreeMismatch(
                f"cannot compose degree {len(self.images)} with {len(other.images)}"
            )
        return Perm._raw(_compose(self.images, other.images))

    def inverse(self) -> "Perm":
        return Perm._raw(_invert(self.images))

    def conjugated_by(self, g: "Perm") -> "Perm":
        """Return g^-1 * self * g."""
        if len(self.images) != len(g.images):
            raise DegreeMismatch("conjugation across different degrees")
        g_inv = _invert(g.images)
        return Perm._raw(_compose(_compose(g_inv, self.images), g.images))

    def __pow__(self, n: int) -> "Perm":
        if n < 0:
            return self.inverse() ** (-n)
        result = tuple(range(len(self.images)))
        base = self.images
        while n:
            if n & 1:
                result = _compose(result, base)
            base = _compose(base, base)
            n >>= 1
        return Perm._raw(result)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its minimum point."""
        seen = [False] * len(self.images)
        out = []
        for i in range(len(self.images)):
            if seen[i] or self.images[i] == i:
                continue
            cycle = [i]
            j = self.images[i]
            seen[i] = True
            while j != i:
                seen[j] = True
                cycle.append(j)
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def __le__(self, other: "Perm") -> bool:
        return self.images <= other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycle_string(text: str, degree: int) -> Perm:
    """Parse cycle notation like ``"(0 1 2)(3 4)"`` into a Perm.

    ``"()"`` and the empty string denote the identity. Points may be
    separated by spaces or commas.
    """
    stripped = text.strip()
    if stripped in ("", "()"):
        return Perm.identity(degree)
    consumed = _CYCLE_RE.sub("", stripped).strip()
    if consumed:
        raise MalformedPermutation(f"unparseable cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        body = body.strip()
        if not body:
            continue
        try:
            points = [int(tok) for tok in re.split(r"[,\s]+", body)]
        except ValueError:
            raise MalformedPermutation(f"non-integer point in cycle: {text!r}") from None
        cycles.append(points)
    return Perm.from_cycles(degree, cycles)


def perm_compose(a: Perm, b: Perm) -> Perm:
    """Compose two permutations, applying ``a`` first and then ``b``."""
    return a * b


def all_perms(degree: int) -> Iterator[Perm]:
    """Yield every permutation of the given degree (for small oracles)."""
    import itertools

    for images in itertools.permutations(range(degree)):
        yield Perm._raw(images)
