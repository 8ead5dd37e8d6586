"""Exhaustive enumeration of small permutation groups.

Groups are given by generators on points 0..n-1 and closed by breadth-first
search, which keeps the element order deterministic.  From the enumerated
group we read off the full conjugacy-class skeleton (sizes, orders, inverse
pairing, power maps) and the standard permutation characters.  No stabilizer
chains: the groups of interest are desk-scale and a hard cap guards misuse.
"""

from __future__ import annotations

import re
from math import lcm

from .groupdata import ClassData, ClassFunction
from .exactnum import primes_below

DEFAULT_CAP = 20000


class CapExceededError(RuntimeError):
    """The generated group is larger than the enumeration cap."""


class Permutation:
    """A bijection of {0..n-1}, stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images)-1}: {images}")
        self.images = images

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(range(degree))

    @staticmethod
    def from_cycles(text: str, degree: int | None = None) -> "Permutation":
        """Parse cycle notation like "(0 1)(2 3)"; points may use spaces or commas."""
        cycles = []
        seen: set[int] = set()
        for body in re.findall(r"\(([^()]*)\)", text):
            pts = [int(tok) for tok in re.split(r"[,\s]+", body.strip()) if tok]
            if len(set(pts)) != len(pts):
                raise ValueError(f"repeated point in cycle {body!r}")
            if seen & set(pts):
                raise ValueError(f"point appears in two cycles: {text!r}")
            seen |= set(pts)
            if len(pts) > 1:
                cycles.append(pts)
        if re.sub(r"\([^()]*\)|\s", "", text):
            raise ValueError(f"unparsed cycle text: {text!r}")
        n = degree if degree is not None else (max(seen) + 1 if seen else 1)
        images = list(range(n))
        for pts in cycles:
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a] = b
        return Permutation(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (a*b)(x) = a(b(x))
        return Permutation(tuple(self.images[i] for i in other.images))

    def inverse(self) -> "Permutation":
        out = [0] * self.degree
        for i, im in enumerate(self.images):
            out[im] = i
        return Permutation(out)

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        result = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def order(self) -> int:
        return lcm(*(len(c) for c in self._cycles())) if self._cycles() else 1

    def _cycles(self) -> list[list[int]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            p = self.images[start]
            while p != start:
                cyc.append(p)
                seen[p] = True
                p = self.images[p]
            if len(cyc) > 1:
                out.append(cyc)
        return out

    def fixed_points(self) -> int:
        return sum(1 for i, im in enumerate(self.images) if i == im)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        cycs = self._cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)


class GeneratedGroup:
    """The closure of a generating set, with a position lookup per element."""

    __slots__ = ("degree", "generators", "elements", "element_index")

    def __init__(self, degree, generators, elements):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = list(elements)
        self.element_index = {g: i for i, g in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self) -> str:
        return f"GeneratedGroup(degree={self.degree}, order={len(self)})"


def enumerate_group(generators, cap: int = DEFAULT_CAP) -> GeneratedGroup:
    """BFS closure under left multiplication by the generators.

    Element order is deterministic: identity first, then layer by layer with a
    lexicographic tie-break on images inside each layer.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("at least one generator required")
    if cap < 1:
        raise ValueError("cap must be positive")
    degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("generators act on different point sets")
    identity = Permutation.identity(degree)
    elements = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        layer = set()
        for h in frontier:
            for g in gens:
                cand = g * h
                if cand not in seen:
                    layer.add(cand)
        frontier = sorted(layer, key=lambda p: p.images)
        for p in frontier:
            seen.add(p)
            elements.append(p)
            if len(elements) > cap:
                raise CapExceededError(f"group order exceeds cap {cap}")
    return GeneratedGroup(degree, gens, elements)


def _sorted_classes(group: GeneratedGroup) -> list[list[int]]:
    """Conjugacy classes as sorted index lists, in a deterministic order.

    Each class is the orbit of conjugation by the generators (BFS); classes
    are sorted by (representative order, size, lexicographically least
    member), which puts the identity first.
    """
    index = group.element_index
    inv_gens = [(g, g.inverse()) for g in group.generators]
    unassigned = set(range(len(group)))
    classes: list[list[int]] = []
    while unassigned:
        start = min(unassigned)
        orbit = {start}
        frontier = [group.elements[start]]
        while frontier:
            nxt = []
            for h in frontier:
                for g, gi in inv_gens:
                    cand = g * h * gi
                    ci = index[cand]
                    if ci not in orbit:
                        orbit.add(ci)
                        nxt.append(cand)
            frontier = nxt
        unassigned -= orbit
        classes.append(sorted(orbit))

    def sort_key(cls: list[int]):
        rep = min(group.elements[i].images for i in cls)
        return (group.elements[cls[0]].order(), len(cls), rep)

    classes.sort(key=sort_key)
    return classes


def class_data(group: GeneratedGroup, name_prefix: str = "C") -> ClassData:
    """Partition the group into conjugacy classes and package the skeleton."""
    index = group.element_index
    classes = _sorted_classes(group)
    assert group.elements[classes[0][0]] == Permutation.identity(group.degree)

    k = len(classes)
    class_of = {}
    for ci, cls in enumerate(classes):
        for i in cls:
            class_of[i] = ci
    reps = [group.elements[cls[0]] for cls in classes]
    sizes = [len(cls) for cls in classes]
    rep_orders = [r.order() for r in reps]
    exponent = lcm(*rep_orders)
    inverse_class = [class_of[index[r.inverse()]] for r in reps]
    prime_maps = {}
    for p in primes_below(exponent + 1):
        prime_maps[p] = tuple(class_of[index[r**p]] for r in reps)
    names = [f"{name_prefix}{i+1}" for i in range(k)]
    return ClassData(
        group_order=len(group),
        exponent=exponent,
        names=names,
        sizes=sizes,
        rep_orders=rep_orders,
        inverse_class=inverse_class,
        prime_power_maps=prime_maps,
    )


def class_representatives(group: GeneratedGroup, data: ClassData) -> list[Permutation]:
    """One representative per class of ``data``, in class order.

    ``data`` must have come from :func:`class_data` on the same group; the
    representatives are recomputed with the same deterministic ordering.
    """
    classes = _sorted_classes(group)
    if [len(c) for c in classes] != list(data.sizes):
        raise ValueError("class data does not match this group")
    return [group.elements[cls[0]] for cls in classes]


def standard_characters(
    group: GeneratedGroup, data: ClassData
) -> tuple[ClassFunction, ClassFunction]:
    """(regular, natural): |G|-at-identity and the fixed-point-count character."""
    reps = class_representatives(group, data)
    regular = [0] * data.class_count
    regular[0] = len(group)
    natural = [r.fixed_points() for r in reps]
    return ClassFunction(data, regular), ClassFunction(data, natural)
