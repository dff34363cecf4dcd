"""Permutations, finite permutation groups from generators, induced actions.

A permutation of degree n is a tuple of images: g[x] is the image of x,
also written x^g. Composition acts left to right, x^(ab) = (x^a)^b, so
compose(a, b) means "apply a, then b".
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

Perm = tuple[int, ...]


class DegreeMismatch(ValueError):
    """Operands act on different point sets."""


class GroupTooLarge(RuntimeError):
    """Enumeration exceeded its cap; refusing to return a truncated group."""


def is_permutation(images) -> bool:
    n = len(images)
    seen = [False] * n
    for x in images:
        if not (0 <= x < n) or seen[x]:
            return False
        seen[x] = True
    return True


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(a: Perm, b: Perm) -> Perm:
    """The product ab with x^(ab) = (x^a)^b."""
    if len(a) != len(b):
        raise DegreeMismatch(f"degree {len(a)} vs {len(b)}")
    return tuple(map(b.__getitem__, a))


def inverse(g: Perm) -> Perm:
    inv = [0] * len(g)
    for x, y in enumerate(g):
        inv[y] = x
    return tuple(inv)


def conjugate(g: Perm, h: Perm) -> Perm:
    """h^-1 g h."""
    return compose(compose(inverse(h), g), h)


def from_cycles(n: int, *cycles) -> Perm:
    """Permutation of degree n from disjoint cycles, e.g. from_cycles(4, (0, 1), (2, 3))."""
    images = list(range(n))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            images[x] = cyc[(i + 1) % len(cyc)]
    g = tuple(images)
    if not is_permutation(g):
        raise ValueError(f"cycles {cycles} are not disjoint on {n} points")
    return g


def cycle_type(g: Perm) -> tuple[int, ...]:
    lengths = []
    seen = [False] * len(g)
    for start in range(len(g)):
        if seen[start]:
            continue
        length, x = 0, start
        while not seen[x]:
            seen[x] = True
            length += 1
            x = g[x]
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def inversions(g: Perm) -> int:
    """|{(x, y) : x < y, x^g > y^g}|."""
    n = len(g)
    return sum(1 for x in range(n) for y in range(x + 1, n) if g[x] > g[y])


def parity(g: Perm) -> int:
    """0 for even, 1 for odd; equals inversions(g) mod 2."""
    return inversions(g) & 1


def cycle_parity(g: Perm) -> int:
    """Parity from the cycle type: (n - number of cycles) mod 2."""
    return (len(g) - len(cycle_type(g))) & 1


def is_fixed_point_free(g: Perm) -> bool:
    return all(y != x for x, y in enumerate(g))


@dataclass(frozen=True)
class GroupSpec:
    """A permutation group given by generators on {0, ..., degree-1}."""

    degree: int
    generators: tuple[Perm, ...]
    name: str = ""
    declared_order: int | None = None

    def __post_init__(self):
        if not self.generators:
            raise ValueError("generator list is empty")
        for g in self.generators:
            if len(g) != self.degree:
                raise DegreeMismatch(f"generator of length {len(g)}, degree {self.degree}")
            if not is_permutation(g):
                raise ValueError(f"not a permutation: {g}")


@dataclass
class GroupEnumeration:
    """All elements of a finite permutation group, in a fixed deterministic order."""

    degree: int
    elements: list[Perm]
    name: str = ""
    _index: dict | None = field(default=None, repr=False, compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self) -> dict[Perm, int]:
        if self._index is None:
            self._index = {g: i for i, g in enumerate(self.elements)}
        return self._index

    def __contains__(self, g: Perm) -> bool:
        return g in self.index()


DEFAULT_ENUMERATION_CAP = 2_000_000


def enumerate_group(spec: GroupSpec, cap: int = DEFAULT_ENUMERATION_CAP) -> GroupEnumeration:
    """Breadth-first closure of the generators under composition.

    Element order is the BFS insertion order, starting from the identity,
    with generators applied in their listed order; it is reproducible.
    Raises GroupTooLarge once more than `cap` elements appear, and raises
    ValueError if the file-declared order disagrees with the closure.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    start = identity(spec.degree)
    seen = {start}
    elements = [start]
    queue = deque([start])
    gens = spec.generators
    while queue:
        cur = queue.popleft()
        for gen in gens:
            nxt = tuple(map(gen.__getitem__, cur))
            if nxt not in seen:
                if len(seen) >= cap:
                    raise GroupTooLarge(
                        f"{spec.name or 'group'}: more than {cap} elements; "
                        "raise the cap or use family-mode verification"
                    )
                seen.add(nxt)
                elements.append(nxt)
                queue.append(nxt)
    if spec.declared_order is not None and spec.declared_order != len(elements):
        raise ValueError(
            f"{spec.name or 'group'}: declared order {spec.declared_order}, "
            f"enumerated {len(elements)}"
        )
    return GroupEnumeration(spec.degree, elements, spec.name)


def enumeration_from_elements(degree, elements, name="", check=True) -> GroupEnumeration:
    """Wrap an explicit element list; with check=True verify it is a group."""
    elements = list(elements)
    enum = GroupEnumeration(degree, elements, name)
    if check:
        eset = set(elements)
        if len(eset) != len(elements):
            raise ValueError("duplicate elements")
        if identity(degree) not in eset:
            raise ValueError("identity missing")
        for g in elements:
            if inverse(g) not in eset:
                raise ValueError(f"inverse of {g} missing")
        if len(elements) <= 2000:
            for a in elements:
                for b in elements:
                    if compose(a, b) not in eset:
                        raise ValueError("not closed under composition")
    return enum


def check_group_axioms(enum: GroupEnumeration, exhaustive_limit: int = 10_000, samples: int = 200, seed: int = 0):
    """Closure, identity and inverses; exhaustive up to the limit, sampled beyond."""
    import random

    eset = set(enum.elements)
    assert identity(enum.degree) in eset, "identity missing"
    assert len(eset) == enum.order, "duplicate elements"
    for g in enum.elements[: min(enum.order, exhaustive_limit)]:
        assert inverse(g) in eset, f"inverse missing for {g}"
    if enum.order <= 400:  # order^2 products is cheap here
        for a in enum.elements:
            for b in enum.elements:
                assert compose(a, b) in eset
    else:
        rng = random.Random(seed)
        for _ in range(samples):
            a = enum.elements[rng.randrange(enum.order)]
            b = enum.elements[rng.randrange(enum.order)]
            assert compose(a, b) in eset


# ---------------------------------------------------------------------------
# Induced action on t-arrangements


@dataclass(eq=False)
class ArrangementAction:
    """The set of ordered t-tuples of distinct points, indexed in lexicographic order."""

    n: int
    t: int
    cells: tuple[tuple[int, ...], ...] = field(repr=False)
    index: dict = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.cells)

    def cell_perm(self, g: Perm) -> Perm:
        """The permutation of cell indices induced by g."""
        idx = self.index
        return tuple(idx[tuple(g[x] for x in cell)] for cell in self.cells)


def arrangements(n: int, t: int) -> ArrangementAction:
    if not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= {n}, got t={t}")
    cells = tuple(itertools.permutations(range(n), t))
    return ArrangementAction(n, t, cells, {c: i for i, c in enumerate(cells)})


def induced_action(group, t: int):
    """Re-express a group on the cells of its t-arrangement action.

    Returns (action, group-on-cells) where the second component has the same
    kind as the input (GroupSpec or GroupEnumeration, element order kept).
    """
    action = arrangements(group.degree, t)
    if isinstance(group, GroupSpec):
        gens = tuple(action.cell_perm(g) for g in group.generators)
        out = GroupSpec(action.size, gens, f"{group.name}^({t})", group.declared_order)
    else:
        elems = [action.cell_perm(g) for g in group.elements]
        out = GroupEnumeration(action.size, elems, f"{group.name}^({t})")
    return action, out


# ---------------------------------------------------------------------------
# Orbits and conjugation classes


def orbits_on_pairs(H: GroupEnumeration, n: int | None = None) -> list[list[tuple[int, int]]]:
    """Orbits of H on ordered pairs of points, in first-touch order."""
    if n is None:
        n = H.degree
    seen = set()
    blocks = []
    for pair in itertools.product(range(n), repeat=2):
        if pair in seen:
            continue
        orbit = {(h[pair[0]], h[pair[1]]) for h in H.elements}
        seen |= orbit
        blocks.append(sorted(orbit))
    return blocks


@dataclass
class ConjugationClasses:
    """Orbits of H acting on G by conjugation g -> h^-1 g h."""

    reps: list[Perm]
    sizes: list[int]
    classes: list[list[Perm]]


def conjugation_reps(G: GroupEnumeration, H: GroupEnumeration) -> ConjugationClasses:
    """Representatives (minimal in enumeration order) of H-conjugation orbits on G."""
    gset = G.index()
    for h in H.elements:
        if h not in gset:
            raise ValueError("H is not contained in G")
    hinv = [inverse(h) for h in H.elements]
    assigned = set()
    reps, sizes, classes = [], [], []
    for g in G.elements:
        if g in assigned:
            continue
        orbit = {compose(compose(hi, g), h) for hi, h in zip(hinv, H.elements)}
        assigned |= orbit
        members = [x for x in G.elements if x in orbit] if len(orbit) > 1 else [g]
        reps.append(g)
        sizes.append(len(orbit))
        classes.append(members)
    if sum(sizes) != G.order:
        raise AssertionError("conjugation orbits do not partition G")
    return ConjugationClasses(reps, sizes, classes)


# ---------------------------------------------------------------------------
# Group files: line 1 "n <degree>", optional "order <N>", then one generator
# per nonempty line as whitespace-separated 0-based images; '#' comments.


def load_group(path) -> GroupSpec:
    degree = None
    declared = None
    gens = []
    name = ""
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] == "n" and degree is None:
                degree = int(parts[1])
            elif parts[0] == "order":
                declared = int(parts[1])
            else:
                gens.append(tuple(int(p) for p in parts))
    if degree is None:
        raise ValueError(f"{path}: missing 'n <degree>' header")
    import os

    name = os.path.splitext(os.path.basename(str(path)))[0]
    return GroupSpec(degree, tuple(gens), name, declared)


def dump_group(spec: GroupSpec, path) -> None:
    with open(path, "w") as fh:
        fh.write(f"n {spec.degree}\n")
        if spec.declared_order is not None:
            fh.write(f"order {spec.declared_order}\n")
        for g in spec.generators:
            fh.write(" ".join(str(x) for x in g) + "\n")
