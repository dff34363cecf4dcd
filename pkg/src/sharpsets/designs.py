"""The Witt design on 23 points, the McLaughlin graph, symmetric-design arithmetic.

The design is built from scratch: the length-23 binary quadratic-residue code
(dimension 12, minimum weight 7) is generated inside GF(2^11), and the 253
supports of weight-7 codewords are the blocks. Everything downstream is
verified combinatorially (Steiner property, intersection spectrum, strong
regularity) rather than taken from tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import gf
from .perm import GroupSpec, Perm, compose, inverse, is_permutation

GOLAY_LENGTH = 23
QUADRATIC_RESIDUES_23 = tuple(sorted({(i * i) % 23 for i in range(1, 23)}))


@dataclass
class Design:
    """Point set {0..v-1} with blocks stored as bitsets."""

    v: int
    k: int
    blocks: tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        assert all(b.bit_count() == self.k for b in self.blocks), "block size"
        assert len(set(self.blocks)) == len(self.blocks), "duplicate blocks"

    @property
    def b(self) -> int:
        return len(self.blocks)

    def block_points(self, block: int) -> list[int]:
        return [i for i in range(self.v) if block >> i & 1]


def _qr_generator_polynomial() -> int:
    """GF(2) generator polynomial of the [23, 12, 7] quadratic-residue code.

    Its roots are alpha^r for r running over the squares mod 23, where alpha
    is an element of order 23 in GF(2^11); the coefficients land in GF(2).
    """
    F = gf.FieldSpec(11, gf.default_modulus(11))
    alpha = None
    for gamma in range(2, F.q):
        cand = gf.power(F, gamma, 89)  # 2^11 - 1 = 23 * 89
        if cand != 1:
            alpha = cand
            break
    assert alpha is not None and gf.power(F, alpha, 23) == 1
    # product of (x + alpha^r) over the residue exponents, in GF(2^11)[x]
    poly = [1]
    for r in QUADRATIC_RESIDUES_23:
        root = gf.power(F, alpha, r)
        nxt = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] ^= c
            nxt[i] ^= gf.mul(F, root, c)
        poly = nxt
    assert all(c in (0, 1) for c in poly), "coefficients must drop to GF(2)"
    bits = 0
    for i, c in enumerate(poly):
        bits |= c << i
    assert bits.bit_length() - 1 == 11
    return bits


def _gf2_poly_mul(a: int, b: int) -> int:
    p = 0
    while b:
        if b & 1:
            p ^= a
        a <<= 1
        b >>= 1
    return p


def golay_codewords() -> list[int]:
    """All 4096 codewords of the [23, 12, 7] code as 23-bit masks."""
    g = _qr_generator_polynomial()
    words = [_gf2_poly_mul(msg, g) for msg in range(1 << 12)]
    assert all(w < 1 << 23 for w in words)
    return words


def golay_witt_design() -> Design:
    """The Steiner system with 253 blocks of size 7 on 23 points.

    Blocks are the supports of the weight-7 codewords; the weight census is
    asserted here, the Steiner property has its own checker below.
    """
    words = golay_codewords()
    weights = {}
    for w in words:
        weights[w.bit_count()] = weights.get(w.bit_count(), 0) + 1
    min_weight = min(w for w in weights if w > 0)
    assert min_weight == 7, f"minimum weight census broke: {weights}"
    assert weights[7] == 253, f"weight-7 census {weights.get(7)}"
    blocks = tuple(sorted(w for w in words if w.bit_count() == 7))
    return Design(GOLAY_LENGTH, 7, blocks, name="W23")


def steiner_check(design: Design, t: int = 4) -> bool:
    """Every t-subset of points lies in exactly one block."""
    covered = set()
    for block in design.blocks:
        pts = design.block_points(block)
        for sub in itertools.combinations(pts, t):
            if sub in covered:
                return False
            covered.add(sub)
    from math import comb

    return len(covered) == comb(design.v, t)


def block_intersection_spectrum(design: Design) -> set[int]:
    """Sizes |B1 & B2| over all unordered pairs of distinct blocks."""
    sizes = set()
    blocks = design.blocks
    for i in range(len(blocks)):
        bi = blocks[i]
        for j in range(i + 1, len(blocks)):
            sizes.add((bi & blocks[j]).bit_count())
    return sizes


def blocks_through(design: Design, point: int) -> list[int]:
    if not 0 <= point < design.v:
        raise ValueError(f"point {point} out of range")
    return [b for b in design.blocks if b >> point & 1]


def blocks_avoiding(design: Design, point: int) -> list[int]:
    if not 0 <= point < design.v:
        raise ValueError(f"point {point} out of range")
    return [b for b in design.blocks if not b >> point & 1]


# ---------------------------------------------------------------------------
# Graphs and the McLaughlin construction


@dataclass
class Graph:
    """Simple graph on {0..n-1}; adjacency rows are bitsets."""

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        assert len(self.adj) == self.n
        for i, row in enumerate(self.adj):
            assert not row >> i & 1, "loop"
        for i in range(self.n):
            for j in range(i + 1, self.n):
                assert (self.adj[i] >> j & 1) == (self.adj[j] >> i & 1), "asymmetric"

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)


def common_neighborhood(graph: Graph, i: int, j: int) -> int:
    if i == j:
        raise ValueError("need two distinct vertices")
    return graph.adj[i] & graph.adj[j]


@dataclass
class SrgReport:
    ok: bool
    violation: str | None = None


def srg_check(graph: Graph, params: tuple[int, int, int, int]) -> SrgReport:
    """Verify strong regularity: degree k, lambda on edges, mu on non-edges."""
    v, k, lam, mu = params
    if graph.n != v:
        return SrgReport(False, f"vertex count {graph.n} != {v}")
    for i in range(graph.n):
        if graph.degree(i) != k:
            return SrgReport(False, f"vertex {i} has degree {graph.degree(i)} != {k}")
    for i in range(graph.n):
        for j in range(i + 1, graph.n):
            c = (graph.adj[i] & graph.adj[j]).bit_count()
            want = lam if graph.adjacent(i, j) else mu
            if c != want:
                kind = "adjacent" if graph.adjacent(i, j) else "non-adjacent"
                return SrgReport(False, f"{kind} pair ({i},{j}) has {c} common neighbors, wanted {want}")
    return SrgReport(True)


@dataclass
class McLaughlinData:
    """The 275-vertex graph plus the vertex bookkeeping used to build it.

    Vertices 0..21 are the design points other than the special point,
    then the 77 blocks through it, then the 176 blocks avoiding it.
    """

    graph: Graph
    design: Design
    special_point: int
    point_vertex_mask: int            # vertices 0..21
    u_blocks: list[int]               # blocks through the special point
    v_blocks: list[int]               # blocks avoiding it


def mclaughlin_graph(special_point: int = 22) -> McLaughlinData:
    """Build the McLaughlin graph from the Witt design.

    With q the special point, vertices are the 22 remaining points (B), the
    77 blocks through q (U) and the 176 blocks avoiding q (V). Adjacency:
    B is independent; b~u iff b not in u; b~v iff b in v; u~u' iff they meet
    only in q; v~v' iff |v & v'| = 1; u~v iff |u & v| = 3.
    """
    design = golay_witt_design()
    q = special_point
    u_blocks = blocks_through(design, q)
    v_blocks = blocks_avoiding(design, q)
    assert (len(u_blocks), len(v_blocks)) == (77, 176)
    points = [p for p in range(design.v) if p != q]
    assert points == list(range(22)), "special point must be the last design point"
    n = 22 + 77 + 176
    adj = [0] * n
    u_off, v_off = 22, 22 + 77

    def link(i, j):
        adj[i] |= 1 << j
        adj[j] |= 1 << i

    for bi, p in enumerate(points):
        for ui, u in enumerate(u_blocks):
            if not u >> p & 1:
                link(bi, u_off + ui)
        for vi, v in enumerate(v_blocks):
            if v >> p & 1:
                link(bi, v_off + vi)
    for i in range(77):
        for j in range(i + 1, 77):
            if (u_blocks[i] & u_blocks[j]).bit_count() == 1:
                link(u_off + i, u_off + j)
    for i in range(176):
        for j in range(i + 1, 176):
            if (v_blocks[i] & v_blocks[j]).bit_count() == 1:
                link(v_off + i, v_off + j)
    for i in range(77):
        for j in range(176):
            if (u_blocks[i] & v_blocks[j]).bit_count() == 3:
                link(u_off + i, v_off + j)
    labels = tuple(
        [f"point:{p}" for p in points]
        + [f"block+q:{i}" for i in range(77)]
        + [f"block-q:{i}" for i in range(176)]
    )
    graph = Graph(n, tuple(adj), labels)
    return McLaughlinData(graph, design, q, (1 << 22) - 1, u_blocks, v_blocks)


# ---------------------------------------------------------------------------
# Symmetric 2-designs: the stabilizer counting argument as checkable steps


@dataclass(frozen=True)
class SymmetricDesignParams:
    v: int
    k: int
    lam: int

    def __post_init__(self):
        if not (self.v > self.k > self.lam >= 1):
            raise ValueError(f"need v > k > lambda >= 1, got {self}")
        if (self.v - 1) * self.lam != self.k * (self.k - 1):
            raise ValueError(f"(v-1)*lambda != k*(k-1) for {self}")


@dataclass
class RefutationStep:
    name: str
    equation: str
    ok: bool
    detail: str


@dataclass
class RefutationTrace:
    params: SymmetricDesignParams
    steps: list[RefutationStep]
    conclusion: str  # "refuted" or "trivial-inapplicable"

    def as_dict(self) -> dict:
        return {
            "params": {"v": self.params.v, "k": self.params.k, "lambda": self.params.lam},
            "steps": [
                {"name": s.name, "equation": s.equation, "ok": s.ok, "detail": s.detail}
                for s in self.steps
            ],
            "conclusion": self.conclusion,
        }


def symmetric_design_refutation(params: SymmetricDesignParams) -> RefutationTrace:
    """Arithmetic refutation of a sharply transitive subset in a point stabilizer.

    Counting block images of a hypothetical sharply transitive set S on the
    v-1 points off a fixed point forces a(k-lam) = k (block avoiding the
    point) and b(k-lam) = v-k (block through it), with a, b non-negative
    integer frequencies. Divisibility then forces k-lam = 1, which happens
    only for the trivial design k = v-1. Any integrality failure refutes S
    at that step; a trivial design leaves the method inapplicable.
    """
    v, k, lam = params.v, params.k, params.lam
    d = k - lam
    steps: list[RefutationStep] = []

    a = Fraction(k, d)
    ok_a = a.denominator == 1
    steps.append(
        RefutationStep(
            "fix-count-avoiding",
            f"a*(k-lambda) = k, i.e. a*{d} = {k}",
            ok_a,
            f"a = {a}" + ("" if ok_a else " is not an integer: no such frequency exists"),
        )
    )
    if not ok_a:
        return RefutationTrace(params, steps, "refuted")

    b = Fraction(v - k, d)
    ok_b = b.denominator == 1
    steps.append(
        RefutationStep(
            "fix-count-through",
            f"b*(k-lambda) = v-k, i.e. b*{d} = {v - k}",
            ok_b,
            f"b = {b}" + ("" if ok_b else " is not an integer: no such frequency exists"),
        )
    )
    if not ok_b:
        return RefutationTrace(params, steps, "refuted")

    # both integral: k-lam divides k and v-k, hence v; it always divides v-1
    # because k(v-k) = (v-1)(k-lam); coprimality of v and v-1 forces d = 1
    assert k * (v - k) == (v - 1) * d
    divides_v = (v % d) == 0
    divides_v1 = ((v - 1) % d) == 0
    ok_div = divides_v and divides_v1 and d == 1
    steps.append(
        RefutationStep(
            "divisibility-chain",
            f"k-lambda divides both v = {v} and v-1 = {v - 1}, so k-lambda = 1",
            ok_div,
            f"k-lambda = {d}"
            + ("" if ok_div else ", which cannot divide two consecutive integers unless it is 1"),
        )
    )
    if not ok_div:
        return RefutationTrace(params, steps, "refuted")

    trivial = k == v - 1
    steps.append(
        RefutationStep(
            "nontriviality",
            "k-lambda = 1 forces k = v-1 (the trivial design)",
            trivial,
            f"k = {k}, v-1 = {v - 1}",
        )
    )
    if trivial:
        return RefutationTrace(params, steps, "trivial-inapplicable")
    return RefutationTrace(params, steps, "refuted")


# ---------------------------------------------------------------------------
# Automorphisms of the Witt design fixing the special point


def is_design_automorphism(design: Design, g: Perm) -> bool:
    """Does g (a permutation of the points) map every block onto a block?"""
    block_set = set(design.blocks)
    for block in design.blocks:
        image = 0
        rest = block
        while rest:
            low = rest & -rest
            image |= 1 << g[low.bit_length() - 1]
            rest ^= low
        if image not in block_set:
            return False
    return True


def _gf23_scale_map(c: int) -> Perm:
    return tuple((c * y) % 23 for y in range(23))


def _gf23_shift_map(b: int) -> Perm:
    return tuple((y + b) % 23 for y in range(23))


def _gf23_power_map() -> Perm:
    """y -> y^3 on squares, y -> 2 y^3 on non-squares, fixing 0.

    The constants depend on which of the two quadratic-residue codes the
    generator polynomial produced; this pair is the one that preserves ours
    (asserted by the caller against the full block set).
    """
    qr = set(QUADRATIC_RESIDUES_23)
    images = [0] * 23
    for y in range(1, 23):
        cube = pow(y, 3, 23)
        images[y] = cube if y in qr else (2 * cube) % 23
    return tuple(images)


def complete_design_automorphism(design: Design, prescribed: dict[int, int], fixed: tuple[int, ...] = ()) -> Perm | None:
    """Extend a partial point map to a design automorphism, or report none.

    Depth-first completion in point order, images tried ascending. The prune
    uses the Steiner structure: for each 4-subset of already-mapped points,
    the mapped part of its (unique) block must land inside the block of the
    image 4-subset. Deterministic, so repeated calls return the same map.
    """
    block_of: dict[tuple[int, ...], int] = {}
    pts_of = {b: design.block_points(b) for b in design.blocks}
    for b in design.blocks:
        for sub in itertools.combinations(pts_of[b], 4):
            block_of[sub] = b

    img = [-1] * design.v
    used = [False] * design.v
    for x in fixed:
        img[x] = x
        used[x] = True
    for x, y in prescribed.items():
        if img[x] != -1 or used[y]:
            raise ValueError("prescribed images clash")
        img[x] = y
        used[y] = True
    todo = [x for x in range(design.v) if img[x] == -1]

    def consistent(x: int) -> bool:
        mapped = [p for p in range(design.v) if img[p] != -1]
        for trip in itertools.combinations([p for p in mapped if p != x], 3):
            sub = tuple(sorted(trip + (x,)))
            target = block_of[tuple(sorted(img[p] for p in sub))]
            for p in pts_of[block_of[sub]]:
                if img[p] != -1 and not target >> img[p] & 1:
                    return False
        return True

    for x in list(prescribed) + list(fixed):
        if not consistent(x):
            return None

    def dfs(k: int) -> bool:
        if k == len(todo):
            return True
        x = todo[k]
        for y in range(design.v):
            if used[y]:
                continue
            img[x] = y
            used[y] = True
            if consistent(x) and dfs(k + 1):
                return True
            img[x] = -1
            used[y] = False
        return False

    if not dfs(0):
        return None
    g = tuple(img)
    assert is_design_automorphism(design, g)
    return g


def witt_stabilizer_generators(design: Design | None = None, special_point: int = 22) -> GroupSpec:
    """Generators of the stabilizer of one point in the design's automorphism group.

    Two coordinate maps of GF(23) fix 0 and preserve the quadratic-residue
    code: multiplication by 2 and the cube-based power map. Conjugating by a
    shift moves their common fixed point onto the chosen special point. They
    only generate a metacyclic group of order 55, so a third automorphism,
    found by deterministic backtracking with the images of three points
    prescribed, is added; the closure of the three then has order 443520,
    which is validated whenever the group is enumerated.
    """
    if design is None:
        design = golay_witt_design()
    shift = _gf23_shift_map((0 - special_point) % 23)  # special_point -> 0
    shift_back = inverse(shift)
    gens = []
    for base in (_gf23_scale_map(2), _gf23_power_map()):
        g = compose(compose(shift, base), shift_back)
        assert g[special_point] == special_point
        assert is_design_automorphism(design, g), "map does not preserve the block set"
        gens.append(g)
    low = sorted(p for p in range(design.v) if p != special_point)[:3]
    extra = complete_design_automorphism(
        design, {low[0]: low[1], low[1]: low[2], low[2]: low[0]}, fixed=(special_point,)
    )
    assert extra is not None, "the stabilizer acts transitively on point triples"
    gens.append(extra)
    keep = [x for x in range(design.v) if x != special_point]
    relabel = {x: i for i, x in enumerate(keep)}
    restricted = []
    for g in gens:
        r = tuple(relabel[g[x]] for x in keep)
        assert is_permutation(r)
        restricted.append(r)
    return GroupSpec(22, tuple(restricted), name="witt-point-stabilizer", declared_order=443520)


# ---------------------------------------------------------------------------
# File formats


def write_design(design: Design, path) -> None:
    """Line 1: 'v k b'; then one block per line as sorted 0-based points."""
    with open(path, "w") as fh:
        fh.write(f"{design.v} {design.k} {design.b}\n")
        for block in design.blocks:
            fh.write(" ".join(str(p) for p in design.block_points(block)) + "\n")


def read_design(path, name="") -> Design:
    with open(path) as fh:
        v, k, b = (int(x) for x in fh.readline().split())
        blocks = []
        for _ in range(b):
            pts = [int(x) for x in fh.readline().split()]
            mask = 0
            for p in pts:
                mask |= 1 << p
            blocks.append(mask)
    return Design(v, k, tuple(blocks), name)


def write_graph(graph: Graph, path) -> None:
    """Line 1: vertex count; then one adjacency row per line as a bit string."""
    with open(path, "w") as fh:
        fh.write(f"{graph.n}\n")
        for row in graph.adj:
            fh.write("".join("1" if row >> j & 1 else "0" for j in range(graph.n)) + "\n")


def read_graph(path) -> Graph:
    with open(path) as fh:
        n = int(fh.readline())
        adj = []
        for _ in range(n):
            bits = fh.readline().strip()
            adj.append(sum(1 << j for j, c in enumerate(bits) if c == "1"))
    return Graph(n, tuple(adj))
