"""Symplectic spaces over GF(2^m) and an elliptic quadric polarizing to the form.

Points come in two flavours: nonzero vectors of F_q^(2n), and projective
points of PG(2n-1, q) represented by the scalar multiple whose first nonzero
coordinate is 1. Both are indexed deterministically (lexicographic vector
order), so every downstream bitset is reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import gf
from .gf import FieldSpec
from .perm import GroupSpec, Perm

Vector = tuple[int, ...]


@dataclass(eq=False)
class SymplecticSpace:
    """F_q^(2n) with the standard alternating form on hyperbolic coordinate pairs."""

    n: int
    field: FieldSpec
    vectors: list[Vector] = field(repr=False)           # all nonzero vectors, lex order
    vec_index: dict = field(repr=False)
    proj_points: list[Vector] = field(repr=False)       # canonical representatives
    proj_index: dict = field(repr=False)                # canonical rep -> projective index
    proj_of_vec: list[int] = field(repr=False)          # vector index -> projective index

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def dim(self) -> int:
        return 2 * self.n

    @property
    def num_vectors(self) -> int:
        return len(self.vectors)

    @property
    def num_proj_points(self) -> int:
        return len(self.proj_points)

    def canonical_rep(self, v: Vector) -> Vector:
        """Scale v so its first nonzero coordinate is 1."""
        for c in v:
            if c:
                if c == 1:
                    return v
                s = gf.inv(self.field, c)
                return tuple(gf.mul(self.field, s, x) for x in v)
        raise ValueError("zero vector has no projective point")

    def proj_point(self, v: Vector) -> int:
        return self.proj_index[self.canonical_rep(v)]

    def add(self, u: Vector, v: Vector) -> Vector:
        return tuple(a ^ b for a, b in zip(u, v))

    def scale(self, c: int, v: Vector) -> Vector:
        return tuple(gf.mul(self.field, c, x) for x in v)


def symplectic_space(n: int, field: FieldSpec) -> SymplecticSpace:
    if n < 2:
        raise ValueError("need n >= 2")
    q = field.q
    vectors = [v for v in itertools.product(range(q), repeat=2 * n) if any(v)]
    vec_index = {v: i for i, v in enumerate(vectors)}
    space = SymplecticSpace(n, field, vectors, vec_index, [], {}, [])
    proj_points: list[Vector] = []
    proj_index: dict = {}
    proj_of_vec = []
    for v in vectors:
        rep = space.canonical_rep(v)
        if rep not in proj_index:
            proj_index[rep] = len(proj_points)
            proj_points.append(rep)
        proj_of_vec.append(proj_index[rep])
    space.proj_points = proj_points
    space.proj_index = proj_index
    space.proj_of_vec = proj_of_vec
    assert len(vectors) == q ** (2 * n) - 1
    assert len(proj_points) == (q ** (2 * n) - 1) // (q - 1)
    return space


def symplectic_form(space: SymplecticSpace, x: Vector, y: Vector) -> int:
    """sum over coordinate pairs of x_{2i} y_{2i+1} + x_{2i+1} y_{2i}."""
    F = space.field
    acc = 0
    for i in range(0, space.dim, 2):
        acc ^= gf.mul(F, x[i], y[i + 1]) ^ gf.mul(F, x[i + 1], y[i])
    return acc


# ---------------------------------------------------------------------------
# Elliptic quadric


@dataclass
class QuadricData:
    """Zero set of Q(x) = x0 x1 + ... + x_{2n-4} x_{2n-3} + (x_{2n-2}^2 + x_{2n-2} x_{2n-1} + delta x_{2n-1}^2)."""

    delta: int
    projective_set: int     # bitset over projective point indices
    vector_set: int         # bitset over vector indices (preimage under projection)

    @property
    def projective_size(self) -> int:
        return self.projective_set.bit_count()

    @property
    def vector_size(self) -> int:
        return self.vector_set.bit_count()


def quadric_value(space: SymplecticSpace, delta: int, v: Vector) -> int:
    F = space.field
    acc = 0
    for i in range(0, space.dim - 2, 2):
        acc ^= gf.mul(F, v[i], v[i + 1])
    a, b = v[-2], v[-1]
    acc ^= gf.mul(F, a, a) ^ gf.mul(F, a, b) ^ gf.mul(F, delta, gf.mul(F, b, b))
    return acc


def elliptic_quadric(space: SymplecticSpace) -> QuadricData:
    """The elliptic quadric whose polar form is the space's symplectic form.

    delta is the least field element of absolute trace 1, which makes the
    binary summand x^2 + xy + delta y^2 irreducible, so the quadric is of
    minus type. Both point counts and the polarization identity are checked.
    """
    F = space.field
    delta = next((a for a in F.elements() if gf.trace(F, a) == 1), None)
    assert delta is not None, "trace is onto {0,1} for every valid field"
    proj_set = 0
    for i, rep in enumerate(space.proj_points):
        if quadric_value(space, delta, rep) == 0:
            proj_set |= 1 << i
    vec_set = 0
    for vi, pi in enumerate(space.proj_of_vec):
        if proj_set >> pi & 1:
            vec_set |= 1 << vi
    quad = QuadricData(delta, proj_set, vec_set)
    q, n = space.q, space.n
    expected = (q ** (2 * n - 1) - 1) // (q - 1) - q ** (n - 1)
    assert quad.projective_size == expected, "elliptic point count"
    assert quad.vector_size == (q - 1) * expected
    _check_polarization(space, delta)
    return quad


def _check_polarization(space: SymplecticSpace, delta: int, limit: int = 4096) -> None:
    """Q(x+y) + Q(x) + Q(y) == <x, y>, exhaustively on small spaces."""
    vecs = space.vectors
    if len(vecs) <= limit:
        pool_x = pool_y = vecs
    else:
        pool_x = vecs[::37][:40]
        pool_y = vecs[::53][:40]
    for x in pool_x:
        for y in pool_y:
            lhs = (
                quadric_value(space, delta, space.add(x, y))
                ^ quadric_value(space, delta, x)
                ^ quadric_value(space, delta, y)
            )
            assert lhs == symplectic_form(space, x, y), "quadric does not polarize to the form"


# ---------------------------------------------------------------------------
# Lines of PG(2n-1, q)


@dataclass(frozen=True)
class ProjectiveLine:
    """The q+1 projective points spanned by two independent vectors."""

    points: int          # bitset over projective indices
    u: Vector
    v: Vector


def line_through(space: SymplecticSpace, u: Vector, v: Vector) -> ProjectiveLine:
    pts = 1 << space.proj_point(u) | 1 << space.proj_point(v)
    for c in range(1, space.q):
        pts |= 1 << space.proj_point(space.add(u, space.scale(c, v)))
    assert pts.bit_count() == space.q + 1
    return ProjectiveLine(pts, u, v)


def enumerate_lines(space: SymplecticSpace) -> list[ProjectiveLine]:
    """Every line exactly once, keyed by its two lowest-index points."""
    lines = []
    npts = space.num_proj_points
    for i in range(npts):
        for j in range(i + 1, npts):
            line = line_through(space, space.proj_points[i], space.proj_points[j])
            low = line.points & ((1 << j) - 1)
            if low == (1 << i):  # i, j are the two smallest members
                lines.append(line)
    pairs = npts * (npts - 1) // 2
    per_line = (space.q + 1) * space.q // 2
    assert len(lines) == pairs // per_line, "line census"
    return lines


def is_nonsingular_line(space: SymplecticSpace, line: ProjectiveLine) -> bool:
    """True when the form does not vanish on a (hence any) spanning pair."""
    return symplectic_form(space, line.u, line.v) != 0


def nonsingular_lines(space: SymplecticSpace) -> list[ProjectiveLine]:
    return [l for l in enumerate_lines(space) if is_nonsingular_line(space, l)]


def nonsingular_line_count(n: int, q: int) -> int:
    """Independent census: hyperbolic-pair count divided by pairs per line."""
    return q ** (2 * n - 2) * (q ** (2 * n) - 1) // (q * q - 1)


# ---------------------------------------------------------------------------
# The symplectic group via transvections, as permutations of points


def sp_order(n: int, q: int) -> int:
    """|Sp(2n, q)| = q^(n^2) * prod (q^(2i) - 1)."""
    order = q ** (n * n)
    for i in range(1, n + 1):
        order *= q ** (2 * i) - 1
    return order


def _transvection(space: SymplecticSpace, u: Vector, lam: int):
    F = space.field

    def apply(x: Vector) -> Vector:
        c = gf.mul(F, lam, symplectic_form(space, x, u))
        if c == 0:
            return x
        return space.add(x, space.scale(c, u))

    return apply


def symplectic_generators(space: SymplecticSpace, action: str = "projective") -> GroupSpec:
    """All symplectic transvections x -> x + lam <x,u> u as point permutations.

    Transvections generate the full symplectic group; each one is checked to
    preserve the form before being converted into a permutation of the chosen
    point set ("projective" or "vector").
    """
    if action not in ("projective", "vector"):
        raise ValueError("action must be 'projective' or 'vector'")
    gens = []
    check_pairs = _form_check_pairs(space)
    for u in space.proj_points:
        for lam in range(1, space.q):
            t = _transvection(space, u, lam)
            for x, y in check_pairs:
                assert symplectic_form(space, t(x), t(y)) == symplectic_form(space, x, y)
            gens.append(_point_perm(space, t, action))
    degree = space.num_proj_points if action == "projective" else space.num_vectors
    return GroupSpec(
        degree,
        tuple(gens),
        name=f"Sp({space.dim},{space.q})-{action}",
        declared_order=sp_order(space.n, space.q),
    )


def _form_check_pairs(space: SymplecticSpace, limit: int = 24):
    vecs = space.vectors
    if len(vecs) * len(vecs) <= 4096:
        return [(x, y) for x in vecs for y in vecs]
    step = max(1, len(vecs) // limit)
    sample = vecs[::step][:limit]
    return [(x, y) for x in sample for y in sample]


def _point_perm(space: SymplecticSpace, vec_map, action: str) -> Perm:
    if action == "vector":
        return tuple(space.vec_index[vec_map(v)] for v in space.vectors)
    return tuple(space.proj_point(vec_map(rep)) for rep in space.proj_points)


def frobenius_point_map(space: SymplecticSpace, action: str = "projective") -> Perm:
    """Coordinatewise squaring as a permutation of points.

    It is semilinear and fixes the form's (prime field) coefficients, so it
    maps lines to lines and preserves nonsingularity.
    """
    F = space.field

    def sq(v: Vector) -> Vector:
        return tuple(gf.mul(F, c, c) for c in v)

    return _point_perm(space, sq, action)


def apply_to_set(perm: Perm, point_set: int) -> int:
    """Image of a bitset of points under a point permutation."""
    out = 0
    while point_set:
        low = point_set & -point_set
        out |= 1 << perm[low.bit_length() - 1]
        point_set ^= low
    return out


def vector_lift(space: SymplecticSpace, proj_set: int) -> int:
    """Preimage of a projective point set under the projection of nonzero vectors."""
    out = 0
    for vi, pi in enumerate(space.proj_of_vec):
        if proj_set >> pi & 1:
            out |= 1 << vi
    return out
