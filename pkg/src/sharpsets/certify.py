"""Divisibility certificates against sharply transitive sets, and case runners.

A certificate is a pair of point subsets B, C and a prime p with p not
dividing |B||C| but p dividing |B & C^g| for every group element g. Any
sharply transitive set S satisfies sum_{g in S} |B & C^g| = |B||C|, which
is impossible under that divisibility pattern, so a verified certificate
refutes existence. The identity itself is checked by doublecount_check.

Two verification modes are provided: "enumerated" walks every group element;
"family" walks a superset of the images {C^g}, which is sound as long as
closure of the family under the group is either checked against generators
or recorded as an explicit assumption in the report.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field as dc_field

from . import designs, geometry, gf
from .perm import (
    GroupEnumeration,
    GroupSpec,
    Perm,
    enumerate_group,
    induced_action,
    load_group,
)

REFUTED = "refuted"
INCONCLUSIVE = "inconclusive"
HYPOTHESIS_NOT_MET = "hypothesis-not-met"


@dataclass(frozen=True)
class Certificate:
    """Candidate contradicting pair (B, C) with a prime p on a fixed domain."""

    b_set: int
    c_set: int
    p: int
    family: str          # "enumerated-group" or a named family rule
    domain: int

    def __post_init__(self):
        if self.b_set == 0 or self.c_set == 0:
            raise ValueError("B and C must be nonempty")
        if self.p < 2 or any(self.p % d == 0 for d in range(2, int(self.p**0.5) + 1)):
            raise ValueError(f"p = {self.p} is not prime")

    @property
    def b_size(self) -> int:
        return self.b_set.bit_count()

    @property
    def c_size(self) -> int:
        return self.c_set.bit_count()


@dataclass
class VerificationReport:
    case: str
    mode: str
    certificate: Certificate | None
    spectrum: dict[int, int]          # intersection size -> multiplicity
    side_condition_ok: bool           # p does not divide |B| |C|
    conclusion: str
    assumptions: tuple[str, ...] = ()
    elapsed_ms: float = 0.0
    notes: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        if self.conclusion == REFUTED:
            assert self.side_condition_ok, "refuted requires p coprime to |B||C|"
            assert self.certificate is not None
            p = self.certificate.p
            assert all(s % p == 0 for s in self.spectrum), "refuted requires p | every size"

    def as_dict(self) -> dict:
        cert = self.certificate
        return {
            "case": self.case,
            "mode": self.mode,
            "B_size": cert.b_size if cert else None,
            "C_size": cert.c_size if cert else None,
            "p": cert.p if cert else None,
            "spectrum": {str(k): v for k, v in sorted(self.spectrum.items())},
            "conclusion": self.conclusion,
            "assumptions": list(self.assumptions),
            "elapsed_ms": self.elapsed_ms,
            "notes": self.notes,
        }


def apply_to_set(g: Perm, point_set: int) -> int:
    out = 0
    while point_set:
        low = point_set & -point_set
        out |= 1 << g[low.bit_length() - 1]
        point_set ^= low
    return out


# ---------------------------------------------------------------------------
# The counting identity


@dataclass
class DoublecountReport:
    sharply_transitive: bool
    lhs: int                     # sum over g of |B & C^g|
    rhs: int                     # |B| |C|
    equal: bool


def doublecount_check(S: list[Perm], b_set: int, c_set: int) -> DoublecountReport:
    """Check sum_{g in S} |B & C^g| == |B||C| for a claimed sharply transitive S.

    Sharp transitivity of S is verified independently first (every ordered
    pair of points connected by exactly one member); if it fails, the report
    flags it and makes no claim about the identity.
    """
    n = len(S[0])
    coverage = [[0] * n for _ in range(n)]
    for g in S:
        for x in range(n):
            coverage[x][g[x]] += 1
    sharp = all(coverage[x][y] == 1 for x in range(n) for y in range(n))
    lhs = sum((b_set & apply_to_set(g, c_set)).bit_count() for g in S)
    rhs = b_set.bit_count() * c_set.bit_count()
    return DoublecountReport(sharp, lhs, rhs, sharp and lhs == rhs)


# ---------------------------------------------------------------------------
# Verification modes


def verify_certificate_enumerated(G: GroupEnumeration, cert: Certificate, case: str = "") -> VerificationReport:
    """Check p | |B & C^g| for every element of the enumerated group."""
    if cert.domain != G.degree:
        raise ValueError(f"certificate domain {cert.domain} != group degree {G.degree}")
    t0 = time.perf_counter()
    p = cert.p
    side_ok = (cert.b_size * cert.c_size) % p != 0
    spectrum: dict[int, int] = {}
    b_set, c_set = cert.b_set, cert.c_set
    for g in G.elements:
        size = (b_set & apply_to_set(g, c_set)).bit_count()
        spectrum[size] = spectrum.get(size, 0) + 1
    refuted = side_ok and all(s % p == 0 for s in spectrum)
    return VerificationReport(
        case=case or G.name,
        mode="enumerated",
        certificate=cert,
        spectrum=spectrum,
        side_condition_ok=side_ok,
        conclusion=REFUTED if refuted else INCONCLUSIVE,
        assumptions=(f"all {G.order} group elements enumerated",),
        elapsed_ms=(time.perf_counter() - t0) * 1e3,
    )


def verify_certificate_family(
    family: list[int],
    b_set: int,
    c_set: int,
    p: int,
    *,
    domain: int,
    closure_witness,
    case: str = "",
    family_name: str = "family",
) -> VerificationReport:
    """Check p | |B & C'| over a family of sets containing every image C^g.

    closure_witness is either a sequence of generator permutations, in which
    case closure of the family under each of them is verified here, or a
    string stating the mathematical reason the family is closed, which is
    recorded as an assumption of the report.
    """
    if not family:
        raise ValueError("family is empty")
    if c_set not in set(family):
        raise ValueError("C must be a member of its own family")
    t0 = time.perf_counter()
    cert = Certificate(b_set, c_set, p, family_name, domain)
    side_ok = (cert.b_size * cert.c_size) % p != 0
    spectrum: dict[int, int] = {}
    for member in family:
        size = (b_set & member).bit_count()
        spectrum[size] = spectrum.get(size, 0) + 1
    assumptions = []
    if isinstance(closure_witness, str):
        assumptions.append(f"assumed: {closure_witness}")
    else:
        gens = list(closure_witness)
        members = set(family)
        for idx, g in enumerate(gens):
            if len(g) != domain:
                raise ValueError("closure generator acts on the wrong domain")
            for member in family:
                if apply_to_set(g, member) not in members:
                    raise AssertionError(f"family not closed under generator {idx}")
        assumptions.append(f"family closure verified under {len(gens)} generators")
    refuted = side_ok and all(s % p == 0 for s in spectrum)
    return VerificationReport(
        case=case,
        mode="family",
        certificate=cert,
        spectrum=spectrum,
        side_condition_ok=side_ok,
        conclusion=REFUTED if refuted else INCONCLUSIVE,
        assumptions=tuple(assumptions),
        elapsed_ms=(time.perf_counter() - t0) * 1e3,
    )


# ---------------------------------------------------------------------------
# Certificate discovery


def _nullspace_mod_p(rows: list[int], ncols: int, p: int) -> list[list[int]]:
    """Basis of {v : M v = 0 (mod p)} for M given as bitmask rows (p=2) or not used."""
    # dense smallish systems; rows are bitmasks only when p == 2
    import numpy as np

    if p == 2:
        mat = [[row >> j & 1 for j in range(ncols)] for row in rows]
    else:
        mat = rows
    a = np.array(mat, dtype=np.int64) % p
    m = a.shape[0]
    pivots = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, m):
            if a[i, c] % p:
                sel = i
                break
        if sel is None:
            continue
        a[[r, sel]] = a[[sel, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        for i in range(m):
            if i != r and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[r]) % p
        pivots.append(c)
        r += 1
        if r == m:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = (-a[i, f]) % p
        basis.append(v)
    return basis


def certificate_search(
    G: GroupEnumeration,
    p: int,
    max_b: int | None = None,
    max_c: int | None = None,
    *,
    budget: int = 20000,
    action=None,
    exhaustive_pair_limit: int = 1 << 20,
) -> Certificate | None:
    """Search for a valid certificate (B, C) for the prime p, or report none.

    On domains small enough that every (B, C) pair fits in the budget the
    scan is exhaustive, so a None answer is a proof of nonexistence within
    the size bounds. On larger domains candidate sets C are drawn from a
    deterministic pool (coordinate comparisons of arrangement cells when an
    ArrangementAction is supplied, then small subsets); for each C the valid
    B are exactly the 0/1 vectors orthogonal mod p to every image C^g, so
    they are read off a nullspace basis instead of guessed.
    """
    n = G.degree
    max_b = n if max_b is None else max_b
    max_c = n if max_c is None else max_c

    def finish(b_set: int, c_set: int) -> Certificate | None:
        if (b_set.bit_count() * c_set.bit_count()) % p == 0:
            return None
        cert = Certificate(b_set, c_set, p, "enumerated-group", n)
        report = verify_certificate_enumerated(G, cert)
        return cert if report.conclusion == REFUTED else None

    if (1 << n) * (1 << n) <= exhaustive_pair_limit:
        # full scan in lexicographic order of the (B, C) bitmask pair
        orbits: dict[int, list[int]] = {}
        for c_set in range(1, 1 << n):
            if c_set.bit_count() > max_c or c_set.bit_count() % p == 0:
                continue
            images = sorted({apply_to_set(g, c_set) for g in G.elements})
            orbits[c_set] = images
        for b_set in range(1, 1 << n):
            if b_set.bit_count() > max_b or b_set.bit_count() % p == 0:
                continue
            for c_set, images in orbits.items():
                if all((b_set & img).bit_count() % p == 0 for img in images):
                    found = finish(b_set, c_set)
                    if found:
                        return found
        return None

    candidates: list[int] = []
    seen = set()

    def push(c_set: int):
        if c_set and c_set not in seen and c_set.bit_count() <= max_c:
            seen.add(c_set)
            candidates.append(c_set)

    if action is not None:
        # natural structured subsets of tuple cells: coordinate comparisons
        for a, b in itertools.combinations(range(action.t), 2):
            lt = sum(1 << i for i, cell in enumerate(action.cells) if cell[a] < cell[b])
            gt = sum(1 << i for i, cell in enumerate(action.cells) if cell[a] > cell[b])
            push(lt)
            push(gt)
    for size in range(1, max_c + 1):
        if len(candidates) >= budget:
            break
        import math

        if math.comb(n, size) + len(candidates) > budget:
            break
        for combo in itertools.combinations(range(n), size):
            push(sum(1 << x for x in combo))

    examined = 0
    for c_set in candidates:
        if examined >= budget:
            return None
        examined += 1
        if c_set.bit_count() % p == 0:
            continue
        images = sorted({apply_to_set(g, c_set) for g in G.elements})
        basis = _nullspace_mod_p(images, n, p) if p != 2 else _nullspace_bitmask(images, n)
        for b_set in _zero_one_vectors(basis, n, p, limit=1 << 16):
            if 0 < b_set.bit_count() <= max_b and b_set.bit_count() % p != 0:
                found = finish(b_set, c_set)
                if found:
                    return found
    return None


def _nullspace_bitmask(rows: list[int], ncols: int) -> list[int]:
    """Nullspace basis mod 2; vectors returned as bitmasks."""
    pivots: dict[int, int] = {}  # pivot column -> reduced row mask
    for row in rows:
        r = row
        for c, m in pivots.items():
            if r >> c & 1:
                r ^= m
        if r:
            pivots[r.bit_length() - 1] = r
    # re-reduce rows so each pivot column appears in exactly one row
    cols = sorted(pivots, reverse=True)
    for c in cols:
        m = pivots[c]
        for c2 in cols:
            if c2 != c and m >> c2 & 1:
                m ^= pivots[c2]
        pivots[c] = m
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = 1 << f
        for c, m in pivots.items():
            if m >> f & 1:
                v |= 1 << c
        basis.append(v)
    return basis


def _zero_one_vectors(basis, ncols: int, p: int, limit: int):
    """All 0/1 vectors (as bitmasks) in the span of the basis, up to a cap."""
    if not basis:
        return
    dim = len(basis)
    if p**dim > limit:
        basis = basis[: max(1, int(limit).bit_length() // max(1, p.bit_length()))]
        dim = len(basis)
    if p == 2:
        for coeffs in range(1, 1 << dim):
            v = 0
            cc = coeffs
            i = 0
            while cc:
                if cc & 1:
                    v ^= basis[i]
                i += 1
                cc >>= 1
            yield v
    else:
        for combo in itertools.product(range(p), repeat=dim):
            if not any(combo):
                continue
            vec = [0] * ncols
            for coef, bvec in zip(combo, basis):
                if coef:
                    for j in range(ncols):
                        vec[j] = (vec[j] + coef * bvec[j]) % p
            if all(x in (0, 1) for x in vec):
                yield sum(1 << j for j, x in enumerate(vec) if x)


# ---------------------------------------------------------------------------
# Case runners


def _alt_generators(n: int) -> GroupSpec:
    from .perm import from_cycles

    three = from_cycles(n, (0, 1, 2))
    if n % 2:
        big = from_cycles(n, tuple(range(n)))
    else:
        big = from_cycles(n, tuple(range(1, n)))
    order = 1  # 3 * 4 * ... * n == n!/2
    for i in range(3, n + 1):
        order *= i
    return GroupSpec(n, (three, big), name=f"A{n}", declared_order=order)


def run_case(case: str, **options) -> VerificationReport:
    """Assemble and verify one of the named nonexistence cases.

    Cases: "alt" (alternating groups on ordered pairs, needs n), "m22",
    "m23", "mclaughlin", "sp" (needs n and q). Options: see the CLI.
    """
    runners = {
        "alt": _run_alt,
        "m22": _run_m22,
        "m23": _run_m23,
        "mclaughlin": _run_mclaughlin,
        "sp": _run_sp,
    }
    if case not in runners:
        raise ValueError(f"unknown case {case!r}; pick from {sorted(runners)}")
    return runners[case](**options)


def _run_alt(n: int, **_ignored) -> VerificationReport:
    """Alternating group acting on ordered pairs; parity certificate with p = 2."""
    t0 = time.perf_counter()
    if n % 4 not in (2, 3):
        return VerificationReport(
            case=f"alt(n={n})",
            mode="enumerated",
            certificate=None,
            spectrum={},
            side_condition_ok=False,
            conclusion=HYPOTHESIS_NOT_MET,
            assumptions=(f"n = {n} is {n % 4} mod 4; the parity argument needs 2 or 3",),
            elapsed_ms=(time.perf_counter() - t0) * 1e3,
        )
    natural = enumerate_group(_alt_generators(n))
    action, induced = induced_action(natural, 2)
    asc = sum(1 << i for i, (x, y) in enumerate(action.cells) if x < y)
    desc = sum(1 << i for i, (x, y) in enumerate(action.cells) if x > y)
    cert = Certificate(asc, desc, 2, "enumerated-group", action.size)
    report = verify_certificate_enumerated(induced, cert, case=f"alt(n={n})")
    report.notes["cells"] = action.size
    report.elapsed_ms = (time.perf_counter() - t0) * 1e3
    return report


def _m22_certificate(design: designs.Design, special_point: int = 22):
    """B = a block avoiding the special point, C = its complement in the 22 points."""
    avoiding = designs.blocks_avoiding(design, special_point)
    block = avoiding[0]
    all22 = (1 << 22) - 1
    return block, all22 ^ block, avoiding


def _run_m22(group_file=None, enumerated: bool | None = None, **_ignored) -> VerificationReport:
    t0 = time.perf_counter()
    design = designs.golay_witt_design()
    b_set, c_set, avoiding = _m22_certificate(design)
    if enumerated is None:
        enumerated = group_file is not None
    fallback_note = None
    if enumerated:
        from .perm import GroupTooLarge

        spec = load_group(group_file) if group_file else designs.witt_stabilizer_generators(design)
        try:
            G = enumerate_group(spec)
        except GroupTooLarge as exc:
            enumerated = False
            fallback_note = f"enumeration refused ({exc}); fell back to family mode"
    if enumerated:
        cert = Certificate(b_set, c_set, 2, "enumerated-group", 22)
        report = verify_certificate_enumerated(G, cert, case="m22")
    else:
        family = [((1 << 22) - 1) ^ blk for blk in avoiding]
        gens = designs.witt_stabilizer_generators(design).generators
        report = verify_certificate_family(
            family,
            b_set,
            c_set,
            2,
            domain=22,
            closure_witness=gens,
            case="m22",
            family_name="complements of the 176 blocks avoiding the special point",
        )
        report.assumptions += (
            "the point stabilizer of the design permutes the blocks avoiding that point, "
            "so every image C^g stays in the family",
        )
        if fallback_note:
            report.notes["fallback"] = fallback_note
    report.elapsed_ms = (time.perf_counter() - t0) * 1e3
    return report


def _run_m23(**_ignored) -> VerificationReport:
    """Degree-23 reduction: no sharply 2-transitive set exists.

    No new computation: a sharply 2-transitive set on 23 points, restricted
    to the elements fixing one point, is sharply transitive on the other 22
    in the point stabilizer, which the m22 case refutes. The parity route
    also applies: the group consists of even permutations, 23 = 3 mod 4.
    """
    t0 = time.perf_counter()
    base = _run_m22()
    assert base.conclusion == REFUTED
    report = VerificationReport(
        case="m23",
        mode="reduction",
        certificate=base.certificate,
        spectrum=base.spectrum,
        side_condition_ok=base.side_condition_ok,
        conclusion=REFUTED,
        assumptions=base.assumptions
        + (
            "reduction: a sharply 2-transitive set restricted to the stabilizer of a "
            "point is sharply transitive on the remaining 22 points; refuted by m22",
            "alternative parity route: the degree-23 group is contained in the even "
            "permutations, 23 = 3 mod 4, |B| = |C| = 253 odd",
        ),
        elapsed_ms=(time.perf_counter() - t0) * 1e3,
    )
    report.notes["reduction_of"] = "m22"
    return report


def _run_mclaughlin(**_ignored) -> VerificationReport:
    """275-vertex graph; B = point vertices, C = a non-adjacent pair's common neighborhood."""
    t0 = time.perf_counter()
    mcl = designs.mclaughlin_graph()
    g = mcl.graph
    family = []
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if not g.adjacent(i, j):
                family.append(g.adj[i] & g.adj[j])
    report = verify_certificate_family(
        family,
        mcl.point_vertex_mask,
        family[0],
        3,
        domain=g.n,
        closure_witness=(
            "graph automorphisms map non-adjacent pairs to non-adjacent pairs, hence "
            "common neighborhoods to common neighborhoods"
        ),
        case="mclaughlin",
        family_name="common neighborhoods of the 22275 non-adjacent vertex pairs",
    )
    sizes = {m.bit_count() for m in family}
    report.notes["common_neighborhood_sizes"] = sorted(sizes)
    report.notes["vertex_count_remark"] = (
        "vertex census is 22 + 77 + 176 = 275; a 76 sometimes quoted for the middle "
        "class contradicts the 77 blocks through the special point"
    )
    report.elapsed_ms = (time.perf_counter() - t0) * 1e3
    return report


def _run_sp(
    n: int,
    q: int,
    action: str = "projective",
    enumerate_group_flag: bool = False,
    modulus: int | None = None,
    **_ignored,
) -> VerificationReport:
    """Symplectic case: B = elliptic quadric, C = a nonsingular line, p = 2."""
    t0 = time.perf_counter()
    space = geometry.symplectic_space(n, gf.field_for_q(q, modulus))
    quad = geometry.elliptic_quadric(space)
    ns_lines = geometry.nonsingular_lines(space)
    proj_family = [l.points for l in ns_lines]
    gens = geometry.symplectic_generators(space, "projective").generators
    frob = geometry.frobenius_point_map(space, "projective")
    if action == "projective":
        family = proj_family
        b_set = quad.projective_set
        domain = space.num_proj_points
        witness = list(gens) + [frob]
    elif action == "vector":
        family = [geometry.vector_lift(space, m) for m in proj_family]
        b_set = quad.vector_set
        domain = space.num_vectors
        vgens = geometry.symplectic_generators(space, "vector").generators
        vfrob = geometry.frobenius_point_map(space, "vector")
        witness = list(vgens) + [vfrob]
    else:
        raise ValueError("action must be 'projective' or 'vector'")
    case = f"sp(2n={2 * n},q={q},{action})"
    report = verify_certificate_family(
        family,
        b_set,
        family[0],
        2,
        domain=domain,
        closure_witness=witness,
        case=case,
        family_name=f"{len(family)} nonsingular lines ({action} level)",
    )
    report.assumptions += (
        "semidirect-product convention: field automorphisms act coordinatewise; the "
        "Frobenius map is included in the closure generators",
    )
    if enumerate_group_flag:
        spec = geometry.symplectic_generators(space, action)
        G = enumerate_group(spec)
        cert = Certificate(b_set, family[0], 2, "enumerated-group", domain)
        enum_report = verify_certificate_enumerated(G, cert, case=case)
        assert enum_report.conclusion == report.conclusion
        report.notes["enumerated_order"] = G.order
        report.notes["enumerated_spectrum"] = {str(k): v for k, v in sorted(enum_report.spectrum.items())}
    report.elapsed_ms = (time.perf_counter() - t0) * 1e3
    return report
