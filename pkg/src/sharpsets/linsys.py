"""Exact linear systems attached to a permutation action, and their solvers.

The full system has one equation per ordered point pair (i, j) and one
variable per group element g, with coefficient 1 when i^g = j and right
side 1 throughout; 0/1 solutions are exactly the sharply transitive sets,
so solvability over F_p, Q, Z or the non-negative integers gives a ladder
of relaxations. Collapsing by a subgroup H (orbits of H on ordered pairs
as equations, H-conjugacy class representatives as variables) yields the
condensed system; with H trivial it reproduces the full one.

All solver arithmetic is exact: bitmask rows over F_2, machine integers
under numpy for odd p (values stay far below 2^63), Fractions over Q and
arbitrary-precision integers for the Hermite normal form over Z. Floating
point is never used.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .perm import (
    GroupEnumeration,
    Perm,
    conjugation_reps,
    identity,
    is_fixed_point_free,
    orbits_on_pairs,
)

SOLVABLE = "solvable"
INFEASIBLE = "infeasible"
UNKNOWN_BUDGET = "unknown-budget"


@dataclass
class ExactSystem:
    """A x = b with exact integer coefficients and labelled axes."""

    ring: str                          # informational tag: "f_p" / "q" / "z" / "znn"
    matrix: list[list[int]]
    rhs: list[int]
    var_labels: list[str]
    eq_labels: list[str]
    column_elements: list[Perm] | None = field(default=None, repr=False)

    @property
    def rows(self) -> int:
        return len(self.matrix)

    @property
    def cols(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    def __post_init__(self):
        assert len(self.rhs) == self.rows
        assert all(len(r) == self.cols for r in self.matrix)
        assert len(self.var_labels) == self.cols
        assert len(self.eq_labels) == self.rows


@dataclass
class SolveOutcome:
    status: str
    witness: list | None = None        # ints, or Fractions for the rational solver
    notes: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        wit = None
        if self.witness is not None:
            wit = [int(x) if Fraction(x).denominator == 1 else str(Fraction(x)) for x in self.witness]
        return {"status": self.status, "witness": wit, "notes": self.notes}


def verify_witness(system: ExactSystem, witness, modulus: int | None = None) -> bool:
    """Exact substitution check; mod a prime when modulus is given."""
    for row, b in zip(system.matrix, system.rhs):
        acc = sum(a * x for a, x in zip(row, witness))
        if modulus is None:
            if acc != b:
                return False
        elif (acc - b) % modulus != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# System construction


def build_full_system(elements: list[Perm], labels: list[str] | None = None) -> ExactSystem:
    """One equation per ordered pair of points, one variable per element."""
    n = len(elements[0])
    ncols = len(elements)
    matrix = [[0] * ncols for _ in range(n * n)]
    for k, g in enumerate(elements):
        for i in range(n):
            matrix[i * n + g[i]][k] = 1
    rhs = [1] * (n * n)
    var_labels = labels if labels is not None else [f"g{k}" for k in range(ncols)]
    eq_labels = [f"({i},{j})" for i in range(n) for j in range(n)]
    return ExactSystem("z", matrix, rhs, var_labels, eq_labels, list(elements))


def build_H_system(G: GroupEnumeration, H: GroupEnumeration, check_samples: int = 3) -> ExactSystem:
    """Collapse the full system by a subgroup H.

    Equations: orbits of H on ordered point pairs, right side the orbit
    size. Variables: representatives of the H-conjugation classes on G,
    with coefficient a_i(g) = #{(x, y) in orbit i : x^g = y}. The count
    only depends on the class of g, which is spot-checked on a few members
    of each class.
    """
    n = G.degree
    if H.degree != n:
        raise ValueError("G and H act on different point sets")
    orbits = orbits_on_pairs(H, n)
    classes = conjugation_reps(G, H)

    def a_of(g: Perm) -> list[int]:
        return [sum(1 for (x, y) in orb if g[x] == y) for orb in orbits]

    matrix_cols = []
    for rep, members in zip(classes.reps, classes.classes):
        col = a_of(rep)
        for other in members[1:check_samples + 1]:
            assert a_of(other) == col, "coefficient not constant on a conjugation class"
        matrix_cols.append(col)
    nrows = len(orbits)
    matrix = [[matrix_cols[c][r] for c in range(len(matrix_cols))] for r in range(nrows)]
    rhs = [len(orb) for orb in orbits]
    var_labels = [f"class{k}" for k in range(len(classes.reps))]
    eq_labels = [f"orbit{r}:{orbits[r][0]}" for r in range(nrows)]
    return ExactSystem("z", matrix, rhs, var_labels, eq_labels, list(classes.reps))


def restrict_to_fpf(system: ExactSystem, pin_identity: bool = False) -> ExactSystem:
    """Keep only the identity column and fixed-point-free element columns.

    With pin_identity the identity column is removed too and its
    contribution (value 1) is subtracted from the right side.
    """
    if system.column_elements is None:
        raise ValueError("system carries no element labels")
    n = len(system.column_elements[0])
    ident = identity(n)
    keep = [
        k
        for k, g in enumerate(system.column_elements)
        if g == ident or is_fixed_point_free(g)
    ]
    rhs = list(system.rhs)
    if pin_identity:
        id_cols = [k for k in keep if system.column_elements[k] == ident]
        for k in id_cols:
            for r in range(system.rows):
                rhs[r] -= system.matrix[r][k]
        keep = [k for k in keep if k not in id_cols]
    matrix = [[system.matrix[r][k] for k in keep] for r in range(system.rows)]
    return ExactSystem(
        system.ring,
        matrix,
        rhs,
        [system.var_labels[k] for k in keep],
        list(system.eq_labels),
        [system.column_elements[k] for k in keep],
    )


def dump_system(system: ExactSystem, path) -> None:
    """Textual dump: 'rows cols', then the matrix rows, then the right side."""
    with open(path, "w") as fh:
        fh.write(f"{system.rows} {system.cols}\n")
        for row in system.matrix:
            fh.write(" ".join(str(a) for a in row) + "\n")
        fh.write(" ".join(str(b) for b in system.rhs) + "\n")


# ---------------------------------------------------------------------------
# F_p


def solve_mod_p(system: ExactSystem, p: int) -> SolveOutcome:
    """Exact solvability over F_p, with a witness when solvable.

    p = 2 runs an incremental column-span construction on bitmask vectors
    with an early exit as soon as the right side enters the span; odd p
    runs dense row reduction on int64 (all values stay below p^2 << 2^63).
    """
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValueError(f"p = {p} is not prime")
    outcome = _solve_mod_2(system) if p == 2 else _solve_mod_odd(system, p)
    if outcome.status == SOLVABLE:
        assert verify_witness(system, outcome.witness, modulus=p)
    outcome.notes["p"] = p
    return outcome


def _solve_mod_2(system: ExactSystem) -> SolveOutcome:
    nrows, ncols = system.rows, system.cols
    residual = 0
    for r in range(nrows):
        if system.rhs[r] & 1:
            residual |= 1 << r
    if residual == 0:
        return SolveOutcome(SOLVABLE, [0] * ncols, {"early_exit_col": -1})
    basis: dict[int, tuple[int, int]] = {}  # pivot row -> (vector, column combination)
    res_combo = 0
    for c in range(ncols):
        v = 0
        for r in range(nrows):
            if system.matrix[r][c] & 1:
                v |= 1 << r
        combo = 1 << c
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = (v, combo)
                # fold the new basis vector into the reduced residual
                while residual:
                    rt = residual.bit_length() - 1
                    if rt not in basis:
                        break
                    bv, bc = basis[rt]
                    residual ^= bv
                    res_combo ^= bc
                if residual == 0:
                    witness = [(res_combo >> k) & 1 for k in range(ncols)]
                    return SolveOutcome(SOLVABLE, witness, {"early_exit_col": c})
                break
            bv, bc = basis[top]
            v ^= bv
            combo ^= bc
    return SolveOutcome(INFEASIBLE, None, {"rank": len(basis)})


def _solve_mod_odd(system: ExactSystem, p: int) -> SolveOutcome:
    a = np.array(system.matrix, dtype=np.int64) % p
    b = np.array(system.rhs, dtype=np.int64) % p
    aug = np.concatenate([a, b[:, None]], axis=1)
    nrows, ncols = system.rows, system.cols
    pivots = []
    r = 0
    for c in range(ncols):
        nz = np.nonzero(aug[r:, c])[0]
        if nz.size == 0:
            continue
        sel = r + int(nz[0])
        if sel != r:
            aug[[r, sel]] = aug[[sel, r]]
        aug[r] = aug[r] * pow(int(aug[r, c]), -1, p) % p
        mask = np.nonzero(aug[:, c])[0]
        for i in mask:
            if i != r:
                aug[i] = (aug[i] - aug[i, c] * aug[r]) % p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if aug[i, ncols] % p:
            return SolveOutcome(INFEASIBLE, None, {"rank": r})
    witness = [0] * ncols
    for i, c in enumerate(pivots):
        witness[c] = int(aug[i, ncols]) % p
    return SolveOutcome(SOLVABLE, witness, {"rank": r})


# ---------------------------------------------------------------------------
# Q


def solve_rational(system: ExactSystem) -> SolveOutcome:
    """Exact Gaussian elimination over the rationals; free variables are set to 0."""
    nrows, ncols = system.rows, system.cols
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(system.matrix, system.rhs)]
    pivots = []
    r = 0
    for c in range(ncols):
        sel = next((i for i in range(r, nrows) if aug[i][c] != 0), None)
        if sel is None:
            continue
        aug[r], aug[sel] = aug[sel], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if aug[i][ncols] != 0:
            return SolveOutcome(INFEASIBLE, None, {"rank": r})
    witness = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        witness[c] = aug[i][ncols]
    outcome = SolveOutcome(SOLVABLE, witness, {"rank": r})
    assert verify_witness(system, witness)
    return outcome


def rational_solvability_via_full_collapse(G: GroupEnumeration) -> SolveOutcome:
    """Decide rational solvability of the full system through the H = G collapse.

    Collapsing by the whole group leaves one variable per conjugacy class and
    one equation per orbit on ordered pairs, a far smaller system. Because
    the group order is invertible over the rationals, its solvability matches
    the full system's (averaging a full solution gives a collapsed one, and a
    collapsed solution spreads back out evenly). The condition is weak, but
    it is a cheap screen.
    """
    return solve_rational(build_H_system(G, G))


# ---------------------------------------------------------------------------
# Z via column Hermite staircase


LARGE_SYSTEM_CELLS = 50_000


def solve_integer(system: ExactSystem) -> SolveOutcome:
    """Integral solvability via a column Hermite staircase, witness included.

    Unimodular column operations (pivot chosen with minimal absolute value)
    bring A to a lower staircase H = A U; forward substitution in H decides
    divisibility row by row and U turns the reduced solution back into one
    of the original system. For very large systems an exact mod-2
    infeasibility pre-screen runs first, since an integral solution would
    reduce to one of F_2.
    """
    if system.rows * system.cols > LARGE_SYSTEM_CELLS:
        pre = solve_mod_p(system, 2)
        if pre.status == INFEASIBLE:
            return SolveOutcome(INFEASIBLE, None, {"prescreen": "mod-2 infeasible"})
    status, witness, notes = _hermite_solve(system.matrix, system.rhs)
    outcome = SolveOutcome(status, witness, notes)
    if status == SOLVABLE:
        assert verify_witness(system, witness)
    return outcome


def _hermite_solve(matrix: list[list[int]], rhs: list[int]):
    nrows = len(matrix)
    ncols = len(matrix[0]) if matrix else 0
    cols = [[matrix[i][j] for i in range(nrows)] for j in range(ncols)]
    u = [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]  # u[j] tracks column j
    pivot_of: list[tuple[int, int]] = []  # (row, staircase column)
    r = 0
    for i in range(nrows):
        if r == ncols:
            break
        while True:
            nz = [j for j in range(r, ncols) if cols[j][i] != 0]
            if not nz:
                break
            if len(nz) == 1:
                j = nz[0]
                break
            jmin = min(nz, key=lambda j: (abs(cols[j][i]), j))
            for j in nz:
                if j == jmin:
                    continue
                q = cols[j][i] // cols[jmin][i]
                if q:
                    cols[j] = [a - q * b for a, b in zip(cols[j], cols[jmin])]
                    u[j] = [a - q * b for a, b in zip(u[j], u[jmin])]
        nz = [j for j in range(r, ncols) if cols[j][i] != 0]
        if not nz:
            continue
        j = nz[0]
        cols[r], cols[j] = cols[j], cols[r]
        u[r], u[j] = u[j], u[r]
        if cols[r][i] < 0:
            cols[r] = [-a for a in cols[r]]
            u[r] = [-a for a in u[r]]
        pivot_of.append((i, r))
        r += 1
    # forward substitution; columns with pivot row below i vanish at row i
    y = [0] * r
    pivot_rows = {i: c for i, c in pivot_of}
    for i in range(nrows):
        acc = rhs[i] - sum(cols[c][i] * y[c] for c in range(r))
        if i in pivot_rows:
            c = pivot_rows[i]
            h = cols[c][i]
            if acc % h != 0:
                return INFEASIBLE, None, {"divisibility_row": i}
            y[c] = acc // h
        elif acc != 0:
            return INFEASIBLE, None, {"inconsistent_row": i}
    witness = [0] * ncols
    for c in range(r):
        if y[c]:
            witness = [w + y[c] * a for w, a in zip(witness, u[c])]
    return SOLVABLE, witness, {"staircase_rank": r}


# ---------------------------------------------------------------------------
# Non-negative integers: branch and bound over an exact rational relaxation


DEFAULT_BNB_BUDGET = 20_000


def solve_nonneg_integer(system: ExactSystem, budget: int = DEFAULT_BNB_BUDGET) -> SolveOutcome:
    """Branch and bound with exact phase-1 simplex relaxations.

    Branching is deterministic: the lowest-index fractional variable splits
    into the floor branch first, then the ceiling branch. The budget counts
    explored nodes; exceeding it returns unknown-budget rather than a guess.
    """
    reduced = _drop_dependent_rows(system)
    if reduced is None:
        return SolveOutcome(INFEASIBLE, None, {"stage": "rational-preprocessing"})
    a, b = reduced
    ncols = system.cols
    stack = [([Fraction(0)] * ncols, [None] * ncols)]
    nodes = 0
    while stack:
        lo, hi = stack.pop()
        nodes += 1
        if nodes > budget:
            return SolveOutcome(UNKNOWN_BUDGET, None, {"nodes": nodes})
        point = _lp_feasible_point(a, b, lo, hi)
        if point is None:
            continue
        frac_at = next((j for j, x in enumerate(point) if x.denominator != 1), None)
        if frac_at is None:
            witness = [int(x) for x in point]
            assert all(x >= 0 for x in witness)
            assert verify_witness(system, witness)
            return SolveOutcome(SOLVABLE, witness, {"nodes": nodes})
        v = point[frac_at]
        floor_hi = list(hi)
        floor_hi[frac_at] = Fraction(int(v))  # floor: v is positive here
        ceil_lo = list(lo)
        ceil_lo[frac_at] = Fraction(int(v) + 1)
        stack.append((ceil_lo, list(hi)))     # explored second
        stack.append((list(lo), floor_hi))    # floor branch first (LIFO)
    return SolveOutcome(INFEASIBLE, None, {"nodes": nodes})


def _drop_dependent_rows(system: ExactSystem):
    """Rational row reduction; returns (A, b) with independent rows or None."""
    nrows, ncols = system.rows, system.cols
    aug = [[Fraction(x) for x in row] + [Fraction(c)] for row, c in zip(system.matrix, system.rhs)]
    out_rows = []
    r = 0
    for c in range(ncols):
        sel = next((i for i in range(r, nrows) if aug[i][c] != 0), None)
        if sel is None:
            continue
        aug[r], aug[sel] = aug[sel], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if aug[i][ncols] != 0:
            return None
    a = [row[:ncols] for row in aug[:r]]
    b = [row[ncols] for row in aug[:r]]
    return a, b


def _lp_feasible_point(a, b, lo, hi):
    """Phase-1 simplex (Bland's rule, exact Fractions) for A x = b, lo <= x <= hi.

    Returns a feasible x or None. Finite upper bounds become slack rows, so
    the tableau only ever deals with variables bounded below by zero.
    """
    nrows = len(a)
    ncols = len(lo)
    shift = list(lo)
    b2 = [bb - sum(ar[j] * shift[j] for j in range(ncols)) for ar, bb in zip(a, b)]
    rows = [list(ar) for ar in a]
    ub_rows = []
    for j in range(ncols):
        if hi[j] is not None:
            cap = hi[j] - lo[j]
            if cap < 0:
                return None
            ub_rows.append((j, cap))
    m = nrows + len(ub_rows)
    nslack = len(ub_rows)
    width = ncols + nslack + m  # x, slacks, artificials
    tab = []
    rhs_col = []
    for i in range(nrows):
        row = rows[i] + [Fraction(0)] * nslack + [Fraction(0)] * m
        rr = b2[i]
        if rr < 0:
            row = [-x for x in row]
            rr = -rr
        row[ncols + nslack + i] = Fraction(1)
        tab.append(row)
        rhs_col.append(rr)
    for s, (j, cap) in enumerate(ub_rows):
        row = [Fraction(0)] * width
        row[j] = Fraction(1)
        row[ncols + s] = Fraction(1)
        row[ncols + nslack + nrows + s] = Fraction(1)
        tab.append(row)
        rhs_col.append(cap)
    basis = [ncols + nslack + i for i in range(m)]
    # objective: minimize the sum of artificials
    cost = [Fraction(0)] * width
    for k in range(ncols + nslack, width):
        cost[k] = Fraction(1)
    # reduced costs z_j - c_j under the artificial basis
    obj = [sum(tab[i][j] for i in range(m)) - cost[j] for j in range(width)]
    obj_val = sum(rhs_col)
    while True:
        enter = next((j for j in range(width) if obj[j] > 0), None)
        if enter is None:
            break
        ratios = [
            (rhs_col[i] / tab[i][enter], basis[i], i)
            for i in range(m)
            if tab[i][enter] > 0
        ]
        assert ratios, "phase-1 objective is bounded below, a ratio row must exist"
        _, _, leave = min(ratios, key=lambda t: (t[0], t[1]))
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        rhs_col[leave] /= piv
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
                rhs_col[i] -= f * rhs_col[leave]
        f = obj[enter]
        obj = [x - f * y for x, y in zip(obj, tab[leave])]
        obj_val -= f * rhs_col[leave]
        basis[leave] = enter
    if obj_val != 0:
        return None
    x = [Fraction(0)] * ncols
    for i, var in enumerate(basis):
        if var < ncols:
            x[var] = rhs_col[i]
    return [xx + sh for xx, sh in zip(x, shift)]


# ---------------------------------------------------------------------------
# Random restriction probe


def random_restriction_probe(
    system: ExactSystem,
    keep: int,
    trials: int,
    seed: int = 0,
    nonneg: bool = False,
) -> SolveOutcome:
    """Zero out all but `keep` randomly chosen variables and solve over Z.

    Each trial samples its own column subset (seeded, reproducible); the
    first witness found is zero-extended and re-verified against the full
    system. All trials failing is an unknown-budget outcome, not a proof.
    """
    if keep > system.cols:
        raise ValueError("keep-count exceeds the variable count")
    rng = random.Random(seed)
    for trial in range(trials):
        chosen = sorted(rng.sample(range(system.cols), keep))
        sub = ExactSystem(
            system.ring,
            [[row[j] for j in chosen] for row in system.matrix],
            list(system.rhs),
            [system.var_labels[j] for j in chosen],
            list(system.eq_labels),
            [system.column_elements[j] for j in chosen] if system.column_elements else None,
        )
        outcome = solve_nonneg_integer(sub) if nonneg else solve_integer(sub)
        if outcome.status == SOLVABLE:
            full = [0] * system.cols
            for j, x in zip(chosen, outcome.witness):
                full[j] = x
            assert verify_witness(system, full)
            return SolveOutcome(SOLVABLE, full, {"trial": trial, "kept": chosen})
    return SolveOutcome(UNKNOWN_BUDGET, None, {"trials": trials})


# ---------------------------------------------------------------------------
# Empirical checks of the subgroup-collapse statements


def lemma_down_check(G: GroupEnumeration, U: GroupEnumeration, V: GroupEnumeration) -> dict:
    """If the U-collapsed system solves over Z, the V-collapsed one must too."""
    for u in U.elements:
        if u not in V.index():
            raise ValueError("U is not contained in V")
    for v in V.elements:
        if v not in G.index():
            raise ValueError("V is not contained in G")
    sys_u = build_H_system(G, U)
    sys_v = build_H_system(G, V)
    out_u = solve_integer(sys_u)
    out_v = solve_integer(sys_v)
    holds = not (out_u.status == SOLVABLE and out_v.status != SOLVABLE)
    return {
        "U_status": out_u.status,
        "V_status": out_v.status,
        "implication_holds": holds,
        "U_vars": sys_u.cols,
        "V_vars": sys_v.cols,
    }


def _coprime(a: int, b: int) -> bool:
    while b:
        a, b = b, a % b
    return a == 1


EXHAUSTIVE_MOD_CAP = 65_536


def _solvable_mod_m(system: ExactSystem, m: int) -> str:
    """Exhaustive search over (Z/m)^cols; 'skipped' when the space is too big."""
    import itertools as it

    if m ** system.cols > EXHAUSTIVE_MOD_CAP:
        return "skipped"
    for cand in it.product(range(m), repeat=system.cols):
        if all(
            (sum(a * x for a, x in zip(row, cand)) - b) % m == 0
            for row, b in zip(system.matrix, system.rhs)
        ):
            return SOLVABLE
    return INFEASIBLE


def local_global_check(G: GroupEnumeration, subgroup_by_prime: dict[int, GroupEnumeration]) -> dict:
    """Instance test of the local-global criterion for integral solvability.

    Compares integral solvability of the full system with integral
    solvability of each collapsed system for the supplied p'-subgroups
    (the two must agree when the supplied family covers every prime), and
    additionally tests the lifting consequence: collapsed solvability over
    Z/p and, on tiny systems, over Z/p^2, must propagate to the full system.
    """
    full = build_full_system(G.elements)
    out_full = solve_integer(full)
    per_prime = {}
    all_solvable = True
    lift_ok = True
    for p, H in sorted(subgroup_by_prime.items()):
        if not _coprime(H.order, p):
            raise ValueError(f"subgroup of order {H.order} is not a {p}'-subgroup")
        sys_h = build_H_system(G, H)
        out_h = solve_integer(sys_h)
        all_solvable &= out_h.status == SOLVABLE
        entry = {"H_order": H.order, "H_status": out_h.status}
        # lifting consequence over F_p
        h_mod_p = solve_mod_p(sys_h, p).status
        full_mod_p = solve_mod_p(full, p).status
        entry["H_mod_p"] = h_mod_p
        entry["full_mod_p"] = full_mod_p
        if h_mod_p == SOLVABLE and full_mod_p != SOLVABLE:
            lift_ok = False
        # finite shadow over Z/p^2 on tiny systems
        h_mod_p2 = _solvable_mod_m(sys_h, p * p)
        full_mod_p2 = _solvable_mod_m(full, p * p)
        entry["H_mod_p2"] = h_mod_p2
        entry["full_mod_p2"] = full_mod_p2
        if h_mod_p2 == SOLVABLE and full_mod_p2 == INFEASIBLE:
            lift_ok = False
        per_prime[p] = entry
    equivalence = (out_full.status == SOLVABLE) == all_solvable
    return {
        "full_status": out_full.status,
        "per_prime": per_prime,
        "equivalence_holds": equivalence,
        "lift_consequence_holds": lift_ok,
    }
