import itertools
import random

import pytest

from sharpsets import perm
from sharpsets.perm import (
    GroupSpec,
    arrangements,
    check_group_axioms,
    compose,
    conjugation_reps,
    cycle_parity,
    enumerate_group,
    from_cycles,
    identity,
    induced_action,
    inverse,
    inversions,
    is_fixed_point_free,
    orbits_on_pairs,
    parity,
)


def test_compose_identity():
    g = from_cycles(4, (0, 2, 1))
    assert compose(identity(4), g) == g
    assert compose(g, identity(4)) == g


def test_compose_left_to_right_by_point_application():
    # oracle: apply a then b to each point separately
    a = from_cycles(3, (0, 1))
    b = from_cycles(3, (1, 2))
    expected = tuple(b[a[x]] for x in range(3))
    assert expected == (2, 0, 1)  # the 3-cycle 0->2->1->0 under this convention
    assert compose(a, b) == expected


def test_compose_inverse_gives_identity():
    g = from_cycles(5, (0, 3), (1, 4, 2))
    assert compose(g, inverse(g)) == identity(5)
    assert compose(inverse(g), g) == identity(5)


def test_compose_degree_mismatch():
    with pytest.raises(perm.DegreeMismatch):
        compose(identity(3), identity(4))


def test_enumerate_cyclic():
    enum = enumerate_group(GroupSpec(5, (from_cycles(5, (0, 1, 2, 3, 4)),), "C5"))
    assert enum.order == 5
    assert enum.elements[0] == identity(5)


def test_enumerate_s6():
    spec = GroupSpec(6, (from_cycles(6, (0, 1)), from_cycles(6, (0, 1, 2, 3, 4, 5))), "S6")
    assert enumerate_group(spec).order == 720


def test_enumerate_m22(m22_enum):
    # well-known order of the degree-22 stabilizer, cross-checked before use
    assert m22_enum.order == 443520


def test_enumerate_cap_is_explicit():
    spec = GroupSpec(6, (from_cycles(6, (0, 1)), from_cycles(6, (0, 1, 2, 3, 4, 5))), "S6")
    with pytest.raises(perm.GroupTooLarge):
        enumerate_group(spec, cap=100)


def test_enumerate_declared_order_mismatch():
    spec = GroupSpec(5, (from_cycles(5, (0, 1, 2, 3, 4)),), "C5", declared_order=7)
    with pytest.raises(ValueError):
        enumerate_group(spec)


def test_enumeration_deterministic(s4):
    again = enumerate_group(GroupSpec(4, (from_cycles(4, (0, 1)), from_cycles(4, (0, 1, 2, 3))), "S4"))
    assert again.elements == s4.elements


def test_group_axioms_small(c5, s3, s4, a6):
    for enum in (c5, s3, s4, a6):
        check_group_axioms(enum)


def test_group_axioms_sampled_m22(m22_enum):
    check_group_axioms(m22_enum, samples=100)


def test_arrangement_sizes():
    assert arrangements(5, 2).size == 20
    assert arrangements(24, 2).size == 552


def test_arrangement_cell_image():
    action = arrangements(6, 2)
    g = from_cycles(6, (0, 1))
    gp = action.cell_perm(g)
    assert action.cells[gp[action.index[(0, 2)]]] == (1, 2)


def test_induced_action_is_homomorphism(s5):
    action, induced = induced_action(s5, 2)
    rng = random.Random(1)
    idx = s5.index()
    for _ in range(25):
        a = s5.elements[rng.randrange(s5.order)]
        b = s5.elements[rng.randrange(s5.order)]
        ab = compose(a, b)
        assert compose(induced.elements[idx[a]], induced.elements[idx[b]]) == induced.elements[idx[ab]]


def test_induced_action_higher_arity(s4):
    action, induced = induced_action(s4, 3)
    assert action.size == 24  # 4 * 3 * 2
    idx = s4.index()
    rng = random.Random(4)
    for _ in range(10):
        a = s4.elements[rng.randrange(s4.order)]
        b = s4.elements[rng.randrange(s4.order)]
        left = compose(induced.elements[idx[a]], induced.elements[idx[b]])
        assert left == induced.elements[idx[compose(a, b)]]


def test_inversions_basics():
    assert inversions(identity(7)) == 0
    for n in (2, 5, 9):
        assert inversions(from_cycles(n, (0, 1))) == 1
    assert inversions(from_cycles(3, (0, 1, 2))) == 2


def test_parity_basics():
    assert parity(identity(4)) == 0
    assert parity(from_cycles(4, (0, 1))) == 1
    assert parity(from_cycles(4, (0, 1), (2, 3))) == 0


def test_parity_matches_cycle_type_all_of_s6():
    for g in itertools.permutations(range(6)):
        assert parity(g) == cycle_parity(g)


def test_parity_is_homomorphism():
    rng = random.Random(7)
    perms = list(itertools.permutations(range(5)))
    for _ in range(100):
        a = perms[rng.randrange(len(perms))]
        b = perms[rng.randrange(len(perms))]
        assert parity(compose(a, b)) == (parity(a) + parity(b)) % 2


def test_compose_associative_fuzz():
    rng = random.Random(11)
    perms = list(itertools.permutations(range(6)))
    for _ in range(200):
        a, b, c = (perms[rng.randrange(len(perms))] for _ in range(3))
        assert compose(compose(a, b), c) == compose(a, compose(b, c))


def test_orbits_on_pairs_trivial_group():
    one = perm.GroupEnumeration(3, [identity(3)], "1")
    blocks = orbits_on_pairs(one)
    assert len(blocks) == 9
    assert all(len(b) == 1 for b in blocks)


def test_orbits_on_pairs_symmetric_group(s4):
    blocks = orbits_on_pairs(s4)
    assert sorted(len(b) for b in blocks) == [4, 12]  # diagonal and off-diagonal


def test_orbits_on_pairs_order_two():
    h = enumerate_group(GroupSpec(2, (from_cycles(2, (0, 1)),), "C2"))
    blocks = orbits_on_pairs(h)
    assert [set(b) for b in blocks] == [{(0, 0), (1, 1)}, {(0, 1), (1, 0)}]


def test_orbits_are_generator_invariant(s4):
    blocks = orbits_on_pairs(s4)
    g = from_cycles(4, (0, 1))
    for block in blocks:
        image = {(g[x], g[y]) for x, y in block}
        assert image == set(block)


def test_conjugation_trivial_subgroup(s3):
    one = perm.GroupEnumeration(3, [identity(3)], "1")
    classes = conjugation_reps(s3, one)
    assert classes.reps == s3.elements


def test_conjugation_s3_self(s3):
    classes = conjugation_reps(s3, s3)
    assert sorted(classes.sizes) == [1, 2, 3]
    assert sum(classes.sizes) == 6


def test_conjugation_orbit_counting(s3):
    h = enumerate_group(GroupSpec(3, (from_cycles(3, (0, 1)),), "C2"))
    classes = conjugation_reps(s3, h)
    assert sum(classes.sizes) == s3.order


def test_conjugation_requires_containment(s3, s4):
    with pytest.raises(ValueError):
        conjugation_reps(s3, s4)


def test_fixed_point_free():
    assert not is_fixed_point_free(identity(3))
    assert is_fixed_point_free(from_cycles(4, (0, 1), (2, 3)))
    assert not is_fixed_point_free(from_cycles(3, (0, 1)))


def test_group_file_roundtrip(tmp_path):
    spec = GroupSpec(4, (from_cycles(4, (0, 1)), from_cycles(4, (0, 1, 2, 3))), "s4", 24)
    path = tmp_path / "s4.grp"
    perm.dump_group(spec, path)
    text = path.read_text()
    assert text.splitlines()[0] == "n 4"
    loaded = perm.load_group(path)
    assert loaded.degree == 4
    assert loaded.generators == spec.generators
    assert loaded.declared_order == 24


def test_group_file_comments(tmp_path):
    path = tmp_path / "c3.grp"
    path.write_text("# cyclic of order 3\nn 3\norder 3\n1 2 0  # the generator\n")
    spec = perm.load_group(path)
    assert spec.generators == ((1, 2, 0),)
    assert enumerate_group(spec).order == 3
