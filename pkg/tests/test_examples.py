import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from threeval.examples import (
    CLOSURE_AXIOMS,
    build_named,
    canonical_form,
    closure_from_involution,
    closure_from_relation,
    enumerate_t_structures,
    lattice_endomorphisms,
    make_b,
    make_bt,
    parse_partition,
    product,
)
from threeval.lattice import FiniteLattice, GuardError, find_isomorphism
from threeval.relational import Involution
from threeval.tstructure import check_t_axioms

E = frozenset()
RHO = frozenset({(0, 1), (1, 0)})


def check_covers(report):
    names = report.satisfied_axioms + [name for name, _ in report.failed_axioms]
    assert sorted(names) == sorted(CLOSURE_AXIOMS)


def test_identity_involution_is_boolean():
    report = closure_from_involution(3, Involution((0, 1, 2)), [[0], [2]])
    check_covers(report)
    assert report.ok and len(report.carrier) == 8


def test_swap_on_singletons_fails_s2_meet():
    report = closure_from_involution(2, Involution((1, 0)), [[0], [1]])
    check_covers(report)
    assert report.carrier == [E, {0}, {1}, {0, 1}]
    failed = dict(report.failed_axioms)
    assert failed["T2-S2-meet"] == ({0}, {1})
    assert "T2-S1-meet" in report.satisfied_axioms and "T2-S2-join" in report.satisfied_axioms


def test_swap_on_invariant_sets():
    report = closure_from_involution(2, Involution((1, 0)), [[], [0, 1]])
    assert report.carrier == [E, {0, 1}] and report.ok


def test_involution_point_mismatch():
    with pytest.raises(ValueError):
        closure_from_involution(3, Involution((1, 0)), [])


def test_relation_diagonal_base_is_boolean():
    diag = {(0, 0), (1, 1)}
    report = closure_from_relation(2, diag, [[(0, 0)]])
    check_covers(report)
    assert report.ok and len(report.carrier) == 4


def test_relation_swap_base_single_generator():
    # closing {(0,1)} under the relation operators gives a 3-element chain
    report = closure_from_relation(2, RHO, [[(0, 1)]])
    check_covers(report)
    assert report.carrier == [E, {(0, 1)}, RHO]
    assert report.ok
    assert find_isomorphism(report.structure, make_bt()) is not None


def test_relation_empty_generator():
    report = closure_from_relation(2, RHO, [[]])
    assert report.carrier == [E, RHO] and report.ok


def test_relation_full_base_fails_halves():
    full = {(x, y) for x in range(2) for y in range(2)}
    report = closure_from_relation(2, full, [[(0, 1)], [(1, 0)]])
    check_covers(report)
    failed = dict(report.failed_axioms)
    assert set(failed) == {"T2-S1-join", "T2-S2-meet", "T6"}
    assert failed["T2-S2-meet"] == ({(0, 1)}, {(1, 0)})


def test_closure_cap():
    with pytest.raises(GuardError):
        closure_from_involution(4, Involution((0, 1, 2, 3)), [[0], [1], [2], [3]], cap=8)


@st.composite
def involution_and_sets(draw):
    n = draw(st.integers(1, 5))
    perm = list(range(n))
    free = list(range(n))
    draw(st.randoms()).shuffle(free)
    while len(free) >= 2 and draw(st.booleans()):
        p, q = free.pop(), free.pop()
        perm[p], perm[q] = q, p
    gens = draw(st.lists(st.frozensets(st.integers(0, n - 1)), max_size=3))
    return n, Involution(tuple(perm)), gens


@settings(max_examples=100, deadline=None)
@given(involution_and_sets())
def test_involution_closure_always_keeps_two_halves(args):
    n, g, gens = args
    report = closure_from_involution(n, g, gens)
    check_covers(report)
    for name in ("T1", "T2-S1-meet", "T2-S2-join", "T3", "T4", "T5", "T7"):
        assert name in report.satisfied_axioms


def test_make_builders():
    assert make_bt().n == 3 and make_b().n == 2
    assert check_t_axioms(make_bt()).ok and check_t_axioms(make_b()).ok


def test_build_named():
    assert build_named("bt") == make_bt()
    assert build_named("B") == make_b()
    assert build_named("bt*b") == product(make_bt(), make_b())
    assert find_isomorphism(build_named("rough:0,1"), make_bt()) is not None
    assert find_isomorphism(build_named("rough:0,1/2"), product(make_bt(), make_b())) is not None
    with pytest.raises(ValueError):
        build_named("nope")


def test_parse_partition():
    assert parse_partition("0,1/2") == [[0, 1], [2]]


def test_enumeration_small_counts():
    assert enumerate_t_structures(2) == [make_b()]
    assert enumerate_t_structures(3) == [make_bt()]


@pytest.mark.parametrize("n", range(1, 7))
def test_enumeration_matches_exhaustive_oracle(n):
    assert len(enumerate_t_structures(n)) == oracles.count_t_structures(n)


def test_enumeration_frozen_counts():
    assert [len(enumerate_t_structures(n)) for n in (4, 5, 6)] == [1, 0, 1]


def test_size_four_is_b_times_b():
    (T,) = enumerate_t_structures(4)
    assert find_isomorphism(T, product(make_b(), make_b())) is not None


def test_size_six_is_bt_times_b():
    (T,) = enumerate_t_structures(6)
    assert find_isomorphism(T, product(make_bt(), make_b())) is not None


def test_enumeration_guard():
    with pytest.raises(GuardError):
        enumerate_t_structures(7)


def test_canonical_form_invariant_under_relabelling():
    T = product(make_bt(), make_b())
    C = canonical_form(T)
    assert find_isomorphism(C, T) is not None
    assert canonical_form(C) == C


def test_lattice_endomorphisms_of_chain():
    homs = lattice_endomorphisms(FiniteLattice.chain(3))
    # bound-preserving monotone maps of the 3-chain
    assert sorted(homs) == [(0, 0, 2), (0, 1, 2), (0, 2, 2)]
