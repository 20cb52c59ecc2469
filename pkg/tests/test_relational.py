import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from threeval.examples import enumerate_t_structures, make_b, make_bt, product
from threeval.lattice import AxiomError, GuardError
from threeval.relational import (
    Involution,
    build_g_relation,
    check_converse_inclusions,
    check_f_preservation,
    converse,
    involution_from_spectrum,
    relation_operators,
    represent_relational,
    set_algebra,
    set_operators,
)
from threeval.spectrum import chain_decomposition, stone_map
from threeval.tstructure import check_t_axioms, to_ht

E = frozenset()
SWAP = Involution((1, 0))
RHO = frozenset({(0, 1), (1, 0)})
FULL2 = frozenset((x, y) for x in range(2) for y in range(2))

CORPUS_H = [to_ht(T) for n in range(2, 7) for T in enumerate_t_structures(n)] + [
    to_ht(product(make_b(), make_b())),
    to_ht(product(make_bt(), make_b())),
    to_ht(product(make_bt(), make_bt())),
]


def test_involution_validation():
    with pytest.raises(ValueError):
        Involution((1, 2, 0))
    assert SWAP(0) == 1 and SWAP.image({0}) == {1}


def test_involution_from_spectrum(btb):
    assert involution_from_spectrum(chain_decomposition(make_bt().lattice)).map == (1, 0)
    assert involution_from_spectrum(chain_decomposition(product(make_b(), make_b()).lattice)).map == (0, 1)
    g = involution_from_spectrum(chain_decomposition(btb.lattice))
    fixed = [p for p in range(g.points) if g(p) == p]
    assert g.points == 3 and len(fixed) == 1


def test_involution_rejects_long_chain():
    from threeval.lattice import FiniteLattice

    with pytest.raises(ValueError):
        involution_from_spectrum(chain_decomposition(FiniteLattice.chain(4)))


def test_set_operators():
    assert set_operators(SWAP, {1}) == (E, frozenset({0, 1}), frozenset({0, 1}))
    ident = Involution((0, 1, 2))
    X = frozenset({0, 2})
    assert set_operators(ident, X) == (X, frozenset({1}), X)
    assert set_operators(SWAP, set()) == (E, frozenset({0, 1}), E)


def test_build_g_relation():
    assert build_g_relation(SWAP) == RHO
    assert build_g_relation(Involution((0, 1))) == {(0, 0), (1, 1)}
    assert build_g_relation(Involution((1, 0, 2))) == {(0, 1), (1, 0), (2, 2)}


def test_relation_operators():
    assert relation_operators(RHO, {(0, 1)}) == (E, RHO, RHO)
    assert relation_operators(RHO, RHO) == (RHO, E, RHO)
    assert relation_operators(RHO, set()) == (E, RHO, E)
    with pytest.raises(ValueError):
        relation_operators({(0, 1)}, set())
    with pytest.raises(ValueError):
        relation_operators(RHO, {(0, 0)})


def test_f_preservation_bt(bt_ht):
    report = check_f_preservation(bt_ht)
    assert report.ok
    assert report.info["steps"] == {"i": 3, "ii": 3, "iii": 3, "iv": 3}
    f = stone_map(bt_ht.lattice)
    assert f[bt_ht.s2[1]] == set_operators(SWAP, f[1]).s2 == {0, 1}


def test_f_preservation_complemented_elements(bt_ht):
    f = stone_map(bt_ht.lattice)
    for a in (0, 2):
        assert f[bt_ht.s1[a]] == f[a] == set_operators(SWAP, f[a]).s1


def test_set_algebra_is_copy(bt_ht):
    assert set_algebra(bt_ht) == make_bt()


def test_represent_relational_bt(bt_ht):
    rep = represent_relational(bt_ht)
    # P1 = {2} (index 0), P2 = {1, 2} (index 1)
    assert rep.spectrum.filters == (frozenset({2}), frozenset({1, 2}))
    assert rep.G == RHO
    assert rep.mapping == (E, frozenset({(1, 0)}), RHO)
    assert len(rep.mapping[2]) == 2
    assert rep.items.ok and rep.s2_steps.ok and rep.axioms.ok
    assert rep.report.is_isomorphism
    assert check_t_axioms(rep.algebra.structure).ok


def test_represent_relational_bb():
    H = to_ht(product(make_b(), make_b()))
    rep = represent_relational(H)
    f = stone_map(H.lattice)
    assert all(R == {(p, p) for p in f[a]} for a, R in enumerate(rep.mapping))
    assert rep.algebra.structure.s1 == rep.algebra.structure.s2


def test_represent_relational_rejects(bt_ht):
    with pytest.raises(AxiomError):
        represent_relational(bt_ht.replace(s2=bt_ht.s1))


@pytest.mark.parametrize("H", CORPUS_H, ids=lambda H: f"n{H.n}")
def test_relational_corpus(H):
    rep = represent_relational(H)
    L = H.lattice
    f = stone_map(L, rep.spectrum)
    points = range(rep.spectrum.points)
    for a in range(H.n):
        literal = frozenset(p for p in rep.G if p[0] in f[a])
        assert rep.mapping[a] == literal == {(p, rep.g(p)) for p in f[a]}
        left = {(p, q) for p, q in rep.G if p in rep.g.image(f[a])}
        right = {(p, q) for p, q in rep.G if q in f[a]}
        assert left == right
    assert rep.items.ok and rep.axioms.ok
    steps = check_f_preservation(H)
    assert steps.ok and all(v == H.n for v in steps.info["steps"].values())
    assert set(points) == {p for pair in rep.G for p in pair}


def test_converse_inclusions_full_relation():
    t0 = time.perf_counter()
    report, cex = check_converse_inclusions(FULL2)
    assert time.perf_counter() - t0 < 1.0
    assert report.ok
    assert report.info["pairs_checked"] == 256
    R, S = frozenset({(0, 1)}), frozenset({(1, 0)})
    assert cex["S2-meet"] == (R, S)
    s2, s1, inclusions = oracles.converse_sweep(FULL2)
    assert inclusions
    assert cex["S2-meet"] == s2 and cex["S1-join"] == s1


def test_converse_counterexample_by_hand():
    R, S = {(0, 1)}, {(1, 0)}
    lhs = relation_operators(FULL2, set(R) & S).s2
    rhs = relation_operators(FULL2, R).s2 & relation_operators(FULL2, S).s2
    assert lhs == E and rhs == RHO


def test_converse_inclusions_guards():
    with pytest.raises(ValueError):
        check_converse_inclusions({(0, 1)})
    big = frozenset((x, y) for x in range(5) for y in range(5))
    with pytest.raises(GuardError):
        check_converse_inclusions(big)


@pytest.mark.parametrize(
    "base",
    [RHO, frozenset({(0, 0), (1, 1)}), frozenset({(0, 1), (1, 0), (2, 2)}), frozenset((x, y) for x in range(3) for y in range(3) if x != y)],
    ids=["swap", "diag", "mixed", "k3"],
)
def test_converse_sweep_matches_oracle(base):
    report, cex = check_converse_inclusions(base)
    s2, s1, inclusions = oracles.converse_sweep(base)
    assert report.ok == inclusions
    assert cex["S2-meet"] == s2 and cex["S1-join"] == s1


@settings(max_examples=100, deadline=None)
@given(st.frozensets(st.sampled_from(sorted(FULL2))), st.frozensets(st.sampled_from(sorted(FULL2))))
def test_equal_arguments_give_equalities(R, S):
    ops = lambda X: relation_operators(FULL2, X)  # noqa: E731
    assert ops(R & R).s2 == ops(R).s2 & ops(R).s2
    assert ops(R | R).s1 == ops(R).s1 | ops(R).s1
    assert ops(R & S).s2 <= ops(R).s2 & ops(S).s2
    assert ops(R | S).s1 >= ops(R).s1 | ops(S).s1
    assert converse(converse(R)) == R
