import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import five_heyting
from threeval.examples import distributive_lattices, enumerate_t_structures, make_b, make_bt, product
from threeval.htalgebra import (
    HTAlgebra,
    check_heyting_law,
    check_ht_axioms,
    check_maximality_equivalence,
    check_prelinearity,
    check_s2_double_negation,
    heyting_implication,
    is_ht_algebra,
    to_t,
)
from threeval.lattice import AxiomError, FiniteLattice, complemented_elements
from threeval.tstructure import to_ht

CORPUS_T = [T for n in range(2, 7) for T in enumerate_t_structures(n)] + [
    product(make_b(), make_b()),
    product(make_bt(), make_b()),
    product(make_bt(), make_bt()),
]
CORPUS_H = [to_ht(T) for T in CORPUS_T]


def bare_heyting(L: FiniteLattice) -> HTAlgebra:
    imp = heyting_implication(L)
    ident = tuple(range(L.n))
    return HTAlgebra(L, imp, [imp[a][L.zero] for a in range(L.n)], ident, ident)


def test_chain_heyting_law():
    H = bare_heyting(FiniteLattice.chain(3))
    assert H.imp == ((2, 2, 2), (0, 2, 2), (0, 1, 2))
    assert check_heyting_law(H).ok


def test_chain_imp_mutation_rejected():
    H = bare_heyting(FiniteLattice.chain(3))
    imp = [list(r) for r in H.imp]
    imp[2][1] = 2
    report = check_heyting_law(H.replace(imp=imp))
    assert report.laws()[0] == "HT1"
    assert report.violations[0].witness == (2, 1)


def test_boolean_residual():
    bb = product(make_b(), make_b())
    L = bb.lattice
    imp = [[L.join[bb.c[a]][b] for b in range(4)] for a in range(4)]
    H = HTAlgebra(L, imp, [imp[a][L.zero] for a in range(4)], bb.s1, bb.s2)
    assert check_heyting_law(H).ok


@pytest.mark.parametrize("L", [L for n in range(1, 9) for L in distributive_lattices(n)], ids=lambda L: f"n{L.n}")
def test_implication_matches_residual_oracle(L):
    imp = heyting_implication(L)
    for a in range(L.n):
        for b in range(L.n):
            assert imp[a][b] == oracles.residual(L.meet, a, b)


def test_ht_axioms_on_examples(bt_ht):
    assert check_ht_axioms(bt_ht).ok
    assert check_ht_axioms(to_ht(product(make_b(), make_b()))).ok
    assert is_ht_algebra(bt_ht)


def test_identity_s1_breaks_ht7(bt_ht):
    report = check_ht_axioms(bt_ht.replace(s1=(0, 1, 2)))
    assert report.first("HT7").witness == (1,)


def test_prelinearity_examples(bt_ht):
    assert check_prelinearity(bt_ht).ok
    assert check_prelinearity(to_ht(product(make_b(), make_b()))).ok


def test_non_prelinear_heyting_algebra_rejected():
    L = five_heyting()
    H = bare_heyting(L)
    assert check_heyting_law(H).ok
    report = check_prelinearity(H)
    assert report.laws() == ["prelinearity"]
    a, b = report.violations[0].witness
    assert (a, b) == (1, 2)
    assert L.join[oracles.residual(L.meet, a, b)][oracles.residual(L.meet, b, a)] != L.one


def test_every_four_element_heyting_algebra_is_prelinear():
    # the smallest non-prelinear Heyting algebra has five elements
    for n in range(1, 5):
        for L in distributive_lattices(n):
            assert check_prelinearity(bare_heyting(L)).ok
    assert any(not check_prelinearity(bare_heyting(L)).ok for L in distributive_lattices(5))


def test_to_t_recovers_bt(bt_ht):
    assert to_t(bt_ht).c == (2, 2, 0)
    assert to_t(bt_ht) == make_bt()


def test_to_t_boolean_complement():
    bb = product(make_b(), make_b())
    T = to_t(to_ht(bb))
    L = T.lattice
    for a in range(4):
        assert L.meet[a][T.c[a]] == L.zero and L.join[a][T.c[a]] == L.one


def test_to_t_rejects_bad_input(bt_ht):
    with pytest.raises(AxiomError):
        to_t(bt_ht.replace(s1=(0, 1, 2)))


def test_double_negation_on_bt(bt_ht):
    assert bt_ht.s2[1] == 2 and bt_ht.neg[bt_ht.neg[1]] == 2
    assert check_s2_double_negation(bt_ht).ok


def test_double_negation_detects_wrong_s2(bt_ht):
    report = check_s2_double_negation(bt_ht.replace(s2=bt_ht.s1))
    assert set(report.laws()) == {"S2-double-negation", "S2-boolean-cover"}
    assert report.first("S2-double-negation").witness == (1,)


def test_maximality_on_chain(bt_ht):
    report = check_maximality_equivalence(bt_ht)
    assert report.ok
    # filters {2}, {1,2}; both conditions hold exactly at ({2},1) and ({1,2},0)
    assert report.info == {"pairs": 6, "both_hold": 2}


@pytest.mark.parametrize("H", CORPUS_H, ids=lambda H: f"n{H.n}")
def test_corpus_ht_laws(H):
    assert check_heyting_law(H).ok
    assert check_ht_axioms(H).ok
    assert check_prelinearity(H).ok
    assert check_s2_double_negation(H).ok
    assert check_maximality_equivalence(H).ok


@pytest.mark.parametrize("T", CORPUS_T, ids=lambda T: f"n{T.n}")
def test_round_trips(T):
    H = to_ht(T)
    assert to_t(H) == T
    assert to_ht(to_t(H)) == H


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(CORPUS_H), st.data())
def test_s2_is_meet_of_boolean_covers(H, data):
    L = H.lattice
    x = data.draw(st.integers(0, H.n - 1))
    covers = [b for b in complemented_elements(L) if L.leq(x, b)]
    assert H.s2[x] == L.meet_all(covers) == H.neg[H.neg[x]]
    assert H.s2[L.zero] == L.zero


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(CORPUS_H), st.data())
def test_heyting_residuation_property(H, data):
    L = H.lattice
    a, b, c = (data.draw(st.integers(0, H.n - 1)) for _ in range(3))
    assert L.leq(L.meet[a][c], b) == L.leq(c, H.imp[a][b])
