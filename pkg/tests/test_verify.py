import json

import pytest

from faults import FAULTS, inject
from threeval.examples import make_b, make_bt
from threeval.lattice import GuardError
from threeval.verify import SECTIONS, corpus, verify_paper

# sections that consume the faulty function's output fail along with the target
CASCADE = {
    "t-to-ht": {
        "t-to-ht", "ht-to-t", "double-negation", "maximal-filters",
        "rough-representation", "set-representation", "relational-representation",
    },
    "set-representation": {"set-representation", "relational-representation"},
}


def failed_sections(run):
    return {name for name, s in run.sections.items() if not s["pass"]}


def test_bound_three_corpus():
    assert [T for _, T in corpus(3)] == [make_b(), make_bt()]
    run = verify_paper(3)
    assert run.verdict == "pass"
    assert run.sections["t-axioms"]["checked"] == 2


def test_bound_four_passes_and_includes_b_times_b():
    names = [name for name, _ in corpus(4)]
    assert names == ["size2#0", "size3#0", "size4#0"]
    run = verify_paper(4)
    assert run.verdict == "pass"
    assert list(run.sections) == list(SECTIONS)


def test_products_corpus():
    names = [name for name, _ in corpus(6, products=True)]
    assert names[-3:] == ["B*B", "BT*B", "BT*BT"]
    assert verify_paper(6, items=corpus(6, products=True)).verdict == "pass"


def test_counterexample_recorded():
    run = verify_paper(2)
    (cex,) = run.counterexamples
    assert cex["S2-meet"] == [[[0, 1]], [[1, 0]]]
    assert cex["S1-join"] == [[[0, 1]], [[1, 0]]]


def test_bound_guard():
    with pytest.raises(GuardError):
        verify_paper(7)


def test_mutated_item_fails_axioms_only():
    bad = make_bt().replace(c=(2, 1, 0))
    run = verify_paper(items=[("bad", bad)])
    assert failed_sections(run) == {"t-axioms"}
    assert run.sections["t-axioms"]["failures"] == [{"algebra": "bad", "laws": ["T3"]}]


@pytest.mark.parametrize("section", sorted(FAULTS))
def test_fault_injection(monkeypatch, section):
    inject(monkeypatch, section)
    run = verify_paper(4)
    assert run.verdict == "fail"
    assert failed_sections(run) == CASCADE.get(section, {section})


def test_report_is_deterministic():
    a = json.dumps(verify_paper(4).to_json(), sort_keys=True)
    b = json.dumps(verify_paper(4).to_json(), sort_keys=True)
    assert a == b
