"""Corpus-wide verification of the representation and equivalence results.

Every module-level name used by a section is looked up at call time, so
tests can monkeypatch a single function to inject a fault.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .examples import enumerate_t_structures, make_b, make_bt, product
from .htalgebra import (
    check_heyting_law,
    check_ht_axioms,
    check_maximality_equivalence,
    check_prelinearity,
    check_s2_double_negation,
    to_t,
)
from .lattice import GuardError, Report, check_distributive_lattice
from .relational import (
    build_g_relation,
    check_converse_inclusions,
    check_f_preservation,
    involution_from_spectrum,
    represent_relational,
)
from .rough import represent_rough
from .spectrum import (
    chain_decomposition,
    check_nested_filters,
    check_stone_map,
    prime_filters_birkhoff,
    prime_filters_bruteforce,
)
from .tstructure import check_derived_props, check_t_axioms, to_ht

SCHEMA = 1
VERIFY_BOUND = 6

SECTIONS = (
    "t-axioms",
    "t-to-ht",
    "ht-to-t",
    "double-negation",
    "spectrum",
    "nested-filters",
    "maximal-filters",
    "rough-representation",
    "set-representation",
    "relational-representation",
    "converse-inclusions",
)


@dataclass
class RunReport:
    command: str
    input_digest: str
    sections: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    payload: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "pass" if all(s["pass"] for s in self.sections.values()) else "fail"

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "command": self.command,
            "input_digest": self.input_digest,
            "verdict": self.verdict,
            "sections": self.sections,
            "counterexamples": self.counterexamples,
            **self.payload,
        }


def digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def corpus(bound: int, products: bool = False) -> list[tuple[str, object]]:
    """Named T-structures: every enumerated model of size 2..bound, optionally
    followed by the products B*B, BT*B and BT*BT."""
    if bound > VERIFY_BOUND:
        raise GuardError(f"corpus bound limited to {VERIFY_BOUND}")
    items = []
    for n in range(2, bound + 1):
        for i, T in enumerate(enumerate_t_structures(n)):
            items.append((f"size{n}#{i}", T))
    if products:
        b, bt = make_b(), make_bt()
        items += [("B*B", product(b, b)), ("BT*B", product(bt, b)), ("BT*BT", product(bt, bt))]
    return items


class _Section:
    def __init__(self):
        self.checked = 0
        self.failures = []

    def record(self, name: str, report=None, error: str | None = None):
        self.checked += 1
        if error is not None:
            self.failures.append({"algebra": name, "error": error})
        elif report is not None and not report.ok:
            self.failures.append({"algebra": name, "laws": report.laws()})

    def to_json(self) -> dict:
        return {"pass": not self.failures, "checked": self.checked, "failures": self.failures}


def _guarded(section: _Section, name: str, fn):
    try:
        return fn()
    except Exception as exc:  # a crash inside a check counts against its section
        section.record(name, error=f"{type(exc).__name__}: {exc}")
        return None


def _run(section: _Section, name: str, fn) -> None:
    report = _guarded(section, name, fn)
    if report is not None:
        section.record(name, report)


def verify_paper(bound: int = 4, items=None) -> RunReport:
    """Run every check over the corpus and aggregate per section."""
    if items is None:
        items = corpus(bound)
    args = json.dumps({"command": "verify-paper", "bound": bound}, sort_keys=True).encode()
    run = RunReport("verify-paper", digest(args))
    sec = {name: _Section() for name in SECTIONS}

    for name, T in items:
        axioms = check_t_axioms(T)
        axioms.extend(check_distributive_lattice(T.lattice))
        axioms.extend(check_derived_props(T))
        sec["t-axioms"].record(name, axioms)
        if not axioms.ok:
            continue

        s = sec["t-to-ht"]
        H = _guarded(s, name, lambda: to_ht(T))
        if H is None:
            continue
        law = check_heyting_law(H)
        law.extend(check_ht_axioms(H))
        law.extend(check_prelinearity(H))
        s.record(name, law)

        s = sec["ht-to-t"]
        back = _guarded(s, name, lambda: to_t(H))
        again = None if back is None else _guarded(s, name, lambda: to_ht(back))
        if again is not None:
            ok = back == T and again == H
            s.record(name, error=None if ok else "round trip differs")

        _run(sec["double-negation"], name, lambda: check_s2_double_negation(H))

        L = H.lattice

        def spectrum_check():
            report = Report()
            brute = prime_filters_bruteforce(L)
            if brute != prime_filters_birkhoff(L):
                report.add("filters-agree", ())
            spectrum = chain_decomposition(L, brute)
            if spectrum.oversized or spectrum.non_chain:
                report.add("chains-of-two", spectrum.oversized + spectrum.non_chain)
            report.extend(check_stone_map(L, spectrum))
            return report

        _run(sec["spectrum"], name, spectrum_check)
        _run(sec["nested-filters"], name, lambda: check_nested_filters(H))
        _run(sec["maximal-filters"], name, lambda: check_maximality_equivalence(H))
        _run(sec["set-representation"], name, lambda: check_f_preservation(H))
        _run(sec["rough-representation"], name, lambda: represent_rough(H) and Report())
        _run(sec["relational-representation"], name, lambda: represent_relational(H) and Report())

        def sweep():
            G = build_g_relation(involution_from_spectrum(chain_decomposition(L)))
            return check_converse_inclusions(G)[0]

        _run(sec["converse-inclusions"], name, sweep)

    s = sec["converse-inclusions"]
    full = frozenset((x, y) for x in range(2) for y in range(2))
    out = _guarded(s, "full-2", lambda: check_converse_inclusions(full))
    if out is not None:
        report, cex = out
        s.record("full-2", report)
        run.counterexamples.append(
            {
                "base": "full-2",
                "S2-meet": _pairs_json(cex["S2-meet"]),
                "S1-join": _pairs_json(cex["S1-join"]),
            }
        )

    run.sections = {name: sec[name].to_json() for name in SECTIONS}
    return run


def _pairs_json(rs):
    if rs is None:
        return None
    return [sorted(list(p) for p in R) for R in rs]
