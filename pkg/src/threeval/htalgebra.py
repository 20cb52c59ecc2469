"""Heyting algebras with operators S1, S2 (HT-algebras)."""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import (
    AxiomError,
    FiniteLattice,
    Report,
    _tuple_table,
    _tuple_unary,
    complemented_elements,
)
from .spectrum import BRUTE_FORCE_BOUND, filters_bruteforce, prime_filters_bruteforce
from .tstructure import T2_HALVES, TStructure

HT_AXIOMS = ("HT2", "HT3", "HT4", "HT5", "HT6", "HT7")


@dataclass(frozen=True)
class HTAlgebra:
    lattice: FiniteLattice
    imp: tuple
    neg: tuple
    s1: tuple
    s2: tuple

    kind = "ht"

    def __post_init__(self):
        n = self.lattice.n
        object.__setattr__(self, "imp", _tuple_table(self.imp, n, "imp"))
        for name in ("neg", "s1", "s2"):
            object.__setattr__(self, name, _tuple_unary(getattr(self, name), n, name))

    @property
    def n(self) -> int:
        return self.lattice.n

    def s(self, i: int) -> tuple:
        return self.s1 if i == 1 else self.s2

    def operations(self) -> dict:
        ops = self.lattice.operations()
        ops.update(imp=(2, self.imp), neg=(1, self.neg), s1=(1, self.s1), s2=(1, self.s2))
        return ops

    @classmethod
    def from_operations(cls, lattice: FiniteLattice, tables: dict) -> "HTAlgebra":
        return cls(lattice, tables["imp"], tables["neg"], tables["s1"], tables["s2"])

    def replace(self, **tables) -> "HTAlgebra":
        fields = {"imp": self.imp, "neg": self.neg, "s1": self.s1, "s2": self.s2}
        fields.update(tables)
        return HTAlgebra(self.lattice, **fields)


def heyting_implication(L: FiniteLattice) -> tuple:
    """Relative pseudocomplement table read off the order.

    Only meaningful on distributive L, where the join of all c with
    a ^ c <= b is itself such a c.
    """
    n = L.n
    table = []
    for a in range(n):
        row = []
        for b in range(n):
            cands = [c for c in range(n) if L.leq(L.meet[a][c], b)]
            row.append(L.join_all(cands))
        table.append(tuple(row))
    return tuple(table)


def check_heyting_law(H: HTAlgebra) -> Report:
    """``imp[a][b]`` must be the greatest c with a ^ c <= b; ``neg[a] = imp[a][0]``."""
    L = H.lattice
    n = L.n
    report = Report()
    bound = greatest = None
    for a in range(n):
        for b in range(n):
            r = H.imp[a][b]
            if bound is None and not L.leq(L.meet[a][r], b):
                bound = (a, b)
            if greatest is None:
                c = next(
                    (c for c in range(n) if L.leq(L.meet[a][c], b) and not L.leq(c, r)),
                    None,
                )
                if c is not None:
                    greatest = (a, b, c)
    if bound is not None:
        report.add("HT1", bound, detail="a ^ (a => b) <= b fails")
    if greatest is not None:
        report.add("HT1", greatest, detail="a => b is not the greatest residual")
    a = next((a for a in range(n) if H.neg[a] != H.imp[a][L.zero]), None)
    if a is not None:
        report.add("HT1", (a,), detail="neg a != a => 0")
    return report


def check_ht_axioms(H: HTAlgebra) -> Report:
    L = H.lattice
    n, o = L.n, L.one
    imp = H.imp
    report = Report()

    halves = []
    first_half = None
    for half in T2_HALVES:
        s = H.s1 if half.startswith("S1") else H.s2
        op = L.meet if half.endswith("meet") else L.join
        w = next(
            ((a, b) for a in range(n) for b in range(n) if s[op[a][b]] != op[s[a]][s[b]]),
            None,
        )
        if w is not None:
            halves.append(half)
            first_half = first_half or w
    if halves:
        report.add("HT2", first_half, detail=",".join(halves))

    pairs = [(a, b) for a in range(n) for b in range(n)]
    w = next(((a, b) for a, b in pairs if H.s2[imp[a][b]] != imp[H.s2[a]][H.s2[b]]), None)
    if w:
        report.add("HT3", w)
    w = next(
        (
            (a, b)
            for a, b in pairs
            if H.s1[imp[a][b]] != L.meet[imp[H.s1[a]][H.s1[b]]][imp[H.s2[a]][H.s2[b]]]
        ),
        None,
    )
    if w:
        report.add("HT4", w)
    w = next(
        ((i, j, a) for i in (1, 2) for j in (1, 2) for a in range(n) if H.s(i)[H.s(j)[a]] != H.s(j)[a]),
        None,
    )
    if w:
        report.add("HT5", w)
    a = next((a for a in range(n) if L.join[H.s1[a]][a] != a), None)
    if a is not None:
        report.add("HT6", (a,))
    a = next((a for a in range(n) if L.join[H.s1[a]][H.neg[H.s1[a]]] != o), None)
    if a is not None:
        report.add("HT7", (a,))
    return report


def is_ht_algebra(H: HTAlgebra) -> bool:
    return check_heyting_law(H).ok and check_ht_axioms(H).ok


def check_prelinearity(H: HTAlgebra) -> Report:
    """``(a => b) v (b => a) = 1`` for every pair."""
    L = H.lattice
    report = Report()
    w = next(
        (
            (a, b)
            for a in range(L.n)
            for b in range(L.n)
            if L.join[H.imp[a][b]][H.imp[b][a]] != L.one
        ),
        None,
    )
    if w is not None:
        report.add("prelinearity", w)
    return report


def to_t(H: HTAlgebra) -> TStructure:
    """T-structure with ``C a = not S1 a``."""
    report = check_ht_axioms(H)
    if not report.ok:
        raise AxiomError("input is not an HT-algebra", report)
    return TStructure(H.lattice, [H.neg[H.s1[a]] for a in range(H.n)], H.s1, H.s2)


def check_s2_double_negation(H: HTAlgebra) -> Report:
    """S2 x, not not x, and the meet of the complemented elements above x agree."""
    L = H.lattice
    boolean = sorted(complemented_elements(L))
    report = Report()
    for x in range(L.n):
        nn = H.neg[H.neg[x]]
        if H.s2[x] != nn:
            report.add("S2-double-negation", (x,), detail=f"S2={H.s2[x]} nn={nn}")
            break
    for x in range(L.n):
        cover = L.meet_all(b for b in boolean if L.leq(x, b))
        if H.s2[x] != cover:
            report.add("S2-boolean-cover", (x,), detail=f"S2={H.s2[x]} cover={cover}")
            break
    return report


def check_maximality_equivalence(H: HTAlgebra, bound: int = BRUTE_FORCE_BOUND) -> Report:
    """For each prime filter M and element a, compare

    (a) M is maximal among the filters omitting a, and
    (b) a is not in M and ``x => a`` is in M for every x outside M.
    """
    L = H.lattice
    n = L.n
    filters = filters_bruteforce(L, bound)
    primes = prime_filters_bruteforce(L, bound)
    report = Report()
    both = 0
    for M in primes:
        for a in range(n):
            if a in M:
                cond_a = cond_b = False
            else:
                cond_a = not any(M < F and a not in F for F in filters)
                cond_b = all(H.imp[x][a] in M for x in range(n) if x not in M)
            if cond_a != cond_b:
                report.add(
                    "maximality-equivalence",
                    (tuple(sorted(M)), a),
                    detail=f"maximal={cond_a} residual={cond_b}",
                )
            both += cond_a and cond_b
    report.info["pairs"] = len(primes) * n
    report.info["both_hold"] = both
    return report
