"""Distributive lattices with three unary operators C, S1, S2 (T-structures)."""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import (
    AxiomError,
    FiniteLattice,
    Report,
    _tuple_unary,
    check_distributive_lattice,
    complemented_elements,
)

T2_HALVES = ("S1-meet", "S1-join", "S2-meet", "S2-join")
T_AXIOMS = ("T2", "T3", "T4", "T5", "T6", "T7")


@dataclass(frozen=True)
class TStructure:
    lattice: FiniteLattice
    c: tuple
    s1: tuple
    s2: tuple

    kind = "t"

    def __post_init__(self):
        n = self.lattice.n
        for name in ("c", "s1", "s2"):
            object.__setattr__(self, name, _tuple_unary(getattr(self, name), n, name))

    @property
    def n(self) -> int:
        return self.lattice.n

    def s(self, i: int) -> tuple:
        return self.s1 if i == 1 else self.s2

    def operations(self) -> dict:
        ops = self.lattice.operations()
        ops.update(c=(1, self.c), s1=(1, self.s1), s2=(1, self.s2))
        return ops

    @classmethod
    def from_operations(cls, lattice: FiniteLattice, tables: dict) -> "TStructure":
        return cls(lattice, tables["c"], tables["s1"], tables["s2"])

    def replace(self, **tables) -> "TStructure":
        """Copy with some unary tables swapped out (handy for mutation tests)."""
        fields = {"c": self.c, "s1": self.s1, "s2": self.s2}
        fields.update(tables)
        return TStructure(self.lattice, **fields)


def t2_half_witnesses(T: TStructure) -> dict:
    """First failing pair for each half-equation of S_i distributing over meet/join."""
    L = T.lattice
    out = dict.fromkeys(T2_HALVES)
    for half in T2_HALVES:
        s = T.s1 if half.startswith("S1") else T.s2
        op = L.meet if half.endswith("meet") else L.join
        for a in range(L.n):
            for b in range(L.n):
                if s[op[a][b]] != op[s[a]][s[b]]:
                    out[half] = (a, b)
                    break
            if out[half] is not None:
                break
    return out


def _first(pred, n):
    return next((a for a in range(n) if pred(a)), None)


def axiom_witnesses(T: TStructure) -> dict:
    """Map each axiom T3..T7 to its first witness (or None); T2 split in halves."""
    L = T.lattice
    n, z, o = L.n, L.zero, L.one
    out = dict(t2_half_witnesses(T))
    a = _first(lambda a: L.meet[T.s1[a]][T.c[a]] != z or L.join[T.s1[a]][T.c[a]] != o, n)
    out["T3"] = None if a is None else (a,)
    out["T4"] = next(
        ((i, j, a) for i in (1, 2) for j in (1, 2) for a in range(n) if T.s(i)[T.s(j)[a]] != T.s(j)[a]),
        None,
    )
    out["T5"] = None
    if T.s1[z] != z:
        out["T5"] = (z,)
    elif T.s1[o] != o:
        out["T5"] = (o,)
    out["T6"] = next(
        (
            (a, b)
            for a in range(n)
            for b in range(a + 1, n)
            if T.s1[a] == T.s1[b] and T.s2[a] == T.s2[b]
        ),
        None,
    )
    a = _first(lambda a: not L.leq(T.s1[a], T.s2[a]), n)
    out["T7"] = None if a is None else (a,)
    return out


def check_t_axioms(T: TStructure) -> Report:
    """All violated axioms among T2-T7, in order, each with its first witness."""
    report = Report()
    w = axiom_witnesses(T)
    halves = [h for h in T2_HALVES if w[h] is not None]
    if halves:
        report.add("T2", w[halves[0]], detail=",".join(halves))
    for law in T_AXIOMS[1:]:
        if w[law] is not None:
            report.add(law, w[law])
    return report


def is_t_structure(T: TStructure) -> bool:
    return check_distributive_lattice(T.lattice).ok and check_t_axioms(T).ok


def check_derived_props(T: TStructure) -> Report:
    """Consequences of the axioms: T8-T11 and the common image of S1, S2."""
    L = T.lattice
    n, z, o = L.n, L.zero, L.one
    report = Report()
    if T.s2[z] != z:
        report.add("T8", (z,))
    elif T.s2[o] != o:
        report.add("T8", (o,))
    for a in range(n):
        for b in range(n):
            lhs = L.leq(a, b)
            rhs = L.leq(T.s1[a], T.s1[b]) and L.leq(T.s2[a], T.s2[b])
            if lhs != rhs:
                report.add("T9", (a, b))
                break
        else:
            continue
        break
    a = _first(lambda a: not (L.leq(T.s1[a], a) and L.leq(a, T.s2[a])), n)
    if a is not None:
        report.add("T10", (a,))
    w = next(
        (
            (i, a)
            for i in (1, 2)
            for a in range(n)
            if L.meet[T.s(i)[a]][T.c[T.s(i)[a]]] != z or L.join[T.s(i)[a]][T.c[T.s(i)[a]]] != o
        ),
        None,
    )
    if w is not None:
        report.add("T11", w)
    img1, img2 = set(T.s1), set(T.s2)
    boolean = complemented_elements(L)
    odd = sorted((img1 ^ img2) | (img1 ^ boolean))
    if odd:
        report.add("common-image", (odd[0],), detail="S1(A), S2(A), B(A) differ")
    return report


def operator_images(T: TStructure) -> tuple[frozenset, frozenset]:
    return frozenset(T.s1), frozenset(T.s2)


def to_ht(T: TStructure):
    """Heyting implication and negation built from C, S1, S2.

    ``a => b`` is ``b`` joined with the meet over k of ``C S_k a  v  S_k b``;
    ``not a`` is ``a => 0``.
    """
    from .htalgebra import HTAlgebra

    report = check_t_axioms(T)
    if not report.ok:
        raise AxiomError("input is not a T-structure", report)
    L = T.lattice
    n = L.n
    imp = [
        [
            L.join[b][
                L.meet[L.join[T.c[T.s1[a]]][T.s1[b]]][L.join[T.c[T.s2[a]]][T.s2[b]]]
            ]
            for b in range(n)
        ]
        for a in range(n)
    ]
    neg = [imp[a][L.zero] for a in range(n)]
    return HTAlgebra(L, imp, neg, T.s1, T.s2)
