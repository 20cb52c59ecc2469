"""Relational representation: an involution on the prime filters, the
symmetric relation G it induces, and the embedding a -> G & (f(a) x E)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from . import kernels
from .htalgebra import HTAlgebra, check_ht_axioms, to_t
from .lattice import (
    ISO_BOUND,
    AxiomError,
    FiniteLattice,
    GuardError,
    MorphismReport,
    Report,
    check_homomorphism,
    find_isomorphism,
)
from .spectrum import Spectrum, chain_decomposition, stone_map
from .tstructure import TStructure, check_t_axioms

SWEEP_BOUND = 16


@dataclass(frozen=True)
class Involution:
    map: tuple

    def __post_init__(self):
        m = tuple(self.map)
        object.__setattr__(self, "map", m)
        if any(not 0 <= x < len(m) or m[x] != p for p, x in enumerate(m)):
            raise ValueError(f"{m} is not an involution")

    @property
    def points(self) -> int:
        return len(self.map)

    def __call__(self, p: int) -> int:
        return self.map[p]

    def image(self, X: Iterable[int]) -> frozenset:
        return frozenset(self.map[p] for p in X)


class OperatorTriple(NamedTuple):
    s1: frozenset
    c: frozenset
    s2: frozenset


def involution_from_spectrum(spectrum: Spectrum) -> Involution:
    """Fix filters that are alone in their chain; swap the two filters of a
    two-element chain."""
    if spectrum.oversized or spectrum.non_chain:
        raise ValueError("spectrum has a component that is not a chain of size <= 2")
    m = list(range(spectrum.points))
    for block in spectrum.chains:
        if len(block) == 2:
            p, q = block
            m[p], m[q] = q, p
    return Involution(tuple(m))


def set_operators(g: Involution, X: Iterable[int]) -> OperatorTriple:
    X = frozenset(X)
    gX = g.image(X)
    s1 = X & gX
    return OperatorTriple(s1, frozenset(range(g.points)) - s1, X | gX)


def converse(R: Iterable[tuple]) -> frozenset:
    return frozenset((y, x) for x, y in R)


def build_g_relation(g: Involution) -> frozenset:
    return frozenset((p, g(p)) for p in range(g.points))


def relation_operators(base: Iterable[tuple], R: Iterable[tuple]) -> OperatorTriple:
    """S1(R) = R & R^-1, C(R) = base - S1(R), S2(R) = R | R^-1."""
    base, R = frozenset(base), frozenset(R)
    if converse(base) != base:
        raise ValueError("base relation is not symmetric")
    if not R <= base:
        raise ValueError("relation not contained in base")
    inv = converse(R)
    return OperatorTriple(R & inv, base - (R & inv), R | inv)


def check_f_preservation(H: HTAlgebra) -> Report:
    """Stone map against the involution set operators.

    Checks f(S1 a) = S1 f(a), f(S2 a) = S2 f(a), f(C a) = C f(a), and
    itemizes the S2 equality into four inclusions:
    (i) f(S2 a) <= S2 f(S2 a), (ii) S2 f(S2 a) <= f(S2 a),
    (iii) f(S2 a) <= S2 f(a), (iv) S2 f(a) <= f(S2 a).
    """
    report = check_ht_axioms(H)
    if not report.ok:
        raise AxiomError("input is not an HT-algebra", report)
    T = to_t(H)
    spectrum = chain_decomposition(H.lattice)
    g = involution_from_spectrum(spectrum)
    f = stone_map(H.lattice, spectrum)
    steps = dict.fromkeys(("i", "ii", "iii", "iv"), 0)
    report = Report()
    for a in range(H.n):
        ops = set_operators(g, f[a])
        fs2 = f[T.s2[a]]
        s2_of_fs2 = set_operators(g, fs2).s2
        checks = {
            "i": fs2 <= s2_of_fs2,
            "ii": s2_of_fs2 <= fs2,
            "iii": fs2 <= ops.s2,
            "iv": ops.s2 <= fs2,
        }
        for step, holds in checks.items():
            if holds:
                steps[step] += 1
            else:
                report.add(f"S2-step-{step}", (a,))
        if f[T.s1[a]] != ops.s1:
            report.add("f-S1", (a,))
        if fs2 != ops.s2:
            report.add("f-S2", (a,))
        if f[T.c[a]] != ops.c:
            report.add("f-C", (a,))
    report.info["elements"] = H.n
    report.info["steps"] = steps
    return report


def set_algebra(H: HTAlgebra) -> TStructure:
    """The Stone image f(A) with the involution operators, indexed like H."""
    spectrum = chain_decomposition(H.lattice)
    g = involution_from_spectrum(spectrum)
    f = stone_map(H.lattice, spectrum)
    pos = {X: a for a, X in enumerate(f)}
    if len(pos) != H.n:
        raise ValueError("Stone map is not injective")
    try:
        n = H.n
        meet = [[pos[f[a] & f[b]] for b in range(n)] for a in range(n)]
        join = [[pos[f[a] | f[b]] for b in range(n)] for a in range(n)]
        ops = [set_operators(g, X) for X in f]
        lattice = FiniteLattice(n, meet, join, pos[frozenset()], pos[frozenset(range(g.points))])
        return TStructure(
            lattice, [pos[o.c] for o in ops], [pos[o.s1] for o in ops], [pos[o.s2] for o in ops]
        )
    except KeyError as exc:
        raise ValueError("Stone image is not closed under the set operators") from exc


def _pair_order(base: frozenset) -> list:
    return sorted(base)


@dataclass(frozen=True)
class RelAlgebra:
    base: frozenset
    carrier: tuple

    @cached_property
    def _positions(self) -> dict:
        return {R: i for i, R in enumerate(self.carrier)}

    def index(self, R: frozenset) -> int:
        return self._positions[R]

    @cached_property
    def structure(self) -> TStructure:
        """Carrier as a T-structure (KeyError if the carrier is not closed)."""
        pos = self._positions
        car = self.carrier
        meet = [[pos[R & S] for S in car] for R in car]
        join = [[pos[R | S] for S in car] for R in car]
        ops = [relation_operators(self.base, R) for R in car]
        lattice = FiniteLattice(len(car), meet, join, pos[frozenset()], pos[self.base])
        return TStructure(
            lattice, [pos[o.c] for o in ops], [pos[o.s1] for o in ops], [pos[o.s2] for o in ops]
        )


def relation_key(base: frozenset):
    """Sort key: the relation's bitmask over the sorted pairs of ``base``."""
    bit = {pair: i for i, pair in enumerate(_pair_order(base))}

    def key(R):
        return sum(1 << bit[p] for p in R)

    return key


@dataclass
class RelationalRepresentation:
    spectrum: Spectrum
    g: Involution
    G: frozenset
    mapping: tuple  # element -> relation
    algebra: RelAlgebra
    items: Report
    s2_steps: Report
    report: MorphismReport
    axioms: Report
    isomorphism: tuple | None

    def to_json(self) -> dict:
        return {
            "E": [sorted(f) for f in self.spectrum.filters],
            "g": list(self.g.map),
            "G": sorted(list(p) for p in self.G),
            "h": [sorted(list(p) for p in R) for R in self.mapping],
            "items": self.items.to_json(),
            "s2_steps": self.s2_steps.to_json(),
            "morphism": self.report.to_json(),
            "image_axioms": self.axioms.to_json(),
            "isomorphism": None if self.isomorphism is None else list(self.isomorphism),
        }


def represent_relational(H: HTAlgebra) -> RelationalRepresentation:
    """Embed H into subrelations of G and verify every preservation claim."""
    report = check_ht_axioms(H)
    if not report.ok:
        raise AxiomError("input is not an HT-algebra", report)
    if H.lattice.degenerate:
        raise ValueError("degenerate algebra has an empty spectrum")
    L = H.lattice
    n = L.n
    T = to_t(H)
    spectrum = chain_decomposition(L)
    g = involution_from_spectrum(spectrum)
    G = build_g_relation(g)
    E = range(spectrum.points)
    f = stone_map(L, spectrum)

    mapping = tuple(G & frozenset((p, q) for p in f[a] for q in E) for a in range(n))
    items = Report()
    for a in range(n):
        if mapping[a] != frozenset((p, g(p)) for p in f[a]):
            items.add("h-simplified", (a,))
        left = G & frozenset((p, q) for p in g.image(f[a]) for q in E)
        right = G & frozenset((p, q) for p in E for q in f[a])
        if left != right:
            items.add("converse-lemma", (a,))
    w = next(
        ((a, b) for a in range(n) for b in range(a + 1, n) if mapping[a] == mapping[b]), None
    )
    if w:
        items.add("h-injective", w)
    for name, table, op in (("h-meet", L.meet, frozenset.__and__), ("h-join", L.join, frozenset.__or__)):
        w = next(
            (
                (a, b)
                for a in range(n)
                for b in range(n)
                if mapping[table[a][b]] != op(mapping[a], mapping[b])
            ),
            None,
        )
        if w:
            items.add(name, w)
    for a in range(n):
        ops = relation_operators(G, mapping[a])
        if mapping[T.s2[a]] != ops.s2:
            items.add("h-S2", (a,))
        if mapping[T.s1[a]] != ops.s1:
            items.add("h-S1", (a,))
        if mapping[T.c[a]] != ops.c:
            items.add("h-C", (a,))

    algebra = RelAlgebra(G, tuple(sorted(set(mapping), key=relation_key(G))))
    try:
        image = algebra.structure
    except KeyError as exc:
        raise RuntimeError("relational image is not closed under its operations") from exc
    morphism = check_homomorphism(T, image, [algebra.index(R) for R in mapping])
    axioms = check_t_axioms(image)
    iso = find_isomorphism(image, T) if n <= ISO_BOUND else None
    steps = check_f_preservation(H)
    if (
        not (items.ok and steps.ok and axioms.ok and morphism.is_isomorphism)
        or (n <= ISO_BOUND and iso is None)
    ):
        raise RuntimeError("relational representation failed verification")
    return RelationalRepresentation(spectrum, g, G, mapping, algebra, items, steps, morphism, axioms, iso)


def check_converse_inclusions(base: Iterable[tuple], bound: int = SWEEP_BOUND) -> tuple[Report, dict]:
    """Sweep every pair (R, S) of subrelations of a symmetric ``base``.

    Verifies S2(R & S) <= S2 R & S2 S and S1(R | S) >= S1 R | S1 S, and
    returns the first (R, S), in bitmask order over the sorted base pairs,
    where each inclusion is strict.
    """
    base = frozenset(base)
    if converse(base) != base:
        raise ValueError("base relation is not symmetric")
    if len(base) > bound:
        raise GuardError(f"sweep limited to {bound} base pairs")
    pairs = _pair_order(base)
    bit = {p: i for i, p in enumerate(pairs)}
    inv_bit = [bit[(y, x)] for x, y in pairs]
    s2_fail, s1_fail, s2_strict, s1_strict, n2, n1 = kernels.converse_sweep(len(pairs), inv_bit)

    def decode(rs):
        if rs is None:
            return None
        return tuple(frozenset(p for i, p in enumerate(pairs) if m >> i & 1) for m in rs)

    report = Report()
    if s2_fail is not None:
        report.add("S2-meet-inclusion", decode(s2_fail))
    if s1_fail is not None:
        report.add("S1-join-inclusion", decode(s1_fail))
    size = 1 << len(pairs)
    report.info.update(pairs_checked=size * size, s2_strict=n2, s1_strict=n1)
    counterexamples = {"S2-meet": decode(s2_strict), "S1-join": decode(s1_strict)}
    return report, counterexamples
