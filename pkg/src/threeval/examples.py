"""Concrete T-structures: the basic chains, rough-set and involution set
algebras, relation algebras, and an exhaustive small-model enumerator."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from itertools import permutations
from typing import Callable, Iterable

from .lattice import (
    FiniteLattice,
    GuardError,
    _jsonable,
    check_distributive_lattice,
    complement_of,
    complemented_elements,
    direct_product,
    find_isomorphism,
)
from .relational import Involution, relation_key, relation_operators, set_operators
from .rough import CLOSURE_CAP, ApproximationSpace, RoughAlgebra, rough_algebra
from .spectrum import _mask
from .tstructure import T2_HALVES, TStructure, axiom_witnesses, check_t_axioms

ENUMERATION_BOUND = 6
CLOSURE_AXIOMS = ("T1",) + tuple(f"T2-{h}" for h in T2_HALVES) + ("T3", "T4", "T5", "T6", "T7")


def _from_sets(elements: list[frozenset], everything: frozenset, c, s1, s2) -> TStructure:
    pos = {X: i for i, X in enumerate(elements)}
    n = len(elements)
    lattice = FiniteLattice(
        n,
        [[pos[X & Y] for Y in elements] for X in elements],
        [[pos[X | Y] for Y in elements] for X in elements],
        pos[frozenset()],
        pos[everything],
    )
    return TStructure(
        lattice,
        [pos[c(X)] for X in elements],
        [pos[s1(X)] for X in elements],
        [pos[s2(X)] for X in elements],
    )


def make_bt() -> TStructure:
    """Empty set and the increasing subsets of the two-agent chain t1 <= t2.

    Element order: 0 = empty, 1 = F(t2) = {t2}, 2 = F(t1) = {t1, t2}.
    S_t(X) is the whole chain when t is in X, else empty; C X is the
    complement of S_t1 X.
    """
    agents = frozenset((1, 2))

    def increasing(t):
        return frozenset(w for w in agents if t <= w)

    def s(t):
        return lambda X: agents if t in X else frozenset()

    elements = [frozenset(), increasing(2), increasing(1)]
    return _from_sets(elements, agents, lambda X: agents - s(1)(X), s(1), s(2))


def make_b() -> TStructure:
    """Two-element Boolean case: S1 = S2 = identity, C = complement."""
    everything = frozenset((1,))
    elements = [frozenset(), everything]
    return _from_sets(elements, everything, lambda X: everything - X, lambda X: X, lambda X: X)


def product(*algebras):
    return reduce(direct_product, algebras)


def from_approximation_space(classes: Iterable[Iterable[int]]) -> RoughAlgebra:
    """All rough pairs (L X, M X) of a partition, X ranging over every subset."""
    space = ApproximationSpace.from_classes(classes)
    if space.points > 16:
        raise GuardError("at most 16 points")
    subsets = [[p for p in range(space.points) if X >> p & 1] for X in range(1 << space.points)]
    return rough_algebra(space, subsets)


@dataclass
class ClosureReport:
    carrier: list
    satisfied_axioms: list = field(default_factory=list)
    failed_axioms: list = field(default_factory=list)
    structure: TStructure | None = None

    @property
    def ok(self) -> bool:
        return not self.failed_axioms

    def to_json(self) -> dict:
        return {
            "carrier": _jsonable(self.carrier),
            "satisfied_axioms": self.satisfied_axioms,
            "failed_axioms": [[name, _jsonable(w)] for name, w in self.failed_axioms],
        }


def _close(seeds, unary: list[Callable], cap: int) -> set:
    found = set(seeds)
    frontier = list(found)
    while frontier:
        new = set()
        for X in frontier:
            for op in unary:
                new.add(op(X))
            for Y in found:
                new.add(X & Y)
                new.add(X | Y)
        new -= found
        found |= new
        if len(found) > cap:
            raise GuardError(f"closure exceeded {cap} elements")
        frontier = list(new)
    return found


def _closure_report(carrier: list, everything: frozenset, ops: Callable) -> ClosureReport:
    T = _from_sets(
        carrier, everything, lambda X: ops(X).c, lambda X: ops(X).s1, lambda X: ops(X).s2
    )
    witnesses = axiom_witnesses(T)
    lattice_report = check_distributive_lattice(T.lattice)
    report = ClosureReport(carrier=carrier, structure=T)
    for name in CLOSURE_AXIOMS:
        if name == "T1":
            w = None if lattice_report.ok else lattice_report.violations[0].witness
        else:
            w = witnesses[name[3:] if name.startswith("T2-") else name]
        if w is None:
            report.satisfied_axioms.append(name)
        elif name == "T4":
            i, j, a = w
            report.failed_axioms.append((name, (i, j, carrier[a])))
        else:
            report.failed_axioms.append((name, tuple(carrier[a] for a in w)))
    return report


def closure_from_involution(
    points: int, g: Involution, generators: Iterable[Iterable[int]], cap: int = CLOSURE_CAP
) -> ClosureReport:
    """Close the generators (plus empty set and everything) under intersection,
    union and the involution operators, then report which axioms hold.

    Failed-axiom witnesses are given as the offending sets.
    """
    if g.points != points:
        raise ValueError("involution acts on a different point count")
    everything = frozenset(range(points))
    seeds = {frozenset(), everything} | {frozenset(X) for X in generators}
    unary = [lambda X: set_operators(g, X).s1, lambda X: set_operators(g, X).c,
             lambda X: set_operators(g, X).s2]
    carrier = sorted(_close(seeds, unary, cap), key=_mask)
    return _closure_report(carrier, everything, lambda X: set_operators(g, X))


def closure_from_relation(
    points: int, base: Iterable[tuple], generators: Iterable[Iterable[tuple]], cap: int = CLOSURE_CAP
) -> ClosureReport:
    """Same as :func:`closure_from_involution` over subrelations of ``base``."""
    base = frozenset(base)
    if any(not (0 <= x < points and 0 <= y < points) for x, y in base):
        raise ValueError("base pair outside the point range")
    seeds = {frozenset(), base} | {frozenset(R) for R in generators}

    def ops(R):
        return relation_operators(base, R)

    unary = [lambda R: ops(R).s1, lambda R: ops(R).c, lambda R: ops(R).s2]
    carrier = sorted(_close(seeds, unary, cap), key=relation_key(base))
    return _closure_report(carrier, base, ops)


# -- enumeration ------------------------------------------------------------


def _down_sets(below: list[int]) -> list[int]:
    k = len(below)
    return [m for m in range(1 << k) if all(below[i] & ~m == 0 for i in range(k) if m >> i & 1)]


def _downset_lattice(below: list[int]) -> FiniteLattice:
    sets = sorted(_down_sets(below), key=lambda m: (bin(m).count("1"), m))
    pos = {m: i for i, m in enumerate(sets)}
    n = len(sets)
    return FiniteLattice(
        n,
        [[pos[a & b] for b in sets] for a in sets],
        [[pos[a | b] for b in sets] for a in sets],
        0,
        n - 1,
    )


def distributive_lattices(n: int) -> list[FiniteLattice]:
    """One lattice per isomorphism class of distributive lattices of size n.

    Built as down-set lattices of posets grown one maximal element at a
    time; zero is index 0 and one is index n - 1.
    """
    if n < 1:
        return []
    found: dict[tuple, list[FiniteLattice]] = {}

    def grow(below: list[int]):
        downs = _down_sets(below)
        if len(downs) == n:
            L = _downset_lattice(below)
            key = _lattice_invariant(L)
            bucket = found.setdefault(key, [])
            if not any(find_isomorphism(L, M, bound=max(n, 12)) for M in bucket):
                bucket.append(L)
        if len(downs) >= n:
            return
        k = len(below)
        for d in downs:
            grow(below + [d | 1 << k])

    grow([])
    return [L for key in sorted(found) for L in found[key]]


def _lattice_invariant(L: FiniteLattice) -> tuple:
    return tuple(
        sorted(
            (sum(L.order[y][x] for y in range(L.n)), sum(L.order[x][y] for y in range(L.n)))
            for x in range(L.n)
        )
    )


def lattice_endomorphisms(L: FiniteLattice, allowed: Iterable[int] | None = None) -> list[tuple]:
    """All (0,1)-lattice homomorphisms L -> L with image inside ``allowed``."""
    n = L.n
    allowed = sorted(range(n) if allowed is None else allowed)
    f = [-1] * n
    out = []

    def ok(x):
        for y in range(n):
            if f[y] < 0:
                continue
            m, j = L.meet[x][y], L.join[x][y]
            if f[m] >= 0 and f[m] != L.meet[f[x]][f[y]]:
                return False
            if f[j] >= 0 and f[j] != L.join[f[x]][f[y]]:
                return False
        for y in range(n):
            for w in range(n):
                if f[y] < 0 or f[w] < 0:
                    continue
                if L.meet[y][w] == x and f[x] != L.meet[f[y]][f[w]]:
                    return False
                if L.join[y][w] == x and f[x] != L.join[f[y]][f[w]]:
                    return False
        return True

    def search(x):
        if x == n:
            out.append(tuple(f))
            return
        if x == L.zero:
            choices = [L.zero]
        elif x == L.one:
            choices = [L.one]
        else:
            choices = allowed
        for y in choices:
            f[x] = y
            if ok(x):
                search(x + 1)
            f[x] = -1

    search(0)
    return out


def canonical_form(T: TStructure) -> TStructure:
    """Relabelling with the least table encoding, zero and one kept in place.

    Expects zero = 0 and one = n - 1.
    """
    L = T.lattice
    n = L.n
    if n == 1:
        return T
    if (L.zero, L.one) != (0, n - 1):
        raise ValueError("canonical form expects zero = 0 and one = n - 1")
    best = None
    for middle in permutations(range(1, n - 1)):
        p = (0,) + middle + (n - 1,)  # old -> new
        inv = [0] * n
        for old, new in enumerate(p):
            inv[new] = old
        enc = (
            tuple(p[L.meet[inv[a]][inv[b]]] for a in range(n) for b in range(n)),
            tuple(p[L.join[inv[a]][inv[b]]] for a in range(n) for b in range(n)),
            tuple(p[T.c[inv[a]]] for a in range(n)),
            tuple(p[T.s1[inv[a]]] for a in range(n)),
            tuple(p[T.s2[inv[a]]] for a in range(n)),
        )
        if best is None or enc < best:
            best = enc
    meet, join, c, s1, s2 = best
    lattice = FiniteLattice(
        n, [meet[a * n:(a + 1) * n] for a in range(n)], [join[a * n:(a + 1) * n] for a in range(n)], 0, n - 1
    )
    return TStructure(lattice, c, s1, s2)


def _encoding(T: TStructure) -> tuple:
    return (T.lattice.meet, T.lattice.join, T.c, T.s1, T.s2)


def t_structures_on(L: FiniteLattice) -> list[TStructure]:
    """Every (C, S1, S2) on L satisfying the T-axioms.

    S1 and S2 range over (0,1)-endomorphisms into the complemented elements
    (forced by the axioms); C is then forced as the complement of S1.
    """
    boolean = complemented_elements(L)
    homs = [h for h in lattice_endomorphisms(L, boolean) if all(h[h[a]] == h[a] for a in range(L.n))]
    out = []
    for s1 in homs:
        c = [complement_of(L, s1[a]) for a in range(L.n)]
        for s2 in homs:
            T = TStructure(L, c, s1, s2)
            if check_t_axioms(T).ok:
                out.append(T)
    return out


def enumerate_t_structures(n: int, bound: int = ENUMERATION_BOUND) -> list[TStructure]:
    """All T-structures of size n up to isomorphism, in canonical form."""
    if n > bound:
        raise GuardError(f"enumeration limited to n <= {bound}")
    found = {}
    for L in distributive_lattices(n):
        for T in t_structures_on(L):
            C = canonical_form(T)
            found.setdefault(_encoding(C), C)
    return [found[k] for k in sorted(found)]


# -- named builders for the command line -----------------------------------


def parse_partition(text: str) -> list[list[int]]:
    """``"0,1/2"`` -> ``[[0, 1], [2]]``."""
    return [[int(p) for p in block.split(",") if p != ""] for block in text.split("/") if block]


def build_named(name: str) -> TStructure:
    """``bt``, ``b``, ``rough:<partition>`` and ``*``-separated products."""
    parts = name.split("*")
    if len(parts) > 1:
        return product(*(build_named(p) for p in parts))
    name = name.strip().lower()
    if name == "bt":
        return make_bt()
    if name == "b":
        return make_b()
    if name.startswith("rough:"):
        return from_approximation_space(parse_partition(name[6:])).structure
    raise ValueError(f"unknown example {name!r}")
