"""Prime filters, their inclusion order, and the Stone map."""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .lattice import FiniteLattice, GuardError, Report, join_irreducibles

BRUTE_FORCE_BOUND = 20


def _mask(members) -> int:
    out = 0
    for a in members:
        out |= 1 << a
    return out


def _members(mask: int) -> frozenset:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def canonical(filters) -> list[frozenset]:
    """Sort filters by their member bitset."""
    return sorted((frozenset(f) for f in filters), key=_mask)


def prime_filters_bruteforce(L: FiniteLattice, bound: int = BRUTE_FORCE_BOUND) -> list[frozenset]:
    """Every proper prime filter, found by testing all 2^n subsets."""
    if L.n > bound:
        raise GuardError(f"subset enumeration limited to n <= {bound}")
    masks = kernels.prime_filter_masks(L.n, L.flat_meet, L.flat_join, L.zero)
    return [_members(m) for m in masks]


def prime_filters_birkhoff(L: FiniteLattice) -> list[frozenset]:
    """Up-sets of the join-irreducible elements."""
    return canonical(
        frozenset(b for b in range(L.n) if L.leq(j, b)) for j in join_irreducibles(L)
    )


def filters_bruteforce(L: FiniteLattice, bound: int = BRUTE_FORCE_BOUND) -> list[frozenset]:
    """All filters (nonempty, up-closed, meet-closed), the improper one included."""
    if L.n > bound:
        raise GuardError(f"subset enumeration limited to n <= {bound}")
    n = L.n
    up = [_mask(b for b in range(n) if L.leq(a, b)) for a in range(n)]
    out = []
    for mask in range(1, 1 << n):
        members = [a for a in range(n) if mask >> a & 1]
        if any(up[a] & ~mask for a in members):
            continue
        if all(mask >> L.meet[a][b] & 1 for a in members for b in members):
            out.append(_members(mask))
    return out


@dataclass(frozen=True)
class Spectrum:
    """Prime filters in canonical order with the inclusion order split into
    connected components (``chains``, each listed bottom-up)."""

    filters: tuple
    chains: tuple
    oversized: tuple = ()
    non_chain: tuple = ()

    @property
    def points(self) -> int:
        return len(self.filters)

    def block_of(self, p: int) -> tuple:
        return next(block for block in self.chains if p in block)

    def to_json(self) -> dict:
        return {
            "filters": [sorted(f) for f in self.filters],
            "chains": [list(block) for block in self.chains],
            "oversized": list(self.oversized),
            "non_chain": list(self.non_chain),
        }


def chain_decomposition(L: FiniteLattice, filters=None) -> Spectrum:
    """Group prime filters into inclusion-connected components.

    Components larger than two filters, or not totally ordered, are flagged
    (by block index) rather than rejected.
    """
    if filters is None:
        filters = (
            prime_filters_bruteforce(L) if L.n <= BRUTE_FORCE_BOUND else prime_filters_birkhoff(L)
        )
    filters = tuple(filters)
    k = len(filters)
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comparable = [[f <= g or g <= f for g in filters] for f in filters]
    for p in range(k):
        for q in range(p + 1, k):
            if comparable[p][q]:
                parent[find(p)] = find(q)
    groups: dict[int, list[int]] = {}
    for p in range(k):
        groups.setdefault(find(p), []).append(p)
    blocks = sorted(
        (tuple(sorted(g, key=lambda p: (len(filters[p]), p))) for g in groups.values()),
        key=min,
    )
    oversized = tuple(i for i, b in enumerate(blocks) if len(b) > 2)
    non_chain = tuple(
        i for i, b in enumerate(blocks) if not all(comparable[p][q] for p in b for q in b)
    )
    return Spectrum(filters, tuple(blocks), oversized, non_chain)


def stone_map(L: FiniteLattice, spectrum: Spectrum | None = None) -> tuple:
    """``a -> {indices of prime filters containing a}``."""
    if spectrum is None:
        spectrum = chain_decomposition(L)
    return tuple(
        frozenset(p for p, f in enumerate(spectrum.filters) if a in f) for a in range(L.n)
    )


def check_stone_map(L: FiniteLattice, spectrum: Spectrum | None = None) -> Report:
    """Injective, bounds-preserving, meet to intersection, join to union."""
    if spectrum is None:
        spectrum = chain_decomposition(L)
    s = stone_map(L, spectrum)
    everything = frozenset(range(spectrum.points))
    report = Report()
    if s[L.zero]:
        report.add("stone-zero", (L.zero,))
    if s[L.one] != everything:
        report.add("stone-one", (L.one,))
    pairs = [(a, b) for a in range(L.n) for b in range(a + 1, L.n)]
    w = next(((a, b) for a, b in pairs if s[a] == s[b]), None)
    if w:
        report.add("stone-injective", w)
    pairs = [(a, b) for a in range(L.n) for b in range(L.n)]
    w = next(((a, b) for a, b in pairs if s[L.meet[a][b]] != s[a] & s[b]), None)
    if w:
        report.add("stone-meet", w)
    w = next(((a, b) for a, b in pairs if s[L.join[a][b]] != s[a] | s[b]), None)
    if w:
        report.add("stone-join", w)
    return report


def check_nested_filters(H) -> Report:
    """If S2 x lies in P and P is strictly inside Q, then x lies in Q."""
    L = H.lattice
    spectrum = chain_decomposition(L)
    report = Report()
    nested = 0
    for P in spectrum.filters:
        for Q in spectrum.filters:
            if not P < Q:
                continue
            nested += 1
            for x in range(L.n):
                if H.s2[x] in P and x not in Q:
                    report.add("nested-filter", (tuple(sorted(P)), tuple(sorted(Q)), x))
    report.info["nested_pairs"] = nested
    return report
