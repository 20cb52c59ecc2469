"""Rough-set representation: prime filters grouped by comparability form an
approximation space, and each element maps to its (lower, upper) pair."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

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
from .spectrum import Spectrum, _mask, chain_decomposition, stone_map
from .tstructure import TStructure, check_t_axioms

CLOSURE_CAP = 10_000


@dataclass(frozen=True)
class ApproximationSpace:
    points: int
    classes: tuple

    def __post_init__(self):
        classes = tuple(frozenset(c) for c in self.classes)
        if any(not c for c in classes):
            raise ValueError("empty equivalence class")
        seen = set()
        for c in classes:
            if seen & c:
                raise ValueError("classes overlap")
            seen |= c
        if seen != set(range(self.points)):
            raise ValueError("classes do not cover the points")
        object.__setattr__(self, "classes", tuple(sorted(classes, key=min)))

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[int]]) -> "ApproximationSpace":
        classes = [frozenset(c) for c in classes]
        return cls(sum(len(c) for c in classes), classes)

    @property
    def everything(self) -> frozenset:
        return frozenset(range(self.points))


class RoughPair(NamedTuple):
    lower: frozenset
    upper: frozenset


def comparability_space(spectrum: Spectrum) -> ApproximationSpace:
    """Points are filter indices; two are related iff they lie in one chain."""
    if spectrum.points == 0:
        raise ValueError("empty spectrum (degenerate algebra)")
    return ApproximationSpace(spectrum.points, spectrum.chains)


def monadic_m(space: ApproximationSpace, X: Iterable[int]) -> frozenset:
    """Union of the classes that meet X."""
    X = frozenset(X)
    out = set()
    for c in space.classes:
        if c & X:
            out |= c
    return frozenset(out)


def monadic_l(space: ApproximationSpace, X: Iterable[int]) -> frozenset:
    everything = space.everything
    return everything - monadic_m(space, everything - frozenset(X))


def rough_pair(space: ApproximationSpace, X: Iterable[int]) -> RoughPair:
    return RoughPair(monadic_l(space, X), monadic_m(space, X))


def _pair_key(p: RoughPair) -> tuple:
    return _mask(p.lower), _mask(p.upper)


@dataclass(frozen=True)
class RoughAlgebra:
    space: ApproximationSpace
    carrier: tuple

    def index(self, pair: RoughPair) -> int:
        return self._positions[pair]

    @cached_property
    def _positions(self) -> dict:
        return {p: i for i, p in enumerate(self.carrier)}

    @cached_property
    def structure(self) -> TStructure:
        """The carrier as a T-structure over carrier indices."""
        pos = self._positions
        everything = self.space.everything
        car = self.carrier
        meet = [[pos[_meet(p, q)] for q in car] for p in car]
        join = [[pos[_join(p, q)] for q in car] for p in car]
        lattice = FiniteLattice(
            len(car),
            meet,
            join,
            pos[RoughPair(frozenset(), frozenset())],
            pos[RoughPair(everything, everything)],
        )
        return TStructure(
            lattice,
            [pos[_c(p, everything)] for p in car],
            [pos[RoughPair(p.lower, p.lower)] for p in car],
            [pos[RoughPair(p.upper, p.upper)] for p in car],
        )


def _meet(p: RoughPair, q: RoughPair) -> RoughPair:
    return RoughPair(p.lower & q.lower, p.upper & q.upper)


def _join(p: RoughPair, q: RoughPair) -> RoughPair:
    return RoughPair(p.lower | q.lower, p.upper | q.upper)


def _c(p: RoughPair, everything: frozenset) -> RoughPair:
    rest = everything - p.lower
    return RoughPair(rest, rest)


def rough_algebra(
    space: ApproximationSpace, generators: Iterable[Iterable[int]], cap: int = CLOSURE_CAP
) -> RoughAlgebra:
    """Rough pairs of the generators plus the bounds, closed under
    meet, join, C, S1 and S2."""
    everything = space.everything
    found = {RoughPair(frozenset(), frozenset()), RoughPair(everything, everything)}
    found.update(rough_pair(space, X) for X in generators)
    frontier = list(found)
    while frontier:
        new = set()
        for p in frontier:
            new.add(_c(p, everything))
            new.add(RoughPair(p.lower, p.lower))
            new.add(RoughPair(p.upper, p.upper))
            for q in found:
                new.add(_meet(p, q))
                new.add(_join(p, q))
        new -= found
        found |= new
        if len(found) > cap:
            raise GuardError(f"closure exceeded {cap} elements")
        frontier = list(new)
    return RoughAlgebra(space, tuple(sorted(found, key=_pair_key)))


@dataclass
class RoughRepresentation:
    spectrum: Spectrum
    space: ApproximationSpace
    mapping: tuple  # element -> RoughPair
    algebra: RoughAlgebra
    report: MorphismReport
    axioms: Report
    isomorphism: tuple | None
    exhausts_space: bool | None

    def to_json(self) -> dict:
        return {
            "filters": [sorted(f) for f in self.spectrum.filters],
            "space": {
                "points": self.space.points,
                "classes": [sorted(c) for c in self.space.classes],
            },
            "h": [[sorted(p.lower), sorted(p.upper)] for p in self.mapping],
            "image_size": len(self.algebra.carrier),
            "exhausts_space": self.exhausts_space,
            "morphism": self.report.to_json(),
            "image_axioms": self.axioms.to_json(),
            "isomorphism": None if self.isomorphism is None else list(self.isomorphism),
        }


def all_rough_pairs(space: ApproximationSpace) -> set:
    return {
        rough_pair(space, [p for p in range(space.points) if X >> p & 1])
        for X in range(1 << space.points)
    }


def represent_rough(H: HTAlgebra) -> RoughRepresentation:
    """Map each element x to (L s(x), M s(x)) and verify the result."""
    report = check_ht_axioms(H)
    if not report.ok:
        raise AxiomError("input is not an HT-algebra", report)
    if H.lattice.degenerate:
        raise ValueError("degenerate algebra has an empty spectrum")
    spectrum = chain_decomposition(H.lattice)
    space = comparability_space(spectrum)
    s = stone_map(H.lattice, spectrum)
    mapping = tuple(rough_pair(space, s[x]) for x in range(H.n))

    # same pairs, read directly off the classes
    for x, pair in enumerate(mapping):
        lower = frozenset().union(*(c for c in space.classes if c <= s[x]))
        upper = frozenset().union(*(c for c in space.classes if c & s[x]))
        if pair != (lower, upper):
            raise RuntimeError(f"approximation mismatch at element {x}")

    algebra = rough_algebra(space, s)
    T = to_t(H)
    image = algebra.structure
    morphism = check_homomorphism(T, image, [algebra.index(p) for p in mapping])
    axioms = check_t_axioms(image)
    iso = find_isomorphism(image, T) if H.n <= ISO_BOUND else None
    if not (morphism.is_isomorphism and axioms.ok) or (H.n <= ISO_BOUND and iso is None):
        raise RuntimeError("rough representation failed verification")
    exhausts = len(all_rough_pairs(space)) == len(algebra.carrier) if space.points <= 16 else None
    return RoughRepresentation(spectrum, space, mapping, algebra, morphism, axioms, iso, exhausts)
