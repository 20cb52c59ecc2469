"""Finite bounded lattices given by operation tables.

Elements are the indices ``0..n-1``. Every algebra class in this package
(:class:`FiniteLattice`, :class:`~threeval.tstructure.TStructure`,
:class:`~threeval.htalgebra.HTAlgebra`) exposes ``kind``, ``n``, ``lattice``
and ``operations()``, which is what the generic routines here (products,
morphism checks, isomorphism search) rely on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from . import kernels

LAW_CHECK_BOUND = 64
ISO_BOUND = 12


class FormatError(ValueError):
    """Malformed algebra document or table."""


class GuardError(ValueError):
    """A configured size guard was exceeded."""


class AxiomError(ValueError):
    """An operation's precondition (an axiom check) failed."""

    def __init__(self, message: str, report: "Report"):
        super().__init__(f"{message}: {', '.join(report.laws())}")
        self.report = report


@dataclass(frozen=True)
class Violation:
    law: str
    witness: tuple
    detail: str = ""

    def to_json(self) -> dict:
        out = {"law": self.law, "witness": _jsonable(self.witness)}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    """Outcome of a law check: violations plus free-form informational fields."""

    violations: list[Violation] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, law: str, witness: tuple, detail: str = "") -> None:
        self.violations.append(Violation(law, tuple(witness), detail))

    def extend(self, other: "Report") -> None:
        self.violations.extend(other.violations)

    def laws(self) -> list[str]:
        return [v.law for v in self.violations]

    def first(self, law: str) -> Violation | None:
        return next((v for v in self.violations if v.law == law), None)

    def to_json(self) -> dict:
        out = {"ok": self.ok, "violations": [v.to_json() for v in self.violations]}
        if self.info:
            out["info"] = _jsonable(self.info)
        return out


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _tuple_table(rows, n: int, name: str) -> tuple:
    try:
        table = tuple(tuple(int(x) for x in row) for row in rows)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"{name}: not a table of integers") from exc
    if len(table) != n or any(len(row) != n for row in table):
        raise FormatError(f"{name}: expected a {n}x{n} table")
    for i, row in enumerate(table):
        for j, x in enumerate(row):
            if not 0 <= x < n:
                raise FormatError(f"{name}[{i}][{j}] = {x} out of range [0, {n})")
    return table


def _tuple_unary(values, n: int, name: str) -> tuple:
    try:
        table = tuple(int(x) for x in values)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"{name}: not a list of integers") from exc
    if len(table) != n:
        raise FormatError(f"{name}: expected {n} entries, got {len(table)}")
    for i, x in enumerate(table):
        if not 0 <= x < n:
            raise FormatError(f"{name}[{i}] = {x} out of range [0, {n})")
    return table


@dataclass(frozen=True)
class FiniteLattice:
    """Bounded lattice on ``range(n)`` with explicit meet/join tables.

    Construction checks shape, index ranges and that ``zero``/``one`` are the
    bottom/top according to the tables. The lattice laws themselves are
    checked by :func:`check_distributive_lattice`.
    """

    n: int
    meet: tuple
    join: tuple
    zero: int
    one: int

    kind = "lattice"

    def __post_init__(self):
        if self.n < 1:
            raise FormatError("n must be at least 1")
        object.__setattr__(self, "meet", _tuple_table(self.meet, self.n, "meet"))
        object.__setattr__(self, "join", _tuple_table(self.join, self.n, "join"))
        for name in ("zero", "one"):
            v = getattr(self, name)
            if not 0 <= v < self.n:
                raise FormatError(f"{name} = {v} out of range")
        for a in range(self.n):
            if self.meet[self.zero][a] != self.zero:
                raise FormatError(f"zero {self.zero} is not below {a}")
            if self.join[self.one][a] != self.one:
                raise FormatError(f"one {self.one} is not above {a}")

    @classmethod
    def from_leq(cls, leq: Sequence[Sequence[bool]]) -> "FiniteLattice":
        """Build the tables from an order matrix (``leq[a][b]`` iff a <= b)."""
        n = len(leq)

        def glb(a, b):
            lower = [c for c in range(n) if leq[c][a] and leq[c][b]]
            for c in lower:
                if all(leq[d][c] for d in lower):
                    return c
            raise FormatError(f"no meet for ({a}, {b})")

        def lub(a, b):
            upper = [c for c in range(n) if leq[a][c] and leq[b][c]]
            for c in upper:
                if all(leq[c][d] for d in upper):
                    return c
            raise FormatError(f"no join for ({a}, {b})")

        meet = [[glb(a, b) for b in range(n)] for a in range(n)]
        join = [[lub(a, b) for b in range(n)] for a in range(n)]
        zero = next(a for a in range(n) if all(leq[a][b] for b in range(n)))
        one = next(a for a in range(n) if all(leq[b][a] for b in range(n)))
        return cls(n, meet, join, zero, one)

    @classmethod
    def chain(cls, n: int) -> "FiniteLattice":
        return cls(
            n,
            [[min(a, b) for b in range(n)] for a in range(n)],
            [[max(a, b) for b in range(n)] for a in range(n)],
            0,
            n - 1,
        )

    @property
    def lattice(self) -> "FiniteLattice":
        return self

    @property
    def degenerate(self) -> bool:
        return self.zero == self.one

    def leq(self, a: int, b: int) -> bool:
        return self.meet[a][b] == a

    @cached_property
    def order(self) -> tuple:
        return tuple(tuple(self.meet[a][b] == a for b in range(self.n)) for a in range(self.n))

    @cached_property
    def flat_meet(self) -> tuple:
        return tuple(x for row in self.meet for x in row)

    @cached_property
    def flat_join(self) -> tuple:
        return tuple(x for row in self.join for x in row)

    def meet_all(self, elements: Iterable[int]) -> int:
        out = self.one
        for x in elements:
            out = self.meet[out][x]
        return out

    def join_all(self, elements: Iterable[int]) -> int:
        out = self.zero
        for x in elements:
            out = self.join[out][x]
        return out

    def operations(self) -> dict:
        """Signature as ``name -> (arity, table)``; nullary tables are indices."""
        return {
            "meet": (2, self.meet),
            "join": (2, self.join),
            "zero": (0, self.zero),
            "one": (0, self.one),
        }

    @classmethod
    def from_operations(cls, lattice: "FiniteLattice", tables: dict) -> "FiniteLattice":
        return lattice


def leq(L: FiniteLattice, a: int, b: int) -> bool:
    if not (0 <= a < L.n and 0 <= b < L.n):
        raise IndexError(f"({a}, {b}) out of range for n={L.n}")
    return L.leq(a, b)


def check_distributive_lattice(L: FiniteLattice, bound: int = LAW_CHECK_BOUND) -> Report:
    """Exhaustive check of the bounded distributive lattice laws.

    One violation per failed law, carrying its lexicographically first
    witness tuple.
    """
    if L.n > bound:
        raise GuardError(f"law check limited to n <= {bound}")
    report = Report()
    witnesses = kernels.law_witnesses(L.n, L.flat_meet, L.flat_join, L.zero, L.one)
    for law, w in zip(kernels.LAWS, witnesses):
        if w is not None:
            report.add(law, w)
    if L.degenerate:
        report.info["degenerate"] = True
    return report


def complement_of(L: FiniteLattice, a: int) -> int | None:
    """Some complement of ``a`` (the unique one in a distributive lattice)."""
    for b in range(L.n):
        if L.meet[a][b] == L.zero and L.join[a][b] == L.one:
            return b
    return None


def complemented_elements(L: FiniteLattice) -> frozenset:
    return frozenset(a for a in range(L.n) if complement_of(L, a) is not None)


def join_irreducibles(L: FiniteLattice) -> frozenset:
    out = set()
    for j in range(L.n):
        if j == L.zero:
            continue
        if all(
            L.join[a][b] != j or a == j or b == j for a in range(L.n) for b in range(L.n)
        ):
            out.add(j)
    return frozenset(out)


def direct_product(A, B):
    """Componentwise product; element ``(i, j)`` is index ``i * B.n + j``."""
    if A.kind != B.kind:
        raise ValueError(f"cannot multiply kinds {A.kind!r} and {B.kind!r}")
    na, nb = A.n, B.n
    n = na * nb
    pairs = [(i, j) for i in range(na) for j in range(nb)]
    opsA, opsB = A.operations(), B.operations()
    tables = {}
    for name, (arity, ta) in opsA.items():
        tb = opsB[name][1]
        if arity == 0:
            tables[name] = ta * nb + tb
        elif arity == 1:
            tables[name] = tuple(ta[i] * nb + tb[j] for i, j in pairs)
        else:
            tables[name] = tuple(
                tuple(ta[i][k] * nb + tb[j][l] for k, l in pairs) for i, j in pairs
            )
    lattice = FiniteLattice(n, tables["meet"], tables["join"], tables["zero"], tables["one"])
    return type(A).from_operations(lattice, tables)


@dataclass
class MorphismReport:
    is_injective: bool
    is_surjective: bool
    violations: list = field(default_factory=list)

    @property
    def is_homomorphism(self) -> bool:
        return not self.violations

    @property
    def is_isomorphism(self) -> bool:
        return self.is_homomorphism and self.is_injective and self.is_surjective

    def to_json(self) -> dict:
        return {
            "is_homomorphism": self.is_homomorphism,
            "is_injective": self.is_injective,
            "is_surjective": self.is_surjective,
            "violations": [
                {"op": op, "args": list(args), "expected": exp, "actual": act}
                for op, args, exp, act in self.violations
            ],
        }


def check_homomorphism(A, B, mapping: Sequence[int], signature: Iterable[str] | None = None) -> MorphismReport:
    """Pointwise preservation check of ``mapping: A -> B``.

    Each violation is ``(op, args, expected, actual)`` where ``expected`` is
    the operation evaluated in B on the mapped arguments and ``actual`` is the
    image of the result computed in A. The bounds ``zero``/``one`` belong to
    every signature since all carriers are bounded lattices.
    """
    mapping = tuple(mapping)
    if len(mapping) != A.n:
        raise ValueError(f"map has {len(mapping)} entries, expected {A.n}")
    if any(not 0 <= y < B.n for y in mapping):
        raise ValueError("map image out of range")
    opsA, opsB = A.operations(), B.operations()
    names = list(opsA) if signature is None else list(signature)
    for bound in ("zero", "one"):
        if bound not in names:
            names.append(bound)
    violations = []
    for name in names:
        if name not in opsA or name not in opsB:
            raise ValueError(f"operation {name!r} missing from an algebra")
        arity, ta = opsA[name]
        tb = opsB[name][1]
        if arity == 0:
            if mapping[ta] != tb:
                violations.append((name, (), tb, mapping[ta]))
        elif arity == 1:
            for a in range(A.n):
                exp, act = tb[mapping[a]], mapping[ta[a]]
                if exp != act:
                    violations.append((name, (a,), exp, act))
        else:
            for a in range(A.n):
                for b in range(A.n):
                    exp, act = tb[mapping[a]][mapping[b]], mapping[ta[a][b]]
                    if exp != act:
                        violations.append((name, (a, b), exp, act))
    image = set(mapping)
    return MorphismReport(
        is_injective=len(image) == A.n,
        is_surjective=len(image) == B.n,
        violations=violations,
    )


def _profile(alg, x: int) -> tuple:
    L = alg.lattice
    below = sum(L.order[y][x] for y in range(L.n))
    above = sum(L.order[x][y] for y in range(L.n))
    fixed = tuple(
        table[x] == x for arity, table in alg.operations().values() if arity == 1
    )
    return below, above, fixed


def find_isomorphism(A, B, bound: int = ISO_BOUND) -> tuple | None:
    """A signature-preserving bijection A -> B, or None.

    Backtracking over bijections that fix the bounds, pruned by order
    profiles and by every operation instance whose arguments and result are
    already assigned.
    """
    if A.kind != B.kind:
        raise ValueError(f"kinds differ: {A.kind!r} vs {B.kind!r}")
    if A.n > bound or B.n > bound:
        raise GuardError(f"isomorphism search limited to n <= {bound}")
    if A.n != B.n:
        return None
    n = A.n
    opsA, opsB = A.operations(), B.operations()
    unary = [(opsA[k][1], opsB[k][1]) for k, (ar, _) in opsA.items() if ar == 1]
    binary = [(opsA[k][1], opsB[k][1]) for k, (ar, _) in opsA.items() if ar == 2]
    profA = [_profile(A, x) for x in range(n)]
    profB = [_profile(B, y) for y in range(n)]
    if sorted(profA) != sorted(profB):
        return None

    mapping = [-1] * n
    used = [False] * n
    order = [A.lattice.zero, A.lattice.one] + [
        x for x in range(n) if x not in (A.lattice.zero, A.lattice.one)
    ]
    order = list(dict.fromkeys(order))

    def consistent(x: int) -> bool:
        for ua, ub in unary:
            for y in range(n):
                if mapping[y] < 0:
                    continue
                z = ua[y]
                if (y == x or z == x) and mapping[z] >= 0 and mapping[z] != ub[mapping[y]]:
                    return False
        for ta, tb in binary:
            for y in range(n):
                my = mapping[y]
                if my < 0:
                    continue
                row_a, row_b = ta[y], tb[my]
                for w in range(n):
                    mw = mapping[w]
                    if mw < 0:
                        continue
                    z = row_a[w]
                    if x not in (y, w, z):
                        continue
                    if mapping[z] >= 0 and mapping[z] != row_b[mw]:
                        return False
        return True

    def search(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for y in range(n):
            if used[y] or profB[y] != profA[x]:
                continue
            if i == 0 and y != B.lattice.zero:
                continue
            if i == 1 and x == A.lattice.one and y != B.lattice.one:
                continue
            mapping[x] = y
            used[y] = True
            if consistent(x) and search(i + 1):
                return True
            mapping[x] = -1
            used[y] = False
        return False

    if not search(0):
        return None
    result = tuple(mapping)
    report = check_homomorphism(A, B, result)
    assert report.is_isomorphism, report
    return result
