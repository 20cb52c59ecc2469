"""JSON algebra documents.

``{"kind": "lattice"|"t"|"ht", "n": int, "meet": [[int]], "join": [[int]],
"unary": {...}}``; kind ``t`` carries ``unary = {"c", "s1", "s2"}``, kind
``ht`` carries ``unary = {"s1", "s2"}`` plus top-level ``"imp"`` and
``"neg"``. Optional ``"zero"``/``"one"`` declare the bounds, which are
otherwise read off the meet table. Unknown fields are rejected.
"""

from __future__ import annotations

import json

from .htalgebra import HTAlgebra
from .lattice import FiniteLattice, FormatError, _tuple_table
from .tstructure import TStructure

_TOP = {
    "lattice": {"kind", "n", "meet", "join", "unary", "zero", "one"},
    "t": {"kind", "n", "meet", "join", "unary", "zero", "one"},
    "ht": {"kind", "n", "meet", "join", "unary", "imp", "neg", "zero", "one"},
}
_UNARY = {"lattice": set(), "t": {"c", "s1", "s2"}, "ht": {"s1", "s2"}}
_REQUIRED = {
    "lattice": {"kind", "n", "meet", "join"},
    "t": {"kind", "n", "meet", "join", "unary"},
    "ht": {"kind", "n", "meet", "join", "unary", "imp", "neg"},
}


def _bottom(meet, n: int, name: str) -> int:
    found = [a for a in range(n) if all(meet[a][x] == a for x in range(n))]
    if len(found) != 1:
        raise FormatError(f"cannot determine {name} from the tables")
    return found[0]


def load_algebra(document) -> FiniteLattice | TStructure | HTAlgebra:
    """Decode a document given as text, bytes, or an already-parsed dict."""
    if isinstance(document, (bytes, bytearray)):
        document = document.decode("utf-8")
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise FormatError("document must be a JSON object")
    kind = document.get("kind")
    if kind not in _TOP:
        raise FormatError(f"unknown kind {kind!r}")
    unknown = set(document) - _TOP[kind]
    if unknown:
        raise FormatError(f"unknown fields: {sorted(unknown)}")
    missing = _REQUIRED[kind] - set(document)
    if missing:
        raise FormatError(f"missing fields: {sorted(missing)}")
    n = document["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise FormatError("n must be a positive integer")
    unary = document.get("unary", {})
    if not isinstance(unary, dict):
        raise FormatError("unary must be an object")
    if set(unary) != _UNARY[kind]:
        raise FormatError(f"unary fields must be exactly {sorted(_UNARY[kind])}")

    meet_t = _tuple_table(document["meet"], n, "meet")
    join_t = _tuple_table(document["join"], n, "join")
    zero = document.get("zero", None)
    one = document.get("one", None)
    if zero is None:
        zero = _bottom(meet_t, n, "zero")
    if one is None:
        one = _bottom(join_t, n, "one")
    lattice = FiniteLattice(n, meet_t, join_t, zero, one)
    if kind == "lattice":
        return lattice
    if kind == "t":
        return TStructure(lattice, unary["c"], unary["s1"], unary["s2"])
    return HTAlgebra(lattice, document["imp"], document["neg"], unary["s1"], unary["s2"])


def algebra_to_dict(alg) -> dict:
    L = alg.lattice
    out = {
        "kind": alg.kind,
        "n": L.n,
        "meet": [list(r) for r in L.meet],
        "join": [list(r) for r in L.join],
    }
    if alg.kind == "t":
        out["unary"] = {"c": list(alg.c), "s1": list(alg.s1), "s2": list(alg.s2)}
    elif alg.kind == "ht":
        out["unary"] = {"s1": list(alg.s1), "s2": list(alg.s2)}
        out["imp"] = [list(r) for r in alg.imp]
        out["neg"] = list(alg.neg)
    return out


def dump_algebra(alg) -> str:
    return json.dumps(algebra_to_dict(alg))
