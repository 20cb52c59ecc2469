"""Pure-Python inner loops.

Same call signatures as the compiled ``_ckernels`` module; used when the
extension is not built. Tables are flat row-major sequences of length n*n.
"""

LAWS = (
    "meet-commutative",
    "join-commutative",
    "meet-idempotent",
    "join-idempotent",
    "meet-associative",
    "join-associative",
    "absorption-meet",
    "absorption-join",
    "zero-bound",
    "one-bound",
    "distributive",
)


def law_witnesses(n, meet, join, zero, one):
    """First witness (lexicographic) for every violated lattice law, else None."""
    out = [None] * len(LAWS)
    for a in range(n):
        if out[2] is None and meet[a * n + a] != a:
            out[2] = (a,)
        if out[3] is None and join[a * n + a] != a:
            out[3] = (a,)
        if out[8] is None and (join[zero * n + a] != a or meet[zero * n + a] != zero):
            out[8] = (a,)
        if out[9] is None and (meet[one * n + a] != a or join[one * n + a] != one):
            out[9] = (a,)
        for b in range(n):
            ab_m = meet[a * n + b]
            ab_j = join[a * n + b]
            if out[0] is None and ab_m != meet[b * n + a]:
                out[0] = (a, b)
            if out[1] is None and ab_j != join[b * n + a]:
                out[1] = (a, b)
            if out[6] is None and meet[a * n + ab_j] != a:
                out[6] = (a, b)
            if out[7] is None and join[a * n + ab_m] != a:
                out[7] = (a, b)
            for c in range(n):
                if out[4] is None and meet[ab_m * n + c] != meet[a * n + meet[b * n + c]]:
                    out[4] = (a, b, c)
                if out[5] is None and join[ab_j * n + c] != join[a * n + join[b * n + c]]:
                    out[5] = (a, b, c)
                if out[10] is None and (
                    meet[a * n + join[b * n + c]]
                    != join[ab_m * n + meet[a * n + c]]
                ):
                    out[10] = (a, b, c)
    return out


def prime_filter_masks(n, meet, join, zero):
    """All bitmasks of proper prime filters, ascending."""
    up = [0] * n
    for a in range(n):
        for b in range(n):
            if meet[a * n + b] == a:
                up[a] |= 1 << b
    found = []
    zbit = 1 << zero
    for mask in range(1, 1 << n):
        if mask & zbit:
            continue
        members = [a for a in range(n) if mask >> a & 1]
        if any(up[a] & ~mask for a in members):
            continue
        if any(not mask >> meet[a * n + b] & 1 for a in members for b in members):
            continue
        outside = [a for a in range(n) if not mask >> a & 1]
        if any(mask >> join[a * n + b] & 1 for a in outside for b in outside):
            continue
        found.append(mask)
    return found


def converse_sweep(nbits, inv_bit):
    """Sweep all (R, S) bitmask pairs over a symmetric base of ``nbits`` pairs.

    ``inv_bit[i]`` is the bit index of the converse of pair ``i``. Returns
    (first S2-meet inclusion failure, first S1-join inclusion failure,
    first strict S2-meet inequality, first strict S1-join inequality,
    strict S2 count, strict S1 count); failures are (R, S) or None.
    """
    size = 1 << nbits
    inv = [0] * size
    for m in range(1, size):
        low = m & -m
        inv[m] = inv[m ^ low] | (1 << inv_bit[low.bit_length() - 1])
    s2_fail = s1_fail = s2_strict = s1_strict = None
    n2 = n1 = 0
    for r in range(size):
        s2r = r | inv[r]
        s1r = r & inv[r]
        for s in range(size):
            rs = r & s
            lhs2 = rs | inv[rs]
            rhs2 = s2r & (s | inv[s])
            if lhs2 != rhs2:
                n2 += 1
                if s2_strict is None:
                    s2_strict = (r, s)
                if s2_fail is None and lhs2 & ~rhs2:
                    s2_fail = (r, s)
            ru = r | s
            lhs1 = ru & inv[ru]
            rhs1 = s1r | (s & inv[s])
            if lhs1 != rhs1:
                n1 += 1
                if s1_strict is None:
                    s1_strict = (r, s)
                if s1_fail is None and rhs1 & ~lhs1:
                    s1_fail = (r, s)
    return s2_fail, s1_fail, s2_strict, s1_strict, n2, n1
