# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops; mirrors ``_pykernels`` call for call."""

from libc.stdlib cimport malloc, free
from libc.stdint cimport uint32_t, int64_t

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

DEF NLAWS = 11


cdef int* _copy_table(object seq, Py_ssize_t size) except NULL:
    cdef int* buf = <int*> malloc(size * sizeof(int))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    for i in range(size):
        buf[i] = seq[i]
    return buf


def law_witnesses(int n, meet, join, int zero, int one):
    cdef int* M = _copy_table(meet, n * n)
    cdef int* J = NULL
    cdef int w[NLAWS][3]
    cdef int found[NLAWS]
    cdef int a, b, c, k, abm, abj
    try:
        J = _copy_table(join, n * n)
        for k in range(NLAWS):
            found[k] = 0
        for a in range(n):
            if not found[2] and M[a * n + a] != a:
                found[2] = 1; w[2][0] = a
            if not found[3] and J[a * n + a] != a:
                found[3] = 1; w[3][0] = a
            if not found[8] and (J[zero * n + a] != a or M[zero * n + a] != zero):
                found[8] = 1; w[8][0] = a
            if not found[9] and (M[one * n + a] != a or J[one * n + a] != one):
                found[9] = 1; w[9][0] = a
            for b in range(n):
                abm = M[a * n + b]
                abj = J[a * n + b]
                if not found[0] and abm != M[b * n + a]:
                    found[0] = 1; w[0][0] = a; w[0][1] = b
                if not found[1] and abj != J[b * n + a]:
                    found[1] = 1; w[1][0] = a; w[1][1] = b
                if not found[6] and M[a * n + abj] != a:
                    found[6] = 1; w[6][0] = a; w[6][1] = b
                if not found[7] and J[a * n + abm] != a:
                    found[7] = 1; w[7][0] = a; w[7][1] = b
                if found[4] and found[5] and found[10]:
                    continue
                for c in range(n):
                    if not found[4] and M[abm * n + c] != M[a * n + M[b * n + c]]:
                        found[4] = 1; w[4][0] = a; w[4][1] = b; w[4][2] = c
                    if not found[5] and J[abj * n + c] != J[a * n + J[b * n + c]]:
                        found[5] = 1; w[5][0] = a; w[5][1] = b; w[5][2] = c
                    if not found[10] and M[a * n + J[b * n + c]] != J[abm * n + M[a * n + c]]:
                        found[10] = 1; w[10][0] = a; w[10][1] = b; w[10][2] = c
    finally:
        free(M)
        free(J)
    arity = (2, 2, 1, 1, 3, 3, 2, 2, 1, 1, 3)
    out = []
    for k in range(NLAWS):
        if found[k]:
            out.append(tuple(w[k][i] for i in range(arity[k])))
        else:
            out.append(None)
    return out


def prime_filter_masks(int n, meet, join, int zero):
    if n > 30:
        raise ValueError("n too large for 32-bit masks")
    cdef int* M = _copy_table(meet, n * n)
    cdef int* J = NULL
    cdef uint32_t up[32]
    cdef uint32_t mask, outside, zbit, total
    cdef int a, b, ok
    found = []
    try:
        J = _copy_table(join, n * n)
        for a in range(n):
            up[a] = 0
            for b in range(n):
                if M[a * n + b] == a:
                    up[a] |= (<uint32_t> 1) << b
        zbit = (<uint32_t> 1) << zero
        total = (<uint32_t> 1) << n
        mask = 1
        while mask < total:
            if mask & zbit:
                mask += 1
                continue
            ok = 1
            for a in range(n):
                if (mask >> a) & 1 and up[a] & ~mask:
                    ok = 0
                    break
            if ok:
                for a in range(n):
                    if not ((mask >> a) & 1):
                        continue
                    for b in range(n):
                        if (mask >> b) & 1 and not ((mask >> M[a * n + b]) & 1):
                            ok = 0
                            break
                    if not ok:
                        break
            if ok:
                outside = ~mask & (total - 1)
                for a in range(n):
                    if not ((outside >> a) & 1):
                        continue
                    for b in range(n):
                        if (outside >> b) & 1 and (mask >> J[a * n + b]) & 1:
                            ok = 0
                            break
                    if not ok:
                        break
            if ok:
                found.append(mask)
            mask += 1
    finally:
        free(M)
        free(J)
    return found


def converse_sweep(int nbits, inv_bit):
    if nbits > 16:
        raise ValueError("at most 16 base pairs")
    cdef int64_t size = (<int64_t> 1) << nbits
    cdef uint32_t* inv = <uint32_t*> malloc(size * sizeof(uint32_t))
    cdef int ib[16]
    cdef int64_t r, s, n2 = 0, n1 = 0
    cdef uint32_t m, low, rs, ru, s2r, s1r, lhs, rhs
    cdef int i
    cdef int64_t f2r = -1, f2s = -1, f1r = -1, f1s = -1
    cdef int64_t t2r = -1, t2s = -1, t1r = -1, t1s = -1
    if inv == NULL:
        raise MemoryError()
    try:
        for i in range(nbits):
            ib[i] = inv_bit[i]
        inv[0] = 0
        for r in range(1, size):
            m = <uint32_t> r
            low = m & (~m + 1)
            i = 0
            while not ((low >> i) & 1):
                i += 1
            inv[r] = inv[m ^ low] | ((<uint32_t> 1) << ib[i])
        with nogil:
            for r in range(size):
                s2r = <uint32_t> r | inv[r]
                s1r = <uint32_t> r & inv[r]
                for s in range(size):
                    rs = <uint32_t> (r & s)
                    lhs = rs | inv[rs]
                    rhs = s2r & (<uint32_t> s | inv[s])
                    if lhs != rhs:
                        n2 += 1
                        if t2r < 0:
                            t2r = r; t2s = s
                        if f2r < 0 and (lhs & ~rhs):
                            f2r = r; f2s = s
                    ru = <uint32_t> (r | s)
                    lhs = ru & inv[ru]
                    rhs = s1r | (<uint32_t> s & inv[s])
                    if lhs != rhs:
                        n1 += 1
                        if t1r < 0:
                            t1r = r; t1s = s
                        if f1r < 0 and (rhs & ~lhs):
                            f1r = r; f1s = s
    finally:
        free(inv)

    def pair(x, y):
        return None if x < 0 else (x, y)

    return pair(f2r, f2s), pair(f1r, f1s), pair(t2r, t2s), pair(t1r, t1s), n2, n1
