# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled GF(p)[x] kernels; drop-in replacement for ``_gfpoly_py``.

Same polynomial convention: dense coefficient lists in [0, p), lowest
degree first, trailing zeros trimmed.  Coefficient arithmetic runs on C
int64, which caps the modulus at 2**31 so products cannot overflow;
that is far beyond anything the degree sweeps use.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

BACKEND = "cython"

cdef long long MAX_P = <long long>1 << 31


cdef long long pow_mod(long long b, long long e, long long m) noexcept nogil:
    cdef long long r = 1 % m
    b %= m
    while e:
        if e & 1:
            r = r * b % m
        b = b * b % m
        e >>= 1
    return r


cdef int trim(long long* a, int la) noexcept nogil:
    while la > 0 and a[la - 1] == 0:
        la -= 1
    return la


cdef int mul_mod_cyclic(long long* out, long long* a, int la,
                        long long* b, int lb, int n, long long p) noexcept nogil:
    # out gets the product reduced mod x**n - 1; out must not alias a or b
    cdef int i, j, k
    cdef long long ai
    memset(out, 0, n * sizeof(long long))
    for i in range(la):
        ai = a[i]
        if ai:
            for j in range(lb):
                if b[j]:
                    k = (i + j) % n
                    out[k] = (out[k] + ai * b[j]) % p
    return trim(out, n)


cdef int rem_inplace(long long* r, int lr, long long* b, int lb,
                     long long p) noexcept nogil:
    # r := r mod b; b is trimmed and nonzero
    cdef long long inv = pow_mod(b[lb - 1], p - 2, p)
    cdef long long c
    cdef int dq, i
    lr = trim(r, lr)
    while lr >= lb:
        c = r[lr - 1] * inv % p
        dq = lr - lb
        for i in range(lb):
            r[dq + i] = (r[dq + i] - c * b[i]) % p
            if r[dq + i] < 0:
                r[dq + i] += p
        lr = trim(r, lr)
    return lr


cdef int gcd_inplace(long long* a, int la, long long* b, int lb,
                     long long p) noexcept nogil:
    # monic gcd left in a; both buffers are clobbered
    cdef long long* x = a
    cdef long long* y = b
    cdef long long* t
    cdef int lx = trim(a, la)
    cdef int ly = trim(b, lb)
    cdef int lt, i
    cdef long long inv
    while ly > 0:
        lx = rem_inplace(x, lx, y, ly, p)
        t = x; x = y; y = t
        lt = lx; lx = ly; ly = lt
    if lx > 0 and x[lx - 1] != 1:
        inv = pow_mod(x[lx - 1], p - 2, p)
        for i in range(lx):
            x[i] = x[i] * inv % p
    if x != a:
        for i in range(lx):
            a[i] = x[i]
    return lx


cdef int quo_exact(long long* q, long long* r, int lr, long long* b, int lb,
                   long long p) noexcept nogil:
    # q := r / b (division known exact); r is clobbered down to zero
    cdef long long inv = pow_mod(b[lb - 1], p - 2, p)
    cdef long long c
    cdef int dq, i
    cdef int lq = lr - lb + 1
    memset(q, 0, lq * sizeof(long long))
    lr = trim(r, lr)
    while lr >= lb:
        c = r[lr - 1] * inv % p
        dq = lr - lb
        q[dq] = c
        for i in range(lb):
            r[dq + i] = (r[dq + i] - c * b[i]) % p
            if r[dq + i] < 0:
                r[dq + i] += p
        lr = trim(r, lr)
    return trim(q, lq)


cdef void check_p(long long p):
    if p < 2 or p >= MAX_P:
        raise ValueError(f"modulus {p} outside the compiled kernel's range")


cdef long long* list_to_buf(a, int size, int* la) except NULL:
    cdef long long* buf = <long long*> malloc(size * sizeof(long long))
    cdef int i
    if buf == NULL:
        raise MemoryError()
    memset(buf, 0, size * sizeof(long long))
    for i in range(len(a)):
        buf[i] = a[i]
    la[0] = trim(buf, len(a))
    return buf


cdef list buf_to_list(long long* a, int la):
    cdef int i
    return [a[i] for i in range(la)]


def poly_mul_mod_cyclic(a, b, int n, long long p):
    """Product of ``a`` and ``b`` reduced modulo x**n - 1 over GF(p)."""
    check_p(p)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    cdef int la = 0, lb = 0, lc
    cdef long long* ba = NULL
    cdef long long* bb = NULL
    cdef long long* bc = NULL
    try:
        ba = list_to_buf([x % p for x in a], max(len(a), 1), &la)
        bb = list_to_buf([x % p for x in b], max(len(b), 1), &lb)
        bc = <long long*> malloc(n * sizeof(long long))
        if bc == NULL:
            raise MemoryError()
        lc = mul_mod_cyclic(bc, ba, la, bb, lb, n, p)
        return buf_to_list(bc, lc)
    finally:
        free(ba); free(bb); free(bc)


def poly_gcd(a, b, long long p):
    """Monic gcd over GF(p); the gcd with zero is the other argument."""
    check_p(p)
    cdef int size = max(len(a), len(b), 1)
    cdef int la = 0, lb = 0, lg
    cdef long long* ba = NULL
    cdef long long* bb = NULL
    try:
        ba = list_to_buf([x % p for x in a], size, &la)
        bb = list_to_buf([x % p for x in b], size, &lb)
        lg = gcd_inplace(ba, la, bb, lb, p)
        return buf_to_list(ba, lg)
    finally:
        free(ba); free(bb)


def ddf_degrees(int n, long long p):
    """Irreducible-factor degrees of x**n - 1 over GF(p), with counts.

    Same distinct-degree algorithm as the pure-Python kernel: powers
    x**(p**i) maintained modulo x**n - 1 by repeated squaring, stage
    gcds against the running cofactor of x**n - 1.  Returns a sorted
    list of (degree, count) pairs summing to n.
    """
    check_p(p)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n % p == 0:
        raise ValueError(f"{p} divides {n}: x**{n} - 1 is not square-free mod {p}")
    if n == 1:
        return [(1, 1)]

    # arena: f, fc, q, diff of n+1 slots; h, bse, acc, out of n slots
    cdef long long* arena = <long long*> malloc((8 * n + 4) * sizeof(long long))
    if arena == NULL:
        raise MemoryError()
    cdef long long* f = arena
    cdef long long* fc = arena + (n + 1)
    cdef long long* q = arena + 2 * (n + 1)
    cdef long long* diff = arena + 3 * (n + 1)
    cdef long long* h = arena + 4 * (n + 1)
    cdef long long* bse = arena + 4 * (n + 1) + n
    cdef long long* acc = arena + 4 * (n + 1) + 2 * n
    cdef long long* out = arena + 4 * (n + 1) + 3 * n
    cdef long long* t
    cdef long long e
    cdef int lf, lh, lbse, lacc, lout, ldiff, lg, lq, i, j, stage
    found = []
    try:
        memset(arena, 0, (8 * n + 4) * sizeof(long long))
        f[0] = p - 1
        f[n] = 1
        lf = n + 1
        h[1] = 1
        lh = 2
        stage = 0
        while lf - 1 >= 2 * (stage + 1):
            stage += 1
            # h := h**p mod x**n - 1
            for i in range(lh):
                bse[i] = h[i]
            lbse = lh
            acc[0] = 1
            lacc = 1
            e = p
            while e:
                if e & 1:
                    lout = mul_mod_cyclic(out, acc, lacc, bse, lbse, n, p)
                    t = acc; acc = out; out = t
                    lacc = lout
                e >>= 1
                if e:
                    lout = mul_mod_cyclic(out, bse, lbse, bse, lbse, n, p)
                    t = bse; bse = out; out = t
                    lbse = lout
            for i in range(lacc):
                h[i] = acc[i]
            lh = lacc
            # g := gcd(f, h - x), computed in fc/diff scratch
            for i in range(lf):
                fc[i] = f[i]
            for i in range(lh):
                diff[i] = h[i]
            for i in range(lh, 2):
                diff[i] = 0
            ldiff = lh if lh >= 2 else 2
            diff[1] = (diff[1] - 1) % p
            if diff[1] < 0:
                diff[1] += p
            ldiff = trim(diff, ldiff)
            lg = gcd_inplace(fc, lf, diff, ldiff, p)
            if lg > 1:
                found.append((stage, (lg - 1) // stage))
                lq = quo_exact(q, f, lf, fc, lg, p)
                t = f; f = q; q = t
                lf = lq
        if lf > 1:
            found.append((lf - 1, 1))
        return sorted(found)
    finally:
        free(arena)
