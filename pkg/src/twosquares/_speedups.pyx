# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled word kernels; same contract and results as _kernel_py.

Letter codes: 0 = x, 1 = x^-1, 2 = y, 3 = y^-1; inverse is code ^ 1.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdlib cimport free, malloc
from libc.string cimport memcmp, memcpy

BACKEND = "c"


cdef inline Py_ssize_t _reduce_into(const unsigned char* src, Py_ssize_t n,
                                    unsigned char* dst):
    cdef Py_ssize_t top = 0, i
    for i in range(n):
        if top > 0 and dst[top - 1] == (src[i] ^ 1):
            top -= 1
        else:
            dst[top] = src[i]
            top += 1
    return top


cdef inline Py_ssize_t _mul_into(const unsigned char* u, Py_ssize_t un,
                                 const unsigned char* v, Py_ssize_t vn,
                                 unsigned char* dst):
    # u and v reduced: cancellation happens only at the seam
    cdef Py_ssize_t i = un - 1, j = 0
    while i >= 0 and j < vn and u[i] == (v[j] ^ 1):
        i -= 1
        j += 1
    if i >= 0:
        memcpy(dst, u, i + 1)
    if j < vn:
        memcpy(dst + i + 1, v + j, vn - j)
    return (i + 1) + (vn - j)


def reduce_word(bytes letters):
    """Freely reduce an arbitrary letter string (not assumed reduced)."""
    cdef Py_ssize_t n = len(letters)
    if n == 0:
        return b""
    cdef const unsigned char* src = letters
    cdef unsigned char* buf = <unsigned char*> malloc(n)
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t top = _reduce_into(src, n, buf)
    out = PyBytes_FromStringAndSize(<char*> buf, top)
    free(buf)
    return out


def mul(bytes u, bytes v):
    """Product of two reduced words; cancellation happens only at the seam."""
    cdef Py_ssize_t un = len(u), vn = len(v)
    if un == 0:
        return v
    if vn == 0:
        return u
    cdef unsigned char* buf = <unsigned char*> malloc(un + vn)
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t m = _mul_into(u, un, v, vn, buf)
    out = PyBytes_FromStringAndSize(<char*> buf, m)
    free(buf)
    return out


def inv(bytes u):
    cdef Py_ssize_t n = len(u), i
    if n == 0:
        return b""
    cdef const unsigned char* src = u
    cdef unsigned char* buf = <unsigned char*> malloc(n)
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = src[n - 1 - i] ^ 1
    out = PyBytes_FromStringAndSize(<char*> buf, n)
    free(buf)
    return out


cdef inline bint _sqrt_bounds(const unsigned char* w, Py_ssize_t n,
                              Py_ssize_t* lo_out, Py_ssize_t* half_out,
                              Py_ssize_t* hi_out):
    # True iff reduced w is a square; outputs the cyclically reduced core
    # [lo, hi] and its half length.
    cdef Py_ssize_t lo = 0, hi = n - 1, m, half
    while lo < hi and w[lo] == (w[hi] ^ 1):
        lo += 1
        hi -= 1
    m = hi - lo + 1
    if m & 1:
        return False
    half = m >> 1
    if memcmp(w + lo, w + lo + half, half) != 0:
        return False
    lo_out[0] = lo
    half_out[0] = half
    hi_out[0] = hi
    return True


def square_root(bytes w):
    """The unique v with v*v == w, or None (w assumed reduced)."""
    cdef Py_ssize_t n = len(w)
    if n == 0:
        return b""
    cdef const unsigned char* src = w
    cdef Py_ssize_t lo = 0, half = 0, hi = 0
    if not _sqrt_bounds(src, n, &lo, &half, &hi):
        return None
    cdef Py_ssize_t m = (lo + half) + (n - hi - 1)
    cdef unsigned char* buf = <unsigned char*> malloc(m if m else 1)
    if buf == NULL:
        raise MemoryError()
    memcpy(buf, src, lo + half)
    memcpy(buf + lo + half, src + hi + 1, n - hi - 1)
    out = PyBytes_FromStringAndSize(<char*> buf, m)
    free(buf)
    return out


def words_of_length(n):
    """Yield every reduced word of length n in lexicographic letter order."""
    cdef Py_ssize_t m = n, i, j
    if m == 0:
        yield b""
        return
    cdef bytearray word = bytearray(m)
    cdef int c
    while True:
        yield bytes(word)
        i = m - 1
        while i >= 0:
            c = word[i] + 1
            if i > 0 and c == (word[i - 1] ^ 1):
                c += 1
            if c < 4:
                word[i] = c
                for j in range(i + 1, m):
                    word[j] = 1 if word[j - 1] == 1 else 0
                break
            i -= 1
        else:
            return


def search_square_pair(bytes g, int bound):
    """Shortlex search for (a, b) with a*a*b*b == g and len(a) <= bound.

    Returns (a, b, checked) on a hit, else (None, None, checked).
    """
    cdef Py_ssize_t glen = len(g)
    cdef const unsigned char* gp = g
    cdef Py_ssize_t cap = glen + 2 * bound + 2
    cdef unsigned char* a = <unsigned char*> malloc(bound + 1)
    cdef unsigned char* ia = <unsigned char*> malloc(bound + 1)
    cdef unsigned char* t = <unsigned char*> malloc(cap)
    cdef unsigned char* r = <unsigned char*> malloc(cap)
    if a == NULL or ia == NULL or t == NULL or r == NULL:
        free(a); free(ia); free(t); free(r)
        raise MemoryError()
    cdef long long checked = 0
    cdef Py_ssize_t n, i, j, tn, rn, lo, half, hi
    cdef int c
    cdef bint advanced
    try:
        for n in range(bound + 1):
            for i in range(n):
                a[i] = 0
            while True:
                checked += 1
                for i in range(n):
                    ia[i] = a[n - 1 - i] ^ 1
                tn = _mul_into(ia, n, gp, glen, t)
                rn = _mul_into(ia, n, t, tn, r)
                if _sqrt_bounds(r, rn, &lo, &half, &hi):
                    a_bytes = PyBytes_FromStringAndSize(<char*> a, n)
                    root = PyBytes_FromStringAndSize(<char*> r, lo + half) + \
                        PyBytes_FromStringAndSize(<char*> (r + hi + 1), rn - hi - 1)
                    return a_bytes, root, checked
                # advance the odometer over reduced length-n words
                advanced = False
                i = n - 1
                while i >= 0:
                    c = a[i] + 1
                    if i > 0 and c == (a[i - 1] ^ 1):
                        c += 1
                    if c < 4:
                        a[i] = <unsigned char> c
                        for j in range(i + 1, n):
                            a[j] = 1 if a[j - 1] == 1 else 0
                        advanced = True
                        break
                    i -= 1
                if not advanced:
                    break
        return None, None, checked
    finally:
        free(a); free(ia); free(t); free(r)
