# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled letter kernels; same API and results as ``_pykernels``."""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

BACKEND = "cython"


cdef inline char _inv(char c) noexcept nogil:
    # 'a' <-> 'A', 'b' <-> 'B'
    return c ^ 32


cdef inline char _next(char c) noexcept nogil:
    # a -> b -> a, A -> B -> A
    if c == b'a':
        return b'b'
    if c == b'b':
        return b'a'
    if c == b'A':
        return b'B'
    return b'A'


cdef inline bint _valid(char c) noexcept nogil:
    return c == b'a' or c == b'A' or c == b'b' or c == b'B'


cdef bytes _ascii(str word):
    cdef bytes raw = word.encode("ascii")
    cdef const char* s = raw
    cdef Py_ssize_t i
    for i in range(len(raw)):
        if not _valid(s[i]):
            raise KeyError(chr(s[i]))
    return raw


cdef Py_ssize_t _free_reduce_buf(const char* src, Py_ssize_t L, char* out) noexcept nogil:
    cdef Py_ssize_t top = 0, i
    cdef char c
    for i in range(L):
        c = src[i]
        if top and out[top - 1] == _inv(c):
            top -= 1
        else:
            out[top] = c
            top += 1
    return top


def free_reduce(str word):
    cdef bytes raw = _ascii(word)
    cdef Py_ssize_t L = len(raw)
    cdef char* buf = <char*>malloc(L + 1)
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t m
    try:
        m = _free_reduce_buf(raw, L, buf)
        return buf[:m].decode("ascii")
    finally:
        free(buf)


def cyclic_core(str word):
    cdef bytes raw = _ascii(word)
    cdef const char* s = raw
    cdef Py_ssize_t i = 0, j = len(raw) - 1
    while i < j and s[i] == _inv(s[j]):
        i += 1
        j -= 1
    return i


def riley_word(q, p):
    if p < 1:
        raise ValueError("denominator must be >= 1")
    fq_py, rq_py = divmod(q, p)
    if p >= (1 << 62):
        from . import _pykernels
        return _pykernels.riley_word(q, p)
    cdef long long P = p
    cdef long long rq = rq_py
    cdef int fq = fq_py & 1
    cdef long long r = 0
    cdef int f = 0
    cdef long long i
    cdef Py_ssize_t L = 2 * P
    cdef char* buf = <char*>malloc(L + 1)
    if buf == NULL:
        raise MemoryError()
    cdef char c
    try:
        with nogil:
            buf[0] = b'a'
            for i in range(1, P):
                r += rq
                f ^= fq
                if r >= P:
                    r -= P
                    f ^= 1
                if i & 1:
                    c = b'B' if f else b'b'
                else:
                    c = b'A' if f else b'a'
                buf[i] = c
                # mirrored inverse of the hat word
                buf[L - i] = _inv(c)
        if P & 1:
            buf[P] = b'B' if (q & 1) else b'b'
        else:
            buf[P] = b'A'
        return buf[:L].decode("ascii")
    finally:
        free(buf)


def sign_runs(str word):
    cdef bytes raw = _ascii(word)
    cdef const char* s = raw
    cdef Py_ssize_t L = len(raw)
    if L == 0:
        return []
    cdef Py_ssize_t start = -1, i, k, count
    cdef bint sign, cur
    for i in range(L):
        if (s[i] < 97) != (s[(i - 1 + L) % L] < 97):
            start = i
            break
    if start < 0:
        return [L]
    runs = []
    count = 0
    sign = s[start] < 97
    for k in range(L):
        cur = s[(start + k) % L] < 97
        if cur == sign:
            count += 1
        else:
            runs.append(count)
            count = 1
            sign = cur
    runs.append(count)
    return runs


cdef inline long long _mod(long long e, long long n) noexcept nogil:
    e %= n
    if e < 0:
        e += n
    return e


cdef inline Py_ssize_t _push(char* fac, long long* exp, Py_ssize_t top,
                             char factor, long long e, long long n) noexcept nogil:
    if factor == 1:
        e = _mod(e, n)
    if e == 0:
        return top
    if top and fac[top - 1] == factor:
        e += exp[top - 1]
        if factor == 1:
            e = _mod(e, n)
        top -= 1
        if e:
            fac[top] = factor
            exp[top] = e
            top += 1
    else:
        fac[top] = factor
        exp[top] = e
        top += 1
    return top


def normal_form(str word, long long n):
    cdef bytes raw = _ascii(word)
    cdef const char* s = raw
    cdef Py_ssize_t L = len(raw), i, top = 0
    cdef char* fac = <char*>malloc(2 * L + 1)
    cdef long long* exp = <long long*>malloc((2 * L + 1) * sizeof(long long))
    if fac == NULL or exp == NULL:
        free(fac)
        free(exp)
        raise MemoryError()
    cdef char c
    try:
        with nogil:
            for i in range(L):
                c = s[i]
                if c == b'a':
                    top = _push(fac, exp, top, 0, 1, n)
                elif c == b'A':
                    top = _push(fac, exp, top, 0, -1, n)
                elif c == b'b':
                    top = _push(fac, exp, top, 0, -1, n)
                    top = _push(fac, exp, top, 1, 1, n)
                else:
                    top = _push(fac, exp, top, 1, -1, n)
                    top = _push(fac, exp, top, 0, 1, n)
        return [(<int>fac[i], exp[i]) for i in range(top)]
    finally:
        free(fac)
        free(exp)


cdef Py_ssize_t _dehn(char* w, Py_ssize_t L, char* tmp, long long n) noexcept nogil:
    """In-place Dehn reduction; returns the final length (core starts at w)."""
    cdef Py_ssize_t long_run = 2 * n - 1
    cdef Py_ssize_t k, i, j, start, found, length, f, m
    L = _free_reduce_buf(w, L, tmp)
    memcpy(w, tmp, L)
    while True:
        k = 0
        while k < L - 1 - k and w[k] == _inv(w[L - 1 - k]):
            k += 1
        if k:
            L -= 2 * k
            memcpy(tmp, w + k, L)
            memcpy(w, tmp, L)
        if L < long_run:
            return L
        start = -1
        for i in range(L):
            if w[i] != _next(w[(i - 1 + L) % L]):
                start = i
                break
        if start < 0:
            m = _free_reduce_buf(w + 2 * n, L - 2 * n, tmp)
            memcpy(w, tmp, m)
            L = m
            continue
        found = -1
        length = 0
        i = start
        while i < start + L:
            j = i + 1
            while j < start + L and w[j % L] == _next(w[(j - 1) % L]):
                j += 1
            if j - i >= long_run:
                found = i
                length = j - i
                break
            i = j
        if found < 0:
            return L
        f = found % L
        # rotate: tmp = w[f:] + w[:f]
        memcpy(tmp, w + f, L - f)
        memcpy(tmp + L - f, w, f)
        if length >= 2 * n:
            m = _free_reduce_buf(tmp + 2 * n, L - 2 * n, w)
        else:
            tmp[long_run - 1] = _inv(_next(tmp[long_run - 1]))
            m = _free_reduce_buf(tmp + long_run - 1, L - long_run + 1, w)
        L = m


def dehn_reduce(str word, long long n):
    cdef bytes raw = _ascii(word)
    cdef Py_ssize_t L = len(raw)
    cdef char* w = <char*>malloc(L + 1)
    cdef char* tmp = <char*>malloc(L + 1)
    if w == NULL or tmp == NULL:
        free(w)
        free(tmp)
        raise MemoryError()
    try:
        memcpy(w, <const char*>raw, L)
        with nogil:
            L = _dehn(w, L, tmp, n)
        return w[:L].decode("ascii")
    finally:
        free(w)
        free(tmp)


def least_rotation(seq):
    cdef Py_ssize_t n = len(seq)
    if n == 0:
        return 0
    cdef long long* s = <long long*>malloc(2 * n * sizeof(long long))
    cdef Py_ssize_t* f = <Py_ssize_t*>malloc(2 * n * sizeof(Py_ssize_t))
    if s == NULL or f == NULL:
        free(s)
        free(f)
        raise MemoryError()
    cdef Py_ssize_t i, j, k = 0
    cdef long long sj
    try:
        for i in range(n):
            s[i] = seq[i]
            s[i + n] = s[i]
        with nogil:
            for i in range(2 * n):
                f[i] = -1
            for j in range(1, 2 * n):
                sj = s[j]
                i = f[j - k - 1]
                while i != -1 and sj != s[k + i + 1]:
                    if sj < s[k + i + 1]:
                        k = j - i - 1
                    i = f[i]
                if sj != s[k + i + 1]:
                    if sj < s[k]:
                        k = j
                    f[j - k] = -1
                else:
                    f[j - k] = i + 1
        return k % n
    finally:
        free(s)
        free(f)
