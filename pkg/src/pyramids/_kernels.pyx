# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the kernels in ``_kernels_py``.

Coefficients are carried in 64-bit integers.  On overflow the functions
return ``None`` and the dispatcher in ``kernels`` reruns the pure-Python
version, which uses unbounded ints.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    bint __builtin_mul_overflow(long long a, long long b, long long *res) nogil
    bint __builtin_add_overflow(long long a, long long b, long long *res) nogil
    bint __builtin_sub_overflow(long long a, long long b, long long *res) nogil


def normal_order_word(str word):
    cdef Py_ssize_t n = len(word)
    cdef long long *re = <long long *> malloc((n + 2) * sizeof(long long))
    cdef long long *im = <long long *> malloc((n + 2) * sizeof(long long))
    cdef Py_ssize_t length = 1
    cdef Py_ssize_t k
    cdef long long d = 0
    cdef long long a, b, t
    cdef bint overflow = False
    cdef Py_UCS4 ch
    if re == NULL or im == NULL:
        free(re)
        free(im)
        raise MemoryError()
    try:
        re[0] = 1
        im[0] = 0
        for ch in word:
            if ch == u'p':
                k = length
                while k > 0:
                    re[k] = re[k - 1]
                    im[k] = im[k - 1]
                    k -= 1
                re[0] = 0
                im[0] = 0
                length += 1
                d -= 1
            elif ch == u'q':
                for k in range(length - 1):
                    a = re[k + 1]
                    b = im[k + 1]
                    if a != 0 or b != 0:
                        if __builtin_mul_overflow(k + 1, b, &t) or __builtin_add_overflow(re[k], t, &re[k]):
                            overflow = True
                            break
                        if __builtin_mul_overflow(k + 1, a, &t) or __builtin_sub_overflow(im[k], t, &im[k]):
                            overflow = True
                            break
                if overflow:
                    return None
                d += 1
            else:
                raise ValueError(f"letter {ch!r} is not in {{p, q}}")
        out = {}
        for k in range(length):
            if re[k] != 0 or im[k] != 0:
                out[(k + d, k)] = (re[k], im[k])
        return out
    finally:
        free(re)
        free(im)


def word_eigenvalue(str word, long long m):
    cdef long long re = 1, im = 0, e = m, t1, t2
    cdef Py_ssize_t idx
    cdef Py_UCS4 ch
    if word.count(u'p') != word.count(u'q'):
        raise ValueError(f"word {word!r} is not balanced")
    for idx in range(len(word) - 1, -1, -1):
        ch = word[idx]
        if ch == u'p':
            e += 1
        elif ch == u'q':
            if e == 0:
                return (0, 0)
            if __builtin_mul_overflow(-im, e, &t1) or __builtin_mul_overflow(re, e, &t2):
                return None
            re = t1
            im = t2
            e -= 1
        else:
            raise ValueError(f"letter {ch!r} is not in {{p, q}}")
    return (re, im)
