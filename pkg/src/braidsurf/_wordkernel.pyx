# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled word kernels; same contract as ``_wordkernel_py``."""

from cpython.mem cimport PyMem_Malloc, PyMem_Free
from libc.string cimport memcpy


cdef class _Buf:
    cdef int *data
    cdef Py_ssize_t n

    def __dealloc__(self):
        if self.data != NULL:
            PyMem_Free(self.data)


cdef _Buf _buf_alloc(Py_ssize_t cap):
    cdef _Buf b = _Buf.__new__(_Buf)
    b.data = <int *> PyMem_Malloc((cap if cap > 0 else 1) * sizeof(int))
    if b.data == NULL:
        raise MemoryError()
    b.n = 0
    return b


cdef _Buf _buf_from_seq(object word):
    cdef Py_ssize_t k, n = len(word)
    cdef _Buf b = _buf_alloc(n)
    for k in range(n):
        b.data[k] = word[k]
    b.n = n
    return b


cdef inline Py_ssize_t _push(int *out, Py_ssize_t top, int x) nogil:
    if top > 0 and out[top - 1] == -x:
        return top - 1
    out[top] = x
    return top + 1


cdef tuple _buf_tuple(_Buf b):
    cdef Py_ssize_t k
    return tuple([b.data[k] for k in range(b.n)])


def reduce_word(word):
    cdef _Buf src = _buf_from_seq(word)
    cdef Py_ssize_t k, top = 0
    for k in range(src.n):
        top = _push(src.data, top, src.data[k])
    src.n = top
    return _buf_tuple(src)


def substitute(word, images):
    """Replace each letter x_k of ``word`` by ``images[k-1]`` and reduce."""
    cdef list bufs = [_buf_from_seq(w) for w in images]
    cdef Py_ssize_t total = 0, k, j, top = 0
    cdef int x
    cdef _Buf img
    cdef Py_ssize_t rank = len(bufs)
    for x in word:
        if x == 0 or abs(x) > rank:
            raise IndexError(f"letter {x} outside a free group of rank {rank}")
        total += (<_Buf> bufs[abs(x) - 1]).n
    cdef _Buf out = _buf_alloc(total)
    for x in word:
        img = <_Buf> bufs[abs(x) - 1]
        if x > 0:
            for j in range(img.n):
                top = _push(out.data, top, img.data[j])
        else:
            for j in range(img.n - 1, -1, -1):
                top = _push(out.data, top, -img.data[j])
    out.n = top
    return _buf_tuple(out)


cdef _Buf _conj(_Buf a, _Buf b):
    # a b a^-1, reduced
    cdef _Buf out = _buf_alloc(2 * a.n + b.n)
    cdef Py_ssize_t j, top = a.n
    memcpy(out.data, a.data, a.n * sizeof(int))
    for j in range(b.n):
        top = _push(out.data, top, b.data[j])
    for j in range(a.n - 1, -1, -1):
        top = _push(out.data, top, -a.data[j])
    out.n = top
    return out


cdef _Buf _inv_conj(_Buf b, _Buf a):
    # b^-1 a b, reduced
    cdef _Buf out = _buf_alloc(2 * b.n + a.n)
    cdef Py_ssize_t j, top = 0
    for j in range(b.n - 1, -1, -1):
        out.data[top] = -b.data[j]
        top += 1
    for j in range(a.n):
        top = _push(out.data, top, a.data[j])
    for j in range(b.n):
        top = _push(out.data, top, b.data[j])
    out.n = top
    return out


def artin_images(letters, int m):
    """Images of x_1..x_m under the Artin automorphism of a braid word."""
    cdef list imgs = []
    cdef _Buf a, b
    cdef Py_ssize_t k, j
    cdef int s, i
    for j in range(1, m + 1):
        a = _buf_alloc(1)
        a.data[0] = <int> j
        a.n = 1
        imgs.append(a)
    for k in range(len(letters) - 1, -1, -1):
        s = letters[k]
        if s == 0 or abs(s) >= m:
            raise IndexError(f"generator {s} out of range for {m} strands")
        i = (s if s > 0 else -s) - 1
        a = <_Buf> imgs[i]
        b = <_Buf> imgs[i + 1]
        if s > 0:
            imgs[i] = _conj(a, b)
            imgs[i + 1] = a
        else:
            imgs[i] = b
            imgs[i + 1] = _inv_conj(b, a)
    return tuple([_buf_tuple(<_Buf> a) for a in imgs])
