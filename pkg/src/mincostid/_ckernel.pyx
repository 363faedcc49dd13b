# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled reachability kernel; same API as ``_pykernel.GraphKernel``."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset, memcpy


cdef int _pack(adj, int n, int **ptr_out, int **idx_out) except -1:
    cdef int total = 0
    cdef int v, k, u
    for v in range(n):
        total += len(adj[v])
    cdef int *ptr = <int *> malloc((n + 1) * sizeof(int))
    cdef int *idx = <int *> malloc((total + 1) * sizeof(int))
    if ptr == NULL or idx == NULL:
        free(ptr)
        free(idx)
        raise MemoryError()
    k = 0
    for v in range(n):
        ptr[v] = k
        for u in adj[v]:
            idx[k] = u
            k += 1
    ptr[n] = k
    ptr_out[0] = ptr
    idx_out[0] = idx
    return 0


cdef int _closure(const int *ptr, const int *idx, const int *seeds, int nseeds,
                  const unsigned char *within, unsigned char *out,
                  int *stack, int n) noexcept nogil:
    """Mark in ``out`` everything reachable from ``seeds`` inside ``within``.

    Returns the number of marked vertices.
    """
    cdef int top = 0
    cdef int count = 0
    cdef int i, v, u, e
    memset(out, 0, n)
    for i in range(nseeds):
        v = seeds[i]
        if not out[v]:
            out[v] = 1
            count += 1
            stack[top] = v
            top += 1
    while top > 0:
        top -= 1
        v = stack[top]
        for e in range(ptr[v], ptr[v + 1]):
            u = idx[e]
            if within[u] and not out[u]:
                out[u] = 1
                count += 1
                stack[top] = u
                top += 1
    return count


cdef class GraphKernel:
    cdef readonly int n
    cdef int *pa_ptr
    cdef int *pa_idx
    cdef int *bi_ptr
    cdef int *bi_idx

    backend = "cython"

    def __cinit__(self, int n, parents, bidirected):
        self.n = n
        self.pa_ptr = NULL
        self.pa_idx = NULL
        self.bi_ptr = NULL
        self.bi_idx = NULL
        _pack(parents, n, &self.pa_ptr, &self.pa_idx)
        _pack(bidirected, n, &self.bi_ptr, &self.bi_idx)

    def __dealloc__(self):
        free(self.pa_ptr)
        free(self.pa_idx)
        free(self.bi_ptr)
        free(self.bi_idx)

    cdef int _load(self, seed, within, int *seeds, unsigned char *wmask) except -1:
        cdef int k = 0
        cdef int v
        cdef int n = self.n
        memset(wmask, 0, n)
        for v in within:
            if v < 0 or v >= n:
                raise IndexError(v)
            wmask[v] = 1
        for v in frozenset(seed):
            if v < 0 or v >= n:
                raise IndexError(v)
            seeds[k] = v
            k += 1
        return k

    cdef frozenset _to_set(self, const unsigned char *mask):
        cdef int v
        return frozenset([v for v in range(self.n) if mask[v]])

    cdef frozenset _reach(self, const int *ptr, const int *idx, seed, within):
        cdef int n = self.n
        cdef unsigned char *wmask = <unsigned char *> malloc(2 * n + 1)
        cdef int *buf = <int *> malloc((2 * n + 1) * sizeof(int))
        cdef int nseeds
        if wmask == NULL or buf == NULL:
            free(wmask)
            free(buf)
            raise MemoryError()
        try:
            nseeds = self._load(seed, within, buf, wmask)
            _closure(ptr, idx, buf, nseeds, wmask, wmask + n, buf + n, n)
            return self._to_set(wmask + n)
        finally:
            free(wmask)
            free(buf)

    def ancestors(self, seed, within):
        return self._reach(self.pa_ptr, self.pa_idx, seed, within)

    def component(self, seed, within):
        return self._reach(self.bi_ptr, self.bi_idx, seed, within)

    def hull(self, seed, within):
        cdef int n = self.n
        cdef unsigned char *f = <unsigned char *> malloc(3 * n + 1)
        cdef int *buf = <int *> malloc((2 * n + 1) * sizeof(int))
        cdef unsigned char *f1
        cdef unsigned char *f2
        cdef int nseeds, size, size2, v
        if f == NULL or buf == NULL:
            free(f)
            free(buf)
            raise MemoryError()
        f1 = f + n
        f2 = f + 2 * n
        try:
            nseeds = self._load(seed, within, buf, f)
            size = 0
            for v in range(n):
                size += f[v]
            with nogil:
                while True:
                    _closure(self.bi_ptr, self.bi_idx, buf, nseeds, f, f1, buf + n, n)
                    size2 = _closure(self.pa_ptr, self.pa_idx, buf, nseeds, f1, f2, buf + n, n)
                    if size2 == size:
                        break
                    memcpy(f, f2, n)
                    size = size2
            return self._to_set(f)
        finally:
            free(f)
            free(buf)
