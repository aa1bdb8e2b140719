# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled brute-force sweep for two-sided closed subsets.

Same contract as catx._biclosed_py.biclosed_masks; the mask loop runs
in C so the 2**24 default ceiling stays in seconds.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc


def biclosed_masks(int n_roots, triples):
    cdef unsigned long long full = ((<unsigned long long> 1) << n_roots) - 1
    cdef Py_ssize_t nt = len(triples)
    cdef unsigned long long *bi = NULL
    cdef unsigned long long *bj = NULL
    cdef unsigned long long *bk = NULL
    cdef unsigned long long mask, comp
    cdef Py_ssize_t t
    cdef bint ok
    out = []
    if nt:
        bi = <unsigned long long *> PyMem_Malloc(nt * sizeof(unsigned long long))
        bj = <unsigned long long *> PyMem_Malloc(nt * sizeof(unsigned long long))
        bk = <unsigned long long *> PyMem_Malloc(nt * sizeof(unsigned long long))
        if bi == NULL or bj == NULL or bk == NULL:
            PyMem_Free(bi)
            PyMem_Free(bj)
            PyMem_Free(bk)
            raise MemoryError()
        for t in range(nt):
            i, j, k = triples[t]
            bi[t] = (<unsigned long long> 1) << <int> i
            bj[t] = (<unsigned long long> 1) << <int> j
            bk[t] = (<unsigned long long> 1) << <int> k
    try:
        mask = 0
        while True:
            comp = full ^ mask
            ok = True
            for t in range(nt):
                if (mask & bi[t]) and (mask & bj[t]) and not (mask & bk[t]):
                    ok = False
                    break
                if (comp & bi[t]) and (comp & bj[t]) and not (comp & bk[t]):
                    ok = False
                    break
            if ok:
                out.append(mask)
            if mask == full:
                break
            mask += 1
    finally:
        if nt:
            PyMem_Free(bi)
            PyMem_Free(bj)
            PyMem_Free(bk)
    return out
