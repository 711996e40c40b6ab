# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: proof-of-work nonce scan and Gini best-split search.

Semantics are pinned by renalchain._core_py; this module only makes the
same arithmetic fast. The Gini scores are computed from exact integer
counts cast to doubles, so scores, thresholds, and tie-breaks match the
numpy fallback bit for bit.
"""

from cpython.exc cimport PyErr_CheckSignals
from libc.stdio cimport snprintf
from libc.stdlib cimport free, malloc, qsort
from libc.string cimport memcpy

import numpy as np

cimport numpy as cnp

cnp.import_array()

cdef extern from "openssl/sha.h":
    unsigned char *SHA256(const unsigned char *d, size_t n, unsigned char *md) nogil

BACKEND = "compiled"

cdef unsigned long long SCAN_CHUNK = 262144


cdef int _scan_chunk(unsigned char *msg, int prefix_len, const unsigned char *tail,
                     unsigned long long start, unsigned long long stop,
                     int zero_bytes, int odd, unsigned long long *found) noexcept nogil:
    cdef unsigned long long p
    cdef unsigned char md[32]
    cdef int n, i, ok
    for p in range(start, stop):
        n = snprintf(<char *>(msg + prefix_len), 24, "%llu", p)
        memcpy(msg + prefix_len + n, tail, 65)
        SHA256(msg, <size_t>(prefix_len + n + 65), md)
        ok = 1
        for i in range(zero_bytes):
            if md[i] != 0:
                ok = 0
                break
        if ok and odd and (md[zero_bytes] >> 4) != 0:
            ok = 0
        if ok:
            found[0] = p
            return 1
    return 0


def find_proof(object last_proof, str last_hash, int difficulty):
    """Smallest nonce whose digest starts with `difficulty` zero hex digits."""
    cdef unsigned long long lp = last_proof
    cdef bytes hash_bytes = last_hash.encode("ascii")
    if len(hash_bytes) != 64:
        raise ValueError("last_hash must be 64 hex characters")
    cdef unsigned char msg[160]
    cdef unsigned char tail[65]
    cdef int prefix_len = snprintf(<char *>msg, 32, "%llu:", lp)
    tail[0] = b":"[0]
    memcpy(tail + 1, <const unsigned char *><const char *>hash_bytes, 64)
    cdef int zero_bytes = difficulty // 2
    cdef int odd = difficulty % 2
    cdef unsigned long long start = 0, found = 0
    cdef int hit
    while True:
        with nogil:
            hit = _scan_chunk(msg, prefix_len, tail, start, start + SCAN_CHUNK,
                              zero_bytes, odd, &found)
        if hit:
            return found
        start += SCAN_CHUNK
        PyErr_CheckSignals()


ctypedef struct ValueLabel:
    double value
    long long label


cdef int _cmp_value(const void *a, const void *b) noexcept nogil:
    cdef double av = (<const ValueLabel *>a).value
    cdef double bv = (<const ValueLabel *>b).value
    if av < bv:
        return -1
    if av > bv:
        return 1
    return 0


def best_split(object x, object y, object features):
    """Best Gini split among candidate feature columns.

    Same contract as renalchain._core_py.best_split: x is the (m, k) node
    submatrix over k candidate features (no NaNs), y the 0/1 labels,
    features the ascending original feature indices. Returns
    (feature, threshold, weighted_gini) or None.
    """
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] xa = np.ascontiguousarray(x, dtype=np.float64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] ya = np.ascontiguousarray(y, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] fa = np.ascontiguousarray(features, dtype=np.int64)
    cdef Py_ssize_t m = xa.shape[0]
    cdef Py_ssize_t k = xa.shape[1]
    if ya.shape[0] != m or fa.shape[0] != k:
        raise ValueError("shape mismatch between x, y, and features")
    if m == 0:
        return None

    cdef ValueLabel *buf = <ValueLabel *>malloc(m * sizeof(ValueLabel))
    if buf == NULL:
        raise MemoryError()

    cdef long long total1 = 0, l0, l1, r0, r1, nl, nr
    cdef double sum_left, sum_right, weighted, threshold
    cdef double best_score = 0.0, best_thr = 0.0
    cdef long long best_feat = -1
    cdef Py_ssize_t col, i
    cdef long long c1
    try:
        with nogil:
            for i in range(m):
                total1 += ya[i]
            for col in range(k):
                for i in range(m):
                    buf[i].value = xa[i, col]
                    buf[i].label = ya[i]
                qsort(buf, <size_t>m, sizeof(ValueLabel), _cmp_value)
                c1 = 0
                for i in range(m - 1):
                    c1 += buf[i].label
                    if buf[i].value < buf[i + 1].value:
                        nl = i + 1
                        nr = m - nl
                        l1 = c1
                        l0 = nl - l1
                        r1 = total1 - l1
                        r0 = nr - r1
                        sum_left = (<double>(l0 * l0 + l1 * l1)) / (<double>(nl * nl))
                        sum_right = (<double>(r0 * r0 + r1 * r1)) / (<double>(nr * nr))
                        weighted = ((<double>nl) * (1.0 - sum_left)
                                    + (<double>nr) * (1.0 - sum_right)) / (<double>m)
                        if best_feat < 0 or weighted < best_score:
                            best_score = weighted
                            threshold = (buf[i].value + buf[i + 1].value) / 2.0
                            if threshold == buf[i + 1].value:
                                threshold = buf[i].value
                            best_thr = threshold
                            best_feat = fa[col]
    finally:
        free(buf)

    if best_feat < 0:
        return None
    return int(best_feat), float(best_thr), float(best_score)
