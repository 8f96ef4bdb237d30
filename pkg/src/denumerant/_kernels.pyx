# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels.  Signatures and semantics match ``_kernels_py``."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def mulmod(list a, list b, list red, Py_ssize_t dim):
    cdef Py_ssize_t na = len(a), nb = len(b)
    cdef Py_ssize_t i, j, k, base, nred = len(red)
    cdef object ai, c, rj
    cdef list prod
    cdef Py_ssize_t[:] ridx
    cdef list rval
    cdef signed char[:] rsign
    if na == 0 or nb == 0:
        return [0] * dim
    prod = [0] * (na + nb - 1)
    # a tuple list is slow to unpack in the inner loop; split it once
    ridx = np.empty(nred, dtype=np.intp)
    rsign = np.zeros(nred, dtype=np.int8)
    rval = [None] * nred
    for i in range(nred):
        ridx[i] = red[i][0]
        rj = red[i][1]
        rval[i] = rj
        if rj == 1:
            rsign[i] = 1
        elif rj == -1:
            rsign[i] = -1
    for i in range(na):
        ai = a[i]
        if not ai:
            continue
        for j in range(nb):
            c = b[j]
            if c:
                prod[i + j] = prod[i + j] + ai * c
    for k in range(na + nb - 2, dim - 1, -1):
        c = prod[k]
        if not c:
            continue
        base = k - dim
        for i in range(nred):
            j = base + ridx[i]
            if rsign[i] == 1:
                prod[j] = prod[j] + c
            elif rsign[i] == -1:
                prod[j] = prod[j] - c
            else:
                prod[j] = prod[j] + c * rval[i]
    if na + nb - 1 < dim:
        prod.extend([0] * (dim - (na + nb - 1)))
    return prod[:dim]


def dp_count(parts, Py_ssize_t T):
    cdef list counts = [0] * (T + 1)
    cdef Py_ssize_t a, t
    counts[0] = 1
    for a in parts:
        for t in range(a, T + 1):
            counts[t] = counts[t] + counts[t - a]
    return counts


def cseries_exp(h):
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] hh = np.ascontiguousarray(h, dtype=np.complex128)
    cdef Py_ssize_t d = hh.shape[0], m = hh.shape[1]
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] f = np.zeros((d, m), dtype=np.complex128)
    cdef Py_ssize_t n, k, j
    cdef double complex acc
    for j in range(m):
        f[0, j] = 1.0
    for n in range(1, d):
        for j in range(m):
            acc = 0
            for k in range(1, n + 1):
                acc = acc + k * hh[k, j] * f[n - k, j]
            f[n, j] = acc / n
    return f


def cseries_log(g):
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] gg = np.ascontiguousarray(g, dtype=np.complex128)
    cdef Py_ssize_t d = gg.shape[0], m = gg.shape[1]
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] out = np.zeros((d, m), dtype=np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] q
    cdef Py_ssize_t n, i, j
    cdef double complex acc
    if d == 1:
        return out
    q = np.zeros((d - 1, m), dtype=np.complex128)
    for n in range(d - 1):
        for j in range(m):
            acc = (n + 1) * gg[n + 1, j]
            for i in range(1, n + 1):
                acc = acc - gg[i, j] * q[n - i, j]
            q[n, j] = acc
    for n in range(1, d):
        for j in range(m):
            out[n, j] = q[n - 1, j] / n
    return out


from libc.stdint cimport uint32_t

cdef enum:
    LANES = 8  # moduli scanned together; eight uint32 lanes vectorize well


cdef extern from "_scan.h":
    long long dn_residue_scan(
        const Py_ssize_t* parts, Py_ssize_t K, const uint32_t* init, const uint32_t* p, int P,
        uint32_t* d, const Py_ssize_t* wf, const Py_ssize_t* wn, const Py_ssize_t* woff, Py_ssize_t W,
        uint32_t* buf, Py_ssize_t* bstart, Py_ssize_t* pos, Py_ssize_t* slot, long long T) noexcept nogil


def residue_scan(parts, inits, primes, diff, wf, wn, woff, Py_ssize_t T):
    """See ``_kernels_py.residue_scan``; at most 8 primes, each below 2**31."""
    cdef Py_ssize_t P = len(primes)
    if P < 1 or P > LANES:
        raise ValueError(f"between 1 and {LANES} moduli")
    if any(p >= 2**31 for p in primes):
        raise ValueError("moduli must be below 2**31")
    # unused lanes repeat lane 0
    lane = list(range(P)) + [0] * (LANES - P)
    cdef uint32_t[::1] pr = np.array([primes[q] for q in lane], dtype=np.uint32)
    cdef uint32_t[::1] ini = np.array([inits[q] for q in lane], dtype=np.uint32)
    dm = np.array(diff, dtype=np.uint32).reshape(P, -1)
    cdef uint32_t[::1] d = np.ascontiguousarray(dm[lane].T).reshape(-1)
    cdef Py_ssize_t[::1] a = np.array(parts, dtype=np.intp)
    cdef Py_ssize_t[::1] f = np.array(wf, dtype=np.intp)
    cdef Py_ssize_t[::1] n = np.array(wn, dtype=np.intp)
    cdef Py_ssize_t[::1] off = np.array(woff, dtype=np.intp)
    cdef Py_ssize_t K = a.shape[0], W = f.shape[0]
    cdef Py_ssize_t[::1] bstart = (np.cumsum(a) - np.asarray(a)).astype(np.intp) if K else np.zeros(1, np.intp)
    cdef Py_ssize_t[::1] pos = np.zeros(max(K, 1), dtype=np.intp)
    cdef Py_ssize_t[::1] slot = np.zeros(max(W, 1), dtype=np.intp)
    cdef uint32_t[::1] buf = np.zeros(max(int(np.sum(a)), 1) * LANES, dtype=np.uint32)
    if d.shape[0] == 0:
        d = np.zeros(LANES, dtype=np.uint32)
    cdef long long bad
    with nogil:
        bad = dn_residue_scan(&a[0] if K else NULL, K, &ini[0], &pr[0], <int>P, &d[0],
                              &f[0] if W else NULL, &n[0] if W else NULL, &off[0] if W else NULL, W,
                              &buf[0], &bstart[0], &pos[0], &slot[0], T)
    return bad
