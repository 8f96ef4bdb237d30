"""Pure-Python reference kernels (fallback for the compiled ``_kernels``)."""

import numpy as np


def mulmod(a, b, red, dim):
    """Product of integer coefficient lists a, b reduced modulo a monic polynomial.

    The modulus is x^dim - sum(c * x^j for j, c in red); the result has
    exactly ``dim`` entries.
    """
    if not a or not b:
        return [0] * dim
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                prod[i + j] += ai * bj
    for k in range(len(prod) - 1, dim - 1, -1):
        c = prod[k]
        if not c:
            continue
        base = k - dim
        for j, rj in red:
            if rj == 1:
                prod[base + j] += c
            elif rj == -1:
                prod[base + j] -= c
            else:
                prod[base + j] += c * rj
    if len(prod) < dim:
        prod.extend([0] * (dim - len(prod)))
    return prod[:dim]


def dp_count(parts, T):
    counts = [0] * (T + 1)
    counts[0] = 1
    for a in parts:
        for t in range(a, T + 1):
            counts[t] += counts[t - a]
    return counts


def cseries_exp(h):
    """exp of a batch of truncated series; h has shape (order, batch), h[0] == 0."""
    h = np.asarray(h, dtype=np.complex128)
    d = h.shape[0]
    f = np.zeros_like(h)
    f[0] = 1.0
    kh = h * np.arange(d)[:, None]
    for n in range(1, d):
        f[n] = np.einsum("kj,kj->j", kh[1 : n + 1], f[n - 1 :: -1][:n]) / n
    return f


def cseries_log(g):
    """log of a batch of truncated series; g has shape (order, batch), g[0] == 1."""
    g = np.asarray(g, dtype=np.complex128)
    d = g.shape[0]
    out = np.zeros_like(g)
    if d == 1:
        return out
    dg = g[1:] * np.arange(1, d)[:, None]
    q = np.zeros((d - 1,) + g.shape[1:], dtype=np.complex128)
    for n in range(d - 1):
        acc = dg[n].copy()
        if n:
            acc -= np.einsum("ij,ij->j", g[1 : n + 1], q[n - 1 :: -1][:n])
        q[n] = acc
    out[1:] = q / np.arange(1, d)[:, None]
    return out


def residue_scan(parts, inits, primes, diff, wf, wn, woff, T):
    """First t in [0, T] where the scaled DP and the wave sum differ modulo some prime, else -1.

    For prime q the DP is seeded with ``inits[q]`` instead of 1, so it
    yields D*d(t).  Wave w (period wf[w], wn[w] terms) owns wf[w]
    forward-difference rows of length wn[w] starting at diff[q][woff[w]];
    row r belongs to the class t = r (mod wf[w]).
    """
    for init, p, dq in zip(inits, primes, diff):
        bad = _scan_one(parts, init, p, [int(x) for x in dq], wf, wn, woff, T)
        if bad >= 0:
            return bad
    return -1


def _scan_one(parts, init, p, diff, wf, wn, woff, T):
    bufs = [[0] * a for a in parts]
    pos = [0] * len(parts)
    nw = len(wf)
    slot = [0] * nw
    for t in range(T + 1):
        v = init if t == 0 else 0
        for k, buf in enumerate(bufs):
            r = pos[k]
            v = (v + buf[r]) % p
            buf[r] = v
            r += 1
            pos[k] = 0 if r == len(buf) else r
        s = 0
        for w in range(nw):
            n = wn[w]
            base = woff[w] + slot[w] * n
            s += diff[base]
            for j in range(n - 1):
                diff[base + j] = (diff[base + j] + diff[base + j + 1]) % p
            r = slot[w] + 1
            slot[w] = 0 if r == wf[w] else r
        if s % p != v:
            return t
    return -1
