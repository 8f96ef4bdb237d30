"""Independent ground truth for the wave decomposition.

Nothing here touches cyclotomic rings or series: the counter works
straight from 1/prod(1 - q^a_i), and the root-of-unity check evaluates
both sides of the primitive-root summation identity with complex floats.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import kernels
from .cyclotomic import cyclotomic_poly
from .poly import Poly


@dataclass(frozen=True)
class DpTable:
    counts: tuple  # counts[t] = d(t; parts), t = 0..T

    def __getitem__(self, t):
        return self.counts[t]

    def __len__(self):
        return len(self.counts)


def dp_count(seq, T: int) -> DpTable:
    """d(t; seq) for 0 <= t <= T by the unbounded-knapsack recurrence."""
    if T < 0:
        raise ValueError("T must be >= 0")
    parts = [int(a) for a in seq]
    if any(a <= 0 for a in parts):
        raise ValueError("parts must be positive")
    return DpTable(tuple(kernels.dp_count(parts, T)))


def dp_stream(seq):
    """Yield d(0; seq), d(1; seq), ... forever using O(sum(seq)) memory.

    Stage k holds c_k(t) = c_{k-1}(t) + c_k(t - a_k) in a ring buffer of
    length a_k.
    """
    parts = [int(a) for a in seq]
    if any(a <= 0 for a in parts):
        raise ValueError("parts must be positive")
    bufs = [[0] * a for a in parts]
    t = 0
    while True:
        v = 1 if t == 0 else 0
        for a, buf in zip(parts, bufs):
            i = t % a
            v += buf[i]
            buf[i] = v
        yield v
        t += 1


def _checked(z) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)) or abs(z) > 1e300:
        raise OverflowError(f"evaluation blew up: {z}")
    return z


def primroot_sum_check(f: int, F) -> tuple[complex, complex]:
    """Both sides of sum_{zeta primitive} F(zeta) = (1/f) sum_{zeta^f = 1} zeta F(zeta) cof(zeta) Phi_f'(zeta).

    F is a black box taking a complex root of unity.
    """
    if f < 1:
        raise ValueError("f must be >= 1")
    phi = cyclotomic_poly(f)
    cof, rem = divmod(Poly.monomial(f) - 1, phi)
    if not rem.is_zero():
        raise ArithmeticError(f"Phi_{f} does not divide x^{f} - 1")
    dphi = phi.derivative()

    def val(z):
        try:
            return _checked(F(z))
        except ZeroDivisionError as exc:
            raise OverflowError(f"F has a pole at {z}") from exc

    roots = [cmath.exp(2j * cmath.pi * k / f) for k in range(f)]
    lhs = 0j
    for k in range(1, f + 1):
        if math.gcd(k, f) == 1:
            lhs += val(roots[k % f])
    rhs = 0j
    for z in roots:
        rhs += z * val(z) * complex(cof(z)) * complex(dphi(z))
    return _checked(lhs), _checked(rhs / f)


# primes below 2**31, largest first: two residues add without overflowing 32 bits,
# and the compiled scan handles eight of them per pass
PRIMES_31 = (
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549, 2147483543, 2147483497,
    2147483489, 2147483477, 2147483423, 2147483399, 2147483353, 2147483323, 2147483269, 2147483249,
)
SCAN_LANES = 8


@dataclass(frozen=True)
class ResidueCheck:
    T: int
    primes: tuple  # moduli actually scanned
    bound: int  # every |D*(sum of waves - d)| on [0, T] is below this
    first_mismatch: int | None

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None


def _forward_differences(values: list[int]) -> list[int]:
    out, row = [], list(values)
    while row:
        out.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    return out


def _merge_by_support(parts, waves):
    """Sum waves whose f divides the same entries; the sum has period the gcd of those entries.

    Only the total matters to the check, and fewer, longer tables make the scan cheaper.
    """
    from .quasipoly import qp_combine

    if not isinstance(waves, dict):
        return list(waves)
    groups: dict[tuple, list] = {}
    for f, w in waves.items():
        support = tuple(a for a in parts if a % f == 0)
        groups.setdefault(support, []).append(w)
    merged = []
    for support, ws in groups.items():
        g = math.gcd(*support) if support else 1
        total = qp_combine(ws)
        merged.append(total.lift(g) if g % total.period == 0 else total)
    return merged


def waves_equal_dp(seq, waves, T: int) -> ResidueCheck:
    """Exact test of sum(waves)(t) == d(t; seq) for every t in [0, T].

    Both sides are scaled by the common denominator D of all wave
    coefficients, so they are integers, and are compared modulo enough
    primes below 2**31 that the product of the moduli exceeds any possible
    |D * difference|.  Congruence modulo that product therefore means
    equality.  A mismatch modulo a single prime is already a genuine
    mismatch.  Per prime the scan costs O(T (N + sum of wave degrees))
    word operations: each residue-class polynomial is stepped by forward
    differences along its progression t = r, r + f, r + 2f, ...
    """
    parts = [int(a) for a in seq]
    if T < 0:
        raise ValueError("T must be >= 0")
    waves = _merge_by_support(parts, waves)
    D = 1
    for w in waves:
        for comp in w.components:
            for c in comp.coeffs:
                D = D * c.denominator // math.gcd(D, c.denominator)

    tables, wf, wn = [], [], []
    bound_q = 0
    for w in waves:
        f = w.period
        n = max(1, max(len(c.coeffs) for c in w.components))
        rows = []
        worst = 0
        for r in range(f):
            comp = w.components[(r - 1) % f]
            ints = [int(c * D) for c in comp.coeffs]
            vals = [sum(c * (r + j * f) ** m for m, c in enumerate(ints)) for j in range(n)]
            rows.append(_forward_differences(vals))
            worst = max(worst, sum(abs(c) * T**m for m, c in enumerate(ints)))
        bound_q += worst
        tables.append(rows)
        wf.append(f)
        wn.append(n)
    N = len(parts)
    bound = bound_q + D * math.comb(T + N - 1, N - 1) + 1

    primes, M = [], 1
    for p in PRIMES_31:
        if M > bound:
            break
        primes.append(p)
        M *= p
    if M <= bound:
        raise OverflowError("values too large for the available moduli")

    woff, off = [], 0
    for f, n in zip(wf, wn):
        woff.append(off)
        off += f * n
    flat = [x for rows in tables for row in rows for x in row]
    for i in range(0, len(primes), SCAN_LANES):
        batch = primes[i : i + SCAN_LANES]
        diff = [[x % p for x in flat] for p in batch]
        bad = kernels.residue_scan(parts, [D % p for p in batch], batch, diff, wf, wn, woff, T)
        if bad >= 0:
            return ResidueCheck(T, tuple(primes), bound, bad)
    return ResidueCheck(T, tuple(primes), bound, None)
