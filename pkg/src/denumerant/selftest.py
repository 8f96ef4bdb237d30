"""Built-in consistency checks behind ``denumerant selftest``."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce

from .cyclotomic import cyclotomic_poly, divisors, get_ctx, lcm
from .oracle import dp_stream
from .poly import Poly
from .quasipoly import qp_eval
from .series import TruncSeries, ts_exp, ts_log
from .waves import all_waves

GOLDEN_SEQ = (1, 3, 6)
GOLDEN_WAVES = {
    1: [["127/216", "5/18", "1/36"]],
    2: [["-1/24"], ["1/24"]],
    3: [["-1/54"], ["-29/108", "-1/18"], ["31/108", "1/18"]],
    6: [["1/6"], ["1/12"], ["-1/12"], ["-1/6"], ["-1/12"], ["1/12"]],
}


@dataclass
class Check:
    name: str
    passed: bool = True
    count: int = 0
    detail: str = ""


@dataclass
class SelftestReport:
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self):
        return next((c for c in self.checks if not c.passed), None)

    def render(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status}  {c.name}: {c.count} checks"
            if c.detail:
                line += f" ({c.detail})"
            lines.append(line)
        total = sum(c.count for c in self.checks)
        lines.append(f"{'PASS' if self.passed else 'FAIL'}: {total} checks in {len(self.checks)} groups")
        return "\n".join(lines)


def check_golden() -> Check:
    chk = Check("golden example a=(1,3,6)")
    waves = all_waves(GOLDEN_SEQ)
    if sorted(waves) != sorted(GOLDEN_WAVES):
        chk.passed, chk.detail = False, f"wave set {sorted(waves)}"
        return chk
    for f, comps in GOLDEN_WAVES.items():
        for i, coeffs in enumerate(comps):
            chk.count += 1
            if waves[f].components[i] != Poly(coeffs):
                chk.passed = False
                chk.detail = f"W_{f} component {i + 1} is {waves[f].components[i].to_str('t')}"
                return chk
    chk.count += 1
    total = sum(qp_eval(w, 14) for w in waves.values())
    if total != 9:
        chk.passed, chk.detail = False, f"d(14) evaluated to {total}"
    return chk


def check_cyclotomic(nmax: int = 200) -> Check:
    chk = Check("cyclotomic identity prod Phi_d = x^n - 1")
    for n in range(1, nmax + 1):
        prod = Poly.constant(1)
        for d in divisors(n):
            prod = prod * cyclotomic_poly(d)
        chk.count += 1
        if prod != Poly.monomial(n) - 1:
            chk.passed, chk.detail = False, f"fails at n={n}"
            return chk
    return chk


def check_exp_log(rng: random.Random, trials: int = 10, order: int = 16) -> Check:
    chk = Check("exp(log(p)) round trip")

    def rnd():
        return Fraction(rng.randint(-50, 50), rng.randint(1, 20))

    ring = get_ctx(5).ring
    for trial in range(trials):
        p = TruncSeries([Fraction(1)] + [rnd() for _ in range(order - 1)])
        chk.count += 1
        if ts_exp(ts_log(p)) != p:
            chk.passed, chk.detail = False, f"rational trial {trial}"
            return chk
        q = TruncSeries([ring.one()] + [ring(Poly([rnd() for _ in range(4)])) for _ in range(order - 1)])
        chk.count += 1
        if ts_exp(ts_log(q)) != q:
            chk.passed, chk.detail = False, f"Q[x]/<Phi_5> trial {trial}"
            return chk
    return chk


def random_sequence(rng: random.Random, max_len: int, max_entry: int) -> tuple:
    while True:
        n = rng.randint(1, max_len)
        seq = tuple(rng.sample(range(1, max_entry + 1), n))
        if reduce(math.gcd, seq) == 1:
            return seq


def check_oracle(rng: random.Random, count: int = 25, max_len: int = 4, max_entry: int = 12) -> Check:
    chk = Check(f"oracle equivalence on {count} random sequences")
    for _ in range(count):
        seq = random_sequence(rng, max_len, max_entry)
        waves = all_waves(seq)
        T = 3 * lcm(*seq)
        for t, expected in zip(range(T + 1), dp_stream(seq)):
            chk.count += 1
            got = sum(qp_eval(w, t) for w in waves.values())
            if got != expected:
                chk.passed, chk.detail = False, f"a={seq}, t={t}: waves {got}, dp {expected}"
                return chk
    return chk


def run_selftest(seed: int = 2024, n_random: int = 25) -> SelftestReport:
    rng = random.Random(seed)
    report = SelftestReport()
    report.checks.append(check_golden())
    report.checks.append(check_cyclotomic())
    report.checks.append(check_exp_log(rng))
    report.checks.append(check_oracle(rng, n_random))
    return report
