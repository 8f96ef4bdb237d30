"""``denumerant`` command line: waves, eval, bench, selftest.

Exit codes: 0 success, 1 self-test failure, 2 invalid input.
JSON goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing as mp
import os
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from .floatwaves import FloatWave, float_all_waves, float_denumerant
from .poly import Poly
from .quasipoly import QuasiPolynomial, qp_combine
from .waves import SequenceError, all_waves, denumerant_from_waves, validate_sequence

EXIT_OK, EXIT_SELFTEST, EXIT_INPUT = 0, 1, 2
COMBINED_MAX_PERIOD = 2520  # beyond this the merged table is omitted from JSON


@dataclass
class CliConfig:
    sequence: tuple = ()
    backend: str = "exact"
    output: str = "text"
    t: int | None = None
    bench_k: int | None = None
    time_limit_secs: int | None = None
    threads: int = 1
    digits: int | None = None


class InputError(Exception):
    pass


# -- serialization ---------------------------------------------------------


def _rat(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _flt(x, digits=None) -> str:
    if isinstance(x, float) or digits is None:
        return format(float(x), ".17g")
    import mpmath

    return mpmath.nstr(x, max(17, digits), strip_zeros=False)


def _exact_components(qp: QuasiPolynomial) -> list:
    return [
        {"residue": i, "coeffs": [_rat(c) for c in p.coeffs] or ["0/1"]}
        for i, p in enumerate(qp.components, start=1)
    ]


def waves_to_json(seq, backend: str, waves: dict, combined_max_period: int = COMBINED_MAX_PERIOD) -> dict:
    doc = {"sequence": list(seq), "backend": backend, "waves": []}
    for f, w in waves.items():
        if isinstance(w, FloatWave):
            comps = [
                {"residue": i, "coeffs": [_flt(c, w.digits) for c in row]}
                for i, row in enumerate(w.components, start=1)
            ]
            doc["waves"].append({"f": f, "period": w.period, "components": comps, "max_imag": _flt(float(w.max_imag))})
        else:
            doc["waves"].append({"f": f, "period": w.period, "components": _exact_components(w)})
    doc["combined"] = None
    if backend == "exact":
        from .cyclotomic import lcm

        if lcm(*waves) <= combined_max_period:
            merged = qp_combine(waves)
            doc["combined"] = {"period": merged.period, "components": _exact_components(merged)}
    return doc


def _parse_components(comps, period: int) -> QuasiPolynomial:
    polys = [None] * period
    for c in comps:
        polys[c["residue"] - 1] = Poly([Fraction(s) for s in c["coeffs"]])
    if any(p is None for p in polys):
        raise ValueError("missing residue class in JSON wave")
    return QuasiPolynomial(polys)


def waves_from_json(doc) -> dict:
    """Inverse of :func:`waves_to_json` for the exact backend: {f: QuasiPolynomial}."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    if doc.get("backend") != "exact":
        raise ValueError("only exact-backend documents carry rational coefficients")
    return {w["f"]: _parse_components(w["components"], w["period"]) for w in doc["waves"]}


# -- argument handling -----------------------------------------------------


def parse_sequence(text: str) -> tuple:
    try:
        seq = tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok != "")
    except ValueError:
        raise InputError(f"cannot parse sequence {text!r}: expected comma-separated integers") from None
    return seq


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="denumerant", description="Sylvester denumerants as sums of waves.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_seq=True):
        if with_seq:
            g = sp.add_mutually_exclusive_group(required=True)
            g.add_argument("-a", "--sequence", help="comma-separated entries, e.g. 1,3,6")
            g.add_argument("--upto", type=_positive, metavar="K", help="shorthand for a = 1,2,...,K")
        sp.add_argument("--backend", choices=("exact", "float"), default="exact")
        sp.add_argument("--output", choices=("text", "json"), default="text")
        sp.add_argument("--json", dest="output", action="store_const", const="json", help="same as --output json")
        sp.add_argument("--threads", type=_positive, default=None, help="worker processes (default: CPU count)")
        sp.add_argument("--digits", type=_positive, default=None, help="float backend: mpmath working precision")

    common(sub.add_parser("waves", help="print every wave W_f"))
    ev = sub.add_parser("eval", help="evaluate d(t; a)")
    common(ev)
    ev.add_argument("-t", type=_nonneg, required=True)

    bench = sub.add_parser("bench", help="time d(t; 1..k) for k = 2..K")
    common(bench, with_seq=False)
    bench.add_argument("-k", "--upto", dest="bench_k", type=_positive, required=True)
    bench.add_argument("-t", type=_nonneg, default=10**6, help="evaluation point (default 10^6)")
    bench.add_argument("--time-limit", type=_positive, default=60, help="seconds per row")
    bench.add_argument("--check-upto", type=int, default=0, metavar="K",
                       help="float backend: compare rows k <= K against the exact value")

    st = sub.add_parser("selftest", help="run the built-in consistency checks")
    st.add_argument("--seed", type=int, default=2024)
    st.add_argument("--random", type=_nonneg, default=25, help="random oracle sequences")
    return p


def config_from_args(args) -> CliConfig:
    cfg = CliConfig(
        backend=getattr(args, "backend", "exact"),
        output=getattr(args, "output", "text"),
        t=getattr(args, "t", None),
        bench_k=getattr(args, "bench_k", None),
        time_limit_secs=getattr(args, "time_limit", None),
        threads=getattr(args, "threads", None) or (os.cpu_count() or 1),
        digits=getattr(args, "digits", None),
    )
    if args.command in ("waves", "eval"):
        seq = tuple(range(1, args.upto + 1)) if args.upto else parse_sequence(args.sequence)
        try:
            cfg.sequence = validate_sequence(seq)
        except SequenceError as exc:
            raise InputError(str(exc)) from None
    if cfg.digits is not None and cfg.backend != "float":
        raise InputError("--digits only applies to --backend float")
    return cfg


# -- commands --------------------------------------------------------------


def _compute(cfg: CliConfig, seq) -> dict:
    if cfg.backend == "exact":
        return all_waves(seq, workers=cfg.threads)
    return float_all_waves(seq, digits=cfg.digits, workers=cfg.threads)


def _render_float_wave(w: FloatWave) -> str:
    parts = []
    for row in w.components:
        terms = [f"{_flt(c, w.digits)}*t^{m}" if m else _flt(c, w.digits) for m, c in enumerate(row)]
        parts.append(" + ".join(reversed(terms)) if terms else "0")
    return "[" + ", ".join(parts) + "]"


def cmd_waves(cfg: CliConfig, out=None) -> int:
    out = out or sys.stdout
    waves = _compute(cfg, cfg.sequence)
    if cfg.output == "json":
        json.dump(waves_to_json(cfg.sequence, cfg.backend, waves), out, indent=2)
        out.write("\n")
        return EXIT_OK
    print(f"a = ({', '.join(map(str, cfg.sequence))}), backend = {cfg.backend}", file=out)
    for f, w in waves.items():
        body = str(w) if isinstance(w, QuasiPolynomial) else _render_float_wave(w)
        print(f"W_{f}(t) [period {w.period}] = {body}", file=out)
    if cfg.backend == "float":
        worst = max(w.max_imag for w in waves.values())
        print(f"max discarded imaginary part: {float(worst):.3e}", file=out)
    return EXIT_OK


def _evaluate(cfg: CliConfig, seq, t: int, waves=None):
    """(value, max_imag) with value an int (exact) or float / mpf."""
    if waves is None:
        waves = _compute(cfg, seq)
    if cfg.backend == "exact":
        v = denumerant_from_waves(waves, t)
        if v.denominator != 1:
            raise ArithmeticError(f"non-integral wave sum {v}")
        return int(v), 0.0
    value = float_denumerant(seq, t, digits=cfg.digits, waves=waves)
    return value, max(float(w.max_imag) for w in waves.values())


def cmd_eval(cfg: CliConfig, out=None) -> int:
    out = out or sys.stdout
    value, imag = _evaluate(cfg, cfg.sequence, cfg.t)
    if cfg.output == "json":
        doc = {"sequence": list(cfg.sequence), "backend": cfg.backend, "t": cfg.t}
        if cfg.backend == "exact":
            doc["value"] = str(value)
        else:
            doc["value"] = _flt(value, cfg.digits)
            doc["max_imag"] = _flt(imag)
        json.dump(doc, out)
        out.write("\n")
    elif cfg.backend == "exact":
        print(value, file=out)
    else:
        print(_flt(value, cfg.digits), file=out)
        print(f"max discarded imaginary part: {imag:.3e}", file=out)
    return EXIT_OK


def _bench_row(cfg: CliConfig, k: int, t: int, check: bool) -> dict:
    seq = tuple(range(1, k + 1))
    start = time.perf_counter()
    waves = _compute(cfg, seq)
    value, imag = _evaluate(cfg, seq, t, waves)
    elapsed = time.perf_counter() - start
    row = {"k": k, "status": "OK", "seconds": elapsed, "n_waves": len(waves)}
    if cfg.backend == "exact":
        row["value"] = str(value)
    else:
        row["value"] = _flt(value, cfg.digits)
        row["max_imag"] = imag
        if check:
            exact = denumerant_from_waves(all_waves(seq), t)
            err = abs(Fraction(value) - exact) if cfg.digits is None else abs(value - int(exact))
            row["abs_err"] = float(err)
            row["rel_err"] = float(err / exact) if exact else float(err)
    return row


def _child(conn, cfg, k, t, check):
    try:
        conn.send(_bench_row(cfg, k, t, check))
    except BaseException as exc:  # report, never hang the parent
        conn.send({"k": k, "status": "ERROR", "error": repr(exc)})
    finally:
        conn.close()


def _run_limited(cfg: CliConfig, k: int, t: int, check: bool) -> dict:
    if not cfg.time_limit_secs:
        return _bench_row(cfg, k, t, check)
    ctx = mp.get_context("fork") if "fork" in mp.get_all_start_methods() else mp.get_context()
    recv, send = ctx.Pipe(duplex=False)
    proc = ctx.Process(target=_child, args=(send, cfg, k, t, check), daemon=True)
    start = time.perf_counter()
    proc.start()
    send.close()
    ready = recv.poll(cfg.time_limit_secs)
    if ready:
        row = recv.recv()
        proc.join()
        return row
    proc.terminate()
    proc.join()
    return {"k": k, "status": "TIMEOUT", "seconds": time.perf_counter() - start}


def _short(value: str, width: int = 24) -> str:
    return value if len(value) <= width else f"{value[:8]}...({len(value)} chars)"


def cmd_bench(cfg: CliConfig, out=None, t: int = 10**6, check_upto: int = 0) -> int:
    out = out or sys.stdout
    rows = []
    total_start = time.perf_counter()
    for k in range(2, cfg.bench_k + 1):
        # each row runs in its own child process, which is the time-limit boundary
        row = _run_limited(cfg, k, t, check=cfg.backend == "float" and k <= check_upto)
        rows.append(row)
        if cfg.output == "text":
            _print_row(row, out, header=len(rows) == 1)
    total = time.perf_counter() - total_start
    if cfg.output == "json":
        json.dump({"backend": cfg.backend, "t": t, "rows": rows, "total_seconds": total}, out, indent=2)
        out.write("\n")
    else:
        if not rows:
            print("(no rows: k starts at 2)", file=out)
        n_ok = sum(r["status"] == "OK" for r in rows)
        print(f"{n_ok}/{len(rows)} rows OK, total {total:.2f} s", file=out)
    return EXIT_OK


def _print_row(row: dict, out, header: bool):
    if header:
        print(f"{'k':>4}  {'status':<7} {'seconds':>9}  {'waves':>5}  value", file=out)
    if row["status"] != "OK":
        print(f"{row['k']:>4}  {row['status']:<7} {row.get('seconds', 0.0):>9.3f}  {'':>5}  {row.get('error', '')}", file=out)
        return
    extra = ""
    if "rel_err" in row:
        extra = f"  abs_err={row['abs_err']:.3e} rel_err={row['rel_err']:.3e}"
    print(f"{row['k']:>4}  {'OK':<7} {row['seconds']:>9.3f}  {row['n_waves']:>5}  {_short(row['value'])}{extra}",
          file=out)


def cmd_selftest(seed: int, n_random: int, out=None) -> int:
    out = out or sys.stdout
    from .selftest import run_selftest

    report = run_selftest(seed=seed, n_random=n_random)
    print(report.render(), file=out)
    bad = report.first_failure()
    if bad is not None:
        print(f"first failure: {bad.name}: {bad.detail}", file=sys.stderr)
        return EXIT_SELFTEST
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "selftest":
        return cmd_selftest(args.seed, args.random)
    try:
        cfg = config_from_args(args)
        if args.command == "waves":
            return cmd_waves(cfg)
        if args.command == "eval":
            return cmd_eval(cfg)
        return cmd_bench(cfg, t=args.t, check_upto=args.check_upto)
    except InputError as exc:
        print(f"denumerant: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
