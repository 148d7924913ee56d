"""``hbn`` command line: eval, trace, dot, bench, check, repro."""

from __future__ import annotations

import argparse
import os
import random
import re
import sys
import time
from typing import Callable

from . import arith, catalog, collatz, oracle
from .convert import DEFAULT_CAP_BITS, ExpansionTooLarge, RefNat, from_reference, print_decimal, term, to_reference
from .core import HbnError, Term, dual

# ---------------------------------------------------------------------------
# expressions
#
#   expr  := sum
#   sum   := prod (("+" | "-") prod)*
#   prod  := pow ("*" pow)*
#   pow   := atom ("^" pow)?
#   atom  := NUMBER | NAME | NAME "(" expr ("," expr)* ")" | "(" expr ")"


class ExprSyntaxError(HbnError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _pair_part(j):
    def f(v):
        if not isinstance(v, tuple) or isinstance(v, Term):
            raise HbnError("fst/snd need a pair")
        return v[j]

    return f


FUNCTIONS: dict[str, tuple[int, Callable]] = {
    "exp2": (1, arith.exp2),
    "mersenne": (1, catalog.mersenne),
    "fermat": (1, catalog.fermat),
    "perfect": (1, catalog.perfect),
    "lshift": (2, arith.leftshift_by),  # lshift(n, k) = k * 2^n
    "rshift": (2, arith.rightshift_by),  # rshift(n, k) = k div 2^n
    "div": (2, arith.divide),
    "mod": (2, arith.remainder),
    "isqrt": (1, arith.isqrt),
    "bitsize": (1, arith.bitsize),
    "ilog2": (1, arith.ilog2),
    "tsize": (1, arith.tsize),
    "bestcase": (1, arith.best_case),
    "worsecase": (1, arith.worse_case),
    "dual": (1, dual),
    "fst": (1, _pair_part(0)),
    "snd": (1, _pair_part(1)),
}

_BINOPS = {"+": arith.add, "-": arith.sub, "*": arith.mul, "^": arith.power}

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.end() == pos or not m.group(0).strip():
            break
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("num", m.group(1), start))
        elif m.group(2):
            toks.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^(),":
                raise ExprSyntaxError(f"unexpected character {ch!r}", start)
            toks.append(("op", ch, start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


def _lookup(name: str, pos: int):
    consts = catalog.catalog_constants()
    key = catalog.CATALOG_ALIASES.get(name, name)
    if key in consts:
        return consts[key]
    raise ExprSyntaxError(f"unknown name {name!r}", pos)


class _ExprParser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.j = 0

    def peek(self):
        return self.toks[self.j]

    def take(self):
        t = self.toks[self.j]
        self.j += 1
        return t

    def expect(self, ch):
        kind, val, pos = self.take()
        if val != ch or kind != "op":
            raise ExprSyntaxError(f"expected {ch!r}, found {val or 'end of input'!r}", pos)

    def parse(self):
        v = self.sum()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"unexpected {val!r}", pos)
        return v

    def sum(self):
        v = self.prod()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            v = _apply2(op, v, self.prod())
        return v

    def prod(self):
        v = self.pow()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            v = _apply2("*", v, self.pow())
        return v

    def pow(self):
        v = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            v = _apply2("^", v, self.pow())
        return v

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return term(val.lstrip("0") or "0")
        if kind == "name":
            if self.peek()[:2] == ("op", "("):
                if val not in FUNCTIONS:
                    raise ExprSyntaxError(f"unknown function {val!r}", pos)
                self.take()
                args = [self.sum()]
                while self.peek()[:2] == ("op", ","):
                    self.take()
                    args.append(self.sum())
                self.expect(")")
                arity, fn = FUNCTIONS[val]
                if len(args) != arity:
                    raise ExprSyntaxError(f"{val} takes {arity} argument(s)", pos)
                if val not in ("fst", "snd"):
                    for a in args:
                        _need_term(a)
                return fn(*args)
            return _lookup(val, pos)
        if (kind, val) == ("op", "("):
            v = self.sum()
            self.expect(")")
            return v
        raise ExprSyntaxError(f"unexpected {val or 'end of input'!r}", pos)


def _need_term(v):
    if not isinstance(v, Term):
        raise HbnError("a pair cannot be used as a number; use fst() or snd()")


def _apply2(op, a, b):
    _need_term(a)
    _need_term(b)
    return _BINOPS[op](a, b)


def evaluate(text: str):
    """Evaluate an expression to a term (or a pair for ``twinPrimes``)."""
    return _ExprParser(text).parse()


# ---------------------------------------------------------------------------
# rendering


def _cap(args) -> int:
    if getattr(args, "cap_bits", None) is not None:
        return args.cap_bits
    env = os.environ.get("HBN_CAP_BITS")
    return int(env) if env else DEFAULT_CAP_BITS


def decimal(t: Term, cap_bits: int) -> str:
    """Decimal text, or :class:`ExpansionTooLarge` above ``cap_bits`` binary digits."""
    if arith._cmp(arith.bitsize(t), term(cap_bits)) > 0:
        raise ExpansionTooLarge(
            f"refusing to expand: value has more than {cap_bits} bits (raise --cap-bits)"
        )
    return print_decimal(to_reference(t, cap_bits + 1))


def _small_decimal(t: Term) -> str:
    # measurements like tsize and bitsize are printed in decimal when they fit
    try:
        return decimal(t, 4096)
    except ExpansionTooLarge:
        return str(t)


def _render(v, args, out):
    if isinstance(v, tuple) and not isinstance(v, Term):
        for part in v:
            _render(part, args, out)
        return
    want_term = args.term
    want_dec = args.decimal
    if not (args.term or args.decimal or args.tsize or args.bitsize):
        want_term = True
        # without flags, add the decimal form only when it is short
        want_dec = arith._cmp(arith.bitsize(v), term(4096)) <= 0
    if want_term:
        out.append(str(v))
    if want_dec:
        out.append(decimal(v, _cap(args)))
    if args.tsize:
        out.append(_small_decimal(arith.tsize(v)))
    if args.bitsize:
        out.append(_small_decimal(arith.bitsize(v)))


# ---------------------------------------------------------------------------
# commands


def cmd_eval(args) -> int:
    out: list[str] = []
    _render(evaluate(args.expr), args, out)
    print("\n".join(out))
    return 0


def cmd_trace(args) -> int:
    start = evaluate(args.expr)
    _need_term(start)
    if args.unbounded:
        steps = sys.maxsize
    else:
        steps = args.max_steps
    fn = collatz.nsyr if args.mode == "syracuse" else collatz.collatz_trace
    tr = fn(start, steps, with_bitsize=args.bitsize, cap_bits=_cap(args))
    cap = _cap(args)
    if args.csv:
        header = ["step", "tsize"]
        if args.bitsize:
            header.append("bitsize")
        if args.decimal:
            header.append("value")
        lines = [",".join(header)]
        for e in tr:
            row = [str(e.step), print_decimal(e.tsize_value)]
            if args.bitsize:
                row.append(_small_decimal(e.bitsize) if e.bitsize is not None else "")
            if args.decimal:
                row.append(decimal(e.term, cap))
            lines.append(",".join(row))
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        for e in tr:
            row = [f"{e.step:>6}", f"tsize={print_decimal(e.tsize_value)}"]
            if args.bitsize:
                row.append(
                    "bitsize=" + (_small_decimal(e.bitsize) if e.bitsize is not None else "(over cap)")
                )
            if args.decimal:
                row.append(decimal(e.term, cap))
            elif args.term:
                row.append(str(e.term))
            print(" ".join(row))
    if tr.truncated:
        print(f"truncated after {len(tr)} entries", file=sys.stderr)
    return 0


def cmd_dot(args) -> int:
    v = evaluate(args.expr)
    _need_term(v)
    sys.stdout.write(catalog.dag_to_dot(catalog.dag_fold(v)))
    return 0


def _bench_structured():
    c = catalog.catalog_constants()
    m48 = c["mersenne48"]
    tower = arith.exp2(arith.exp2(arith.exp2(m48)))
    best = arith.best_case(term(100))
    return [
        ("add tower+bestcase(100)", lambda: arith.add(tower, best)),
        ("sub tower-mersenne48", lambda: arith.sub(tower, m48)),
        ("mul tower*bestcase(100)", lambda: arith.mul(tower, best)),
        ("mul prothPrime*cullenPrime", lambda: arith.mul(c["proth_prime"], c["cullen_prime"])),
        ("add twin primes", lambda: arith.add(*c["twin_primes"])),
        ("lshift mersenne48 by itself", lambda: arith.leftshift_by(m48, m48)),
        ("rshift tower by mersenne48", lambda: arith.rightshift_by(m48, tower)),
        ("compare tower, bestcase(100)", lambda: arith.compare(tower, best)),
        ("50 syracuse steps on bestcase(100)", lambda: collatz.nsyr(best, 50)[-1].term),
    ]


def _bench_random_dense(bits=4096, seed=0):
    rng = random.Random(seed)
    a = from_reference(RefNat.from_int(rng.getrandbits(bits) | (1 << (bits - 1))))
    b = from_reference(RefNat.from_int(rng.getrandbits(bits) | (1 << (bits - 1))))
    # division costs one subtraction per quotient digit, so keep the quotient short
    near = from_reference(RefNat.from_int(rng.getrandbits(bits - 64) | 1))
    return [
        (f"add {bits}-bit", lambda: arith.add(a, b)),
        (f"sub {bits}-bit", lambda: arith.absdif(a, b)),
        (f"compare {bits}-bit", lambda: arith.compare(a, b)),
        (f"div {bits}/{bits - 64}-bit", lambda: arith.div_and_rem(a, near)[0]),
        (f"lshift {bits}-bit by 12345", lambda: arith.leftshift_by(term(12345), a)),
        (f"convert round trip {bits}-bit", lambda: from_reference(to_reference(a))),
    ]


SUITES = {"structured": _bench_structured, "random-dense": _bench_random_dense}


def cmd_bench(args) -> int:
    cases = SUITES[args.suite]()
    for name, fn in cases:
        t0 = time.perf_counter()
        r = fn()
        dt = time.perf_counter() - t0
        ts = _small_decimal(arith.tsize(r)) if isinstance(r, Term) else "-"
        print(f"{name:<40} {dt * 1000:10.2f} ms  tsize={ts}")
    return 0


def cmd_check(args) -> int:
    if args.exhaustive is not None:
        report = oracle.conformance_sweep(args.exhaustive)
    else:
        report = oracle.conformance_sweep(
            seed=args.seed, samples=args.samples, max_bits=args.max_bits
        )
    if args.json:
        print(report.to_json())
    else:
        print("\n".join(report.lines()))
    return 0 if report.ok else 1


def run_session(expr: str, render: str, expected: str) -> tuple[bool, str]:
    """Evaluate one stored session and return ``(matches, actual output)``."""
    v = evaluate(expr)
    if render == "term":
        # stored texts keep the line wrapping of their source; a break
        # after a comma is not part of the printed form
        want = " ".join(expected.split()).replace(", ", ",")
        return str(v) == want, str(v)
    if render == "decimal":
        got = decimal(v, DEFAULT_CAP_BITS)
    elif render == "tsize":
        got = _small_decimal(arith.tsize(v))
    elif render == "bitsize":
        got = _small_decimal(arith.bitsize(v))
    elif render == "same":
        w = evaluate(expected)
        return v == w, str(v)
    elif render in ("nsyr", "nsyr-tsize"):
        n = expected.count(",") + 1
        tr = collatz.nsyr(v, n)
        if render == "nsyr":
            got = ",".join(decimal(e.term, DEFAULT_CAP_BITS) for e in tr)
        else:
            got = ",".join(print_decimal(e.tsize_value) for e in tr)
    else:
        raise ValueError(f"unknown render {render!r}")
    return got == expected, got


def cmd_repro(args) -> int:
    from .sessions import SESSIONS

    failed = 0
    for name, expr, render, expected in SESSIONS:
        ok, got = run_session(expr, render, expected)
        print(f"{'PASS' if ok else 'FAIL'} {name}")
        if not ok:
            failed += 1
            print(f"  expected: {' '.join(expected.split())}")
            print(f"  actual:   {got}")
    print(f"{len(SESSIONS) - failed}/{len(SESSIONS)} sessions reproduced")
    return 1 if failed else 0


def _add_render_flags(p):
    p.add_argument("--decimal", action="store_true", help="print the decimal value")
    p.add_argument("--term", action="store_true", help="print the term text")
    p.add_argument("--tsize", action="store_true", help="print the structural complexity")
    p.add_argument("--bitsize", action="store_true", help="print the bijective digit count")
    p.add_argument("--cap-bits", type=int, default=None, help="largest expansion to decimal, in bits")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hbn", description="Arithmetic on hereditarily binary numbers.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression")
    p.add_argument("expr")
    _add_render_flags(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("trace", help="syracuse or Collatz trace")
    p.add_argument("expr")
    p.add_argument("--max-steps", type=int, default=1000)
    p.add_argument("--unbounded", action="store_true", help="no step limit (may not terminate)")
    p.add_argument("--mode", choices=("syracuse", "collatz"), default="syracuse")
    p.add_argument("--csv", action="store_true")
    _add_render_flags(p)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("dot", help="Graphviz DAG of a term")
    p.add_argument("expr")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("bench", help="timing suites")
    p.add_argument("suite", choices=sorted(SUITES))
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("check", help="conformance sweep against the reference oracle")
    p.add_argument("--exhaustive", type=int, default=None, metavar="N")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--max-bits", type=int, default=256)
    p.add_argument("--json", action="store_true", help="machine-readable summary")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("repro", help="replay the stored session outputs")
    p.set_defaults(func=cmd_repro)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (HbnError, ValueError) as exc:
        print(f"hbn: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
