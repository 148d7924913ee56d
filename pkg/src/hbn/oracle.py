"""Digit-at-a-time reference algorithms and the conformance sweep.

``simple_add`` and ``simple_sub`` walk both operands one bijective digit at a
time through ``apply_o``/``apply_i`` and their inverses.  They are slow but
obviously correct, which makes them a second, independent check on the
block-at-a-time versions in :mod:`hbn.arith`.

:func:`conformance_sweep` cross-checks fast arithmetic, simple arithmetic and
the :class:`~hbn.convert.RefNat` schoolbook oracle, either exhaustively on a
small square of operands or on seeded random pairs.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Mapping

from . import arith
from .core import (
    _V,
    _W,
    E,
    DomainError,
    Term,
    apply_i,
    apply_o,
    predecessor,
    successor,
    unapply_i,
    unapply_o,
)
from .convert import (
    RefNat,
    from_reference,
    print_decimal,
    ref_add,
    ref_cmp,
    ref_divrem,
    ref_mul,
    ref_sub,
    to_reference,
)

__all__ = [
    "simple_add",
    "simple_sub",
    "LawResult",
    "SweepReport",
    "conformance_sweep",
    "random_refnat",
    "structured_term",
    "LAWS",
]


def simple_add(x: Term, y: Term) -> Term:
    # one o'/i' per operand per step; the post steps are replayed afterwards
    posts = []
    while x[0] and y[0]:
        kx, ky = x[0], y[0]
        x = unapply_o(x) if kx == _V else unapply_i(x)
        y = unapply_o(y) if ky == _V else unapply_i(y)
        posts.append(kx + ky)
    r = y if not x[0] else x
    for code in reversed(posts):
        if code == 2:  # odd + odd
            r = apply_i(r)
        elif code == 3:  # odd + even
            r = apply_o(successor(r))
        else:  # even + even
            r = apply_i(successor(r))
    return r


def simple_sub(x: Term, y: Term) -> Term:
    posts = []
    while y[0]:
        kx, ky = x[0], y[0]
        if not kx:
            raise DomainError("negative result")
        x = unapply_o(x) if kx == _V else unapply_i(x)
        y = unapply_o(y) if ky == _V else unapply_i(y)
        posts.append((kx, ky))
    r = x
    for kx, ky in reversed(posts):
        if kx == _V and ky == _V:
            r = predecessor(apply_o(r))
        elif kx == _V:
            r = predecessor(predecessor(apply_o(r)))
        elif ky == _V:
            r = apply_o(r)
        else:
            r = predecessor(apply_o(r))
    return r


# ---------------------------------------------------------------------------
# sweep machinery


@dataclass
class LawResult:
    name: str
    cases: int = 0
    failures: int = 0
    counterexample: tuple[str, ...] | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def merge(self, other: LawResult) -> LawResult:
        return LawResult(
            self.name,
            self.cases + other.cases,
            self.failures + other.failures,
            self.counterexample or other.counterexample,
        )


@dataclass
class SweepReport:
    mode: str
    seed: int | None
    laws: dict[str, LawResult] = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.laws.values())

    @property
    def total_cases(self) -> int:
        return sum(r.cases for r in self.laws.values())

    def merge(self, other: SweepReport) -> SweepReport:
        laws = dict(self.laws)
        for name, r in other.laws.items():
            laws[name] = laws[name].merge(r) if name in laws else r
        return replace(self, laws=laws, seconds=self.seconds + other.seconds)

    def lines(self) -> list[str]:
        out = []
        for name in sorted(self.laws):
            r = self.laws[name]
            status = "PASS" if r.passed else "FAIL"
            line = f"{status} {name} cases={r.cases}"
            if r.counterexample:
                line += " counterexample=" + ",".join(r.counterexample)
            out.append(line)
        verdict = "OK" if self.ok else "FAILED"
        out.append(f"{verdict} laws={len(self.laws)} cases={self.total_cases}")
        return out

    def to_json(self) -> str:
        return json.dumps(
            {
                "mode": self.mode,
                "seed": self.seed,
                "ok": self.ok,
                "laws": [
                    {
                        "name": r.name,
                        "cases": r.cases,
                        "passed": r.passed,
                        "counterexample": list(r.counterexample)
                        if r.counterexample
                        else None,
                    }
                    for _, r in sorted(self.laws.items())
                ],
            },
            sort_keys=True,
        )


class _Values:
    """Term/RefNat pairs with a lookup from oracle results back to terms."""

    def __init__(self):
        self._terms: dict[bytes, Term] = {}

    def term(self, r: RefNat) -> Term:
        t = self._terms.get(r.digits)
        if t is None:
            t = from_reference(r)
            if len(r.digits) <= 20:
                self._terms[r.digits] = t
        return t


# A law receives the two operands in both forms and returns True/False,
# or None when it does not apply to the pair.
Law = Callable[[Term, RefNat, Term, RefNat, "_Values", Mapping[str, Callable]], "bool | None"]


def _law_add(x, a, y, b, vals, ops):
    return ops["add"](x, y) == vals.term(ref_add(a, b))


def _ordered(x, a, y, b):
    # subtraction laws run on (max, min) so no pair is wasted
    if ref_cmp(a, b) < 0:
        return y, b, x, a
    return x, a, y, b


def _law_sub(x, a, y, b, vals, ops):
    x, a, y, b = _ordered(x, a, y, b)
    return ops["sub"](x, y) == vals.term(ref_sub(a, b))


def _law_mul(x, a, y, b, vals, ops):
    return ops["mul"](x, y) == vals.term(ref_mul(a, b))


def _law_compare(x, a, y, b, vals, ops):
    return int(ops["compare"](x, y)) == ref_cmp(a, b)


def _law_divrem(x, a, y, b, vals, ops):
    if not b:
        return None
    q, r = ops["div_and_rem"](x, y)
    eq, er = ref_divrem(a, b)
    return q == vals.term(eq) and r == vals.term(er)


def _small(y, b, vals):
    # shift counts and exponents keep their low 12 bits so expansions stay bounded
    if len(b) <= 12:
        return y, int(b)
    n = int(b) & 0xFFF
    return vals.term(RefNat.from_int(n)), n


def _law_leftshift(x, a, y, b, vals, ops):
    y, n = _small(y, b, vals)
    return ops["leftshift_by"](y, x) == vals.term(a.shl(n))


def _law_rightshift(x, a, y, b, vals, ops):
    y, n = _small(y, b, vals)
    return ops["rightshift_by"](y, x) == vals.term(a.shr(n))


def _law_simple_add(x, a, y, b, vals, ops):
    return ops["simple_add"](x, y) == vals.term(ref_add(a, b))


def _law_simple_sub(x, a, y, b, vals, ops):
    x, a, y, b = _ordered(x, a, y, b)
    return ops["simple_sub"](x, y) == vals.term(ref_sub(a, b))


def _law_simple_add_fast(x, a, y, b, vals, ops):
    return ops["simple_add"](x, y) == ops["add"](x, y)


def _law_simple_sub_fast(x, a, y, b, vals, ops):
    x, a, y, b = _ordered(x, a, y, b)
    return ops["simple_sub"](x, y) == ops["sub"](x, y)


def _law_add_commutes(x, a, y, b, vals, ops):
    return ops["add"](x, y) == ops["add"](y, x)


def _law_mul_commutes(x, a, y, b, vals, ops):
    return ops["mul"](x, y) == ops["mul"](y, x)


def _law_sub_inverts_add(x, a, y, b, vals, ops):
    return ops["sub"](ops["add"](x, y), y) == x


def _law_minmax(x, a, y, b, vals, ops):
    lo, hi, d = arith.min_max_absdif(x, y)
    if ref_cmp(a, b) < 0:
        lo_r, hi_r = a, b
    else:
        lo_r, hi_r = b, a
    return lo == vals.term(lo_r) and hi == vals.term(hi_r) and d == vals.term(ref_sub(hi_r, lo_r))


def _law_exp2(x, a, y, b, vals, ops):
    x, n = _small(x, a, vals)
    return ops["exp2"](x) == vals.term(RefNat(b"\x01").shl(n))


def _law_bitsize(x, a, y, b, vals, ops):
    # bijective digit count of a: the length of the binary form of a+1, minus one
    n = len(ref_add(a, RefNat(b"\x01"))) - 1
    return ops["bitsize"](x) == vals.term(RefNat.from_int(n))


def _law_ilog2(x, a, y, b, vals, ops):
    if not a:
        return None
    return ops["ilog2"](x) == vals.term(RefNat.from_int(len(a) - 1))


def _law_isqrt(x, a, y, b, vals, ops):
    s = to_reference(ops["isqrt"](x))
    s1 = ref_add(s, RefNat(b"\x01"))
    return ref_cmp(ref_mul(s, s), a) <= 0 and ref_cmp(a, ref_mul(s1, s1)) < 0


# binary laws run on every pair; unary laws only on the diagonal-free first
# operand sweep (they ignore y)
BINARY_LAWS: dict[str, Law] = {
    "add=ref": _law_add,
    "sub=ref": _law_sub,
    "mul=ref": _law_mul,
    "compare=ref": _law_compare,
    "div_and_rem=ref": _law_divrem,
    "leftshift_by=ref": _law_leftshift,
    "rightshift_by=ref": _law_rightshift,
    "simple_add=ref": _law_simple_add,
    "simple_sub=ref": _law_simple_sub,
    "simple_add=add": _law_simple_add_fast,
    "simple_sub=sub": _law_simple_sub_fast,
    "add_commutes": _law_add_commutes,
    "mul_commutes": _law_mul_commutes,
    "sub_inverts_add": _law_sub_inverts_add,
    "min_max_absdif=ref": _law_minmax,
}

UNARY_LAWS: dict[str, Law] = {
    "exp2=ref": _law_exp2,
    "bitsize=ref": _law_bitsize,
    "ilog2=ref": _law_ilog2,
    "isqrt=ref": _law_isqrt,
}

LAWS = {**BINARY_LAWS, **UNARY_LAWS}


def default_ops() -> dict[str, Callable]:
    return {
        "add": arith.add,
        "sub": arith.sub,
        "mul": arith.mul,
        "compare": arith.compare,
        "div_and_rem": arith.div_and_rem,
        "leftshift_by": arith.leftshift_by,
        "rightshift_by": arith.rightshift_by,
        "exp2": arith.exp2,
        "bitsize": arith.bitsize,
        "ilog2": arith.ilog2,
        "isqrt": arith.isqrt,
        "simple_add": simple_add,
        "simple_sub": simple_sub,
    }


def _check(law_name, law, x, a, y, b, vals, ops, results):
    try:
        ok = law(x, a, y, b, vals, ops)
    except Exception:  # a crash is a failure of the law, not of the sweep
        ok = False
    if ok is None:
        return
    r = results[law_name]
    r.cases += 1
    if not ok:
        r.failures += 1
        if r.counterexample is None:
            r.counterexample = (print_decimal(a), print_decimal(b))


def random_refnat(rng: random.Random, max_bits: int) -> RefNat:
    """Uniform bit length in ``0..max_bits``, then uniform digits of that length."""
    n = rng.randint(0, max_bits)
    if n == 0:
        return RefNat()
    digits = bytes(rng.getrandbits(1) for _ in range(n - 1)) + b"\x01"
    return RefNat(digits)


def structured_term(rng: random.Random, max_tsize: int = 60) -> Term:
    """A random low-complexity giant built from exp2, shifts and +-1 steps."""
    from .convert import term as to_term

    while True:
        t = to_term(rng.randint(0, 64))
        for _ in range(rng.randint(1, 6)):
            step = rng.randrange(5)
            if step == 0:
                t = arith.exp2(t)
            elif step == 1:
                t = arith.leftshift_by(to_term(rng.randint(0, 1 << 20)), successor(t))
            elif step == 2:
                t = successor(t)
            elif step == 3 and t[0]:
                t = predecessor(t)
            else:
                t = arith.add(t, to_term(rng.getrandbits(rng.randint(1, 40))))
        if arith._cmp(arith.tsize(t), to_term(max_tsize)) <= 0:
            return t


def conformance_sweep(
    exhaustive: int | None = None,
    *,
    seed: int | None = None,
    samples: int = 10_000,
    max_bits: int = 256,
    laws: Iterable[str] | None = None,
    ops: Mapping[str, Callable] | None = None,
    first: range | None = None,
    deadline: float | None = None,
) -> SweepReport:
    """Run the equivalence laws and collect one :class:`LawResult` per law.

    With ``exhaustive=N`` every pair in ``0..N`` x ``0..N`` is checked
    (``first`` restricts the first operand, for sharding).  Otherwise
    ``samples`` random pairs are drawn from ``seed`` with
    :func:`random_refnat`.  ``ops`` overrides individual operations, e.g. to
    confirm that a broken implementation is caught.  ``deadline`` is a
    ``time.monotonic()`` value after which the sweep stops early.
    """
    merged = default_ops()
    if ops:
        merged.update(ops)
    names = list(laws) if laws is not None else list(LAWS)
    unknown = [n for n in names if n not in LAWS]
    if unknown:
        raise KeyError(f"unknown laws: {unknown}")
    results = {n: LawResult(n) for n in names}
    binary = [(n, BINARY_LAWS[n]) for n in names if n in BINARY_LAWS]
    unary = [(n, UNARY_LAWS[n]) for n in names if n in UNARY_LAWS]
    vals = _Values()
    start = time.monotonic()
    zero = RefNat()

    if isinstance(exhaustive, bool):
        raise TypeError("exhaustive takes the upper bound of the range, not a flag")
    if exhaustive is not None:
        refs = [RefNat.from_int(k) for k in range(exhaustive + 1)]
        terms = [vals.term(r) for r in refs]
        rows = first if first is not None else range(exhaustive + 1)
        for i in rows:
            x, a = terms[i], refs[i]
            for n, law in unary:
                _check(n, law, x, a, E, zero, vals, merged, results)
            for j in range(exhaustive + 1):
                y, b = terms[j], refs[j]
                for n, law in binary:
                    _check(n, law, x, a, y, b, vals, merged, results)
            if deadline is not None and time.monotonic() > deadline:
                break
        report = SweepReport("exhaustive", None, results)
    else:
        rng = random.Random(seed)
        for _ in range(samples):
            a = random_refnat(rng, max_bits)
            b = random_refnat(rng, max_bits)
            x, y = vals.term(a), vals.term(b)
            for n, law in unary:
                _check(n, law, x, a, E, zero, vals, merged, results)
            for n, law in binary:
                _check(n, law, x, a, y, b, vals, merged, results)
            if deadline is not None and time.monotonic() > deadline:
                break
        report = SweepReport("random", seed, results)
    report.seconds = time.monotonic() - start
    return report
