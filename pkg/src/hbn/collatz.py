"""Syracuse and Collatz iteration on tree numerals.

``tl(n)`` removes every trailing doubling of ``n`` and then one ``o``
digit, i.e. ``(n / 2^v - 1) / 2`` with ``2^v`` the largest power of two
dividing ``n``.  On a term that is a constant amount of block surgery, so
the iteration runs happily on numbers far too large to write down.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterator

from .arith import _cmp, add, bitsize, double, half, tsize
from .convert import RefNat, to_reference
from .convert import term as _term
from .core import _V, E, DomainError, Term, _mk, apply_i, predecessor, successor, unapply_i, unapply_o

__all__ = [
    "tl",
    "syracuse",
    "iter_syracuse",
    "nsyr",
    "collatz_step",
    "collatz_trace",
    "TraceEntry",
    "Trace",
    "trace_to_csv",
]


def tl(n: Term) -> Term:
    k = n[0]
    if k == _V:
        return unapply_o(n)
    if not k:
        raise DomainError("tl of zero")
    # n even: n-1 is odd, its leading o-block is what n's trailing zeros
    # became; drop it and what is left is the quotient's i-form
    xs = predecessor(n)[2]
    if not xs:
        return E
    return successor(unapply_i(_mk(Term, (2, xs[0], xs[1:]))))


def syracuse(n: Term) -> Term:
    """``tl(3n + 2)``."""
    return tl(add(n, apply_i(n)))


def iter_syracuse(n: Term) -> Iterator[Term]:
    """Unbounded syracuse orbit of ``n``, ending after ``E`` if it is reached."""
    while True:
        yield n
        if not n[0]:
            return
        n = syracuse(n)


@dataclass(frozen=True)
class TraceEntry:
    step: int
    term: Term
    tsize_value: RefNat
    bitsize: Term | None = None

    @property
    def bitsize_available(self) -> bool:
        return self.bitsize is not None


class Trace(list):
    """A list of :class:`TraceEntry`; ``truncated`` is set when the step limit cut it off."""

    truncated: bool = False


def _entry(step: int, t: Term, with_bitsize: bool, cap: Term | None) -> TraceEntry:
    b = None
    if with_bitsize:
        b = bitsize(t)
        if cap is not None and _cmp(b, cap) > 0:
            b = None
    return TraceEntry(step, t, to_reference(tsize(t)), b)


def _trace(t, step_fn, stop, max_steps, with_bitsize, cap_bits) -> Trace:
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    cap = _term(cap_bits) if cap_bits is not None else None
    out = Trace()
    for step in range(max_steps):
        out.append(_entry(step, t, with_bitsize, cap))
        if stop(t):
            return out
        t = step_fn(t)
    out.truncated = True
    return out


def nsyr(n: Term, max_steps: int, *, with_bitsize: bool = False, cap_bits: int | None = None) -> Trace:
    """The syracuse orbit of ``n`` up to and including ``E``, at most ``max_steps`` entries.

    With ``with_bitsize`` each entry also carries ``bitsize(term)`` as a term,
    except where it exceeds ``cap_bits`` (when given).
    """
    return _trace(n, syracuse, lambda t: not t[0], max_steps, with_bitsize, cap_bits)


_ONE = _mk(Term, (_V, E, ()))


def collatz_step(x: Term) -> Term:
    k = x[0]
    if k == _V:
        return successor(add(x, double(x)))
    if not k:
        return E
    return half(x)


def collatz_trace(x: Term, max_steps: int, *, with_bitsize: bool = False, cap_bits: int | None = None) -> Trace:
    """Classic Collatz orbit, stopping at 1 (or at 0 for input 0)."""
    return _trace(x, collatz_step, lambda t: not t[0] or t == _ONE, max_steps, with_bitsize, cap_bits)


def trace_to_csv(trace: Trace, *, bitsize_column: bool = False) -> str:
    """``step,tsize`` rows (plus ``bitsize`` as term text if asked), LF line endings."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["step", "tsize", "bitsize"] if bitsize_column else ["step", "tsize"])
    for e in trace:
        row = [e.step, int(e.tsize_value)]
        if bitsize_column:
            row.append(str(e.bitsize) if e.bitsize is not None else "")
        w.writerow(row)
    return buf.getvalue()
