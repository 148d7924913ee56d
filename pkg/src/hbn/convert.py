"""Reference naturals and conversion between them and tree numerals.

:class:`RefNat` is a deliberately plain little-endian binary digit string with
schoolbook arithmetic.  It does not touch :mod:`hbn.arith`, so together with
:func:`from_reference` / :func:`to_reference` it forms an independent oracle
for the tree algorithms.
"""

from __future__ import annotations

import os

from .core import _V, _W, E, DomainError, HbnError, Term, _mk, successor

__all__ = [
    "RefNat",
    "ExpansionTooLarge",
    "DEFAULT_CAP_BITS",
    "from_reference",
    "to_reference",
    "parse_decimal",
    "print_decimal",
    "ref_add",
    "ref_sub",
    "ref_mul",
    "ref_divrem",
    "ref_cmp",
    "term",
    "value",
]

DEFAULT_CAP_BITS = 1 << 24


class ExpansionTooLarge(HbnError):
    """Raised instead of expanding a term beyond the configured bit cap."""


def _default_cap() -> int:
    env = os.environ.get("HBN_CAP_BITS")
    return int(env) if env else DEFAULT_CAP_BITS


class RefNat:
    """An arbitrary-length natural stored as little-endian bits (``bytes`` of 0/1)."""

    __slots__ = ("digits",)

    def __init__(self, digits=b""):
        d = bytes(digits)
        end = len(d)
        while end and not d[end - 1]:
            end -= 1
        if end != len(d):
            d = d[:end]
        if d.strip(b"\x00\x01"):
            raise ValueError("binary digits must be 0 or 1")
        self.digits = d

    @classmethod
    def from_int(cls, n: int) -> RefNat:
        if n < 0:
            raise ValueError("negative")
        return cls(bytes(int(c) for c in reversed(bin(n)[2:])) if n else b"")

    def __int__(self) -> int:
        return int("".join("01"[b] for b in reversed(self.digits)) or "0", 2)

    def __eq__(self, other):
        if isinstance(other, RefNat):
            return self.digits == other.digits
        return NotImplemented

    def __hash__(self):
        return hash(self.digits)

    def __len__(self):
        return len(self.digits)

    def __bool__(self):
        return bool(self.digits)

    def __repr__(self):
        return f"RefNat({print_decimal(self)})"

    @property
    def is_odd(self) -> bool:
        return bool(self.digits) and self.digits[0] == 1

    def shl(self, n: int) -> RefNat:
        if not self.digits:
            return self
        return RefNat(bytes(n) + self.digits)

    def shr(self, n: int) -> RefNat:
        return RefNat(self.digits[n:])

    def halve(self) -> RefNat:
        return self.shr(1)

    def double(self) -> RefNat:
        return self.shl(1)


ZERO = RefNat()
ONE = RefNat(b"\x01")
TWO = RefNat(b"\x00\x01")


def ref_cmp(a: RefNat, b: RefNat) -> int:
    x, y = a.digits, b.digits
    if len(x) != len(y):
        return -1 if len(x) < len(y) else 1
    for j in range(len(x) - 1, -1, -1):
        if x[j] != y[j]:
            return -1 if x[j] < y[j] else 1
    return 0


def ref_add(a: RefNat, b: RefNat) -> RefNat:
    x, y = a.digits, b.digits
    if len(x) < len(y):
        x, y = y, x
    out = bytearray(len(x) + 1)
    carry = 0
    for j in range(len(y)):
        t = x[j] + y[j] + carry
        out[j] = t & 1
        carry = t >> 1
    j = len(y)
    while carry and j < len(x):
        t = x[j] + 1
        out[j] = t & 1
        carry = t >> 1
        j += 1
    if carry:
        out[j] = 1
        return RefNat(out[: j + 1])
    out[j : len(x)] = x[j:]
    return RefNat(out[: len(x)])


def ref_sub(a: RefNat, b: RefNat) -> RefNat:
    if ref_cmp(a, b) < 0:
        raise DomainError("negative result")
    x, y = a.digits, b.digits
    out = bytearray(x)
    borrow = 0
    for j in range(len(y)):
        t = x[j] - y[j] - borrow
        out[j] = t & 1
        borrow = 1 if t < 0 else 0
    j = len(y)
    while borrow:
        t = x[j] - 1
        out[j] = t & 1
        borrow = 1 if t < 0 else 0
        j += 1
    return RefNat(out)


def ref_mul(a: RefNat, b: RefNat) -> RefNat:
    x, y = a.digits, b.digits
    if not x or not y:
        return ZERO
    # column sums of the partial products, then one carry pass
    cols = [0] * (len(x) + len(y))
    ones = [j for j, d in enumerate(y) if d]
    for i, d in enumerate(x):
        if d:
            for j in ones:
                cols[i + j] += 1
    out = bytearray(len(cols) + 1)
    carry = 0
    for j, c in enumerate(cols):
        t = c + carry
        out[j] = t & 1
        carry = t >> 1
    j = len(cols)
    while carry:
        out.append(0)
        out[j] = carry & 1
        carry >>= 1
        j += 1
    return RefNat(out)


def ref_divrem(a: RefNat, b: RefNat) -> tuple[RefNat, RefNat]:
    """Binary long division: one shift-compare-subtract per quotient digit."""
    if not b.digits:
        raise DomainError("division by zero")
    x = a.digits
    q = bytearray(len(x))
    r = ZERO
    for j in range(len(x) - 1, -1, -1):
        r = RefNat(bytes((x[j],)) + r.digits) if r.digits else RefNat(bytes((x[j],)))
        if ref_cmp(r, b) >= 0:
            r = ref_sub(r, b)
            q[j] = 1
    return RefNat(q), r


def parse_decimal(text: str) -> RefNat:
    if not text or not text.isascii() or not text.isdigit():
        raise ValueError(f"not a decimal natural: {text!r}")
    if len(text) > 1 and text[0] == "0":
        raise ValueError(f"leading zero in {text!r}")
    ten = RefNat(b"\x00\x01\x00\x01")
    acc = ZERO
    digits = [RefNat.from_int(d) for d in range(10)]
    for ch in text:
        acc = ref_add(ref_mul(acc, ten), digits[ord(ch) - 48])
    return acc


def print_decimal(r: RefNat) -> str:
    if not r.digits:
        return "0"
    # peel 9 decimal digits at a time by long division
    chunk = RefNat.from_int(10**9)
    parts = []
    while r.digits:
        r, d = ref_divrem(r, chunk)
        parts.append(int(d))
    head = str(parts[-1])
    return head + "".join(f"{v:09d}" for v in reversed(parts[:-1]))


# ---------------------------------------------------------------------------
# term <-> RefNat


def from_reference(r: RefNat) -> Term:
    """The unique term denoting ``r``.

    The binary form of ``r + 1`` is a leading 1 followed by the bijective
    base-2 digits of ``r``: a 0 bit is an ``o`` digit, a 1 bit an ``i``
    digit, least significant first.  Blocks are therefore the runs of equal
    bits below the top bit, found with ``bytes.find``.
    """
    bits = ref_add(r, ONE).digits[:-1]
    n = len(bits)
    if not n:
        return E
    tag = _W if bits[0] else _V
    runs = []
    start = 0
    cur = bits[0]
    while start < n:
        end = bits.find(b"\x00" if cur else b"\x01", start)
        if end < 0:
            end = n
        runs.append(end - start - 1)
        start = end
        cur ^= 1
    counts = tuple(_counter(k) for k in runs)
    return _mk(Term, (tag, counts[0], counts[1:]))


# counters 0, 1, 2, ... built by successor from E, extended on demand
_COUNTERS = [E]
_TABLE_LIMIT = 1 << 16


def _counter(n: int) -> Term:
    if n >= _TABLE_LIMIT:
        return from_reference(RefNat.from_int(n))
    table = _COUNTERS
    while len(table) <= n:
        table.append(successor(table[-1]))
    return table[n]


def to_reference(t: Term, cap_bits: int | None = None) -> RefNat:
    """Expand ``t`` following the defining equation of the tree value.

    ``V x []`` is ``2^(x+1) - 1``, ``W x []`` is ``2^(x+2) - 2``, and a block
    in front of a rest ``u`` gives ``(u+1) 2^(x+1) - 1`` (o-block) or
    ``(u+2) 2^(x+1) - 2`` (i-block).

    Raises :class:`ExpansionTooLarge` when the value needs more than
    ``cap_bits`` binary digits (default ``2**24``, or ``$HBN_CAP_BITS``).
    """
    if cap_bits is None:
        cap_bits = _default_cap()
    k, x, xs = t
    if not k:
        return ZERO
    blocks = (x,) + xs
    counter_cap = cap_bits.bit_length()
    exps = []
    bits = 0
    for b in blocks:
        e = int(to_reference(b, counter_cap)) + 1 if b[0] else 1
        bits += e
        if bits > cap_bits:
            raise ExpansionTooLarge(f"expansion too large: more than {cap_bits} bits")
        exps.append(e)
    # innermost block first; tags alternate starting from the root tag
    acc = None
    for j in range(len(blocks) - 1, -1, -1):
        e = exps[j]
        odd_block = (k == _V) == (j % 2 == 0)
        if acc is None:
            acc = ref_sub(ONE.shl(e), ONE) if odd_block else ref_sub(ONE.shl(e + 1), TWO)
        elif odd_block:
            acc = ref_sub(ref_add(acc, ONE).shl(e), ONE)
        else:
            acc = ref_sub(ref_add(acc, TWO).shl(e), TWO)
    return acc


def term(n: int | str | RefNat) -> Term:
    """Convenience: the term for a Python int, decimal string or RefNat."""
    if isinstance(n, RefNat):
        return from_reference(n)
    if isinstance(n, str):
        return from_reference(parse_decimal(n))
    return from_reference(RefNat.from_int(n))


def value(t: Term, cap_bits: int | None = None) -> int:
    """Convenience: the Python int denoted by ``t``."""
    return int(to_reference(t, cap_bits))
