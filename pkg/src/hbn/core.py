"""Tree numerals: the term type and its constant-time primitives.

A term is one of

* ``E`` -- zero,
* ``V x xs`` -- ``x+1`` applications of ``o(n) = 2n+1`` followed by the
  alternating blocks counted in ``xs``,
* ``W x xs`` -- the same with ``i(n) = 2n+2`` as the outermost block.

Every counter is itself a term, so run lengths are stored in the same
compressed notation recursively.  Values are immutable; structural equality
is numeric equality.

The tail ``xs`` is stored as a flat tuple, so recursion only ever happens on
counters (whose nesting depth grows like an iterated logarithm), never along
the tail.
"""

from __future__ import annotations

import enum
from functools import lru_cache

__all__ = [
    "E",
    "V",
    "W",
    "Term",
    "Parity",
    "HbnError",
    "DomainError",
    "TermSyntaxError",
    "apply_o",
    "apply_i",
    "unapply_o",
    "unapply_i",
    "parity",
    "successor",
    "predecessor",
    "dual",
    "split_leading_block",
    "parse_term",
    "format_term",
    "depth",
]

# constructor tags, stored as the first tuple slot
_E, _V, _W = 0, 1, 2


class HbnError(Exception):
    """Base class for errors raised by this package."""


class DomainError(HbnError, ValueError):
    """An operation was applied outside its domain (e.g. predecessor of zero)."""


class TermSyntaxError(HbnError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class Parity(enum.IntEnum):
    """Three-way classification of a term: zero, odd (``V``) or even (``W``)."""

    ZERO = _E
    ODD = _V
    EVEN = _W


class Term(tuple):
    """A hereditarily binary numeral ``(tag, head, tail)``.

    Build terms with :data:`E`, :func:`V` and :func:`W` (or the arithmetic
    functions); never mutate one.  Ordering operators are deliberately
    disabled, use :func:`hbn.compare` for the numeric order.
    """

    __slots__ = ()

    @property
    def kind(self) -> Parity:
        return Parity(self[0])

    @property
    def head(self) -> Term:
        if not self[0]:
            raise DomainError("E has no head")
        return self[1]

    @property
    def tail(self) -> tuple[Term, ...]:
        return self[2]

    def __repr__(self) -> str:
        return format_term(self)

    __str__ = __repr__

    def __lt__(self, other):
        return NotImplemented

    __le__ = __gt__ = __ge__ = __lt__

    def __add__(self, other):
        return NotImplemented

    __mul__ = __rmul__ = __radd__ = __add__

    def __reduce__(self):
        return (_rebuild, (tuple(self),))


_mk = tuple.__new__


def _rebuild(items):
    return _mk(Term, items)


E: Term = _mk(Term, (_E, None, ()))


def V(head: Term, tail=()) -> Term:
    """The odd term counting ``value(head)+1`` leading ``o`` applications."""
    return _mk(Term, (_V, head, tuple(tail)))


def W(head: Term, tail=()) -> Term:
    """The even term counting ``value(head)+1`` leading ``i`` applications."""
    return _mk(Term, (_W, head, tuple(tail)))


_ONE = _mk(Term, (_V, E, ()))
_TWO = _mk(Term, (_W, E, ()))


def successor(t: Term) -> Term:
    k, z, xs = t
    if k == _V:
        if not z[0]:
            if not xs:
                return _TWO
            return _mk(Term, (_W, _s(xs[0]), xs[1:]))
        return _mk(Term, (_W, E, (_p(z),) + xs))
    if k == _W:
        if not xs:
            return _mk(Term, (_V, _s(z), ()))
        x = xs[0]
        if not x[0]:
            if len(xs) == 1:
                return _mk(Term, (_V, z, xs))
            return _mk(Term, (_V, z, (_s(xs[1]),) + xs[2:]))
        return _mk(Term, (_V, z, (E, _p(x)) + xs[1:]))
    return _ONE


def predecessor(t: Term) -> Term:
    k, z, xs = t
    if k == _V:
        if not xs:
            if not z[0]:
                return E
            return _mk(Term, (_W, _p(z), ()))
        x = xs[0]
        if not x[0]:
            if len(xs) == 1:
                return _mk(Term, (_W, z, xs))
            return _mk(Term, (_W, z, (_s(xs[1]),) + xs[2:]))
        return _mk(Term, (_W, z, (E, _p(x)) + xs[1:]))
    if k == _W:
        if not z[0]:
            if not xs:
                return _ONE
            return _mk(Term, (_V, _s(xs[0]), xs[1:]))
        return _mk(Term, (_V, E, (_p(z),) + xs))
    raise DomainError("predecessor of zero")


# Memoized entry points for block counters.  Counters are exponentially
# smaller than the numbers they count, so caching them is cheap and bounded;
# calls on whole operands stay uncached.
MEMO_SIZE = 1 << 16
_s = lru_cache(maxsize=MEMO_SIZE)(successor)
_p = lru_cache(maxsize=MEMO_SIZE)(predecessor)


def apply_o(t: Term) -> Term:
    """``n -> 2n+1``: grow the leading o-block or open a new one."""
    k, x, xs = t
    if k == _V:
        return _mk(Term, (_V, _s(x), xs))
    if k == _W:
        return _mk(Term, (_V, E, (x,) + xs))
    return _ONE


def apply_i(t: Term) -> Term:
    """``n -> 2n+2``."""
    k, x, xs = t
    if k == _W:
        return _mk(Term, (_W, _s(x), xs))
    if k == _V:
        return _mk(Term, (_W, E, (x,) + xs))
    return _TWO


def unapply_o(t: Term) -> Term:
    k, x, xs = t
    if k != _V:
        raise DomainError("not odd")
    if not x[0]:
        if not xs:
            return E
        return _mk(Term, (_W, xs[0], xs[1:]))
    return _mk(Term, (_V, _p(x), xs))


def unapply_i(t: Term) -> Term:
    k, x, xs = t
    if k != _W:
        raise DomainError("not even")
    if not x[0]:
        if not xs:
            return E
        return _mk(Term, (_V, xs[0], xs[1:]))
    return _mk(Term, (_W, _p(x), xs))


def parity(t: Term) -> Parity:
    return Parity(t[0])


def dual(t: Term) -> Term:
    """Swap every o digit with an i digit; only the root tag changes."""
    k, x, xs = t
    if k == _V:
        return _mk(Term, (_W, x, xs))
    if k == _W:
        return _mk(Term, (_V, x, xs))
    return t


def split_leading_block(t: Term) -> tuple[Term, Term]:
    """Return ``(count, rest)`` with ``t`` = digit^(count+1) applied to ``rest``.

    ``rest`` is ``E`` or has the opposite root tag to ``t``.
    """
    k, x, xs = t
    if not k:
        raise DomainError("cannot split the leading block of E")
    if not xs:
        return x, E
    return x, _mk(Term, (3 - k, xs[0], xs[1:]))


def depth(t: Term) -> int:
    """Nesting depth of counter heads (0 for E)."""
    best = 0
    stack = [(t, 0)]
    while stack:
        u, d = stack.pop()
        if not u[0]:
            best = max(best, d)
            continue
        stack.append((u[1], d + 1))
        stack.extend((y, d + 1) for y in u[2])
    return best


# ---------------------------------------------------------------------------
# text form:  term := "E" | ctor head "[" [term ("," term)*] "]"
#             head := "E" | "(" term ")"


def format_term(t: Term) -> str:
    parts: list[str] = []
    _format_into(t, parts)
    return "".join(parts)


def _format_into(t: Term, out: list[str]) -> None:
    k, x, xs = t
    if not k:
        out.append("E")
        return
    out.append("V " if k == _V else "W ")
    if x[0]:
        out.append("(")
        _format_into(x, out)
        out.append(")")
    else:
        out.append("E")
    out.append(" [")
    for j, y in enumerate(xs):
        if j:
            out.append(",")
        _format_into(y, out)
    out.append("]")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        text, n = self.text, len(self.text)
        while self.pos < n and text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise TermSyntaxError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def term(self) -> Term:
        ch = self.peek()
        if ch == "E":
            self.pos += 1
            return E
        if ch == "(":
            self.pos += 1
            t = self.term()
            self.expect(")")
            return t
        if ch in ("V", "W"):
            self.pos += 1
            tag = _V if ch == "V" else _W
            head = self.head()
            self.expect("[")
            items = []
            if self.peek() != "]":
                items.append(self.term())
                while self.peek() == ",":
                    self.pos += 1
                    items.append(self.term())
            self.expect("]")
            return _mk(Term, (tag, head, tuple(items)))
        raise TermSyntaxError(f"unexpected {ch or 'end of input'!r}", self.pos)

    def head(self) -> Term:
        ch = self.peek()
        if ch == "E":
            self.pos += 1
            return E
        if ch == "(":
            self.pos += 1
            t = self.term()
            self.expect(")")
            return t
        raise TermSyntaxError("composite head must be parenthesized", self.pos)


def parse_term(text: str) -> Term:
    """Parse the constructor notation produced by :func:`format_term`."""
    p = _Parser(text)
    t = p.term()
    p.skip()
    if p.pos != len(text):
        raise TermSyntaxError(f"trailing input {text[p.pos]!r}", p.pos)
    return t
