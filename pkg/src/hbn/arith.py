"""Block-at-a-time arithmetic on tree numerals.

Call graph (mutual recursion)::

    add  -> compare, sub, otimes/itimes, successor/predecessor
    sub  -> compare, add (via otimes/itimes), exp2
    compare -> bitsize -> add
    otimes/itimes -> add, predecessor

Every recursive call made through ``add``/``sub``/``compare`` is on block
counters, which are exponentially smaller than the numbers they count.  The
walk along the block sequence itself is a loop: each iteration pushes the
identity to re-apply on the way back ("post" step) and continues on the
remaining blocks, so the total block count of the operands strictly decreases.
Set ``hbn.arith.DEBUG = True`` to assert that measure on every iteration.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache, wraps

from .core import (
    _E,
    _V,
    _W,
    E,
    DomainError,
    Parity,
    Term,
    _mk,
    MEMO_SIZE,
    _ONE,
    _TWO,
    _p,
    _s,
    apply_i,
    apply_o,
    predecessor,
    successor,
    unapply_i,
    unapply_o,
)

DEBUG = False

s = successor
p = predecessor


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


_LT, _EQ, _GT = -1, 0, 1


def _blocks(t: Term) -> int:
    return 1 + len(t[2]) if t[0] else 0


def _rest(k: int, xs: tuple) -> Term:
    # the term left after removing the leading block of a k-rooted term
    if not xs:
        return E
    return _mk(Term, (3 - k, xs[0], xs[1:]))


# ---------------------------------------------------------------------------
# iterated o / i


def otimes(n: Term, t: Term) -> Term:
    """o applied ``n`` times to ``t``: value ``2^n (t+1) - 1``."""
    if not n[0]:
        return t
    k, y, ys = t
    if k == _V:
        return _mk(Term, (_V, _addc(n, y), ys))
    if k == _W:
        return _mk(Term, (_V, _p(n), (y,) + ys))
    return _mk(Term, (_V, _p(n), ()))


def itimes(n: Term, t: Term) -> Term:
    """i applied ``n`` times to ``t``: value ``2^n (t+2) - 2``."""
    if not n[0]:
        return t
    k, y, ys = t
    if k == _W:
        return _mk(Term, (_W, _addc(n, y), ys))
    if k == _V:
        return _mk(Term, (_W, _p(n), (y,) + ys))
    return _mk(Term, (_W, _p(n), ()))


def iter_apply(kind: Parity, n: Term, t: Term) -> Term:
    """Apply ``o`` (``kind`` ODD) or ``i`` (``kind`` EVEN) ``n`` times to ``t``."""
    if kind == Parity.ODD:
        return otimes(n, t)
    if kind == Parity.EVEN:
        return itimes(n, t)
    raise DomainError("iter_apply needs ODD or EVEN")


# ---------------------------------------------------------------------------
# addition identities (applied to an already computed inner sum)


def oplus(k: Term, x: Term, y: Term) -> Term:
    """o^k(x) + o^k(y) = i^k(x+y)"""
    return itimes(k, _add(x, y))


def oiplus(k: Term, x: Term, y: Term) -> Term:
    """o^k(x) + i^k(y) = i^k(x+y+1) - 1"""
    return p(itimes(k, s(_add(x, y))))


def iplus(k: Term, x: Term, y: Term) -> Term:
    """i^k(x) + i^k(y) = i^k(x+y+2) - 2"""
    return p(p(itimes(k, s(s(_add(x, y))))))


def ominus(k: Term, x: Term, y: Term) -> Term:
    """o^k(x) - o^k(y) = o^k(x-y-1) + 1, for x >= y"""
    if x == y:
        return E
    return s(otimes(k, p(_sub(x, y))))


def iminus(k: Term, x: Term, y: Term) -> Term:
    """i^k(x) - i^k(y) = o^k(x-y-1) + 1, for x >= y"""
    if x == y:
        return E
    return s(otimes(k, p(_sub(x, y))))


def oiminus(k: Term, x: Term, y: Term) -> Term:
    """o^k(x) - i^k(y) = o^k(x-y-2) + 2, for x > y"""
    if x == s(y):
        return _ONE
    if x == s(s(y)):
        return s(exp2(k))
    return s(s(otimes(k, p(p(_sub(x, y))))))


def iominus(k: Term, x: Term, y: Term) -> Term:
    """i^k(x) - o^k(y) = o^k(x-y), for x >= y"""
    return otimes(k, _sub(x, y))


# post-step codes used by the loops in _add and _sub
_OPLUS, _OIPLUS, _IPLUS = 0, 1, 2
_OMINUS, _OIMINUS, _IOMINUS = 3, 4, 5


def _peel(kx, a, xs, ky, b, ys):
    """Strip a common block length from two leading blocks.

    Returns ``(k, x', y')`` where ``k`` is the shared block length.  The
    longer operand keeps its surplus ``d`` as a shortened leading block:
    re-applying ``d`` digits to the rest just sets the counter to ``d-1``
    and keeps the tail as it is.
    """
    c = _cmpc(a, b)
    if c == _EQ:
        return _s(a), _rest(kx, xs), _rest(ky, ys)
    if c == _GT:
        return _s(b), _mk(Term, (kx, _p(_subc(a, b)), xs)), _rest(ky, ys)
    return _s(a), _rest(kx, xs), _mk(Term, (ky, _p(_subc(b, a)), ys))


def _add(x: Term, y: Term) -> Term:
    posts = []
    while True:
        kx, a, xs = x
        if not kx:
            r = y
            break
        ky, b, ys = y
        if not ky:
            r = x
            break
        if DEBUG:
            before = _blocks(x) + _blocks(y)
        k, x, y = _peel(kx, a, xs, ky, b, ys)
        if DEBUG:
            assert _blocks(x) + _blocks(y) < before, "add: block measure did not decrease"
        if kx == ky:
            posts.append((_OPLUS if kx == _V else _IPLUS, k))
        else:
            posts.append((_OIPLUS, k))
    while posts:
        op, k = posts.pop()
        if op == _OPLUS:
            r = itimes(k, r)
        elif op == _OIPLUS:
            r = p(itimes(k, s(r)))
        else:
            r = p(p(itimes(k, s(s(r)))))
    return r


def _sub(x: Term, y: Term) -> Term:
    # assumes value(x) >= value(y)
    posts = []
    while True:
        ky, b, ys = y
        if not ky:
            r = x
            break
        kx, a, xs = x
        if not kx:
            raise DomainError("negative result")
        if DEBUG:
            before = _blocks(x) + _blocks(y)
        k, x, y = _peel(kx, a, xs, ky, b, ys)
        if DEBUG:
            assert _blocks(x) + _blocks(y) < before, "sub: block measure did not decrease"
        if kx == ky:
            # ominus and iminus share both the special case and the identity
            if x == y:
                r = E
                break
            posts.append((_OMINUS, k))
        elif kx == _V:
            if x == s(y):
                r = _ONE
                break
            if x == s(s(y)):
                r = s(exp2(k))
                break
            posts.append((_OIMINUS, k))
        else:
            posts.append((_IOMINUS, k))
    while posts:
        op, k = posts.pop()
        if op == _OMINUS:
            r = s(otimes(k, p(r)))
        elif op == _OIMINUS:
            r = s(s(otimes(k, p(p(r)))))
        else:
            r = otimes(k, r)
    return r


def add(x: Term, y: Term) -> Term:
    return _add(x, y)


def sub(x: Term, y: Term) -> Term:
    """``x - y``; raises :class:`DomainError` when ``y > x``."""
    if _cmp(x, y) == _LT:
        raise DomainError("negative result")
    return _sub(x, y)


# ---------------------------------------------------------------------------
# order


def _bitsize(t: Term) -> Term:
    k, x, xs = t
    if not k:
        return E
    acc = x
    for y in reversed(xs):
        acc = _s(_addc(y, acc))
    return _s(acc)


def _reversed_dual(t: Term) -> Term:
    k, x, xs = t
    if not k:
        return t
    blocks = (x,) + xs
    blocks = blocks[::-1]
    # odd block count: the top block has the same digit as the bottom one
    if len(blocks) % 2:
        tag = k
    else:
        tag = 3 - k
    return _mk(Term, (tag, blocks[0], blocks[1:]))


def _comp_big_first(x: Term, y: Term) -> int:
    while True:
        kx, a, xs = x
        ky, b, ys = y
        if not kx and not ky:
            return _EQ
        if kx != ky:
            # equal bitsizes: the number whose top digit is i is larger
            return _LT if kx == _V else _GT
        c = _cmpc(a, b)
        if c != _EQ:
            # a longer top o-block means the first i comes later
            return -c if kx == _V else c
        x = _rest(kx, xs)
        y = _rest(ky, ys)


def _cmp(x: Term, y: Term) -> int:
    while True:
        if x == y:
            return _EQ
        if not x[0]:
            return _LT
        if not y[0]:
            return _GT
        bx = _bitsize(x)
        by = _bitsize(y)
        if bx == by:
            return _comp_big_first(_reversed_dual(x), _reversed_dual(y))
        x, y = bx, by


# counter-sized entry points (see hbn.core.MEMO_SIZE)
_addc = lru_cache(maxsize=MEMO_SIZE)(_add)
_subc = lru_cache(maxsize=MEMO_SIZE)(_sub)
_cmpc = lru_cache(maxsize=MEMO_SIZE)(_cmp)


_SMALL = 8


def _addm(x: Term, y: Term) -> Term:
    if len(x[2]) < _SMALL and len(y[2]) < _SMALL:
        return _addc(x, y)
    return _add(x, y)


def _subm(x: Term, y: Term) -> Term:
    if len(x[2]) < _SMALL and len(y[2]) < _SMALL:
        return _subc(x, y)
    return _sub(x, y)


def _cmpm(x: Term, y: Term) -> int:
    if len(x[2]) < _SMALL and len(y[2]) < _SMALL:
        return _cmpc(x, y)
    return _cmp(x, y)


def compare(x: Term, y: Term) -> Ordering:
    return Ordering(_cmp(x, y))


def min_max_absdif(x: Term, y: Term) -> tuple[Term, Term, Term]:
    """Return ``(min, max, |x - y|)``."""
    if _cmp(x, y) == _LT:
        return x, y, _sub(y, x)
    return y, x, _sub(x, y)


def min2(x: Term, y: Term) -> Term:
    return x if _cmp(x, y) == _LT else y


def max2(x: Term, y: Term) -> Term:
    return y if _cmp(x, y) == _LT else x


def absdif(x: Term, y: Term) -> Term:
    return _sub(y, x) if _cmp(x, y) == _LT else _sub(x, y)


# ---------------------------------------------------------------------------
# cheap operations


def double(t: Term) -> Term:
    k, x, xs = t
    if not k:
        return E
    # s'(o(t))
    if k == _V:
        return p(_mk(Term, (_V, s(x), xs)))
    return p(_mk(Term, (_V, E, (x,) + xs)))


def half(t: Term) -> Term:
    if t[0] == _V:
        raise DomainError("half of an odd number")
    return unapply_o(s(t))


def exp2(t: Term) -> Term:
    if not t[0]:
        return _ONE
    return s(_mk(Term, (_V, p(t), ())))


def bitsize(t: Term) -> Term:
    """Number of bijective base-2 digits of ``t``."""
    return _bitsize(t)


def ilog2(t: Term) -> Term:
    """``floor(log2(t))`` for ``t >= 1``."""
    if not t[0]:
        raise DomainError("ilog2 of zero")
    return _bitsize(p(t))


def tsize(t: Term) -> Term:
    """Node count of ``t`` excluding the root (structural complexity)."""
    k, x, xs = t
    if not k:
        return E
    acc = E
    for y in reversed(xs):
        acc = _s(_addc(tsize(y), acc))
    return _s(_addc(tsize(x), acc))


# ---------------------------------------------------------------------------
# shifts


def leftshift_by(n: Term, k: Term) -> Term:
    """``k * 2^n``"""
    if not k[0]:
        return E
    return s(otimes(n, p(k)))


@dataclass(frozen=True)
class ShiftView:
    """Outermost block of a nonzero term viewed as ``payload * 2^block_len``.

    For an odd term ``t + 1 == payload * 2^block_len``; for an even one
    ``t + 2 == payload * 2^block_len``.
    """

    block_kind: Parity
    block_len: Term
    payload: Term

    def rebuild(self) -> Term:
        if self.block_kind == Parity.ODD:
            return otimes(self.block_len, p(self.payload))
        return itimes(self.block_len, p(p(self.payload)))


def _to_shift(t: Term):
    k, a, xs = t
    if not k:
        raise DomainError("E has no leading block")
    m = s(a)
    b = _rest(k, xs)
    if k == _V:
        return _V, m, s(b)
    return _W, m, s(s(b))


def to_shift_view(t: Term) -> ShiftView:
    kind, m, payload = _to_shift(t)
    return ShiftView(Parity(kind), m, payload)


def rightshift_by(m: Term, k: Term) -> Term:
    """``floor(k / 2^m)``

    With bijective digits ``d_j`` in {1, 2}, the low ``m`` digits sum to
    ``2^m - 1`` exactly when they are all ``o``, and to at most
    ``2^(m+1) - 2`` otherwise.  So the quotient is the number left after
    dropping those digits, plus one unless every dropped digit was ``o``;
    and it is zero when ``k`` has fewer than ``m`` digits.  Digits are
    dropped a whole block at a time.
    """
    if not m[0]:
        return k
    saw_i = False
    while True:
        kind, a, xs = k
        if not kind:
            return E
        saw_i = saw_i or kind == _W
        c = _cmpc(m, s(a))
        if c == _LT:
            # keep the top part of the leading block
            h = _mk(Term, (kind, _subc(a, m), xs))
            break
        h = _rest(kind, xs)
        if c == _EQ:
            break
        m = _subc(m, s(a))
        k = h
    return s(h) if saw_i else h


# ---------------------------------------------------------------------------
# multiplication, squaring, power


def mul(x: Term, y: Term) -> Term:
    """Product, one block of each operand per step.

    With ``x = o^n(a)`` or ``i^n(a)`` and ``y = o^m(b)`` or ``i^m(b)``::

        o^n(a) o^m(b) = o^(n+m)(ab + a + b)       - x  - y
        o^n(a) i^m(b) = o^(n+m)(ab + 2a + b + 1)  - 2x - y  - 1
        i^n(a) i^m(b) = i^(n+m)(ab + 2a + 2b + 2) - 2x - 2y - 2

    so the only recursive product is ``ab``.  Reducing an even operand
    through its predecessor instead would peel a single digit off an
    i-block per step, which is linear in the block length.
    """
    frames = []
    while True:
        kx = x[0]
        ky = y[0]
        if not kx or not ky:
            r = E
            break
        if kx == _W and ky == _V:
            x, y = y, x
            kx, ky = _V, _W
        frames.append((kx + ky, x, y, _rest(kx, x[2]), _rest(ky, y[2])))
        x, y = frames[-1][3], frames[-1][4]
    while frames:
        code, fx, fy, a, b = frames.pop()
        blocks = _addc(_s(fx[1]), _s(fy[1]))
        if code == 2:  # odd, odd
            r = _subm(_subm(otimes(blocks, _addm(r, _addm(a, b))), fx), fy)
        elif code == 3:  # odd, even
            t = _addm(_addm(r, double(a)), s(b))
            r = _subm(otimes(blocks, t), s(_addm(double(fx), fy)))
        else:  # even, even
            t = _addm(r, double(s(_addm(a, b))))
            r = _subm(itimes(blocks, t), double(s(_addm(fx, fy))))
    return r


def square(x: Term) -> Term:
    """``x * x`` with one recursive square per block::

        (o^n(a))^2 = o^(2n)(a^2 + 2a)     - 2x
        (i^n(a))^2 = i^(2n)(a^2 + 4a + 2) - 4x - 2
    """
    frames = []
    while True:
        k = x[0]
        if not k:
            r = E
            break
        frames.append((k, x, _rest(k, x[2])))
        x = frames[-1][2]
    while frames:
        k, fx, a = frames.pop()
        twice = apply_i(fx[1])  # 2 * block length
        if k == _V:
            r = _subm(otimes(twice, _addm(r, double(a))), double(fx))
        else:
            r = _subm(itimes(twice, _addm(r, double(apply_o(a)))), double(apply_o(fx)))
    return r


def power(x: Term, y: Term) -> Term:
    """``x ** y`` by repeated squaring (``power(E, E)`` is one)."""
    if x == _TWO:
        return exp2(y)
    if x == _ONE or (not x[0] and y[0]):
        return x
    factors = []
    while y[0]:
        if y[0] == _V:
            factors.append(x)
            x = square(x)
            y = unapply_o(y)
        else:
            x = square(x)
            factors.append(x)
            y = unapply_i(y)
    r = _ONE
    while factors:
        r = mul(factors.pop(), r)
    return r


# ---------------------------------------------------------------------------
# iteration helpers and extreme cases


def iterated(f, k: Term, x: Term) -> Term:
    """Apply ``f`` to ``x`` ``k`` times."""
    while k[0]:
        x = f(x)
        k = p(k)
    return x


def best_case(k: Term) -> Term:
    """Predecessor of a tower of ``k`` exponents of 2."""
    return p(iterated(exp2, k, E))


def _io(t: Term) -> Term:
    return apply_i(apply_o(t))


def worse_case(k: Term) -> Term:
    """Alternating o/i digits: value ``4 (4^k - 1) / 3``."""
    return iterated(_io, k, E)


# ---------------------------------------------------------------------------
# division and square root


def div_and_rem(x: Term, y: Term) -> tuple[Term, Term]:
    if not y[0]:
        raise DomainError("division by zero")
    q = E
    ly = _bitsize(p(y))
    while _cmp(x, y) != _LT:
        # largest shift with y * 2^shift <= x: the ilog2 difference or one less
        shift = _sub(_bitsize(p(x)), ly)
        z = leftshift_by(shift, y)
        if _cmp(z, x) == _GT:
            shift = p(shift)
            z = leftshift_by(shift, y)
        x = _sub(x, z)
        q = _add(exp2(shift), q)
    return q, x


def divide(x: Term, y: Term) -> Term:
    return div_and_rem(x, y)[0]


def remainder(x: Term, y: Term) -> Term:
    return div_and_rem(x, y)[1]


def isqrt(n: Term) -> Term:
    """``floor(sqrt(n))`` by Newton iteration.

    The start ``2^(floor(ilog2(n)/2) + 1)`` already exceeds the root, which
    saves the iterations a start at ``n`` spends halving.
    """
    if not n[0]:
        return E
    x = exp2(s(rightshift_by(_ONE, ilog2(n))))
    while True:
        # halving is a one-digit right shift, no need for a general division
        r = rightshift_by(_ONE, _add(x, divide(n, x)))
        if _cmp(absdif(r, x), _TWO) == _LT:
            break
        x = r
    if _cmp(square(r), n) == _GT:
        return p(r)
    return r


# ---------------------------------------------------------------------------
# debug hook: with DEBUG set, every result of the public operations is checked
# against tsize <= bitsize


def _check_sizes(r) -> None:
    for t in r if type(r) is tuple else (r,):
        if _cmp(tsize(t), _bitsize(t)) == _GT:
            raise AssertionError(f"tsize exceeds bitsize for {t}")


def _hooked(fn):
    @wraps(fn)
    def checked(*args):
        r = fn(*args)
        if DEBUG:
            _check_sizes(r)
        return r

    return checked


for _name in (
    "add", "sub", "min_max_absdif", "min2", "max2", "absdif", "double", "half",
    "exp2", "leftshift_by", "rightshift_by", "mul", "square", "power",
    "best_case", "worse_case", "div_and_rem", "divide", "remainder", "isqrt",
):
    globals()[_name] = _hooked(globals()[_name])
del _name
