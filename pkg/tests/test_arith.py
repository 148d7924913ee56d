import math
import random
import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hbn import (
    E,
    V,
    W,
    DomainError,
    Ordering,
    Parity,
    absdif,
    add,
    best_case,
    bitsize,
    catalog_constants,
    compare,
    div_and_rem,
    double,
    exp2,
    half,
    ilog2,
    isqrt,
    iterated,
    leftshift_by,
    mersenne,
    min_max_absdif,
    mul,
    parse_term,
    power,
    predecessor,
    rightshift_by,
    square,
    sub,
    successor,
    term,
    to_shift_view,
    tsize,
    value,
    worse_case,
)
from hbn import arith
from hbn.arith import (
    iminus,
    iominus,
    iplus,
    iter_apply,
    itimes,
    ominus,
    oiminus,
    oiplus,
    oplus,
    otimes,
)
from hbn.oracle import structured_term

T = [term(k) for k in range(4200)]
nat = st.integers(min_value=0, max_value=1 << 300)
small = st.integers(min_value=0, max_value=300)


def v(t):
    return value(t)


# -- iterated o / i ---------------------------------------------------------


def test_iter_apply():
    for n in range(1, 65):
        assert v(iter_apply(Parity.ODD, T[n], E)) == 2**n - 1
    assert iter_apply(Parity.EVEN, E, T[77]) == T[77]
    assert v(iter_apply(Parity.ODD, T[3], T[5])) == 47
    with pytest.raises(DomainError):
        iter_apply(Parity.ZERO, T[1], T[1])


@given(small, nat)
def test_otimes_itimes_closed_forms(n, k):
    assert v(otimes(term(n), term(k))) == 2**n * (k + 1) - 1
    assert v(itimes(term(n), term(k))) == 2**n * (k + 2) - 2


@given(st.integers(1, 200), nat)
def test_conjugacy(n, k):
    # s(o^n(k)) = i(o^(n-1)(k)) and s(i^n(k)) = o(s(i^(n-1)(k)))... checked on values
    tn, tk = term(n), term(k)
    assert v(successor(otimes(tn, tk))) == 2 * (2 ** (n - 1) * (k + 1) - 1) + 2
    assert v(successor(itimes(tn, tk))) == 2 ** n * (k + 2) - 1


# -- helper identities, one per equation ------------------------------------

pairs = st.tuples(st.integers(1, 40), st.integers(0, 10**6), st.integers(0, 10**6))


def o_k(k, x):
    return 2**k * (x + 1) - 1


def i_k(k, x):
    return 2**k * (x + 2) - 2


@given(pairs)
def test_oplus(kxy):
    k, x, y = kxy
    assert v(oplus(term(k), term(x), term(y))) == o_k(k, x) + o_k(k, y)


@given(pairs)
def test_oiplus(kxy):
    k, x, y = kxy
    assert v(oiplus(term(k), term(x), term(y))) == o_k(k, x) + i_k(k, y)


@given(pairs)
def test_iplus(kxy):
    k, x, y = kxy
    assert v(iplus(term(k), term(x), term(y))) == i_k(k, x) + i_k(k, y)


@given(pairs)
def test_ominus(kxy):
    k, x, y = kxy
    x, y = max(x, y), min(x, y)
    assert v(ominus(term(k), term(x), term(y))) == o_k(k, x) - o_k(k, y)


@given(pairs)
def test_iminus(kxy):
    k, x, y = kxy
    x, y = max(x, y), min(x, y)
    assert v(iminus(term(k), term(x), term(y))) == i_k(k, x) - i_k(k, y)


@given(pairs)
def test_oiminus(kxy):
    k, x, y = kxy
    x, y = max(x, y), min(x, y)
    if x == y:
        x += 1
    assert v(oiminus(term(k), term(x), term(y))) == o_k(k, x) - i_k(k, y)


@given(pairs)
def test_iominus(kxy):
    k, x, y = kxy
    x, y = max(x, y), min(x, y)
    assert v(iominus(term(k), term(x), term(y))) == i_k(k, x) - o_k(k, y)


def test_block_identities_on_random_terms():
    rng = random.Random(3)
    for _ in range(300):
        k = term(rng.randint(1, 500))
        x = term(rng.getrandbits(rng.randint(0, 300)))
        y = term(rng.getrandbits(rng.randint(0, 300)))
        assert add(otimes(k, x), otimes(k, y)) == itimes(k, add(x, y))
        assert add(itimes(k, x), itimes(k, y)) == predecessor(
            predecessor(itimes(k, successor(successor(add(x, y)))))
        )
        assert add(otimes(k, x), itimes(k, y)) == predecessor(itimes(k, successor(add(x, y))))


# -- add / sub / compare ------------------------------------------------------


def test_add_sub_examples():
    x = T[31]
    assert add(E, x) == x
    assert sub(x, E) == x
    assert sub(exp2(T[127]), T[1]) == parse_term("V (W (V E [E]) []) []")
    twins = catalog_constants()["twin_primes"]
    assert add(T[2], twins[0]) == twins[1]
    with pytest.raises(DomainError, match="negative result"):
        sub(T[3], T[4])


def test_add_sub_compare_exhaustive_small():
    for a in range(0, 130):
        for b in range(0, 130):
            assert add(T[a], T[b]) == T[a + b]
            assert compare(T[a], T[b]) == (a > b) - (a < b)
            if a >= b:
                assert sub(T[a], T[b]) == T[a - b]


@given(nat, nat)
def test_add_sub_compare_random(a, b):
    x, y = term(a), term(b)
    assert v(add(x, y)) == a + b
    assert compare(x, y) == (a > b) - (a < b)
    assert sub(add(x, y), y) == x
    assert v(absdif(x, y)) == abs(a - b)


def test_compare_examples():
    assert compare(E, E) is Ordering.EQ
    assert compare(E, T[1]) is Ordering.LT
    assert compare(T[9], T[2]) is Ordering.GT


def test_min_max_absdif():
    assert min_max_absdif(E, T[5]) == (E, T[5], T[5])
    for a in range(0, 257, 3):
        for b in range(0, 257, 5):
            lo, hi, d = min_max_absdif(T[a], T[b])
            assert (v(lo), v(hi), v(d)) == (min(a, b), max(a, b), abs(a - b))
    rng = random.Random(9)
    for _ in range(1000):
        x, y = term(rng.getrandbits(100)), term(rng.getrandbits(100))
        assert min_max_absdif(x, y) == min_max_absdif(y, x)


# -- cheap operations ----------------------------------------------------------


def test_double_half():
    assert double(E) == E
    assert double(T[21]) == W(V(E), [E, E, E])
    for k in range(2000):
        assert half(double(T[k])) == T[k]
    with pytest.raises(DomainError):
        half(T[3])


def test_exp2_bitsize_ilog2():
    assert exp2(E) == V(E)
    assert exp2(T[127]) == successor(mersenne(T[127]))
    for k in range(257):
        assert v(exp2(T[k])) == 2**k
        assert ilog2(exp2(T[k])) == T[k]
    # bijective digit count: 2^k is one i digit then k-1 o digits
    for k in range(65):
        assert v(bitsize(term(2**k))) == (2**k + 1).bit_length() - 1 == max(k, 1)
    assert [v(bitsize(T[k])) for k in (0, 100, 1000)] + [v(bitsize(term(10000)))] == [0, 6, 9, 13]
    with pytest.raises(DomainError):
        ilog2(E)


def test_tsize_examples():
    assert [v(tsize(term(k))) for k in (0, 100, 1000, 10000)] == [0, 6, 8, 10]
    assert [v(tsize(term(2**k))) for k in (16, 32, 64, 256)] == [4, 5, 5, 5]
    assert v(tsize(catalog_constants()["mersenne48"])) == 22


@given(nat)
def test_tsize_bounded_by_bitsize(a):
    t = term(a)
    assert compare(tsize(t), bitsize(t)) != Ordering.GT


# -- shifts ---------------------------------------------------------------------


def test_leftshift():
    assert leftshift_by(T[5], E) == E
    for n in range(65):
        for k in range(65):
            assert v(leftshift_by(T[n], T[k])) == k << n


def test_shift_session_round_trip():
    start = predecessor(exp2(term(100000)))
    assert start == parse_term("V (V (W E [E]) [E,E,E,E,V E [],V (V E []) [],E]) []")
    assert rightshift_by(T[1000], leftshift_by(T[1000], start)) == start


def test_rightshift_exhaustive():
    assert rightshift_by(T[3], E) == E
    for m in range(21):
        for k in range(4097):
            assert v(rightshift_by(T[m], T[k])) == k >> m


@given(st.integers(0, 600), nat)
def test_rightshift_random(m, k):
    assert v(rightshift_by(term(m), term(k))) == k >> m


def test_rightshift_on_giants_is_fast():
    m48 = catalog_constants()["mersenne48"]
    tower = exp2(exp2(exp2(m48)))
    t0 = time.perf_counter()
    r = rightshift_by(m48, tower)
    assert time.perf_counter() - t0 < 1
    # 2^(2^2^m48) / 2^m48 is a power of two again
    assert leftshift_by(m48, r) == tower


def test_to_shift_view():
    sv = to_shift_view(T[5])
    assert (sv.block_kind, sv.block_len, sv.payload) == (Parity.ODD, T[1], T[3])
    sv = to_shift_view(W(E))
    assert (sv.block_kind, sv.block_len, sv.payload) == (Parity.EVEN, T[1], T[2])
    for k in range(1, 4097):
        sv = to_shift_view(T[k])
        adjust = 1 if sv.block_kind == Parity.ODD else 2
        assert k + adjust == 2 ** v(sv.block_len) * v(sv.payload)
        assert sv.rebuild() == T[k]
    with pytest.raises(DomainError):
        to_shift_view(E)


# -- multiplication -------------------------------------------------------------


def test_mul_examples():
    assert mul(T[7], E) == E
    for a in range(0, 257, 7):
        for b in range(257):
            assert mul(T[a], T[b]) == term(a * b)


def test_mul_session():
    term1 = sub(exp2(exp2(term(12345))), exp2(term(6789)))
    term2 = add(exp2(exp2(term(123))), exp2(term(456789)))
    assert v(ilog2(ilog2(mul(term1, term2)))) == 12345


def test_mul_of_towers_is_fast():
    x = exp2(exp2(term(1000)))
    t0 = time.perf_counter()
    r = mul(x, x)
    assert time.perf_counter() - t0 < 1
    assert v(tsize(r)) < 50


def test_square_and_power():
    assert square(E) == E
    for k in range(1025):
        assert square(T[k]) == term(k * k)
    for a in range(9):
        for b in range(9):
            assert v(power(T[a], T[b])) == a**b
    assert power(T[5], E) == T[1]
    assert power(E, E) == T[1]
    assert v(bitsize(power(term(2014), term(100)))) == 1097


def test_square_matches_mul_on_structured_terms():
    rng = random.Random(21)
    for _ in range(200):
        t = structured_term(rng, 30)
        assert square(t) == mul(t, t)


# -- extreme cases -----------------------------------------------------------------


def test_best_and_worse_case():
    b5 = best_case(T[5])
    assert (v(b5), v(bitsize(b5)), v(tsize(b5))) == (65535, 16, 4)
    w5 = worse_case(T[5])
    assert (v(w5), v(bitsize(w5)), v(tsize(w5))) == (1364, 10, 10)
    for k in range(11):
        assert v(worse_case(T[k])) == 4 * (4**k - 1) // 3
    assert iterated(successor, T[10], T[5]) == T[15]


# -- division and square root ------------------------------------------------------


def test_div_and_rem():
    assert div_and_rem(T[5], T[7]) == (E, T[5])
    for a in range(0, 513, 3):
        for b in range(1, 513, 7):
            assert div_and_rem(T[a], T[b]) == (T[a // b], T[a % b])
    with pytest.raises(DomainError, match="division by zero"):
        div_and_rem(T[1], E)


def test_div_and_rem_reconstructs_products():
    rng = random.Random(8)
    for _ in range(1000):
        x = term(rng.getrandbits(rng.randint(0, 64)))
        y = term(rng.getrandbits(rng.randint(0, 64)) | 1)
        assert div_and_rem(mul(x, y), y) == (x, E)


def test_isqrt():
    assert isqrt(E) == E
    for k in range(1001):
        assert isqrt(term(k * k)) == T[k]
    for k in range(4200):
        assert v(isqrt(T[k])) == math.isqrt(k)


def test_debug_measure_hook_is_on():
    # the conftest fixture enables both loop assertions and the size hook
    assert arith.DEBUG
