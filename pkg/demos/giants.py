"""Arithmetic on numbers far too large to write down.

    python demos/giants.py
"""

import time

from hbn import (
    add,
    bitsize,
    catalog_constants,
    dag_fold,
    dag_stats,
    exp2,
    ilog2,
    mul,
    sub,
    term,
    tsize,
    value,
)


def show(label, t):
    print(f"{label:<28} tsize={value(tsize(t)):<4} term={t}")


c = catalog_constants()
m48 = c["mersenne48"]
show("2^57885161 - 1", m48)
print(f"{'':<28} bitsize={value(bitsize(m48))}")

tower = exp2(exp2(exp2(m48)))
show("2^2^2^mersenne48", tower)

for name, fn in [
    ("tower + mersenne48", lambda: add(tower, m48)),
    ("tower - mersenne48", lambda: sub(tower, m48)),
    ("tower * tower", lambda: mul(tower, tower)),
]:
    t0 = time.perf_counter()
    r = fn()
    ms = (time.perf_counter() - t0) * 1000
    print(f"{name:<28} {ms:7.2f} ms, tsize {value(tsize(r))}")

# the product of two record primes, then the size of its size
p = mul(c["proth_prime"], c["cullen_prime"])
print("ilog2(ilog2(proth * cullen)) =", value(ilog2(ilog2(p))))

lo, hi = c["twin_primes"]
print("twin primes differ by", value(sub(hi, lo)))

s = dag_stats(dag_fold(m48))
print(f"mersenne48 as a shared DAG: {s.nodes} nodes, {s.edges} edges (tree has {value(s.tsize)} nodes)")
print("42 is", term(42))
