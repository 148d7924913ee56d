"""Fermat, Mersenne and perfect numbers, record primes, and DAG folding."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from .arith import exp2, leftshift_by, tsize
from .convert import term
from .core import _V, E, DomainError, Term, _mk, predecessor, successor

__all__ = [
    "fermat",
    "mersenne",
    "perfect",
    "catalog_constants",
    "CATALOG_ALIASES",
    "Dag",
    "DagStats",
    "dag_fold",
    "unfold",
    "dag_stats",
    "dag_to_dot",
]


def fermat(n: Term) -> Term:
    """``2^(2^n) + 1``."""
    return successor(exp2(exp2(n)))


def mersenne(p: Term) -> Term:
    """``2^p - 1``."""
    return predecessor(exp2(p))


def perfect(p: Term) -> Term:
    """``2^(p-1) (2^p - 1)``, the even perfect number for exponent ``p``.

    In bijective base 2 this is ``q+1`` o-digits followed by ``q+1``
    i-digits, shifted by one, with ``q = p - 2``.
    """
    if not p[0] or p == _mk(Term, (_V, E, ())):
        raise DomainError("perfect needs p >= 2")
    q = predecessor(predecessor(p))
    return successor(_mk(Term, (_V, q, (q,))))


def _build() -> dict[str, object]:
    prime48 = term(57885161)
    cullen_n = term(6679881)
    woodall_n = term(3752948)
    twin_m = leftshift_by(term(666669), term(3756801695685))
    return {
        "prime48": prime48,
        "mersenne48": mersenne(prime48),
        "perfect48": perfect(prime48),
        "gen_fermat_prime": successor(leftshift_by(term(9167433), term(27653))),
        "cullen_prime": successor(leftshift_by(cullen_n, cullen_n)),
        "woodall_prime": predecessor(leftshift_by(woodall_n, woodall_n)),
        "proth_prime": successor(leftshift_by(term(13018586), term(19249))),
        "sophie_germain_prime": predecessor(
            leftshift_by(term(666667), term(18543637900515))
        ),
        "twin_primes": (predecessor(twin_m), successor(twin_m)),
    }


_lock = threading.Lock()
_catalog: Mapping[str, object] | None = None


def catalog_constants() -> Mapping[str, object]:
    """Read-only map of the record-prime showcase terms, built on first use.

    ``twin_primes`` maps to a pair; all other entries are single terms.
    """
    global _catalog
    if _catalog is None:
        with _lock:
            if _catalog is None:
                _catalog = MappingProxyType(_build())
    return _catalog


# camelCase spellings accepted wherever catalog names are looked up
CATALOG_ALIASES = {
    "genFermatPrime": "gen_fermat_prime",
    "cullenPrime": "cullen_prime",
    "woodallPrime": "woodall_prime",
    "prothPrime": "proth_prime",
    "sophieGermainPrime": "sophie_germain_prime",
    "twinPrimes": "twin_primes",
}


# ---------------------------------------------------------------------------
# DAG folding


@dataclass(frozen=True)
class Dag:
    """Maximally shared form of a term.

    ``nodes`` holds ``(id, label)`` with label ``"E"``, ``"V"`` or ``"W"``;
    ``edges`` holds ``(parent, child, position)`` where position 0 is the
    head and 1.. index the tail.  Ids are assigned children first, so the
    root has the largest id.
    """

    nodes: tuple[tuple[int, str], ...]
    edges: tuple[tuple[int, int, int], ...]
    root: int


@dataclass(frozen=True)
class DagStats:
    nodes: int
    edges: int
    tsize: Term


_LABELS = ("E", "V", "W")


def dag_fold(t: Term) -> Dag:
    # key = (tag, head id, tail ids); equal keys mean equal subtrees exactly,
    # so interning on them never merges distinct terms
    ids: dict[tuple, int] = {}
    seen: dict[int, int] = {}  # id(term object) -> node id, a shortcut only
    nodes: list[tuple[int, str]] = []
    edges: list[tuple[int, int, int]] = []
    stack = [(t, False)]
    while stack:
        u, ready = stack.pop()
        if id(u) in seen:
            continue
        k, x, xs = u
        if k and not ready:
            stack.append((u, True))
            for child in reversed((x,) + xs):
                if id(child) not in seen:
                    stack.append((child, False))
            continue
        kids = tuple(seen[id(c)] for c in (x,) + xs) if k else ()
        key = (k, kids)
        node = ids.get(key)
        if node is None:
            node = ids[key] = len(nodes)
            nodes.append((node, _LABELS[k]))
            edges.extend((node, c, pos) for pos, c in enumerate(kids))
        # every subterm stays referenced by t, so id() values are stable here
        seen[id(u)] = node
    return Dag(tuple(nodes), tuple(edges), seen[id(t)])


def unfold(d: Dag, node: int | None = None) -> Term:
    """Rebuild the term rooted at ``node`` (default: the root)."""
    labels = dict(d.nodes)
    children: dict[int, list[int]] = {n: [] for n, _ in d.nodes}
    for parent, child, pos in sorted(d.edges, key=lambda e: (e[0], e[2])):
        children[parent].append(child)
    built: dict[int, Term] = {}
    # ids are topologically ordered, children before parents
    for n in sorted(labels):
        lab = labels[n]
        if lab == "E":
            built[n] = E
        else:
            kids = [built[c] for c in children[n]]
            built[n] = _mk(Term, (1 if lab == "V" else 2, kids[0], tuple(kids[1:])))
    return built[d.root if node is None else node]


def dag_stats(d: Dag) -> DagStats:
    return DagStats(len(d.nodes), len(d.edges), tsize(unfold(d)))


def dag_to_dot(d: Dag, name: str = "hbn") -> str:
    """Graphviz text; ``E`` leaves are labelled ``T``, edges carry their position."""
    lines = [f"digraph {name} {{"]
    for n, lab in d.nodes:
        lines.append(f'  n{n} [label="{"T" if lab == "E" else lab}"];')
    for parent, child, pos in d.edges:
        lines.append(f'  n{parent} -> n{child} [label="{pos}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
