"""Fibonacci graph model: edges, path enumeration, the canonical (sequential
paths) expression, and a linear-time modular oracle for the path polynomial.

The n-vertex Fibonacci graph has vertices 1..n, edges a_v = (v, v+1) for
v < n and b_v = (v, v+2) for v < n-1.  Everything is determined by n, so
graphs are passed around as a bare integer.
"""

from __future__ import annotations

import random

from .expr import (
    Assignment,
    DEFAULT_EXPANSION_BOUND,
    Expression,
    ExprError,
    Label,
    SizeExceeded,
    Term,
    UnassignedLabel,
    a,
    b,
    evaluate_mod,
    expand,
    product,
    sumof,
)


class InvalidN(ExprError):
    """Vertex count outside the operation's domain."""


def _check_n(n: int, minimum: int = 1):
    if not isinstance(n, int) or n < minimum:
        raise InvalidN(f"need an integer n >= {minimum}, got {n!r}")


def edges(n: int) -> list[Label]:
    """All edge labels of the n-vertex graph: a1..a_{n-1} then b1..b_{n-2}."""
    _check_n(n)
    return [a(v) for v in range(1, n)] + [b(v) for v in range(1, n - 1)]


def path_count(n: int) -> int:
    """Number of source-to-sink paths: N(1)=N(2)=1, N(n)=N(n-1)+N(n-2)."""
    _check_n(n)
    prev, cur = 1, 1
    for _ in range(n - 2):
        prev, cur = cur, prev + cur
    return cur


def enumerate_paths(n: int, max_paths: int = DEFAULT_EXPANSION_BOUND) -> list[frozenset]:
    """All source-to-sink paths as label sets, ordered lexicographically by
    vertex sequence (the a-step is tried before the b-step)."""
    _check_n(n)
    if path_count(n) > max_paths:
        raise SizeExceeded(f"{path_count(n)} paths exceeds bound {max_paths}")
    paths: list[frozenset] = []

    def walk(v: int, taken: list[Label]):
        if v == n:
            paths.append(frozenset(taken))
            return
        taken.append(a(v))
        walk(v + 1, taken)
        taken.pop()
        if v + 2 <= n:
            taken.append(b(v))
            walk(v + 2, taken)
            taken.pop()

    walk(1, [])
    return paths


def path_vertex_sequences(n: int, max_paths: int = DEFAULT_EXPANSION_BOUND) -> list[tuple]:
    """Vertex sequences of all paths, in the same order as enumerate_paths."""
    _check_n(n)
    if path_count(n) > max_paths:
        raise SizeExceeded(f"{path_count(n)} paths exceeds bound {max_paths}")
    out: list[tuple] = []

    def walk(v: int, seq: list[int]):
        seq.append(v)
        if v == n:
            out.append(tuple(seq))
        else:
            walk(v + 1, seq)
            if v + 2 <= n:
                walk(v + 2, seq)
        seq.pop()

    walk(1, [])
    return out


def canonical_expression(n: int, max_paths: int = DEFAULT_EXPANSION_BOUND) -> Expression:
    """Sequential-paths expression: the sum over all paths of the product of
    their edge labels, labels in source-to-sink order."""
    _check_n(n, minimum=2)
    summands = []
    for seq in path_vertex_sequences(n, max_paths):
        labs = [a(v) if w == v + 1 else b(v) for v, w in zip(seq, seq[1:])]
        summands.append(product(Term(lab) for lab in labs))
    return sumof(summands)


def oracle_eval_mod(n: int, v: Assignment) -> int:
    """Path polynomial value via the two-step recurrence
    V(k) = a_{k-1} V(k-1) + b_{k-2} V(k-2), without building any expression."""
    _check_n(n)
    p = v.prime
    values = v.values
    for lab in edges(n):
        if lab not in values:
            raise UnassignedLabel(f"no value for label {lab}")
    if n == 1:
        return 1 % p
    prev, cur = 1, values[a(1)] % p  # V(1), V(2)
    for k in range(3, n + 1):
        prev, cur = cur, (values[a(k - 1)] * cur + values[b(k - 2)] * prev) % p
    return cur


def equivalent_by_expansion(e: Expression, n: int,
                            max_monomials: int = DEFAULT_EXPANSION_BOUND) -> bool:
    """Exact check: does e expand to the path set of the n-vertex graph?"""
    return expand(e, max_monomials) == frozenset(enumerate_paths(n, max_monomials))


def equivalent_by_sampling(e: Expression, n: int, trials: int = 32,
                           prime: int | None = None, seed: int = 0) -> bool:
    """Probabilistic check: e agrees with the path-polynomial oracle on
    `trials` random assignments.  Per-trial false-pass probability is at most
    (n-1)/prime (degree bound over a field)."""
    from .expr import DEFAULT_PRIME

    prime = prime or DEFAULT_PRIME
    rng = random.Random(seed)
    labs = edges(n)
    for _ in range(trials):
        v = Assignment.random(labs, prime, rng)
        if evaluate_mod(e, v) != oracle_eval_mod(n, v):
            return False
    return True
