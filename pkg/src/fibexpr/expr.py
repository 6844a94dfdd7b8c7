"""Expression trees over Fibonacci-graph edge labels.

An expression is an immutable tree whose leaves are edge labels (a1, b3, ...)
plus the sentinels UNIT (multiplicative identity, the empty subgraph) and
ZERO (annihilator, the empty interval).  Internal nodes are n-ary sums and
products.  All constructors here produce *simplified* trees: flattened,
with UNIT absorbed into products and ZERO summands dropped.
"""

from __future__ import annotations

import random
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union

DEFAULT_PRIME = 2147483647  # 2^31 - 1

DEFAULT_EXPANSION_BOUND = 10**6


class ExprError(Exception):
    """Base class for expression errors."""


class SizeExceeded(ExprError):
    """An expansion or enumeration grew past its configured bound."""


class DuplicateMonomial(ExprError):
    """The same monomial arose twice during expansion (malformed factoring)."""


class UnassignedLabel(ExprError):
    """A label in the expression has no value in the assignment."""


class ParseError(ExprError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True, order=True)
class Label:
    """One edge symbol: kind 'a' (step to v+1) or 'b' (step to v+2)."""

    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in ("a", "b"):
            raise ValueError(f"label kind must be 'a' or 'b', got {self.kind!r}")
        if self.index < 1:
            raise ValueError(f"label index must be >= 1, got {self.index}")

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


def a(index: int) -> Label:
    return Label("a", index)


def b(index: int) -> Label:
    return Label("b", index)


@dataclass(frozen=True)
class _Sentinel:
    symbol: str

    def __repr__(self) -> str:
        return self.symbol


UNIT = _Sentinel("1")
ZERO = _Sentinel("0")


@dataclass(frozen=True)
class Term:
    label: Label


@dataclass(frozen=True)
class Sum:
    children: tuple  # length >= 2, no Sum children in simplified form


@dataclass(frozen=True)
class Product:
    children: tuple  # length >= 2, no Product/UNIT children in simplified form


Expression = Union[_Sentinel, Term, Sum, Product]

Monomial = frozenset  # of Label
MonomialSet = frozenset  # of Monomial


def product(parts: Iterable[Expression]) -> Expression:
    """Simplifying product constructor: flattens, absorbs UNIT, annihilates on ZERO."""
    flat: list[Expression] = []
    for part in parts:
        if part is ZERO:
            return ZERO
        if part is UNIT:
            continue
        if isinstance(part, Product):
            flat.extend(part.children)
        else:
            flat.append(part)
    if not flat:
        return UNIT
    if len(flat) == 1:
        return flat[0]
    return Product(tuple(flat))


def sumof(parts: Iterable[Expression]) -> Expression:
    """Simplifying sum constructor: flattens and drops ZERO summands."""
    flat: list[Expression] = []
    for part in parts:
        if part is ZERO:
            continue
        if isinstance(part, Sum):
            flat.extend(part.children)
        else:
            flat.append(part)
    if not flat:
        return ZERO
    if len(flat) == 1:
        return flat[0]
    return Sum(tuple(flat))


def simplify(e: Expression) -> Expression:
    """Rebuild e in simplified form; expansion is unchanged."""
    if isinstance(e, Sum):
        return sumof(simplify(c) for c in e.children)
    if isinstance(e, Product):
        return product(simplify(c) for c in e.children)
    return e


def _memoized(e: Expression, leaf, combine_sum, combine_product):
    """Bottom-up fold over the tree, memoized by node identity.

    Generated expressions share subtrees heavily (one node per interval), so
    identity memoization keeps metrics and evaluation linear in the number of
    distinct nodes rather than the printed size.
    """
    memo: dict[int, object] = {}

    def go(x):
        r = memo.get(id(x))
        if r is None:
            if isinstance(x, Sum):
                r = combine_sum(x, [go(c) for c in x.children])
            elif isinstance(x, Product):
                r = combine_product(x, [go(c) for c in x.children])
            else:
                r = leaf(x)
            memo[id(x)] = r
        return r

    return go(e)


def metric_terms(e: Expression) -> int:
    """First complexity characteristic: term occurrences, counted with multiplicity."""
    return _memoized(
        e,
        leaf=lambda x: 1 if isinstance(x, Term) else 0,
        combine_sum=lambda x, cs: sum(cs),
        combine_product=lambda x, cs: sum(cs),
    )


def metric_plus(e: Expression) -> int:
    """Second complexity characteristic: number of plus operators."""
    return _memoized(
        e,
        leaf=lambda x: 0,
        combine_sum=lambda x, cs: sum(cs) + len(cs) - 1,
        combine_product=lambda x, cs: sum(cs),
    )


def expand(e: Expression, max_monomials: int = DEFAULT_EXPANSION_BOUND) -> MonomialSet:
    """Distributive expansion of e as a set of monomials (label sets).

    Raises DuplicateMonomial if any monomial arises twice: a well-formed
    factoring of a path polynomial has all coefficients equal to one.
    """
    memo: dict[int, frozenset] = {}

    def go(x) -> frozenset:
        r = memo.get(id(x))
        if r is not None:
            return r
        if x is ZERO:
            r = frozenset()
        elif x is UNIT:
            r = frozenset([frozenset()])
        elif isinstance(x, Term):
            r = frozenset([frozenset([x.label])])
        elif isinstance(x, Sum):
            out: set = set()
            for c in x.children:
                cset = go(c)
                if out & cset:
                    raise DuplicateMonomial(
                        f"monomial appears in two summands: {sorted(map(str, next(iter(out & cset))))}"
                    )
                out |= cset
                if len(out) > max_monomials:
                    raise SizeExceeded(f"expansion exceeds {max_monomials} monomials")
            r = frozenset(out)
        else:  # Product
            acc: set = {frozenset()}
            for c in x.children:
                cset = go(c)
                nxt: set = set()
                for m1 in acc:
                    for m2 in cset:
                        u = m1 | m2
                        if len(u) != len(m1) + len(m2):
                            raise DuplicateMonomial(
                                f"label repeated within a monomial: {sorted(map(str, m1 & m2))}"
                            )
                        if u in nxt:
                            raise DuplicateMonomial(
                                f"monomial produced twice in a product: {sorted(map(str, u))}"
                            )
                        nxt.add(u)
                        if len(nxt) > max_monomials:
                            raise SizeExceeded(f"expansion exceeds {max_monomials} monomials")
                acc = nxt
            r = frozenset(acc)
        memo[id(x)] = r
        return r

    return go(e)


@dataclass
class Assignment:
    """Label values in the field of integers modulo a prime."""

    values: Mapping[Label, int]
    prime: int = DEFAULT_PRIME

    @classmethod
    def random(cls, labels: Iterable[Label], prime: int = DEFAULT_PRIME,
               rng: random.Random | None = None) -> "Assignment":
        rng = rng or random.Random()
        return cls({lab: rng.randrange(1, prime) for lab in labels}, prime)


def evaluate_mod(e: Expression, v: Assignment) -> int:
    """Value of e modulo v.prime; UNIT -> 1, ZERO -> 0."""
    p = v.prime
    values = v.values

    def leaf(x):
        if x is UNIT:
            return 1
        if x is ZERO:
            return 0
        try:
            return values[x.label] % p
        except KeyError:
            raise UnassignedLabel(f"no value for label {x.label}") from None

    def mul(x, cs):
        r = 1
        for c in cs:
            r = r * c % p
        return r

    return _memoized(e, leaf=leaf, combine_sum=lambda x, cs: sum(cs) % p,
                     combine_product=mul)


def labels_of(e: Expression) -> Counter:
    """Multiset of labels occurring in e (with multiplicity)."""
    out: Counter = Counter()

    def walk(x):
        if isinstance(x, Term):
            out[x.label] += 1
        elif isinstance(x, (Sum, Product)):
            for c in x.children:
                walk(c)

    walk(e)
    return out


def is_read_once(e: Expression) -> bool:
    """True iff every label occurs at most once in e."""
    return all(count == 1 for count in labels_of(e).values())


def sp_series(e1: Expression, e2: Expression) -> Expression:
    """Series composition: concatenation of the two subgraph expressions."""
    return product([e1, e2])


def sp_parallel(e1: Expression, e2: Expression) -> Expression:
    """Parallel composition: disjoint union of the two subgraph expressions."""
    return sumof([e1, e2])


def format_expression(e: Expression) -> str:
    """Render e in the text grammar: juxtaposed products, '+'-joined sums,
    parentheses only around sum factors inside a product."""
    memo: dict[int, str] = {}

    def go(x) -> str:
        r = memo.get(id(x))
        if r is not None:
            return r
        if x is UNIT:
            r = "1"
        elif x is ZERO:
            r = "0"
        elif isinstance(x, Term):
            r = str(x.label)
        elif isinstance(x, Sum):
            r = "+".join(go(c) for c in x.children)
        else:
            parts = [f"({go(c)})" if isinstance(c, Sum) else go(c) for c in x.children]
            r = "".join(parts)
        memo[id(x)] = r
        return r

    return go(e)


_TOKEN = re.compile(r"[ab]\d+|[1()+*]")
_SPACE = re.compile(r"\s*")


class _Parser:
    """Recursive descent over:  sum := product ('+' product)* ;
    product := factor (('*')? factor)* ; factor := label | '1' | '(' sum ')'."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise ParseError(message, self.pos)

    def peek(self) -> str | None:
        self.pos = _SPACE.match(self.text, self.pos).end()
        if self.pos >= len(self.text):
            return None
        m = _TOKEN.match(self.text, self.pos)
        if not m:
            self.error(f"unexpected character {self.text[self.pos]!r}")
        return m.group()

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of input")
        self.pos += len(tok)
        return tok

    def parse_sum(self) -> Expression:
        parts = [self.parse_product()]
        while self.peek() == "+":
            self.take()
            parts.append(self.parse_product())
        return sumof(parts)

    def parse_product(self) -> Expression:
        parts = [self.parse_factor()]
        while True:
            tok = self.peek()
            if tok == "*":
                self.take()
                parts.append(self.parse_factor())
            elif tok is not None and (tok == "1" or tok == "(" or tok[0] in "ab"):
                parts.append(self.parse_factor())
            else:
                break
        return product(parts)

    def parse_factor(self) -> Expression:
        tok = self.peek()
        if tok is None:
            self.error("expected a factor")
        if tok == "1":
            self.take()
            return UNIT
        if tok == "(":
            self.take()
            inner = self.parse_sum()
            if self.peek() != ")":
                self.error("expected ')'")
            self.take()
            return inner
        if tok[0] in "ab":
            self.take()
            index = int(tok[1:])
            if index < 1:
                self.error(f"label index must be >= 1 in {tok!r}")
            return Term(Label(tok[0], index))
        self.error(f"unexpected token {tok!r}")


def parse(text: str) -> Expression:
    """Parse expression text; the result is simplified."""
    parser = _Parser(text)
    expr = parser.parse_sum()
    if parser.peek() is not None:
        parser.error(f"trailing input {parser.peek()!r}")
    return expr
