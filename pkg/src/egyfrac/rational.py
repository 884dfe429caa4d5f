"""Exact rational arithmetic over finite sets of positive integers.

The two workhorses are ``recip_sum`` (the reciprocal sum of a set, computed
exactly) and ``lcm_set``.  All rational values are ``fractions.Fraction``
instances, which are always stored reduced with a positive denominator.
"""
from __future__ import annotations

import json
import math
import operator
from fractions import Fraction
from typing import Iterable, Iterator, Union

from .errors import DomainError

# All rational quantities in this package are plain stdlib Fractions.
Rational = Fraction

SetLike = Union["IntSet", Iterable[int]]


class IntSet:
    """Immutable finite set of positive integers, stored sorted ascending.

    Duplicates are merged; zero and negative entries are rejected (a
    reciprocal 1/0 is undefined, and the element 1 is allowed).
    """

    __slots__ = ("elements",)

    def __init__(self, items: Iterable[int] = ()):
        elems = sorted({operator.index(x) for x in items})
        if elems and elems[0] < 1:
            raise DomainError(f"set elements must be positive, got {elems[0]}")
        object.__setattr__(self, "elements", tuple(elems))

    def __setattr__(self, name, value):
        raise AttributeError("IntSet is immutable")

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, n) -> bool:
        i = _bisect(self.elements, n)
        return i >= 0

    def __eq__(self, other) -> bool:
        if isinstance(other, IntSet):
            return self.elements == other.elements
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"IntSet({list(self.elements)!r})"

    def __bool__(self) -> bool:
        return bool(self.elements)

    def union(self, other: SetLike) -> "IntSet":
        return IntSet(self.elements + tuple(other))

    def without(self, items: Iterable[int]) -> "IntSet":
        drop = set(items)
        return IntSet(x for x in self.elements if x not in drop)

    # -- serialization: newline-delimited decimal text and JSON array --

    def to_text(self) -> str:
        return "".join(f"{n}\n" for n in self.elements)

    def to_json(self) -> str:
        return json.dumps(list(self.elements))

    @classmethod
    def from_text(cls, text: str) -> "IntSet":
        items = []
        for line in text.splitlines():
            line = line.strip()
            if line:
                items.append(int(line))
        return cls(items)

    @classmethod
    def from_json(cls, text: str) -> "IntSet":
        data = json.loads(text)
        if not isinstance(data, list):
            raise ValueError("expected a JSON array of integers")
        return cls(data)

    @classmethod
    def parse(cls, text: str) -> "IntSet":
        """Parse either serialized form, sniffing by the leading character."""
        if text.lstrip().startswith("["):
            return cls.from_json(text)
        return cls.from_text(text)


def _bisect(elems: tuple, n) -> int:
    lo, hi = 0, len(elems)
    while lo < hi:
        mid = (lo + hi) // 2
        if elems[mid] < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo < len(elems) and elems[lo] == n else -1


def as_intset(A: SetLike) -> IntSet:
    return A if isinstance(A, IntSet) else IntSet(A)


def fraction_sum(pairs: Iterable[tuple[int, int]]) -> Fraction:
    """Exact sum of num/den pairs via balanced pairwise merging.

    Pairwise merging keeps operand sizes balanced, so summing many unit
    fractions stays fast even when the common denominator grows to
    thousands of digits.  The result is identical to naive left-to-right
    Fraction accumulation.
    """
    terms = [(n, d) for n, d in pairs]
    if not terms:
        return Fraction(0)
    while len(terms) > 1:
        merged = []
        for i in range(0, len(terms) - 1, 2):
            a, b = terms[i]
            c, d = terms[i + 1]
            merged.append((a * d + c * b, b * d))
        if len(terms) % 2:
            merged.append(terms[-1])
        terms = merged
    return Fraction(*terms[0])


def recip_sum(A: SetLike) -> Fraction:
    """Return the exact reciprocal sum of a set (0 for the empty set)."""
    A = as_intset(A)
    return fraction_sum((1, n) for n in A)


def lcm_set(A: SetLike) -> int:
    """Least common multiple of all elements; 1 for the empty set."""
    A = as_intset(A)
    return math.lcm(*A.elements)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or plain integer decimal text into an exact rational."""
    return Fraction(text.strip())


def format_rational(x: Fraction) -> str:
    """Serialize a rational as "num/den" (denominator always present)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"
