"""Primitive value comparators and the three set operations.

Every function returns a score in [0, 1].  The scalar comparators are
symmetric; the set operations are *directed*: they normalize by the first
argument, so op(A, B) = 1 exactly when A's contribution is contained in
B's.  That directedness is what makes the overall similarity asymmetric.
"""

from __future__ import annotations

import unicodedata
from typing import AbstractSet, Callable, TypeVar

T = TypeVar("T")
U = TypeVar("U")


def compare_boolean(a: bool, b: bool) -> float:
    """1 when equal, else 0."""
    return 1.0 if a == b else 0.0


def compare_number(a: float, b: float) -> float:
    """Relative-difference similarity: 1 - |a-b| / (|a|+|b|).

    Defined as 1 when a = b = 0.  Symmetric, equals 1 iff a = b, and
    decreases with |a-b| at fixed magnitude.
    """
    if a == b:
        return 1.0
    return 1.0 - abs(a - b) / (abs(a) + abs(b))


def compare_text(a: str, b: str) -> float:
    """Exact match after Unicode NFC normalization; no string distance."""
    return 1.0 if unicodedata.normalize("NFC", a) == unicodedata.normalize("NFC", b) else 0.0


def op_inter(a_set: AbstractSet[T], b_set: AbstractSet[T]) -> float:
    """Directed intersection ratio |A ∩ B| / |A|; empty A scores 1."""
    if not a_set:
        return 1.0
    return len(a_set & b_set) / len(a_set)


def op_count(a_set: AbstractSet[T], b_set: AbstractSet[U]) -> float:
    """Directed cardinality containment: 1 when |A| <= |B|, else |B|/|A|."""
    if len(a_set) <= len(b_set):
        return 1.0
    return len(b_set) / len(a_set)


def op_simil(a_set: AbstractSet[T], b_set: AbstractSet[T],
             element_sim: Callable[[T, T], float]) -> float:
    """Directed best-match average.

    Mean over a in A of max over b in B of element_sim(a, b).  Empty A
    scores 1 (nothing to satisfy); nonempty A against empty B scores 0.
    Elements are visited in sorted order so float summation is
    deterministic regardless of set construction order.
    """
    if not a_set:
        return 1.0
    if not b_set:
        return 0.0
    ordered_b = sorted(b_set, key=repr)
    total = 0.0
    for a in sorted(a_set, key=repr):
        total += max(element_sim(a, b) for b in ordered_b)
    return total / len(a_set)
