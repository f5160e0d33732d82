"""
Permutations in one-line notation, intervals, patterns and one-point moves.

A permutation is a plain ``tuple`` of the integers ``1..n``.  Public functions
accept any sequence and validate it; the ``_``-prefixed helpers assume a valid
tuple and are used on hot paths.

>>> is_simple((2, 4, 1, 3))
True
>>> nontrivial_interval((1, 3, 4, 2))
IntervalWitness(start=2, end=3)
>>> delete_point((5, 2, 6, 3, 7, 1, 4), 5)
(5, 2, 6, 3, 1, 4)
>>> insert_point((2, 4, 1, 3), GridSlot(4, 3))
(2, 5, 1, 4, 3)
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    MalformedInput,
    NotAPermutation,
    NotSimple,
    PositionOutOfRange,
    SizeTooSmall,
    SlotOutOfRange,
)

__all__ = [
    "Perm", "IntervalWitness", "GridSlot",
    "as_perm", "parse_permutation", "format_perm",
    "is_simple", "nontrivial_interval", "pattern_occurs", "standardize",
    "delete_point", "insert_point", "children", "extension_slots",
    "simple_extensions", "symmetry", "SYMMETRIES", "dihedral_images",
]

Perm = tuple[int, ...]


class IntervalWitness(NamedTuple):
    """1-based inclusive window of positions whose values are contiguous."""
    start: int
    end: int


class GridSlot(NamedTuple):
    """Insertion point: ``position`` entries stay to the left, new entry gets rank ``value``."""
    position: int
    value: int


_TOKEN_SPLIT = re.compile(r"[\s,]+")


def as_perm(values: Iterable[int]) -> Perm:
    p = tuple(values)
    if not p:
        raise NotAPermutation("empty permutation")
    for v in p:
        if not isinstance(v, int) or isinstance(v, bool):
            raise MalformedInput(f"non-integer entry {v!r}")
    if sorted(p) != list(range(1, len(p) + 1)):
        raise NotAPermutation(f"{p} is not a bijection of 1..{len(p)}")
    return p


def parse_permutation(text: str) -> Perm:
    """Parse ``"2 4 1 3"``, ``"2,4,1,3"`` or the compact ``"2413"`` (only when n <= 9)."""
    stripped = text.strip()
    if not stripped:
        raise MalformedInput("empty input")
    tokens = [t for t in _TOKEN_SPLIT.split(stripped) if t]
    if len(tokens) == 1 and len(tokens[0]) > 1 and tokens[0].isdigit():
        digits = tokens[0]
        if "0" in digits or len(digits) > 9:
            raise MalformedInput(f"digit string {digits!r} is ambiguous; separate values by spaces")
        tokens = list(digits)
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise MalformedInput(f"non-integer token in {text!r}") from None
    return as_perm(values)


def format_perm(p: Sequence[int]) -> str:
    return " ".join(map(str, p))


def standardize(values: Sequence[int]) -> Perm:
    """Order-isomorphic permutation of a sequence of distinct numbers."""
    ranks = {v: r for r, v in enumerate(sorted(values), 1)}
    return tuple(ranks[v] for v in values)


def _interval(p: Perm) -> IntervalWitness | None:
    n = len(p)
    for i in range(n - 1):
        lo = hi = p[i]
        # the window starting at 1 and ending at n is the whole permutation
        last = n - 1 if i else n - 2
        for j in range(i + 1, last + 1):
            v = p[j]
            if v < lo:
                lo = v
            elif v > hi:
                hi = v
            if hi - lo == j - i:
                return IntervalWitness(i + 1, j + 1)
    return None


def _is_simple(p: Perm) -> bool:
    if len(p) <= 2:
        return True
    # most non-simple permutations have two adjacent entries with adjacent values
    prev = p[0]
    for v in p[1:]:
        if v - prev == 1 or prev - v == 1:
            return False
        prev = v
    return _interval(p) is None


def is_simple(p: Sequence[int]) -> bool:
    return _is_simple(as_perm(p))


def nontrivial_interval(p: Sequence[int]) -> IntervalWitness | None:
    """Smallest-start, then smallest-end nontrivial interval, or ``None`` when simple."""
    return _interval(as_perm(p))


def pattern_occurs(pi: Sequence[int], sigma: Sequence[int]) -> bool:
    """True iff ``pi`` is order-isomorphic to a subsequence of ``sigma``.

    Backtracking over positions of ``sigma``; each partial choice is checked
    against the relative order of every earlier entry, so failing prefixes
    are pruned early.
    """
    pi, sigma = as_perm(pi), as_perm(sigma)
    k, n = len(pi), len(sigma)
    if k > n:
        return False
    chosen: list[int] = []

    def extend(start: int) -> bool:
        t = len(chosen)
        if t == k:
            return True
        target = pi[t]
        for i in range(start, n - (k - t) + 1):
            v = sigma[i]
            if all((pi[s] < target) == (chosen[s] < v) for s in range(t)):
                chosen.append(v)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    return extend(0)


def _delete(p: Perm, index: int) -> Perm:
    v = p[index]
    return tuple(x - (x > v) for x in p if x != v)


def delete_point(p: Sequence[int], position: int) -> Perm:
    """Remove the entry at 1-based ``position`` and renormalize."""
    p = as_perm(p)
    if len(p) < 2:
        raise PositionOutOfRange("cannot delete from a permutation of size 1")
    if not 1 <= position <= len(p):
        raise PositionOutOfRange(f"position {position} outside 1..{len(p)}")
    return _delete(p, position - 1)


def _insert(p: Perm, position: int, value: int) -> Perm:
    shifted = tuple(x + (x >= value) for x in p)
    return shifted[:position] + (value,) + shifted[position:]


def insert_point(p: Sequence[int], slot: GridSlot | tuple[int, int]) -> Perm:
    p = as_perm(p)
    position, value = slot
    n = len(p)
    if not (0 <= position <= n and 1 <= value <= n + 1):
        raise SlotOutOfRange(f"slot {tuple(slot)} outside 0..{n} x 1..{n + 1}")
    return _insert(p, position, value)


def _children(p: Perm) -> set[Perm]:
    out = set()
    for i in range(len(p)):
        q = _delete(p, i)
        if _is_simple(q):
            out.add(q)
    return out


def children(p: Sequence[int]) -> set[Perm]:
    """Simple permutations obtained from simple ``p`` by deleting one entry."""
    p = as_perm(p)
    if not _is_simple(p):
        raise NotSimple(format_perm(p))
    if len(p) < 4:
        return set()
    return _children(p)


def _forbidden_slots(p: Perm) -> set[tuple[int, int]]:
    n = len(p)
    bad = {(0, 1), (0, n + 1), (n, 1), (n, n + 1)}
    for i, v in enumerate(p, 1):
        # the four corners of the cell holding entry i would pair with it
        bad.update(((i - 1, v), (i - 1, v + 1), (i, v), (i, v + 1)))
    return bad


def extension_slots(p: Perm) -> Iterator[GridSlot]:
    """Grid slots of a simple ``p`` (size >= 4) that yield simple permutations."""
    n = len(p)
    bad = _forbidden_slots(p)
    for position in range(n + 1):
        for value in range(1, n + 2):
            if (position, value) not in bad:
                yield GridSlot(position, value)


def simple_extensions(p: Sequence[int], strategy: str = "exclude") -> set[Perm]:
    """Simple one-point extensions of simple ``p``; there are exactly (n+1)(n-3).

    ``strategy="exclude"`` drops the corner slots of every cell and of the grid;
    ``strategy="filter"`` tries every slot and keeps the simple results.
    """
    p = as_perm(p)
    if not _is_simple(p):
        raise NotSimple(format_perm(p))
    n = len(p)
    if n < 4:
        raise SizeTooSmall(f"need size >= 4, got {n}")
    if strategy == "exclude":
        return {_insert(p, pos, val) for pos, val in extension_slots(p)}
    if strategy == "filter":
        out = set()
        for pos in range(n + 1):
            for val in range(1, n + 2):
                q = _insert(p, pos, val)
                if _is_simple(q):
                    out.add(q)
        return out
    raise ValueError(f"unknown strategy {strategy!r}")


def _reverse(p: Perm) -> Perm:
    return p[::-1]


def _complement(p: Perm) -> Perm:
    n1 = len(p) + 1
    return tuple(n1 - v for v in p)


def _inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p, 1):
        inv[v - 1] = i
    return tuple(inv)


SYMMETRIES = {"reverse": _reverse, "complement": _complement, "inverse": _inverse}


def symmetry(p: Sequence[int], op: str) -> Perm:
    try:
        f = SYMMETRIES[op]
    except KeyError:
        raise ValueError(f"unknown symmetry {op!r}; expected one of {sorted(SYMMETRIES)}") from None
    return f(as_perm(p))


def dihedral_images(p: Perm) -> list[Perm]:
    """The eight images of ``p`` under the symmetries of the square (with repeats)."""
    out = []
    for q in (p, _inverse(p)):
        for r in (q, _reverse(q)):
            out.append(r)
            out.append(_complement(r))
    return out
