"""
The four families of exceptional simple permutations and the alternation predicates.

Family ``k`` at half-size ``m`` (size ``2m``):

1. ``2 4 ... 2m 1 3 ... 2m-1``
2. ``2m-1 2m-3 ... 1 2m 2m-2 ... 2``
3. ``m+1 1 m+2 2 ... 2m m``
4. ``m 2m m-1 2m-1 ... 1 m+1``

At ``m = 2`` families 1 and 4 both give 2413 and families 2 and 3 both give
3142, so :func:`exceptional_types_of` returns a set of descriptors.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .errors import InvalidM
from .perm import Perm, as_perm, dihedral_images

__all__ = [
    "FAMILIES", "ExceptionalDescriptor", "exceptional_perm", "exceptional_types_of",
    "is_exceptional", "exceptionals_of_size", "same_family", "smaller_same_family",
    "is_parallel_alternation", "is_wedge_alternation",
]

FAMILIES = (1, 2, 3, 4)


class ExceptionalDescriptor(NamedTuple):
    family: int
    m: int

    def __str__(self):
        return f"type{self.family}(m={self.m})"


def _build(family: int, m: int) -> Perm:
    if family == 1:
        return tuple(range(2, 2 * m + 1, 2)) + tuple(range(1, 2 * m, 2))
    if family == 2:
        return tuple(range(2 * m - 1, 0, -2)) + tuple(range(2 * m, 1, -2))
    if family == 3:
        return tuple(v for i in range(1, m + 1) for v in (m + i, i))
    if family == 4:
        return tuple(v for i in range(m, 0, -1) for v in (i, m + i))
    raise ValueError(f"family must be one of {FAMILIES}, got {family!r}")


_cache: dict[tuple[int, int], Perm] = {}


def exceptional_perm(d: ExceptionalDescriptor | tuple[int, int]) -> Perm:
    family, m = d
    if m < 2:
        raise InvalidM(f"half-size m must be >= 2, got {m}")
    key = (family, m)
    p = _cache.get(key)
    if p is None:
        p = _cache[key] = _build(family, m)
    return p


def exceptional_types_of(p: Sequence[int]) -> frozenset[ExceptionalDescriptor]:
    p = tuple(p)
    n = len(p)
    if n < 4 or n % 2:
        return frozenset()
    m = n // 2
    return frozenset(ExceptionalDescriptor(f, m) for f in FAMILIES if exceptional_perm((f, m)) == p)


def is_exceptional(p: Sequence[int]) -> bool:
    return bool(exceptional_types_of(p))


def exceptionals_of_size(n: int) -> list[Perm]:
    """Distinct exceptional permutations of size ``n``, sorted (empty for odd ``n`` or ``n < 4``)."""
    if n < 4 or n % 2:
        return []
    return sorted({exceptional_perm((f, n // 2)) for f in FAMILIES})


def same_family(p: Sequence[int], q: Sequence[int]) -> bool:
    """Both exceptional with a family in common."""
    fp = {d.family for d in exceptional_types_of(p)}
    return bool(fp & {d.family for d in exceptional_types_of(q)})


def smaller_same_family(p: Sequence[int]) -> list[Perm]:
    """The exceptional permutations two sizes down sharing a family with ``p``."""
    found = {exceptional_perm((d.family, d.m - 1)) for d in exceptional_types_of(p) if d.m > 2}
    return sorted(found)


def _direction(seq: Sequence[int]) -> set[str]:
    if len(seq) < 2:
        return {"inc", "dec"}
    if all(a < b for a, b in zip(seq, seq[1:])):
        return {"inc"}
    if all(a > b for a, b in zip(seq, seq[1:])):
        return {"dec"}
    return set()


def _alternation_directions(p: Perm) -> tuple[set[str], set[str]] | None:
    """Monotonicity of (odd values, even values) when every odd value precedes every even one."""
    n_odd = (len(p) + 1) // 2
    head, tail = p[:n_odd], p[n_odd:]
    if any(v % 2 == 0 for v in head):
        return None
    return _direction(head), _direction(tail)


def _alternation(p: Sequence[int], same: bool) -> bool:
    for q in dihedral_images(as_perm(p)):
        dirs = _alternation_directions(q)
        if dirs is None:
            continue
        odd, even = dirs
        if same and odd & even:
            return True
        if not same and any(a != b for a in odd for b in even):
            return True
    return False


def is_parallel_alternation(p: Sequence[int]) -> bool:
    return _alternation(p, same=True)


def is_wedge_alternation(p: Sequence[int]) -> bool:
    return _alternation(p, same=False)
