"""
Simple permutations of a wreath-closed class Av(B), level by level.

For a basis made of simple permutations, a non-exceptional simple sigma of
size n lies in Av(B) iff sigma is not in B and every simple one-point
deletion of sigma is a simple member of the class of size n-1.  So level n is
computed from level n-1 by one-point insertions plus a membership test per
deletion, with no pattern-containment test at all.  Exceptional permutations
have no simple one-point deletion; they are carried over from level n-2
along their family.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CapRequired, NonSimpleBasisElement, TrivialBasisElement
from .exceptional import exceptional_perm, exceptional_types_of
from .perm import Perm, _delete, _forbidden_slots, _is_simple, as_perm, format_perm, pattern_occurs
from .trie import PermSet

__all__ = ["Basis", "LevelResult", "validate_basis", "generate", "generate_general", "read_basis"]

log = logging.getLogger(__name__)

DEFAULT_MAX_LEVEL = 64
_TRIVIAL = {(1,), (1, 2), (2, 1)}


@dataclass(frozen=True)
class Basis:
    perms: frozenset[Perm]

    def __iter__(self):
        return iter(sorted(self.perms))

    def __len__(self):
        return len(self.perms)


@dataclass
class LevelResult:
    levels: dict[int, list[Perm]]
    terminated: bool
    cap: int | None = None
    # per level n >= 5: (parent, slot) pairs visited and distinct candidates tested
    slots_visited: dict[int, int] = field(default_factory=dict)
    candidates: dict[int, int] = field(default_factory=dict)

    def level(self, n: int) -> list[Perm]:
        return self.levels.get(n, [])

    @property
    def max_size(self) -> int:
        return max(self.levels)

    def to_dict(self) -> dict:
        return {
            "levels": {str(n): [format_perm(p) for p in ps] for n, ps in sorted(self.levels.items())},
            "terminated": self.terminated,
            "cap": self.cap,
            "candidates": {str(n): c for n, c in sorted(self.candidates.items())},
        }


def read_basis(lines: Iterable[str]) -> list[Perm]:
    """Basis file lines: one permutation each; blank lines and ``#`` comments skipped."""
    from .perm import parse_permutation

    out = []
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(parse_permutation(line))
    return out


def validate_basis(perms: Iterable[Sequence[int]]) -> Basis:
    checked = set()
    for p in perms:
        p = as_perm(p)
        if p in _TRIVIAL:
            raise TrivialBasisElement(f"basis may not contain {format_perm(p)}")
        if not _is_simple(p):
            raise NonSimpleBasisElement(f"{format_perm(p)} is not simple")
        checked.add(p)
    return Basis(frozenset(checked))


def _initial_levels(accept) -> dict[int, PermSet]:
    seeds = {1: [(1,)], 2: [(1, 2), (2, 1)], 3: [], 4: [(2, 4, 1, 3), (3, 1, 4, 2)]}
    return {n: PermSet(p for p in ps if accept(p)) for n, ps in seeds.items()}


def _run(si: dict[int, PermSet], accept_candidate, accept_exceptional,
         cap: int | None, max_level: int) -> LevelResult:
    slots_visited: dict[int, int] = {}
    candidates: dict[int, int] = {}
    n = 5
    while len(si[n - 1]) or len(si[n - 2]):
        if cap is not None and n > cap:
            break
        if cap is None and n > max_level:
            raise CapRequired(f"frontier still nonempty at size {n}; pass a cap")
        prev = si[n - 1]
        level = PermSet()
        seen = PermSet()
        visited = 0
        for pi in prev:
            bad = _forbidden_slots(pi)
            for value in range(1, n + 1):
                shifted = tuple(x + (x >= value) for x in pi)
                for pos in range(n):
                    if (pos, value) in bad:
                        continue
                    visited += 1
                    sigma = shifted[:pos] + (value,) + shifted[pos:]
                    if not seen.add(sigma):
                        continue
                    if accept_candidate(sigma, prev):
                        level.add(sigma)
        for pi in si[n - 2]:
            for d in exceptional_types_of(pi):
                sigma = exceptional_perm((d.family, d.m + 1))
                if accept_exceptional(sigma):
                    level.add(sigma)
        si[n] = level
        slots_visited[n] = visited
        candidates[n] = len(seen)
        log.info("size %d: %d candidates, %d kept", n, len(seen), len(level))
        n += 1
    terminated = not (len(si[n - 1]) or len(si[n - 2]))
    levels = {k: list(s) for k, s in sorted(si.items())}
    return LevelResult(levels, terminated, cap, slots_visited, candidates)


def generate(basis: Basis | Iterable[Sequence[int]], cap: int | None = None,
             max_level: int = DEFAULT_MAX_LEVEL) -> LevelResult:
    """Simple permutations of Av(basis), size by size, for a basis of simple permutations.

    Runs until two consecutive levels are empty (the class has finitely many
    simple permutations) or until size ``cap``.  Without a cap, a frontier that
    is still alive past ``max_level`` raises :class:`CapRequired`.
    """
    if not isinstance(basis, Basis):
        basis = validate_basis(basis)
    forbidden = PermSet(basis.perms)

    def accept_candidate(sigma: Perm, prev: PermSet) -> bool:
        if sigma in forbidden:
            return False
        for i in range(len(sigma)):
            tau = _delete(sigma, i)
            if _is_simple(tau) and tau not in prev:
                return False
        return True

    def accept_exceptional(sigma: Perm) -> bool:
        return sigma not in forbidden

    si = _initial_levels(lambda p: p not in forbidden)
    return _run(si, accept_candidate, accept_exceptional, cap, max_level)


def generate_general(basis_any: Iterable[Sequence[int]], cap: int) -> LevelResult:
    """Same expansion as :func:`generate` for an arbitrary basis, testing avoidance directly."""
    if cap is None:
        raise CapRequired("generate_general needs an explicit cap")
    basis = sorted({as_perm(b) for b in basis_any})

    def avoids(sigma: Perm) -> bool:
        return not any(pattern_occurs(b, sigma) for b in basis)

    si = _initial_levels(avoids)
    return _run(si, lambda sigma, prev: avoids(sigma), avoids, cap, cap)
