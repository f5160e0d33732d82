"""
Brute-force reference semantics and exhaustive property runners.

Nothing here reuses the fast paths of :mod:`simperm.perm`: simplicity is
checked window by window with sets, patterns are found by enumerating
position subsets, and one-point insertions are built by standardizing a
sequence with a half-integer value spliced in.  Runners enumerate every
instance up to a stated size and return concrete counterexamples.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Callable, Sequence

from .errors import SizeGuard, UnknownProperty
from .exceptional import FAMILIES, exceptional_perm, exceptional_types_of
from .perm import Perm, format_perm
from .poset import find_chain

__all__ = [
    "PropertyReport", "PROPERTIES",
    "naive_is_simple", "naive_standardize", "naive_contains", "naive_extensions",
    "brute_simples", "brute_simple_patterns", "run_property", "run_all",
]

SIMPLES_GUARD = 9
PATTERNS_GUARD = 10


def naive_is_simple(p: Sequence[int]) -> bool:
    n = len(p)
    for size in range(2, n):
        for i in range(n - size + 1):
            window = set(p[i:i + size])
            if max(window) - min(window) == size - 1:
                return False
    return True


def naive_standardize(values: Sequence) -> Perm:
    order = sorted(range(len(values)), key=lambda i: values[i])
    out = [0] * len(values)
    for rank, i in enumerate(order, 1):
        out[i] = rank
    return tuple(out)


def naive_contains(pi: Sequence[int], sigma: Sequence[int]) -> bool:
    pi = tuple(pi)
    return any(naive_standardize([sigma[i] for i in idx]) == pi
               for idx in combinations(range(len(sigma)), len(pi)))


def naive_insert(p: Sequence[int], position: int, value: int) -> Perm:
    seq = list(p[:position]) + [value - 0.5] + list(p[position:])
    return naive_standardize(seq)


def naive_extensions(p: Sequence[int]) -> dict[Perm, list[tuple[int, int]]]:
    """Simple one-point extensions of ``p`` mapped to every grid slot producing them."""
    n = len(p)
    out: dict[Perm, list[tuple[int, int]]] = {}
    for pos in range(n + 1):
        for val in range(1, n + 2):
            q = naive_insert(p, pos, val)
            if naive_is_simple(q):
                out.setdefault(q, []).append((pos, val))
    return out


@lru_cache(maxsize=None)
def _brute_simples(n: int) -> frozenset[Perm]:
    return frozenset(p for p in permutations(range(1, n + 1)) if naive_is_simple(p))


def brute_simples(n: int, guard: int = SIMPLES_GUARD) -> frozenset[Perm]:
    if n > guard:
        raise SizeGuard(f"n={n} exceeds factorial guard {guard}")
    if n < 1:
        return frozenset()
    return _brute_simples(n)


def brute_simple_patterns(sigma: Sequence[int], m: int, guard: int = PATTERNS_GUARD) -> set[Perm]:
    if len(sigma) > guard:
        raise SizeGuard(f"|sigma|={len(sigma)} exceeds subset guard {guard}")
    out = set()
    for idx in combinations(range(len(sigma)), m):
        q = naive_standardize([sigma[i] for i in idx])
        if q not in out and naive_is_simple(q):
            out.add(q)
    return out


@dataclass
class PropertyReport:
    property: str
    min_n: int
    max_n: int
    instances: int = 0
    counterexamples: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def fail(self, *witness):
        self.counterexamples.append(tuple(format_perm(w) if isinstance(w, tuple) else w for w in witness))

    def to_dict(self) -> dict:
        d = asdict(self)
        d["counterexamples"] = sorted(map(list, self.counterexamples))
        d["ok"] = self.ok
        return d

    def summary(self) -> str:
        status = "ok" if self.ok else f"FAILED ({len(self.counterexamples)} counterexamples)"
        return f"{self.property}: sizes {self.min_n}..{self.max_n}, {self.instances} instances, {status}"


def _families(p: Perm) -> set[int]:
    return {d.family for d in exceptional_types_of(p)}


def _simples_between(lo: int, hi: int):
    for n in range(lo, hi + 1):
        yield from sorted(brute_simples(n))


def _non_exceptional_simples(lo: int, hi: int):
    return (s for s in _simples_between(lo, hi) if not exceptional_types_of(s))


def _exceptionals(lo: int, hi: int):
    for n in range(max(lo, 4), hi + 1, 1):
        if n % 2 == 0:
            yield from sorted({exceptional_perm((f, n // 2)) for f in FAMILIES})


def _exceptional_order(r: PropertyReport):
    descs = [(f, m) for m in range(2, r.max_n // 2 + 1) for f in FAMILIES]
    for f, m in descs:
        for g, k in descs:
            if k < m:
                continue
            small, big = exceptional_perm((f, m)), exceptional_perm((g, k))
            r.instances += 1
            expected = bool(_families(small) & _families(big))
            if naive_contains(small, big) != expected:
                r.fail(small, big)


def _size4_pattern(r: PropertyReport):
    for s in _simples_between(r.min_n, r.max_n):
        r.instances += 1
        if not brute_simple_patterns(s, 4):
            r.fail(s)


def _plus_two(r: PropertyReport):
    for s in _simples_between(r.min_n, r.max_n):
        for m in range(4, len(s) - 1):
            upper = brute_simple_patterns(s, m + 2)
            for pi in brute_simple_patterns(s, m):
                r.instances += 1
                if not any(naive_contains(pi, t) for t in upper):
                    r.fail(s, pi)


def _exceptional_parity(r: PropertyReport):
    for s in _exceptionals(r.min_n, r.max_n):
        for m in range(3, len(s) + 1):
            r.instances += 1
            has = bool(brute_simple_patterns(s, m, guard=r.max_n))
            if has != (m % 2 == 0):
                r.fail(s, m)


def _every_size(r: PropertyReport):
    for s in _non_exceptional_simples(r.min_n, r.max_n):
        for m in range(4, len(s) + 1):
            r.instances += 1
            if not brute_simple_patterns(s, m):
                r.fail(s, m)


def _exceptional_patterns(r: PropertyReport):
    for s in _exceptionals(r.min_n, r.max_n):
        fams = _families(s)
        for m in range(3, len(s) + 1):
            r.instances += 1
            found = brute_simple_patterns(s, m, guard=r.max_n)
            if m % 2:
                expected = set()
            else:
                expected = {exceptional_perm((f, m // 2)) for f in fams}
            if found != expected:
                r.fail(s, m)


def _corner_or_pair(r: PropertyReport):
    for n in range(r.min_n, r.max_n + 1):
        for t in permutations(range(1, n + 1)):
            if naive_is_simple(t):
                continue
            for i in range(n):
                rest = naive_standardize(t[:i] + t[i + 1:])
                if not naive_is_simple(rest):
                    continue
                r.instances += 1
                corner = i in (0, n - 1) and t[i] in (1, n)
                pair = any(0 <= j < n and abs(t[j] - t[i]) == 1 for j in (i - 1, i + 1))
                if not (corner or pair):
                    r.fail(t, i + 1)


def _one_point_step(r: PropertyReport):
    for s in _non_exceptional_simples(r.min_n, r.max_n):
        n = len(s)
        mids = brute_simple_patterns(s, n - 1)
        for pi in brute_simple_patterns(s, n - 2):
            if n - 2 < 4:
                continue
            r.instances += 1
            if not any(naive_contains(pi, t) for t in mids):
                r.fail(s, pi)


def _one_point_descent(r: PropertyReport):
    for s in _non_exceptional_simples(r.min_n, r.max_n):
        n = len(s)
        mids = brute_simple_patterns(s, n - 1)
        for m in range(4, n):
            for pi in brute_simple_patterns(s, m):
                r.instances += 1
                if not any(naive_contains(pi, t) for t in mids):
                    r.fail(s, pi)


def _check_chain(r: PropertyReport, s: Perm, pi: Perm, unit_only: bool):
    r.instances += 1
    try:
        c = find_chain(s, pi)
    except Exception as exc:  # a failure to find a chain is itself a counterexample
        r.fail(s, pi, type(exc).__name__)
        return
    perms, k, split = c.perms, len(c.perms) - 1, c.split
    ok = perms[0] == s and perms[-1] == pi and all(naive_is_simple(p) for p in perms)
    for i in range(1, k + 1):
        gap = len(perms[i - 1]) - len(perms[i])
        ok = ok and gap == (1 if i <= split else 2) and naive_contains(perms[i], perms[i - 1])
    if split < k:
        ok = ok and all(exceptional_types_of(p) for p in perms[split:])
    if unit_only:
        ok = ok and split == k == len(s) - len(pi)
    if not ok:
        r.fail(s, pi)


def _two_phase_chain(r: PropertyReport):
    for s in _simples_between(r.min_n, r.max_n):
        for m in range(4, len(s)):
            for pi in sorted(brute_simple_patterns(s, m)):
                _check_chain(r, s, pi, unit_only=False)


def _unit_chain(r: PropertyReport):
    for s in _non_exceptional_simples(r.min_n, r.max_n):
        for m in range(4, len(s)):
            for pi in sorted(brute_simple_patterns(s, m)):
                _check_chain(r, s, pi, unit_only=True)


def _occurrences(pattern: Perm, host: Perm) -> list[frozenset[int]]:
    return [frozenset(idx) for idx in combinations(range(len(host)), len(pattern))
            if naive_standardize([host[i] for i in idx]) == pattern]


def _exceptional_cover(r: PropertyReport):
    for big in _exceptionals(max(r.min_n, 6), r.max_n):
        half = len(big) // 2 - 1
        for f in sorted(_families(big)):
            small = exceptional_perm((f, half))
            occ = _occurrences(small, big)
            for points in combinations(range(len(big)), half):
                r.instances += 1
                if not any(o.issuperset(points) for o in occ):
                    r.fail(big, small, tuple(i + 1 for i in points))


def _exceptional_bridge(r: PropertyReport):
    for big in _exceptionals(max(r.min_n, 6), r.max_n):
        for f in sorted(_families(big)):
            small = exceptional_perm((f, len(big) // 2 - 1))
            for sigma in sorted(naive_extensions(big)):
                r.instances += 1
                found = False
                for idx in combinations(range(len(sigma)), len(small) + 1):
                    tau = naive_standardize([sigma[i] for i in idx])
                    if not naive_is_simple(tau):
                        continue
                    if any(naive_standardize(tau[:i] + tau[i + 1:]) == small for i in range(len(tau))):
                        found = True
                        break
                if not found:
                    r.fail(big, small, sigma)


def _unique_insertion(r: PropertyReport):
    for p in _simples_between(r.min_n, r.max_n):
        for q, slots in sorted(naive_extensions(p).items()):
            r.instances += 1
            if len(slots) != 1:
                r.fail(p, q, len(slots))


def _indegree(r: PropertyReport):
    for p in _simples_between(r.min_n, r.max_n):
        n = len(p)
        r.instances += 1
        count = len(naive_extensions(p))
        if count != (n + 1) * (n - 3):
            r.fail(p, count)


@dataclass(frozen=True)
class _Runner:
    check: Callable[[PropertyReport], None]
    min_n: int
    default_max: int
    hard_max: int
    doc: str


PROPERTIES: dict[str, _Runner] = {
    "exceptional-order": _Runner(_exceptional_order, 4, 12, 16,
                                 "exceptionals are comparable iff they share a family"),
    "size4-pattern": _Runner(_size4_pattern, 4, 8, 9,
                             "every simple permutation contains 2413 or 3142"),
    "plus-two": _Runner(_plus_two, 6, 7, 8,
                        "simple pi < sigma has a simple tau between them two sizes above pi"),
    "exceptional-parity": _Runner(_exceptional_parity, 4, 12, 16,
                                  "an exceptional has simple patterns of exactly the even sizes"),
    "every-size": _Runner(_every_size, 5, 8, 8,
                          "a non-exceptional simple has a simple pattern of every size >= 4"),
    "exceptional-patterns": _Runner(_exceptional_patterns, 4, 12, 16,
                                    "the even-size simple patterns of an exceptional are its own family"),
    "corner-or-pair": _Runner(_corner_or_pair, 3, 8, 8,
                              "a point whose removal makes a permutation simple is a corner or in a 2-interval"),
    "one-point-step": _Runner(_one_point_step, 5, 8, 8,
                              "a size n-2 simple pattern of a non-exceptional sits under a size n-1 one"),
    "one-point-descent": _Runner(_one_point_descent, 5, 8, 8,
                                 "every simple pattern of a non-exceptional sits under a size n-1 one"),
    "two-phase-chain": _Runner(_two_phase_chain, 5, 7, 8,
                               "chains descend by one, then by two through exceptionals"),
    "exceptional-cover": _Runner(_exceptional_cover, 6, 12, 16,
                                 "any half-minus-one points of an exceptional lie in one smaller copy"),
    "exceptional-bridge": _Runner(_exceptional_bridge, 6, 12, 14,
                                  "an exceptional pair under a one-point extension is bridged by a simple"),
    "unit-chain": _Runner(_unit_chain, 5, 7, 8,
                          "a non-exceptional reaches each simple pattern one deletion at a time"),
    "unique-insertion": _Runner(_unique_insertion, 4, 7, 8,
                                "a simple one-point extension arises from exactly one grid slot"),
    "indegree": _Runner(_indegree, 4, 7, 8,
                        "a simple of size n has (n+1)(n-3) simple one-point extensions"),
}


def run_property(prop: str, max_n: int | None = None) -> PropertyReport:
    try:
        runner = PROPERTIES[prop]
    except KeyError:
        raise UnknownProperty(f"unknown property {prop!r}; known: {', '.join(PROPERTIES)}") from None
    hi = runner.default_max if max_n is None else max_n
    if hi > runner.hard_max:
        raise SizeGuard(f"{prop} is only feasible up to size {runner.hard_max}")
    report = PropertyReport(prop, runner.min_n, hi)
    runner.check(report)
    report.counterexamples.sort()
    return report


def run_all() -> list[PropertyReport]:
    return [run_property(p) for p in PROPERTIES]
