"""
The poset of simple permutations under pattern containment.

Levels are generated bottom-up: every non-exceptional simple permutation of
size n has a simple one-point deletion, so level n is the union of the simple
one-point extensions of level n-1 plus the (at most four) exceptional
permutations of size n.

Two edge kinds are kept. Deletion edges join a simple permutation to its
simple one-point deletions; together they form the graph usually called G1.
Exceptional edges join an exceptional permutation to the same-family
exceptional two sizes smaller. The union of both kinds is the covering
relation of the poset.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotAPattern, NotSimple, SizeTooSmall
from .exceptional import exceptional_types_of, exceptionals_of_size, is_exceptional, smaller_same_family
from .perm import Perm, _children, _forbidden_slots, _is_simple, as_perm, format_perm, pattern_occurs

__all__ = [
    "PosetGraph", "Chain", "DegreeStats",
    "enumerate_simples", "build_poset", "pattern_closure", "find_chain", "outdegree_stats",
    "to_dot", "to_json", "stats_to_csv",
]

SEED_LEVEL = [(2, 4, 1, 3), (3, 1, 4, 2)]


@dataclass
class PosetGraph:
    levels: dict[int, list[Perm]]
    deletion_edges: set[tuple[Perm, Perm]] = field(default_factory=set)
    exceptional_edges: set[tuple[Perm, Perm]] = field(default_factory=set)

    @property
    def nodes(self) -> list[Perm]:
        return [p for n in sorted(self.levels) for p in self.levels[n]]

    def level_sizes(self) -> dict[int, int]:
        return {n: len(ps) for n, ps in sorted(self.levels.items())}

    def successors(self, p: Perm) -> list[Perm]:
        return sorted({c for a, c in self.deletion_edges | self.exceptional_edges if a == p})

    def outdegree_g1(self, p: Perm) -> int:
        return sum(1 for a, _ in self.deletion_edges if a == p)


@dataclass(frozen=True)
class Chain:
    """``perms[0]`` is the top; steps before ``split`` drop one entry, later steps drop two."""
    perms: tuple[Perm, ...]
    split: int

    def __len__(self):
        return len(self.perms) - 1

    @property
    def gaps(self) -> list[int]:
        return [len(a) - len(b) for a, b in zip(self.perms, self.perms[1:])]


@dataclass(frozen=True)
class DegreeStats:
    n: int
    s_n: int
    histogram: dict[int, int]
    average_outdegree: Fraction

    @property
    def edge_count(self) -> int:
        return sum(k * c for k, c in self.histogram.items())

    def proportions(self) -> dict[int, float]:
        return {k: c / self.s_n for k, c in sorted(self.histogram.items())}


def _extend_all(parents: Sequence[Perm]) -> set[Perm]:
    out: set[Perm] = set()
    for p in parents:
        n = len(p)
        bad = _forbidden_slots(p)
        for value in range(1, n + 2):
            shifted = tuple(x + (x >= value) for x in p)
            for pos in range(n + 1):
                if (pos, value) not in bad:
                    out.add(shifted[:pos] + (value,) + shifted[pos:])
    return out


def _chunks(items: Sequence, k: int) -> list[Sequence]:
    step = max(1, -(-len(items) // k))
    return [items[i:i + step] for i in range(0, len(items), step)]


def _map_chunks(fn, items: Sequence, workers: int) -> list:
    if workers <= 1 or len(items) < 1000:
        return [fn(items)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, _chunks(items, workers * 4)))


def next_level(level: Sequence[Perm], workers: int = 1) -> list[Perm]:
    """All simple permutations one size above ``level`` (which must be complete)."""
    n = len(level[0]) + 1
    found: set[Perm] = set().union(*_map_chunks(_extend_all, list(level), workers))
    found.update(exceptionals_of_size(n))
    return sorted(found)


def enumerate_simples(max_n: int, workers: int = 1) -> dict[int, list[Perm]]:
    """Sorted simple permutations of every size from 4 to ``max_n``."""
    if max_n < 4:
        raise SizeTooSmall(f"max_n must be >= 4, got {max_n}")
    levels = {4: list(SEED_LEVEL)}
    for n in range(5, max_n + 1):
        levels[n] = next_level(levels[n - 1], workers)
    return levels


def _exceptional_edges(nodes: Iterable[Perm]) -> set[tuple[Perm, Perm]]:
    return {(p, q) for p in nodes if len(p) >= 6 for q in smaller_same_family(p)}


def build_poset(max_n: int, workers: int = 1) -> PosetGraph:
    levels = enumerate_simples(max_n, workers)
    deletion = {(p, c) for n in levels if n >= 5 for p in levels[n] for c in _children(p)}
    nodes = [p for ps in levels.values() for p in ps]
    return PosetGraph(levels, deletion, _exceptional_edges(nodes))


def pattern_closure(sigma: Sequence[int]) -> PosetGraph:
    """Sub-poset of the simple patterns (size >= 4) of a simple ``sigma``."""
    sigma = as_perm(sigma)
    if not _is_simple(sigma):
        raise NotSimple(format_perm(sigma))
    seen = {sigma}
    deletion, skips = set(), set()
    queue = deque([sigma])
    while queue:
        p = queue.popleft()
        below = []
        if len(p) >= 5:
            for c in _children(p):
                deletion.add((p, c))
                below.append(c)
        if len(p) >= 6:
            for c in smaller_same_family(p):
                skips.add((p, c))
                below.append(c)
        for c in below:
            if c not in seen:
                seen.add(c)
                queue.append(c)
    levels: dict[int, list[Perm]] = {}
    for p in seen:
        if len(p) >= 4:
            levels.setdefault(len(p), []).append(p)
    levels = {n: sorted(levels[n]) for n in sorted(levels)}
    return PosetGraph(levels, deletion, skips)


def find_chain(sigma: Sequence[int], pi: Sequence[int]) -> Chain:
    """A chain of simple permutations from ``sigma`` down to its pattern ``pi``.

    A non-exceptional ``sigma`` always admits a chain deleting one entry per
    step. The greedy walk keeps only non-exceptional children (or ``pi``
    itself) that still contain ``pi``; an exceptional child bigger than
    ``pi`` would be a dead end. An exceptional ``sigma`` descends through its
    own family two entries at a time.
    """
    sigma, pi = as_perm(sigma), as_perm(pi)
    for p in (sigma, pi):
        if not _is_simple(p):
            raise NotSimple(format_perm(p))
    if len(pi) < 4:
        raise SizeTooSmall("the target pattern must have size >= 4")
    if sigma == pi or not pattern_occurs(pi, sigma):
        raise NotAPattern(f"{format_perm(pi)} is not a proper pattern of {format_perm(sigma)}")

    types = exceptional_types_of(sigma)
    if types:
        # pi is then the same-family exceptional of its size
        fam = {d.family for d in types} & {d.family for d in exceptional_types_of(pi)}
        chain = [sigma]
        while len(chain[-1]) > len(pi):
            step = [q for q in smaller_same_family(chain[-1]) if fam & {d.family for d in exceptional_types_of(q)}]
            chain.append(step[0])
        return Chain(tuple(chain), 0)

    chain = [sigma]
    while chain[-1] != pi:
        for c in sorted(_children(chain[-1])):
            if c == pi or (not is_exceptional(c) and pattern_occurs(pi, c)):
                chain.append(c)
                break
        else:
            raise RuntimeError(f"no admissible child below {format_perm(chain[-1])}")
    return Chain(tuple(chain), len(chain) - 1)


def _outdegrees(level: Sequence[Perm]) -> Counter:
    return Counter(len(_children(p)) for p in level)


def outdegree_stats(max_n: int, workers: int = 1,
                    levels: dict[int, list[Perm]] | None = None) -> list[DegreeStats]:
    """Outdegree distribution in G1 for every size from 5 to ``max_n``."""
    if max_n < 5:
        raise SizeTooSmall(f"max_n must be >= 5, got {max_n}")
    if levels is None or max(levels) < max_n:
        levels = enumerate_simples(max_n, workers)
    out = []
    for n in range(5, max_n + 1):
        hist: Counter = Counter()
        for part in _map_chunks(_outdegrees, levels[n], workers):
            hist.update(part)
        s_n = len(levels[n])
        edges = sum(k * c for k, c in hist.items())
        out.append(DegreeStats(n, s_n, dict(sorted(hist.items())), Fraction(edges, s_n)))
    return out


def _node_attrs(p: Perm) -> str:
    fams = sorted({d.family for d in exceptional_types_of(p)})
    label = format_perm(p)
    if fams:
        return f'label="{label}", exceptional="{",".join(map(str, fams))}"'
    return f'label="{label}"'


def to_dot(g: PosetGraph, name: str = "simples") -> str:
    lines = [f"digraph {name} {{", "  rankdir=TB;"]
    for n in sorted(g.levels, reverse=True):
        for p in g.levels[n]:
            lines.append(f'  "{format_perm(p)}" [{_node_attrs(p)}];')
    for a, b in sorted(g.deletion_edges):
        lines.append(f'  "{format_perm(a)}" -> "{format_perm(b)}";')
    for a, b in sorted(g.exceptional_edges):
        lines.append(f'  "{format_perm(a)}" -> "{format_perm(b)}" [style=dashed, skip="2"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: PosetGraph) -> str:
    doc = {
        "levels": {str(n): [format_perm(p) for p in g.levels[n]] for n in sorted(g.levels)},
        "deletion_edges": [[format_perm(a), format_perm(b)] for a, b in sorted(g.deletion_edges)],
        "exceptional_edges": [[format_perm(a), format_perm(b)] for a, b in sorted(g.exceptional_edges)],
    }
    return json.dumps(doc, indent=1) + "\n"


def from_json(text: str) -> PosetGraph:
    from .perm import parse_permutation

    doc = json.loads(text)
    levels = {int(n): [parse_permutation(s) for s in ps] for n, ps in doc["levels"].items()}
    edges = {k: {(parse_permutation(a), parse_permutation(b)) for a, b in doc[k]}
             for k in ("deletion_edges", "exceptional_edges")}
    return PosetGraph(levels, edges["deletion_edges"], edges["exceptional_edges"])


def stats_to_csv(stats: Iterable[DegreeStats]) -> str:
    rows = ["n,s_n,k,S_n_k,D_n_num,D_n_den"]
    for st in stats:
        d = st.average_outdegree
        for k, c in sorted(st.histogram.items()):
            if c:
                rows.append(f"{st.n},{st.s_n},{k},{c},{d.numerator},{d.denominator}")
    return "\n".join(rows) + "\n"
