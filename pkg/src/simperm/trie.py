"""Prefix-tree set of permutations; membership costs one dict lookup per entry."""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

_END = None  # key marking a stored sequence; never a valid entry


class PermSet:
    """Set of integer tuples stored as one trie per length.

    >>> s = PermSet([(2, 4, 1, 3)])
    >>> (2, 4, 1, 3) in s, (3, 1, 4, 2) in s
    (True, False)
    """

    def __init__(self, items: Iterable[Sequence[int]] = ()):
        self._roots: dict[int, dict] = {}
        self._sizes: dict[int, int] = {}
        for item in items:
            self.add(item)

    def add(self, item: Sequence[int]) -> bool:
        """Insert ``item``; return False if it was already present."""
        node = self._roots.setdefault(len(item), {})
        for v in item:
            node = node.setdefault(v, {})
        if _END in node:
            return False
        node[_END] = True
        self._sizes[len(item)] = self._sizes.get(len(item), 0) + 1
        return True

    def __contains__(self, item: Sequence[int]) -> bool:
        node = self._roots.get(len(item))
        if node is None:
            return False
        for v in item:
            node = node.get(v)
            if node is None:
                return False
        return _END in node

    def __len__(self) -> int:
        return sum(self._sizes.values())

    def count(self, n: int) -> int:
        return self._sizes.get(n, 0)

    def sizes(self) -> list[int]:
        return sorted(n for n, c in self._sizes.items() if c)

    def of_size(self, n: int) -> Iterator[tuple[int, ...]]:
        """Members of length ``n`` in lexicographic order."""
        root = self._roots.get(n)
        if root is None:
            return
        stack: list[tuple[dict, tuple[int, ...]]] = [(root, ())]
        while stack:
            node, prefix = stack.pop()
            if _END in node:
                yield prefix
            keys = sorted((k for k in node if k is not _END), reverse=True)
            stack.extend((node[k], prefix + (k,)) for k in keys)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        for n in self.sizes():
            yield from self.of_size(n)

    def __repr__(self):
        return f"PermSet({list(self)!r})"
