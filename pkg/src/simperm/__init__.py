"""Simple permutations: simplicity, exceptional families, the pattern poset and wreath-closed classes."""

from .errors import *  # noqa: F401,F403
from .exceptional import (
    ExceptionalDescriptor,
    exceptional_perm,
    exceptional_types_of,
    is_exceptional,
    is_parallel_alternation,
    is_wedge_alternation,
)
from .perm import (
    GridSlot,
    IntervalWitness,
    children,
    delete_point,
    format_perm,
    insert_point,
    is_simple,
    nontrivial_interval,
    parse_permutation,
    pattern_occurs,
    simple_extensions,
    symmetry,
)
from .poset import (
    Chain,
    DegreeStats,
    PosetGraph,
    build_poset,
    enumerate_simples,
    find_chain,
    outdegree_stats,
    pattern_closure,
)
from .trie import PermSet
from .wreath import Basis, LevelResult, generate, generate_general, validate_basis

__version__ = "0.1.0"
