"""Detectors for the forbidden induced patterns, with explicit witnesses.

A witness lists vertices in the pattern's canonical labeling order (path
order for paths, cycle order for holes). Searches are exhaustive
backtracking, so a None result proves absence. The returned witness is
always the lexicographically least one, which keeps outputs deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graphs import Graph, GraphError, cycle_graph, path_graph, _bits

# canonical adjacency for the small fixed patterns; vertex order defines the
# witness labeling
_DIAMOND_EDGES = ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3))          # K4 minus 0-3
_KITE_EDGES = _DIAMOND_EDGES + ((3, 4),)                            # pendant at a degree-2 vertex
_GEM_EDGES = ((0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4))  # P4 plus apex
_BULL_EDGES = ((0, 1), (0, 2), (1, 2), (0, 3), (1, 4))              # triangle plus two pendants

PATTERN_NAMES = ("P7", "C4", "C7", "diamond", "kite", "gem", "bull")

CLASS_NAMES = ("diamond-class", "kite-class", "gem-class")


@lru_cache(maxsize=None)
def pattern_graph(name: str) -> Graph:
    """The canonical copy of a named pattern (holes via 'hole(k)')."""
    if name == "P7":
        return path_graph(7)
    if name == "C4":
        return cycle_graph(4)
    if name == "C7":
        return cycle_graph(7)
    if name == "diamond":
        return Graph(4, _DIAMOND_EDGES)
    if name == "kite":
        return Graph(5, _KITE_EDGES)
    if name == "gem":
        return Graph(5, _GEM_EDGES)
    if name == "bull":
        return Graph(5, _BULL_EDGES)
    k = _parse_hole(name)
    if k is not None:
        return cycle_graph(k)
    raise GraphError(f"unknown pattern {name!r}")


def _parse_hole(name: str) -> int | None:
    if name.startswith("hole(") and name.endswith(")"):
        try:
            return int(name[5:-1])
        except ValueError:
            return None
    return None


@dataclass(frozen=True)
class PatternWitness:
    """A named pattern plus the vertex list inducing it, in canonical order."""

    pattern: str
    vertices: tuple[int, ...]

    def to_json(self) -> dict:
        return {"pattern": self.pattern, "vertices": list(self.vertices)}


@dataclass(frozen=True)
class ClassCertificate:
    """Membership verdict for one of the three hereditary classes.

    free is True exactly when witness is None; a present witness is a
    forbidden pattern found inside the graph.
    """

    class_name: str
    free: bool
    witness: PatternWitness | None

    def to_json(self) -> dict:
        return {
            "class": self.class_name,
            "free": self.free,
            "witness": self.witness.to_json() if self.witness else None,
        }


def find_induced_pattern(g: Graph, pattern: str) -> PatternWitness | None:
    """Lex-least induced copy of the pattern, or None (proof of absence)."""
    if pattern == "P7":
        got = _find_induced_path(g, 7)
    elif pattern in ("C4", "C7"):
        got = _find_induced_cycle(g, int(pattern[1]))
    else:
        k = _parse_hole(pattern)
        if k is not None:
            if k < 4:
                raise GraphError("holes have length at least 4")
            got = _find_induced_cycle(g, k)
        else:
            got = _find_fixed_pattern(g, pattern_graph(pattern))
    if got is None:
        return None
    return PatternWitness(pattern, got)


def find_hole(g: Graph, k: int) -> PatternWitness | None:
    """A k-hole in cycle order, or None with an exhaustive-search guarantee."""
    if k < 4:
        raise GraphError("holes have length at least 4")
    got = _find_induced_cycle(g, k)
    return PatternWitness(f"hole({k})", got) if got is not None else None


def _find_fixed_pattern(g: Graph, pat: Graph) -> tuple[int, ...] | None:
    """Backtracking over partial maps with adjacency/non-adjacency pruning."""
    k = pat.n
    if g.n < k:
        return None
    gadj = g.adj
    full = g.full_mask()
    padj = pat.adj
    chosen = [0] * k

    def place(pos: int, used: int) -> bool:
        cand = full & ~used
        for i in range(pos):
            if padj[pos] >> i & 1:
                cand &= gadj[chosen[i]]
            else:
                cand &= ~gadj[chosen[i]]
        for v in _bits(cand):
            chosen[pos] = v
            if pos + 1 == k or place(pos + 1, used | 1 << v):
                return True
        return False

    return tuple(chosen) if place(0, 0) else None


def _find_induced_path(g: Graph, k: int) -> tuple[int, ...] | None:
    """Lex-least induced P_k as a path-ordered tuple."""
    if g.n < k:
        return None
    adj = g.adj
    path = [0] * k

    def extend(pos: int, used: int, blocked: int) -> bool:
        # blocked: union of neighborhoods of path[0..pos-2]
        last = path[pos - 1]
        cand = adj[last] & ~used & ~blocked
        for v in _bits(cand):
            path[pos] = v
            if pos + 1 == k:
                return True
            if extend(pos + 1, used | 1 << v, blocked | adj[last]):
                return True
        return False

    for start in range(g.n):
        path[0] = start
        if k == 1 or extend(1, 1 << start, 0):
            return tuple(path[:k])
    return None


def _find_induced_cycle(g: Graph, k: int) -> tuple[int, ...] | None:
    """Lex-least induced C_k in cycle order.

    The lex-least tuple starts at the cycle's smallest vertex with its
    smaller neighbor second, so searching ascending candidates above the
    start vertex is exhaustive.
    """
    if g.n < k:
        return None
    adj = g.adj
    cyc = [0] * k

    def extend(pos: int, used: int, blocked: int) -> bool:
        # blocked: union of neighborhoods of cyc[1..pos-2]; the start vertex
        # is handled separately since the final vertex must close the cycle
        start = cyc[0]
        last = cyc[pos - 1]
        cand = adj[last] & ~used & ~blocked
        if pos == k - 1:
            cand &= adj[start]
            cand &= ~((1 << (cyc[1] + 1)) - 1)  # mirror symmetry: c1 < c_{k-1}
        elif pos >= 2:
            cand &= ~adj[start]
        # every later vertex exceeds the start in the lex-least tuple
        cand &= ~((1 << (start + 1)) - 1)
        for v in _bits(cand):
            cyc[pos] = v
            if pos + 1 == k:
                return True
            if extend(pos + 1, used | 1 << v, blocked | (adj[last] if pos >= 2 else 0)):
                return True
        return False

    for start in range(g.n):
        cyc[0] = start
        if extend(1, 1 << start, 0):
            return tuple(cyc)
    return None


def _normalize_class(class_name: str) -> str:
    name = class_name.lower()
    if not name.endswith("-class"):
        name += "-class"
    if name not in CLASS_NAMES:
        raise GraphError(f"unknown class {class_name!r}")
    return name


def class_third_pattern(class_name: str) -> str:
    return _normalize_class(class_name).removesuffix("-class")


def class_membership(g: Graph, class_name: str) -> ClassCertificate:
    """Check (P7, C4, X)-freeness for X in {diamond, kite, gem}.

    P7 is tested first, then C4, then X; the first witness found decides.
    """
    name = _normalize_class(class_name)
    for pattern in ("P7", "C4", name.removesuffix("-class")):
        w = find_induced_pattern(g, pattern)
        if w is not None:
            return ClassCertificate(name, False, w)
    return ClassCertificate(name, True, None)
