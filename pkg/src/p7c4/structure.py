"""Decomposition toolbox: clique cutsets and atoms, universal-clique peeling,
bisimplicial vertices, clique-blowup recognition, fixed-graph recognition.

All searches break ties toward the lowest vertex index, so results are
deterministic and test-stable.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .families import graph_f, petersen
from .graphs import Graph, GraphError, _bits, find_isomorphism, induced_subgraph, is_clique


@dataclass(frozen=True)
class CliqueCutsetSplit:
    """A clique whose removal separates side_a from side_b."""

    cutset: frozenset[int]
    side_a: frozenset[int]
    side_b: frozenset[int]

    def to_json(self) -> dict:
        return {
            "cutset": sorted(self.cutset),
            "side_a": sorted(self.side_a),
            "side_b": sorted(self.side_b),
        }


def validate_split(g: Graph, split: CliqueCutsetSplit) -> None:
    """Raise unless the split is a genuine clique-cutset partition of g."""
    parts = (split.cutset, split.side_a, split.side_b)
    if not split.side_a or not split.side_b:
        raise GraphError("cutset split sides must be nonempty")
    if sum(len(p) for p in parts) != g.n or set().union(*parts) != set(range(g.n)):
        raise GraphError("cutset split must partition the vertex set")
    if not is_clique(g, split.cutset):
        raise GraphError("cutset is not a clique")
    bmask = 0
    for v in split.side_b:
        bmask |= 1 << v
    if any(g.adj[a] & bmask for a in split.side_a):
        raise GraphError("edges cross between the two sides")


def _mcsm(g: Graph) -> tuple[list[int], list[int]]:
    """MCS-M: a minimal elimination ordering plus its fill-in.

    Returns (sigma, fill_adj) where sigma[k] is the vertex at position k+1
    of the ordering and fill_adj are adjacency masks of the filled graph.
    """
    n = g.n
    weights = [0] * n
    numbered = [False] * n
    sigma = [0] * n
    fill_adj = list(g.adj)
    for slot in range(n - 1, -1, -1):
        v = max((u for u in range(n) if not numbered[u]), key=lambda u: (weights[u], -u))
        # minimax internal weight of unnumbered paths into v
        best = {}
        heap = []
        for u in _bits(g.adj[v]):
            if not numbered[u]:
                best[u] = -1
                heapq.heappush(heap, (-1, u))
        while heap:
            d, u = heapq.heappop(heap)
            if d > best.get(u, n):
                continue
            for w in _bits(g.adj[u]):
                if numbered[w] or w == v:
                    continue
                nd = max(d, weights[u])
                if nd < best.get(w, n):
                    best[w] = nd
                    heapq.heappush(heap, (nd, w))
        for u, d in best.items():
            if d < weights[u]:
                weights[u] += 1
                fill_adj[u] |= 1 << v
                fill_adj[v] |= 1 << u
        numbered[v] = True
        sigma[slot] = v
    return sigma, fill_adj


def find_clique_cutset(g: Graph) -> CliqueCutsetSplit | None:
    """A clique cutset split if one exists, else None.

    Scans a minimal elimination ordering; by the classical decomposition
    theorem the scan finds a clique separator whenever one exists.
    """
    if not g.is_connected():
        raise GraphError("clique cutset search requires a connected graph")
    n = g.n
    if n <= 2:
        return None
    sigma, fill_adj = _mcsm(g)
    later = g.full_mask()
    for v in sigma:
        later ^= 1 << v
        cmask = fill_adj[v] & later
        if not _mask_is_clique(g, cmask):
            continue
        # component of v in g minus the candidate cutset
        comp = 1 << v
        frontier = comp
        while frontier:
            grow = 0
            for u in _bits(frontier):
                grow |= g.adj[u]
            grow &= ~cmask
            frontier = grow & ~comp
            comp |= grow
        rest = g.full_mask() & ~comp & ~cmask
        if rest:
            split = CliqueCutsetSplit(
                cutset=frozenset(_bits(cmask)),
                side_a=frozenset(_bits(comp)),
                side_b=frozenset(_bits(rest)),
            )
            validate_split(g, split)
            return split
    return None


def _mask_is_clique(g: Graph, mask: int) -> bool:
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        m ^= 1 << v
        if (g.adj[v] & mask) != mask ^ (1 << v):
            return False
    return True


def has_clique_cutset_bruteforce(g: Graph) -> bool:
    """Exhaustive oracle: some clique K with g - K disconnected. Small n only."""
    if not g.is_connected():
        raise GraphError("oracle requires a connected graph")
    n = g.n
    for mask in range(1 << n):
        if mask == 0 or mask == g.full_mask():
            continue
        if not _mask_is_clique(g, mask):
            continue
        outside = [v for v in range(n) if not mask >> v & 1]
        if not induced_subgraph(g, outside).is_connected():
            return True
    return False


@dataclass
class AtomDecomposition:
    """Binary tree of clique-cutset splits; leaves are cutset-free atoms.

    All vertex sets refer to the original graph's labels. An internal node
    has split/left/right set; a leaf has atom set.
    """

    split: CliqueCutsetSplit | None = None
    left: "AtomDecomposition | None" = None
    right: "AtomDecomposition | None" = None
    atom: frozenset[int] | None = None

    def leaves(self) -> list[frozenset[int]]:
        if self.atom is not None:
            return [self.atom]
        return self.left.leaves() + self.right.leaves()

    def depth(self) -> int:
        if self.atom is not None:
            return 0
        return 1 + max(self.left.depth(), self.right.depth())

    def to_json(self) -> dict:
        if self.atom is not None:
            return {"atom": sorted(self.atom)}
        return {
            "split": self.split.to_json(),
            "left": self.left.to_json(),
            "right": self.right.to_json(),
        }


def decompose_into_atoms(g: Graph) -> AtomDecomposition:
    """Recursive clique-cutset decomposition down to cutset-free atoms."""
    if not g.is_connected():
        raise GraphError("atom decomposition requires a connected graph")
    return _decompose(g, tuple(range(g.n)))


def _decompose(sub: Graph, labels: tuple[int, ...]) -> AtomDecomposition:
    split = find_clique_cutset(sub)
    if split is None:
        return AtomDecomposition(atom=frozenset(labels))
    lifted = CliqueCutsetSplit(
        cutset=frozenset(labels[v] for v in split.cutset),
        side_a=frozenset(labels[v] for v in split.side_a),
        side_b=frozenset(labels[v] for v in split.side_b),
    )

    def block_child(side: frozenset[int]) -> AtomDecomposition:
        block = sorted(side | split.cutset)
        return _decompose(induced_subgraph(sub, block), tuple(labels[v] for v in block))

    return AtomDecomposition(
        split=lifted,
        left=block_child(split.side_a),
        right=block_child(split.side_b),
    )


@dataclass(frozen=True)
class BisimplicialCertificate:
    """A vertex whose neighborhood is covered by two cliques."""

    vertex: int
    clique1: frozenset[int]
    clique2: frozenset[int]

    def to_json(self) -> dict:
        return {
            "vertex": self.vertex,
            "clique1": sorted(self.clique1),
            "clique2": sorted(self.clique2),
        }


def split_into_two_cliques(g: Graph, vertices: frozenset[int]) -> tuple[frozenset[int], frozenset[int]] | None:
    """Partition the set into two cliques of g if possible.

    Works by 2-coloring the complement of the induced subgraph: the set is a
    union of two cliques iff that complement is bipartite.
    """
    vs = sorted(vertices)
    if not vs:
        return frozenset(), frozenset()
    color = {}
    for start in vs:
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop(0)
            for w in vs:
                if w == u or g.has_edge(u, w):
                    continue  # complement edges are the non-adjacent pairs
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    side0 = frozenset(v for v in vs if color[v] == 0)
    return side0, frozenset(vertices) - side0


def find_bisimplicial(g: Graph) -> BisimplicialCertificate | None:
    """Lowest-index vertex whose neighborhood splits into two cliques."""
    for v in range(g.n):
        got = split_into_two_cliques(g, frozenset(_bits(g.adj[v])))
        if got is not None:
            return BisimplicialCertificate(v, got[0], got[1])
    return None


@dataclass(frozen=True)
class PeelResult:
    """Count of universal vertices peeled off, plus what remains."""

    ell: int
    remainder: frozenset[int]

    def to_json(self) -> dict:
        return {"ell": self.ell, "remainder": sorted(self.remainder)}


def peel_universal_clique(g: Graph) -> PeelResult:
    """Remove every universal vertex in one pass.

    Universal vertices are mutually adjacent, so they form a clique; the
    remainder can contain no universal-in-remainder vertex (such a vertex
    would have been universal in g already).
    """
    full = g.full_mask()
    universal = [v for v in range(g.n) if g.adj[v] == full ^ (1 << v)]
    remainder = frozenset(range(g.n)) - set(universal)
    return PeelResult(ell=len(universal), remainder=remainder)


@dataclass(frozen=True)
class BlowupCertificate:
    """Witness that a graph is a clique blowup of the given base."""

    base: Graph
    classes: tuple[frozenset[int], ...]
    class_map: dict[int, int]  # base vertex -> index into classes

    def weights(self) -> tuple[int, ...]:
        return tuple(len(self.classes[self.class_map[i]]) for i in range(self.base.n))

    def to_json(self) -> dict:
        return {
            "classes": [sorted(c) for c in self.classes],
            "class_map": {str(v): i for v, i in self.class_map.items()},
        }


def recognize_clique_blowup(g: Graph, base: Graph) -> BlowupCertificate | None:
    """Decide whether g is a clique blowup of the twin-free base.

    True-twin classes (equal closed neighborhoods) are the only possible
    blowup classes; the quotient on them is compared against the base by
    isomorphism. Bases with true twins are rejected: their quotient would
    be ambiguous.
    """
    for u in range(base.n):
        for v in range(u + 1, base.n):
            if base.adj[u] | 1 << u == base.adj[v] | 1 << v:
                raise GraphError("blowup base must be twin-free")
    if g.n == 0 or g.n < base.n:
        return None
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.adj[v] | 1 << v, []).append(v)
    classes = tuple(frozenset(c) for c in sorted(groups.values()))
    if len(classes) != base.n:
        return None
    if not all(is_clique(g, c) for c in classes):
        return None
    reps = [min(c) for c in classes]
    quotient = Graph(len(reps), [
        (i, j)
        for i in range(len(reps))
        for j in range(i + 1, len(reps))
        if g.has_edge(reps[i], reps[j])
    ])
    iso = find_isomorphism(base, quotient)
    if iso is None:
        return None
    # confirm the inter-class relations really are uniform per base adjacency
    for i in range(base.n):
        for j in range(i + 1, base.n):
            want = base.has_edge(i, j)
            ci, cj = classes[iso[i]], classes[iso[j]]
            if any(g.has_edge(u, w) != want for u in ci for w in cj):
                return None
    return BlowupCertificate(base=base, classes=classes, class_map=dict(iso))


def recognize_fixed(g: Graph) -> str | None:
    """Name the graph if it is one of the two fixed exceptional graphs."""
    if g.n == 10:
        if find_isomorphism(g, petersen()) is not None:
            return "Petersen"
        if find_isomorphism(g, graph_f()) is not None:
            return "F"
    return None
