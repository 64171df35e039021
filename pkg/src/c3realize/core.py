"""Core combinatorial structures: hypergraphs, tournaments, graphs.

Vertices are dense indices 0..n-1.  Edges and vertex subsets are bit masks
(see :mod:`c3realize.bitset`).  All structures are immutable after
construction, so values can be shared and hashed freely.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

from .bitset import as_mask, bit_list, full_mask, iter_bits
from .errors import PreconditionError

__all__ = [
    "Hypergraph",
    "Tournament",
    "Graph",
    "induced_subhypergraph",
    "c3_structure",
    "dual",
    "linear_order",
    "is_linear_order",
    "critical_family",
]


class Hypergraph:
    """A finite hypergraph: ``n`` vertices and a set of edges of size >= 2.

    Edges are stored as a frozenset of bit masks, which makes membership
    tests O(1) and hypergraph equality an exact set comparison.
    """

    __slots__ = ("n", "edges", "is_3_uniform")

    def __init__(self, n: int, edges: Iterable[int | Iterable[int]] = ()):
        if n < 0:
            raise PreconditionError(f"vertex count must be >= 0, got {n}")
        masks = frozenset(as_mask(e) for e in edges)
        full = full_mask(n)
        for e in masks:
            if e & ~full:
                raise PreconditionError(
                    f"edge {bit_list(e)} has members outside 0..{n - 1}")
            if e.bit_count() < 2:
                raise PreconditionError(
                    f"edge {bit_list(e)} has fewer than 2 vertices")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", masks)
        object.__setattr__(self, "is_3_uniform",
                           all(e.bit_count() == 3 for e in masks))

    def __setattr__(self, name, value):
        raise AttributeError("Hypergraph is immutable")

    @classmethod
    def _from_masks(cls, n: int, masks: frozenset[int]) -> "Hypergraph":
        """Internal fast constructor; caller guarantees validity."""
        h = object.__new__(cls)
        object.__setattr__(h, "n", n)
        object.__setattr__(h, "edges", masks)
        object.__setattr__(h, "is_3_uniform",
                           all(e.bit_count() == 3 for e in masks))
        return h

    @property
    def vertex_mask(self) -> int:
        return full_mask(self.n)

    def edge_lists(self) -> list[list[int]]:
        """Edges as sorted index lists, sorted lexicographically."""
        return sorted(bit_list(e) for e in self.edges)

    def has_edge(self, vertices: int | Iterable[int]) -> bool:
        return as_mask(vertices) in self.edges

    def induced(self, vertices: int | Iterable[int]) -> "Hypergraph":
        return induced_subhypergraph(self, vertices)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Hypergraph)
                and self.n == other.n and self.edges == other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Hypergraph({self.n}, {self.edge_lists()})"


def induced_subhypergraph(h: Hypergraph, vertices: int | Iterable[int]) -> Hypergraph:
    """The subhypergraph induced by a vertex subset, re-indexed to 0..k-1.

    Vertex i of the result corresponds to the i-th smallest member of
    ``vertices``; that sorted order is the recorded old->new index map.
    Keeps exactly the edges contained in the subset.
    """
    w = as_mask(vertices)
    if w & ~h.vertex_mask:
        raise PreconditionError(
            f"subset {bit_list(w)} not within 0..{h.n - 1}")
    old = bit_list(w)
    new_of_old = {v: i for i, v in enumerate(old)}
    kept = []
    for e in h.edges:
        if e & ~w == 0:
            kept.append(sum(1 << new_of_old[v] for v in iter_bits(e)))
    return Hypergraph._from_masks(len(old), frozenset(kept))


class Tournament:
    """A complete antisymmetric orientation of the pairs on 0..n-1.

    ``succ[i]`` is the bit mask of vertices that i beats (arcs i -> j).
    """

    __slots__ = ("n", "succ")

    def __init__(self, n: int, succ: Iterable[int]):
        succ = tuple(succ)
        if n < 0 or len(succ) != n:
            raise PreconditionError(f"need {n} out-neighbour masks, got {len(succ)}")
        full = full_mask(n)
        for i, s in enumerate(succ):
            if s & ~full or (s >> i) & 1:
                raise PreconditionError(f"invalid out-neighbour mask for vertex {i}")
        for i in range(n):
            for j in range(i + 1, n):
                if ((succ[i] >> j) & 1) == ((succ[j] >> i) & 1):
                    raise PreconditionError(
                        f"pair {{{i},{j}}} must have exactly one arc")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "succ", succ)

    def __setattr__(self, name, value):
        raise AttributeError("Tournament is immutable")

    @classmethod
    def _from_succ(cls, n: int, succ: tuple[int, ...]) -> "Tournament":
        t = object.__new__(cls)
        object.__setattr__(t, "n", n)
        object.__setattr__(t, "succ", succ)
        return t

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Tournament":
        succ = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise PreconditionError(f"invalid arc ({u},{v})")
            succ[u] |= 1 << v
        return cls(n, succ)

    @property
    def vertex_mask(self) -> int:
        return full_mask(self.n)

    def has_arc(self, u: int, v: int) -> bool:
        return bool((self.succ[u] >> v) & 1)

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in iter_bits(self.succ[u]):
                yield (u, v)

    def dual(self) -> "Tournament":
        return dual(self)

    def induced(self, vertices: int | Iterable[int]) -> "Tournament":
        """Subtournament on a vertex subset, re-indexed by sorted position."""
        w = as_mask(vertices)
        if w & ~self.vertex_mask:
            raise PreconditionError(
                f"subset {bit_list(w)} not within 0..{self.n - 1}")
        old = bit_list(w)
        succ = []
        for v in old:
            s = 0
            for j, u in enumerate(old):
                if (self.succ[v] >> u) & 1:
                    s |= 1 << j
            succ.append(s)
        return Tournament._from_succ(len(old), tuple(succ))

    def relabel(self, phi: dict[int, int] | list[int]) -> "Tournament":
        """Image under a vertex bijection: arc u->v becomes phi[u]->phi[v]."""
        succ = [0] * self.n
        for u in range(self.n):
            s = 0
            for v in iter_bits(self.succ[u]):
                s |= 1 << phi[v]
            succ[phi[u]] = s
        return Tournament._from_succ(self.n, tuple(succ))

    def scores(self) -> list[int]:
        return [s.bit_count() for s in self.succ]

    def __eq__(self, other) -> bool:
        return (isinstance(other, Tournament)
                and self.n == other.n and self.succ == other.succ)

    def __hash__(self) -> int:
        return hash((self.n, self.succ))

    def __repr__(self) -> str:
        return f"Tournament({self.n}, arcs={sorted(self.arcs())})"


class Graph:
    """A simple undirected graph on 0..n-1 with bit-mask adjacency rows."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise PreconditionError(f"invalid edge ({u},{v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def _from_adj(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u]):
                if u < v:
                    out.append((u, v))
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {self.edges()})"


# --- tournament operations -------------------------------------------------

def c3_structure(t: Tournament) -> Hypergraph:
    """The 3-uniform hypergraph of vertex triples inducing a directed 3-cycle.

    A triple {u,v,w} is cyclic iff the three pair orientations chain around:
    counting u->v, v->w, w->u gives 3 or 0 exactly for the two cyclic
    orientations, 1 or 2 for the transitive ones.
    """
    succ = t.succ
    edges = []
    for u, v, w in combinations(range(t.n), 3):
        k = ((succ[u] >> v) & 1) + ((succ[v] >> w) & 1) + ((succ[w] >> u) & 1)
        if k == 0 or k == 3:
            edges.append((1 << u) | (1 << v) | (1 << w))
    return Hypergraph._from_masks(t.n, frozenset(edges))


def dual(t: Tournament) -> Tournament:
    """The tournament with every arc reversed."""
    full = t.vertex_mask
    succ = tuple((full & ~t.succ[i]) & ~(1 << i) for i in range(t.n))
    return Tournament._from_succ(t.n, succ)


def linear_order(n: int) -> Tournament:
    """The increasing linear order on 0..n-1 (arc p->q for p < q)."""
    if n < 1:
        raise PreconditionError(f"order must be >= 1, got {n}")
    full = full_mask(n)
    succ = tuple(full & ~full_mask(i + 1) for i in range(n))
    return Tournament._from_succ(n, succ)


def is_linear_order(t: Tournament) -> bool:
    """True iff the tournament has no 3-cycle.

    A tournament is transitive exactly when its scores are pairwise
    distinct, i.e. the score sequence is 0,1,...,n-1.
    """
    return sorted(t.scores()) == list(range(t.n))


def critical_family(kind: str, n: int) -> Tournament:
    """One of the three critical tournament families of odd order ``n`` >= 5.

    Each is the linear order on 0..n-1 with a prescribed arc set reversed:
    kind "T" reverses every arc joining an even and an odd vertex, kind "U"
    every arc joining two even vertices, and kind "W" every arc joining the
    top vertex n-1 to an even vertex below it.
    """
    if kind not in ("T", "U", "W"):
        raise PreconditionError(f"kind must be one of T, U, W, got {kind!r}")
    if n % 2 == 0 or n < 5:
        raise PreconditionError(f"order must be odd and >= 5, got {n}")

    def reversed_pair(p: int, q: int) -> bool:
        p_even = p % 2 == 0
        q_even = q % 2 == 0
        if kind == "T":
            return p_even != q_even
        if kind == "U":
            return p_even and q_even
        return q == n - 1 and p_even  # kind == "W", q is the top vertex

    succ = [0] * n
    for p in range(n):
        for q in range(p + 1, n):
            if reversed_pair(p, q):
                succ[q] |= 1 << p
            else:
                succ[p] |= 1 << q
    return Tournament._from_succ(n, tuple(succ))
