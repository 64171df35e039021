"""Modules, strong modules, quotients, and modular decomposition trees.

Implements the module machinery for hypergraphs (a vertex set M is a module
when every edge straddling M meets it in exactly one vertex, and that vertex
can be swapped for any member of M without leaving the edge set) and the
interval-style analogue for tournaments.  Module enumeration is exact brute
force over vertex subsets, bounded by ``DEFAULT_BOUND``.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .bitset import VertexSet, as_mask, bit_list, full_mask, iter_bits, iter_submasks
from .core import Hypergraph, Tournament, is_linear_order
from .errors import CapacityError, PreconditionError

__all__ = [
    "DEFAULT_BOUND",
    "LABEL_PRIME", "LABEL_EMPTY", "LABEL_COMPLETE", "LABEL_LINEAR",
    "is_module", "module_violation", "is_usual_module",
    "enumerate_modules", "enumerate_usual_modules",
    "is_strong_module", "strong_modules", "is_prime",
    "ModularPartition", "maximal_proper_strong_modules", "quotient",
    "components", "smallest_strong_module_containing",
    "TreeNode", "DecompositionTree", "decomposition_tree",
    "tournament_is_module", "tournament_modules", "tournament_strong_modules",
    "tournament_is_prime", "tournament_pi", "tournament_quotient",
    "tournament_decomposition_tree",
]

DEFAULT_BOUND = 20

LABEL_PRIME = "prime"
LABEL_EMPTY = "empty"
LABEL_COMPLETE = "complete"
LABEL_LINEAR = "linear"

_HYPERGRAPH_SYMBOLS = {LABEL_PRIME: "△", LABEL_EMPTY: "◯",
                       LABEL_COMPLETE: "●"}


def _check_subset(h, m: int, what: str = "set") -> None:
    if m & ~full_mask(h.n):
        raise PreconditionError(f"{what} {bit_list(m)} not within 0..{h.n - 1}")


def _check_capacity(n: int, bound: int, what: str) -> None:
    if n > bound:
        raise CapacityError(what, n, bound)


# --- hypergraph module predicates -------------------------------------------

def _is_module_over(edges: Iterable[int], membership: frozenset[int], m: int) -> bool:
    """Module test for ``m`` against a straddle-candidate edge collection.

    ``membership`` may be any edge set whose restriction to the relevant
    vertex span agrees with ``edges``; swapped edges stay within that span.
    """
    for e in edges:
        inter = e & m
        if inter == 0 or e & ~m == 0:
            continue
        if inter & (inter - 1):  # straddling edge meets m in >= 2 vertices
            return False
        base = e ^ inter
        rest = m ^ inter
        while rest:
            b = rest & -rest
            rest ^= b
            if (base | b) not in membership:
                return False
    return True


def is_module(h: Hypergraph, vertices: int | Iterable[int]) -> bool:
    """True iff the vertex set is a module of ``h``."""
    m = as_mask(vertices)
    _check_subset(h, m)
    return _is_module_over(h.edges, h.edges, m)


def module_violation(h: Hypergraph, vertices: int | Iterable[int]) -> VertexSet | None:
    """The first edge witnessing that the set is not a module, else None.

    Edges are scanned in canonical order (sorted vertex lists); the returned
    edge either meets the set in two or more vertices while leaving it, or
    has a member swap that is not an edge.
    """
    m = as_mask(vertices)
    _check_subset(h, m)
    for e in sorted(h.edges, key=bit_list):
        if not _is_module_over((e,), h.edges, m):
            return VertexSet(e)
    return None


def is_usual_module(h: Hypergraph, vertices: int | Iterable[int]) -> bool:
    """Module in the componentwise-replacement sense, kept as a comparison
    predicate: for every edge e straddling the set, replacing the part of e
    inside the set by any equal-size subset of the set must give an edge.
    """
    from itertools import combinations

    m = as_mask(vertices)
    _check_subset(h, m)
    members = bit_list(m)
    for e in h.edges:
        inter = e & m
        if inter == 0 or e & ~m == 0:
            continue
        base = e & ~m
        k = inter.bit_count()
        for repl in combinations(members, k):
            f = base
            for v in repl:
                f |= 1 << v
            if f not in h.edges:
                return False
    return True


# --- enumeration -------------------------------------------------------------

def _edges_within(h: Hypergraph, w: int) -> list[int]:
    return [e for e in h.edges if e & ~w == 0]


def _modules_within(h: Hypergraph, w: int) -> list[int]:
    """All modules of the subhypergraph induced by ``w``, as masks within w.

    No re-indexing: an edge of H[w] is an edge of H contained in w, and a
    swap target stays inside w, so membership can be tested against h.edges.
    """
    edges = _edges_within(h, w)
    membership = h.edges
    out = []
    for m in iter_submasks(w):
        if _is_module_over(edges, membership, m):
            out.append(m)
    return out


def enumerate_modules(h: Hypergraph, bound: int = DEFAULT_BOUND) -> frozenset[VertexSet]:
    """Exactly the modules of ``h``, including the trivial ones."""
    _check_capacity(h.n, bound, "module enumeration")
    return frozenset(VertexSet(m) for m in _modules_within(h, full_mask(h.n)))


def enumerate_usual_modules(h: Hypergraph, bound: int = DEFAULT_BOUND) -> frozenset[VertexSet]:
    _check_capacity(h.n, bound, "module enumeration")
    return frozenset(VertexSet(m) for m in iter_submasks(full_mask(h.n))
                     if is_usual_module(h, m))


def _overlaps(a: int, b: int) -> bool:
    return bool(a & b) and bool(a & ~b) and bool(b & ~a)


def _strong_of(mods: list[int]) -> list[int]:
    return [m for m in mods if not any(_overlaps(m, x) for x in mods)]


def is_strong_module(h: Hypergraph, vertices: int | Iterable[int],
                     bound: int = DEFAULT_BOUND) -> bool:
    """True iff the set is a module overlapping no other module of ``h``."""
    m = as_mask(vertices)
    if not is_module(h, m):
        return False
    mods = enumerate_modules(h, bound)
    return not any(_overlaps(m, x) for x in mods)


def strong_modules(h: Hypergraph, bound: int = DEFAULT_BOUND) -> frozenset[VertexSet]:
    """All strong modules of ``h`` (the tree nodes, plus the empty set)."""
    _check_capacity(h.n, bound, "module enumeration")
    mods = _modules_within(h, full_mask(h.n))
    return frozenset(VertexSet(m) for m in _strong_of(mods))


def is_prime(h: Hypergraph, bound: int = DEFAULT_BOUND) -> bool:
    """True iff ``h`` has at least 3 vertices and only trivial modules."""
    if h.n < 3:
        return False
    _check_capacity(h.n, bound, "module enumeration")
    full = full_mask(h.n)
    edges = list(h.edges)
    for m in iter_submasks(full):
        c = m.bit_count()
        if c < 2 or c == h.n:
            continue
        if _is_module_over(edges, h.edges, m):
            return False
    return True


# --- modular partitions and quotients ----------------------------------------

class ModularPartition:
    """A partition of the host's vertices into modules, validated on construction.

    Blocks are kept in canonical order (by smallest contained vertex).  The
    host may be a hypergraph or a tournament.
    """

    __slots__ = ("host", "blocks")

    def __init__(self, host: Hypergraph | Tournament, blocks: Iterable[int | Iterable[int]]):
        masks = [as_mask(b) for b in blocks]
        masks.sort(key=lambda m: (m & -m).bit_length())
        union = 0
        for b in masks:
            if b == 0:
                raise PreconditionError("partition blocks must be nonempty")
            if b & union:
                raise PreconditionError("partition blocks must be disjoint")
            union |= b
        if union != full_mask(host.n):
            raise PreconditionError("partition blocks must cover the vertex set")
        if isinstance(host, Tournament):
            bad = [b for b in masks if not tournament_is_module(host, b)]
        else:
            bad = [b for b in masks if not is_module(host, b)]
        if bad:
            raise PreconditionError(f"block {bit_list(bad[0])} is not a module")
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "blocks", tuple(VertexSet(b) for b in masks))

    def __setattr__(self, name, value):
        raise AttributeError("ModularPartition is immutable")

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def block_of(self, v: int) -> int:
        for i, b in enumerate(self.blocks):
            if (b >> v) & 1:
                return i
        raise PreconditionError(f"vertex {v} not covered")

    def __repr__(self) -> str:
        return f"ModularPartition({[bit_list(b) for b in self.blocks]})"


def _pi_within(h: Hypergraph, w: int) -> list[int]:
    """Maximal proper strong modules of H[w], as masks, in canonical order."""
    mods = _modules_within(h, w)
    strong = _strong_of(mods)
    proper = [m for m in strong if m != 0 and m != w]
    blocks = [m for m in proper
              if not any(m != x and m & x == m for x in proper)]
    blocks.sort(key=lambda m: (m & -m).bit_length())
    union = 0
    for b in blocks:
        assert b & union == 0, "maximal proper strong modules must be disjoint"
        union |= b
    assert union == w, "maximal proper strong modules must cover"
    return blocks


def maximal_proper_strong_modules(h: Hypergraph, bound: int = DEFAULT_BOUND) -> ModularPartition:
    """The partition into maximal proper strong modules."""
    if h.n < 2:
        raise PreconditionError("need at least 2 vertices")
    _check_capacity(h.n, bound, "module enumeration")
    return ModularPartition(h, _pi_within(h, full_mask(h.n)))


def _quotient_edge_masks(edges: Iterable[int], blocks: tuple[int, ...]) -> frozenset[int]:
    out = set()
    for e in edges:
        hit = 0
        for i, b in enumerate(blocks):
            if e & b:
                hit |= 1 << i
        if hit.bit_count() >= 2:
            out.add(hit)
    return frozenset(out)


def quotient(h: Hypergraph, partition: ModularPartition) -> Hypergraph:
    """The quotient hypergraph on the partition blocks.

    Block i of the partition becomes vertex i; a set of blocks is an edge
    iff some edge of ``h`` meets exactly those blocks (and at least two).
    """
    if not isinstance(partition, ModularPartition) or partition.host is not h:
        partition = ModularPartition(h, list(partition))
    blocks = tuple(int(b) for b in partition.blocks)
    return Hypergraph._from_masks(len(blocks), _quotient_edge_masks(h.edges, blocks))


def components(h: Hypergraph) -> list[VertexSet]:
    """Vertex sets of the connected components, in canonical order.

    Two vertices are connected when a chain of pairwise-intersecting edges
    joins them; vertices in no edge are singleton components.
    """
    seen = 0
    out = []
    for v in range(h.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        changed = True
        while changed:
            changed = False
            for e in h.edges:
                if e & comp and e & ~comp:
                    comp |= e
                    changed = True
        seen |= comp
        out.append(VertexSet(comp))
    return out


# --- decomposition trees -------------------------------------------------------

class TreeNode:
    """A strong module with its children and, when internal, a quotient label."""

    __slots__ = ("members", "label", "children")

    def __init__(self, members: int, label: str | None, children: tuple["TreeNode", ...]):
        object.__setattr__(self, "members", VertexSet(members))
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "children", children)

    def __setattr__(self, name, value):
        raise AttributeError("TreeNode is immutable")

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def __repr__(self) -> str:
        if self.is_leaf:
            return f"TreeNode({bit_list(self.members)})"
        return f"TreeNode({bit_list(self.members)}, {self.label}, {len(self.children)} children)"


class DecompositionTree:
    """The inclusion tree of the nonempty strong modules.

    The root is the full vertex set, leaves are singletons, and the children
    of an internal node are the maximal proper strong modules of the induced
    substructure, ordered by smallest contained vertex.
    """

    __slots__ = ("root", "n", "kind")

    def __init__(self, root: TreeNode, n: int, kind: str):
        object.__setattr__(self, "root", root)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "kind", kind)

    def __setattr__(self, name, value):
        raise AttributeError("DecompositionTree is immutable")

    def nodes(self) -> Iterator[TreeNode]:
        """All nodes in depth-first preorder."""
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def internal_nodes(self) -> Iterator[TreeNode]:
        return (x for x in self.nodes() if not x.is_leaf)

    def node_members(self) -> frozenset[VertexSet]:
        return frozenset(x.members for x in self.nodes())

    def lowest_node_containing(self, vertices: int | Iterable[int]) -> TreeNode:
        s = as_mask(vertices)
        if s == 0 or s & ~int(self.root.members):
            raise PreconditionError("need a nonempty subset of the vertex set")
        node = self.root
        while True:
            for child in node.children:
                if s & ~int(child.members) == 0:
                    node = child
                    break
            else:
                return node

    def _display_label(self, label: str) -> str:
        if self.kind == "hypergraph":
            return _HYPERGRAPH_SYMBOLS[label]
        return label

    def to_json(self) -> dict:
        """Nested ``{"module": [...], "label": ..., "children": [...]}``."""
        def conv(node: TreeNode) -> dict:
            return {
                "module": bit_list(node.members),
                "label": None if node.is_leaf else self._display_label(node.label),
                "children": [conv(c) for c in node.children],
            }
        return conv(self.root)

    def to_dot(self) -> str:
        """Graphviz source; children are ordered by smallest contained vertex."""
        lines = ["digraph decomposition {", "  node [shape=box];"]
        counter = 0

        def visit(node: TreeNode) -> int:
            nonlocal counter
            ident = counter
            counter += 1
            vs = ",".join(map(str, bit_list(node.members)))
            if node.is_leaf:
                lines.append(f'  n{ident} [label="{vs}" shape=plaintext];')
            else:
                sym = self._display_label(node.label)
                lines.append(f'  n{ident} [label="{sym} {{{vs}}}"];')
            for child in node.children:
                cid = visit(child)
                lines.append(f"  n{ident} -> n{cid};")
            return ident

        visit(self.root)
        lines.append("}")
        return "\n".join(lines)


def _classify_quotient(h: Hypergraph, w: int, blocks: list[int],
                       bound: int) -> str:
    qedges = _quotient_edge_masks(_edges_within(h, w), tuple(blocks))
    k = len(blocks)
    if not qedges:
        return LABEL_EMPTY
    all_pairs = {(1 << i) | (1 << j) for i in range(k) for j in range(i + 1, k)}
    if qedges == all_pairs:
        return LABEL_COMPLETE
    q = Hypergraph._from_masks(k, qedges)
    assert is_prime(q, bound), "quotient by maximal proper strong modules must be prime"
    return LABEL_PRIME


def decomposition_tree(h: Hypergraph, bound: int = DEFAULT_BOUND) -> DecompositionTree:
    """The full labeled modular decomposition tree of ``h``."""
    if h.n < 1:
        raise PreconditionError("need at least 1 vertex")
    _check_capacity(h.n, bound, "module enumeration")

    def build(w: int) -> TreeNode:
        if w & (w - 1) == 0:
            return TreeNode(w, None, ())
        blocks = _pi_within(h, w)
        label = _classify_quotient(h, w, blocks, bound)
        if h.is_3_uniform:
            # a 3-edge meeting >= 2 blocks meets each exactly once, so the
            # quotient of a 3-uniform hypergraph has no 2-edges
            assert label != LABEL_COMPLETE, "complete label unreachable for 3-uniform input"
        return TreeNode(w, label, tuple(build(b) for b in blocks))

    return DecompositionTree(build(full_mask(h.n)), h.n, "hypergraph")


def smallest_strong_module_containing(h: Hypergraph, vertices: int | Iterable[int],
                                      bound: int = DEFAULT_BOUND) -> VertexSet:
    """The intersection of all strong modules containing the given set."""
    s = as_mask(vertices)
    if s == 0:
        raise PreconditionError("need a nonempty vertex set")
    _check_subset(h, s)
    best = full_mask(h.n)
    for m in strong_modules(h, bound):
        if s & ~m == 0 and m.bit_count() < best.bit_count():
            best = int(m)
    return VertexSet(best)


# --- tournament analogues ------------------------------------------------------

def tournament_is_module(t: Tournament, vertices: int | Iterable[int]) -> bool:
    """Interval-style module test: no outside vertex splits the set by arcs."""
    m = as_mask(vertices)
    _check_subset(t, m)
    for v in iter_bits(full_mask(t.n) & ~m):
        s = t.succ[v] & m
        if s != 0 and s != m:
            return False
    return True


def _t_modules_within(t: Tournament, w: int) -> list[int]:
    out = []
    for m in iter_submasks(w):
        ok = True
        for v in iter_bits(w & ~m):
            s = t.succ[v] & m
            if s != 0 and s != m:
                ok = False
                break
        if ok:
            out.append(m)
    return out


def tournament_modules(t: Tournament, bound: int = DEFAULT_BOUND) -> frozenset[VertexSet]:
    _check_capacity(t.n, bound, "module enumeration")
    return frozenset(VertexSet(m) for m in _t_modules_within(t, full_mask(t.n)))


def tournament_strong_modules(t: Tournament, bound: int = DEFAULT_BOUND) -> frozenset[VertexSet]:
    _check_capacity(t.n, bound, "module enumeration")
    mods = _t_modules_within(t, full_mask(t.n))
    return frozenset(VertexSet(m) for m in _strong_of(mods))


def tournament_is_prime(t: Tournament, bound: int = DEFAULT_BOUND) -> bool:
    if t.n < 3:
        return False
    _check_capacity(t.n, bound, "module enumeration")
    for m in iter_submasks(full_mask(t.n)):
        c = m.bit_count()
        if c < 2 or c == t.n:
            continue
        ok = True
        for v in iter_bits(full_mask(t.n) & ~m):
            s = t.succ[v] & m
            if s != 0 and s != m:
                ok = False
                break
        if ok:
            return False
    return True


def _t_pi_within(t: Tournament, w: int) -> list[int]:
    mods = _t_modules_within(t, w)
    strong = _strong_of(mods)
    proper = [m for m in strong if m != 0 and m != w]
    blocks = [m for m in proper
              if not any(m != x and m & x == m for x in proper)]
    blocks.sort(key=lambda m: (m & -m).bit_length())
    union = 0
    for b in blocks:
        assert b & union == 0, "maximal proper strong modules must be disjoint"
        union |= b
    assert union == w, "maximal proper strong modules must cover"
    return blocks


def tournament_pi(t: Tournament, bound: int = DEFAULT_BOUND) -> ModularPartition:
    if t.n < 2:
        raise PreconditionError("need at least 2 vertices")
    _check_capacity(t.n, bound, "module enumeration")
    return ModularPartition(t, _t_pi_within(t, full_mask(t.n)))


def tournament_quotient(t: Tournament, partition: ModularPartition) -> Tournament:
    """Quotient tournament on the blocks (arc direction via any representatives)."""
    if not isinstance(partition, ModularPartition) or partition.host is not t:
        partition = ModularPartition(t, list(partition))
    reps = [(int(b) & -int(b)).bit_length() - 1 for b in partition.blocks]
    k = len(reps)
    succ = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if t.has_arc(reps[i], reps[j]):
                succ[i] |= 1 << j
            else:
                succ[j] |= 1 << i
    return Tournament._from_succ(k, tuple(succ))


def _t_quotient_on(t: Tournament, blocks: list[int]) -> Tournament:
    reps = [(b & -b).bit_length() - 1 for b in blocks]
    k = len(reps)
    succ = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if t.has_arc(reps[i], reps[j]):
                succ[i] |= 1 << j
            else:
                succ[j] |= 1 << i
    return Tournament._from_succ(k, tuple(succ))


def tournament_decomposition_tree(t: Tournament, bound: int = DEFAULT_BOUND) -> DecompositionTree:
    """Labeled decomposition tree of a tournament (labels: linear or prime)."""
    if t.n < 1:
        raise PreconditionError("need at least 1 vertex")
    _check_capacity(t.n, bound, "module enumeration")

    def build(w: int) -> TreeNode:
        if w & (w - 1) == 0:
            return TreeNode(w, None, ())
        blocks = _t_pi_within(t, w)
        q = _t_quotient_on(t, blocks)
        if is_linear_order(q):
            label = LABEL_LINEAR
        else:
            assert tournament_is_prime(q, bound), \
                "tournament quotient by maximal strong modules must be linear or prime"
            label = LABEL_PRIME
        return TreeNode(w, label, tuple(build(b) for b in blocks))

    return DecompositionTree(build(full_mask(t.n)), t.n, "tournament")
