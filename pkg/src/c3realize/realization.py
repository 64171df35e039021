"""Deciding, constructing, counting, and enumerating tournament realizations.

A tournament realizes a 3-uniform hypergraph when its 3-cycle triples are
exactly the hypergraph's edges.  The pipeline: build the modular
decomposition tree, realize each prime quotient (bottoming out in the three
critical families of odd order, extending vertex by vertex otherwise), pick
a linear order for each empty quotient, and assemble arcs pairwise at the
lowest common tree node.  Every choice of quotient realizations gives a
distinct realization and all arise this way, which also yields the count
``2^(#prime nodes) * prod(children!)`` over empty-labelled nodes.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from math import factorial
from typing import Iterator, Mapping

from .bitset import VertexSet, bit_list, full_mask, iter_bits
from .core import Graph, Hypergraph, Tournament, c3_structure, critical_family
from .decomposition import (
    DEFAULT_BOUND, LABEL_EMPTY, LABEL_PRIME,
    DecompositionTree, _edges_within, _quotient_edge_masks,
    decomposition_tree, is_prime,
)
from .errors import PreconditionError

__all__ = [
    "STAGE_BASE", "STAGE_CRITICAL_MISMATCH", "STAGE_EXTENSION_M1", "STAGE_EXTENSION_M2",
    "VERDICT_OK", "VERDICT_ODD_CYCLE", "VERDICT_E0", "VERDICT_Y_OVERLAP",
    "VERDICT_Y_NOT_COVERING", "VERDICT_M2_ARC",
    "NonRealizabilityWitness", "ExtensionCertificate", "RealizationChoice",
    "hypergraph_isomorphism",
    "realize", "realize_prime", "realize_critical",
    "extension_certificate", "extend_realization",
    "count_realizations", "enumerate_realizations",
    "default_choice", "choice_to_tournament",
]

STAGE_BASE = "base"
STAGE_CRITICAL_MISMATCH = "critical-mismatch"
STAGE_EXTENSION_M1 = "extension-M1"
STAGE_EXTENSION_M2 = "extension-M2"

VERDICT_OK = "ok"
VERDICT_ODD_CYCLE = "odd-cycle"
VERDICT_E0 = "E0-violation"
VERDICT_Y_OVERLAP = "Y-overlap"
VERDICT_Y_NOT_COVERING = "Y-not-covering"
VERDICT_M2_ARC = "M2-arc-violation"


class NonRealizabilityWitness:
    """A vertex set whose induced subhypergraph is prime and not realizable."""

    __slots__ = ("vertices", "stage")

    def __init__(self, vertices, stage: str):
        object.__setattr__(self, "vertices", tuple(sorted(vertices)))
        object.__setattr__(self, "stage", stage)

    def __setattr__(self, name, value):
        raise AttributeError("NonRealizabilityWitness is immutable")

    def to_json(self) -> dict:
        return {"non_realizable": {"witness": list(self.vertices), "stage": self.stage}}

    def __repr__(self) -> str:
        return f"NonRealizabilityWitness({list(self.vertices)}, stage={self.stage!r})"


class ExtensionCertificate:
    """The single-vertex extension data: link graph, bipartition, closures.

    ``g_x`` lives on the deleted-vertex coordinates (vertex j of ``g_x`` is
    hypergraph vertex j when j < x, else j+1), as do the masks.  When the
    verdict is "ok", ``x_minus``/``x_plus`` bipartition the non-isolated
    link-graph vertices and ``y_minus``/``y_plus`` partition the isolated
    ones.
    """

    __slots__ = ("x", "g_x", "i_x", "x_minus", "x_plus", "y_minus", "y_plus", "verdict")

    def __init__(self, x: int, g_x: Graph, i_x: int, x_minus: int, x_plus: int,
                 y_minus: int, y_plus: int, verdict: str):
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "g_x", g_x)
        object.__setattr__(self, "i_x", VertexSet(i_x))
        object.__setattr__(self, "x_minus", VertexSet(x_minus))
        object.__setattr__(self, "x_plus", VertexSet(x_plus))
        object.__setattr__(self, "y_minus", VertexSet(y_minus))
        object.__setattr__(self, "y_plus", VertexSet(y_plus))
        object.__setattr__(self, "verdict", verdict)

    def __setattr__(self, name, value):
        raise AttributeError("ExtensionCertificate is immutable")

    @property
    def ok(self) -> bool:
        return self.verdict == VERDICT_OK

    def __repr__(self) -> str:
        return f"ExtensionCertificate(x={self.x}, verdict={self.verdict!r})"


class RealizationChoice:
    """One point of the realization space of a decomposition tree.

    ``perms`` maps each empty-labelled internal node (by member mask) to a
    permutation of its child indices, read as a linear order.  ``prime_flags``
    maps each prime-labelled node to False (use the stored quotient
    realization in ``prime_base``) or True (use its dual).
    """

    __slots__ = ("perms", "prime_flags", "prime_base")

    def __init__(self, perms: Mapping[int, tuple[int, ...]],
                 prime_flags: Mapping[int, bool],
                 prime_base: Mapping[int, Tournament]):
        object.__setattr__(self, "perms", dict(perms))
        object.__setattr__(self, "prime_flags", dict(prime_flags))
        object.__setattr__(self, "prime_base", dict(prime_base))

    def __setattr__(self, name, value):
        raise AttributeError("RealizationChoice is immutable")


# --- isomorphism -----------------------------------------------------------

def hypergraph_isomorphism(h1: Hypergraph, h2: Hypergraph) -> list[int] | None:
    """A vertex bijection carrying the edges of h1 exactly onto those of h2.

    Backtracking over vertices in descending degree order, pruned by degree
    and pairwise co-degree invariants.  Returns ``phi`` with vertex v of h1
    mapped to ``phi[v]``, or None.
    """
    if not (h1.is_3_uniform and h2.is_3_uniform):
        raise PreconditionError("isomorphism search expects 3-uniform hypergraphs")
    n = h1.n
    if h2.n != n or len(h1.edges) != len(h2.edges):
        return None

    def degrees(h: Hypergraph) -> list[int]:
        d = [0] * h.n
        for e in h.edges:
            for v in iter_bits(e):
                d[v] += 1
        return d

    def codegrees(h: Hypergraph) -> list[list[int]]:
        cd = [[0] * h.n for _ in range(h.n)]
        for e in h.edges:
            vs = bit_list(e)
            for a, b in combinations(vs, 2):
                cd[a][b] += 1
                cd[b][a] += 1
        return cd

    deg1, deg2 = degrees(h1), degrees(h2)
    if sorted(deg1) != sorted(deg2):
        return None
    cd1, cd2 = codegrees(h1), codegrees(h2)
    prof1 = [(deg1[v], sorted(cd1[v])) for v in range(n)]
    prof2 = [(deg2[v], sorted(cd2[v])) for v in range(n)]
    if sorted(prof1) != sorted(prof2):
        return None

    order = sorted(range(n), key=lambda v: (-deg1[v], v))
    rank = {v: i for i, v in enumerate(order)}
    # edges of h1 indexed by the latest vertex to be assigned
    edges_by_last: list[list[int]] = [[] for _ in range(n)]
    for e in h1.edges:
        last = max(iter_bits(e), key=lambda v: rank[v])
        edges_by_last[rank[last]].append(e)

    cands = [[w for w in range(n) if prof2[w] == prof1[v]] for v in range(n)]
    phi = [-1] * n
    used = [False] * n

    def backtrack(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in cands[v]:
            if used[w]:
                continue
            if any(cd1[v][u] != cd2[w][phi[u]] for u in order[:i]):
                continue
            phi[v] = w
            ok = True
            for e in edges_by_last[i]:
                img = 0
                for u in iter_bits(e):
                    img |= 1 << phi[u]
                if img not in h2.edges:
                    ok = False
                    break
            if ok:
                used[w] = True
                if backtrack(i + 1):
                    return True
                used[w] = False
            phi[v] = -1
        return False

    if backtrack(0):
        return phi
    return None


# --- single-vertex extension --------------------------------------------------

def _squeeze(mask: int, x: int) -> int:
    """Drop bit x and shift the higher bits down by one."""
    return (mask & ((1 << x) - 1)) | ((mask >> (x + 1)) << x)


def _unsqueeze(mask: int, x: int) -> int:
    """Insert a zero bit at position x."""
    return (mask & ((1 << x) - 1)) | ((mask >> x) << (x + 1))


def extension_certificate(h: Hypergraph, x: int, t_x: Tournament,
                          _verified: bool = False,
                          bound: int = DEFAULT_BOUND) -> ExtensionCertificate:
    """Evaluate the extension conditions for adding ``x`` on top of ``t_x``.

    Builds the link graph at x (v,w adjacent iff {x,v,w} is an edge),
    2-colours each non-singleton component, orients each colouring by one
    component edge against ``t_x`` and then verifies that, across every
    minus/plus pair, link-graph adjacency coincides with the arc pointing
    minus to plus.  Isolated link vertices must split into the forward
    closure of the minus side and the backward closure of the plus side,
    with all remaining arcs agreeing.
    """
    if not (0 <= x < h.n):
        raise PreconditionError(f"vertex {x} out of range")
    if t_x.n != h.n - 1:
        raise PreconditionError("tournament must have one vertex fewer than the hypergraph")
    if not _verified:
        if not h.is_3_uniform:
            raise PreconditionError("input must be 3-uniform")
        rest = full_mask(h.n) & ~(1 << x)
        if c3_structure(t_x) != h.induced(rest):
            raise PreconditionError("tournament does not realize the deleted hypergraph")
        if not is_prime(h, bound) or not is_prime(h.induced(rest), bound):
            raise PreconditionError("extension requires both hypergraphs prime")

    m = h.n - 1
    xbit = 1 << x
    adj = [0] * m
    for e in h.edges:
        if e & xbit:
            pair = _squeeze(e ^ xbit, x)
            lo = (pair & -pair).bit_length() - 1
            hi = pair.bit_length() - 1
            adj[lo] |= 1 << hi
            adj[hi] |= 1 << lo
    g_x = Graph._from_adj(m, tuple(adj))
    full_m = full_mask(m)
    i_x = 0
    for j in range(m):
        if adj[j] == 0:
            i_x |= 1 << j

    def fail(verdict: str, x_minus: int = 0, x_plus: int = 0,
             y_minus: int = 0, y_plus: int = 0) -> ExtensionCertificate:
        return ExtensionCertificate(x, g_x, i_x, x_minus, x_plus, y_minus, y_plus, verdict)

    # two-colour each non-singleton component, then orient via one edge
    x_minus = x_plus = 0
    colored = 0
    side = [0] * m
    for r in range(m):
        if adj[r] == 0 or (colored >> r) & 1:
            continue
        comp_sides = [1 << r, 0]
        side[r] = 0
        frontier = [r]
        colored |= 1 << r
        while frontier:
            u = frontier.pop()
            for v in iter_bits(adj[u]):
                if (colored >> v) & 1:
                    if side[v] == side[u]:
                        return fail(VERDICT_ODD_CYCLE)
                    continue
                side[v] = 1 - side[u]
                comp_sides[side[v]] |= 1 << v
                colored |= 1 << v
                frontier.append(v)
        nb = (adj[r] & -adj[r]).bit_length() - 1
        if t_x.has_arc(r, nb):
            minus = side[r]
        else:
            minus = side[nb]
        x_minus |= comp_sides[minus]
        x_plus |= comp_sides[1 - minus]

    # adjacency between the sides must match arcs pointing minus -> plus
    for v in iter_bits(x_minus):
        if adj[v] & x_plus != t_x.succ[v] & x_plus:
            return fail(VERDICT_E0, x_minus, x_plus)

    # forward closure of the minus side / backward closure of the plus side
    y_minus = 0
    frontier = x_minus
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= t_x.succ[u]
        nxt &= i_x & ~y_minus
        y_minus |= nxt
        frontier = nxt
    y_plus = 0
    frontier = x_plus
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= full_m & ~t_x.succ[u] & ~(1 << u)
        nxt &= i_x & ~y_plus
        y_plus |= nxt
        frontier = nxt

    if y_minus & y_plus:
        return fail(VERDICT_Y_OVERLAP, x_minus, x_plus, y_minus, y_plus)
    if y_minus | y_plus != i_x:
        return fail(VERDICT_Y_NOT_COVERING, x_minus, x_plus, y_minus, y_plus)
    below = x_minus | y_minus
    for u in iter_bits(y_plus):
        if t_x.succ[u] & below != below:
            return fail(VERDICT_M2_ARC, x_minus, x_plus, y_minus, y_plus)
    for u in iter_bits(x_plus):
        if t_x.succ[u] & y_minus != y_minus:
            return fail(VERDICT_M2_ARC, x_minus, x_plus, y_minus, y_plus)

    return ExtensionCertificate(x, g_x, i_x, x_minus, x_plus, y_minus, y_plus, VERDICT_OK)


def extend_realization(h: Hypergraph, x: int, t_x: Tournament,
                       _verified: bool = False,
                       bound: int = DEFAULT_BOUND) -> Tournament | ExtensionCertificate:
    """Extend a realization of H-x to one of H, or explain why none exists.

    On success the result is the unique realization whose restriction away
    from ``x`` equals ``t_x``: x beats the minus sides and loses to the plus
    sides.  On failure the certificate carries the violated condition.
    """
    cert = extension_certificate(h, x, t_x, _verified=_verified, bound=bound)
    if not cert.ok:
        return cert
    n = h.n
    succ = [0] * n
    for j in range(t_x.n):
        g = j if j < x else j + 1
        succ[g] = _unsqueeze(t_x.succ[j], x)
    succ[x] = _unsqueeze(int(cert.x_minus | cert.y_minus), x)
    for z in iter_bits(_unsqueeze(int(cert.x_plus | cert.y_plus), x)):
        succ[z] |= 1 << x
    t = Tournament(n, succ)
    assert c3_structure(t) == h, "extension produced a non-realizing tournament"
    return t


# --- prime and critical realization ---------------------------------------------

def realize_critical(h: Hypergraph, bound: int = DEFAULT_BOUND,
                     _assume_critical: bool = False) -> Tournament | NonRealizabilityWitness:
    """Realize a critical prime hypergraph by matching the three odd families.

    Realizable critical hypergraphs are exactly the 3-cycle structures of
    the T/U/W families, so an even order is rejected outright and an odd
    order is settled by isomorphism search against the three generators.
    """
    if not h.is_3_uniform:
        raise PreconditionError("input must be 3-uniform")
    if h.n < 5:
        raise PreconditionError("critical realization needs at least 5 vertices")
    if not _assume_critical:
        if not is_prime(h, bound):
            raise PreconditionError("input must be prime")
        full = full_mask(h.n)
        for x in range(h.n):
            if is_prime(h.induced(full & ~(1 << x)), bound):
                raise PreconditionError(f"input is not critical: deleting {x} keeps it prime")
    if h.n % 2 == 0:
        return NonRealizabilityWitness(range(h.n), STAGE_BASE)
    for kind in ("T", "U", "W"):
        gen = critical_family(kind, h.n)
        phi = hypergraph_isomorphism(c3_structure(gen), h)
        if phi is not None:
            t = gen.relabel(phi)
            assert c3_structure(t) == h
            return t
    return NonRealizabilityWitness(range(h.n), STAGE_CRITICAL_MISMATCH)


def realize_prime(h: Hypergraph, bound: int = DEFAULT_BOUND,
                  _assume_prime: bool = False) -> Tournament | NonRealizabilityWitness:
    """Realize a prime 3-uniform hypergraph or produce a witness.

    Scans vertices in increasing order for the first x whose deletion stays
    prime; realizes the rest recursively and extends back.  A failed
    extension certifies that the whole hypergraph is not realizable.  When
    no vertex qualifies the hypergraph is critical.
    """
    if not h.is_3_uniform:
        raise PreconditionError("input must be 3-uniform")
    if not _assume_prime and not is_prime(h, bound):
        raise PreconditionError("input must be prime")
    if h.n == 3:
        # the only prime 3-uniform hypergraph on 3 vertices is the single triple
        return Tournament.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
    full = full_mask(h.n)
    for x in range(h.n):
        rest = full & ~(1 << x)
        sub = h.induced(rest)
        if not is_prime(sub, bound):
            continue
        res = realize_prime(sub, bound, _assume_prime=True)
        if isinstance(res, NonRealizabilityWitness):
            labels = bit_list(rest)
            return NonRealizabilityWitness((labels[v] for v in res.vertices), res.stage)
        ext = extend_realization(h, x, res, _verified=True, bound=bound)
        if isinstance(ext, Tournament):
            return ext
        if ext.verdict in (VERDICT_ODD_CYCLE, VERDICT_E0):
            stage = STAGE_EXTENSION_M1
        else:
            stage = STAGE_EXTENSION_M2
        return NonRealizabilityWitness(range(h.n), stage)
    return realize_critical(h, bound, _assume_critical=True)


# --- whole-hypergraph pipeline ---------------------------------------------------

def _prepare(h: Hypergraph, bound: int):
    """Decomposition tree plus a realization of each prime quotient.

    The quotient at a prime node is realized through the transverse picking
    the smallest vertex of each child, whose induced subhypergraph is an
    isomorphic copy of the quotient in child order.  Returns a witness if
    any prime quotient is not realizable.
    """
    tree = decomposition_tree(h, bound)
    prime_base: dict[int, Tournament] = {}
    for node in tree.internal_nodes():
        if node.label != LABEL_PRIME:
            continue
        t_mask = 0
        for child in node.children:
            t_mask |= int(child.members) & -int(child.members)
        sub = h.induced(t_mask)
        res = realize_prime(sub, bound, _assume_prime=True)
        if isinstance(res, NonRealizabilityWitness):
            labels = bit_list(t_mask)
            return NonRealizabilityWitness((labels[v] for v in res.vertices), res.stage)
        prime_base[int(node.members)] = res
    return tree, prime_base


def default_choice(tree: DecompositionTree, prime_base: Mapping[int, Tournament]) -> RealizationChoice:
    """Identity permutations and as-computed orientations."""
    perms = {}
    flags = {}
    for node in tree.internal_nodes():
        key = int(node.members)
        if node.label == LABEL_EMPTY:
            perms[key] = tuple(range(len(node.children)))
        elif node.label == LABEL_PRIME:
            flags[key] = False
    return RealizationChoice(perms, flags, prime_base)


def _node_quotient(h: Hypergraph, node) -> Hypergraph:
    blocks = tuple(int(c.members) for c in node.children)
    return Hypergraph._from_masks(
        len(blocks), _quotient_edge_masks(_edges_within(h, int(node.members)), blocks))


def choice_to_tournament(h: Hypergraph, tree: DecompositionTree,
                         choice: RealizationChoice) -> Tournament:
    """Assemble the tournament selected by a realization choice.

    Each vertex pair is oriented at the lowest tree node containing both,
    by the chosen linear order (empty label) or quotient realization (prime
    label) between their child blocks.
    """
    if tree.n != h.n or int(tree.root.members) != full_mask(h.n):
        raise PreconditionError("tree does not match the hypergraph")
    succ = [0] * h.n
    for node in tree.internal_nodes():
        key = int(node.members)
        children = node.children
        k = len(children)
        if node.label == LABEL_EMPTY:
            perm = choice.perms.get(key)
            if perm is None or sorted(perm) != list(range(k)):
                raise PreconditionError(
                    f"choice needs a permutation of {k} children at node {bit_list(key)}")
            ordered = [int(children[i].members) for i in perm]
            for a in range(k):
                for b in range(a + 1, k):
                    for u in iter_bits(ordered[a]):
                        succ[u] |= ordered[b]
        elif node.label == LABEL_PRIME:
            base = choice.prime_base.get(key)
            flag = choice.prime_flags.get(key)
            if base is None or flag is None or base.n != k:
                raise PreconditionError(
                    f"choice needs a quotient realization at node {bit_list(key)}")
            if c3_structure(base) != _node_quotient(h, node):
                raise PreconditionError(
                    f"stored tournament does not realize the quotient at node {bit_list(key)}")
            r = base.dual() if flag else base
            for a in range(k):
                block_a = int(children[a].members)
                for b in iter_bits(r.succ[a]):
                    block_b = int(children[b].members)
                    for u in iter_bits(block_a):
                        succ[u] |= block_b
        else:
            raise PreconditionError("complete-labelled nodes admit no realization")
    return Tournament(h.n, succ)


def realize(h: Hypergraph, bound: int = DEFAULT_BOUND) -> Tournament | NonRealizabilityWitness:
    """A realization of ``h`` (deterministic default), or a prime witness."""
    if not h.is_3_uniform:
        raise PreconditionError("input must be 3-uniform")
    prep = _prepare(h, bound)
    if isinstance(prep, NonRealizabilityWitness):
        return prep
    tree, prime_base = prep
    t = choice_to_tournament(h, tree, default_choice(tree, prime_base))
    assert c3_structure(t) == h, "constructed tournament does not realize the input"
    return t


def count_realizations(h: Hypergraph, bound: int = DEFAULT_BOUND) -> int:
    """The exact number of realizations (0 when not realizable)."""
    res = realize(h, bound)
    if isinstance(res, NonRealizabilityWitness):
        return 0
    count = 1
    for node in decomposition_tree(h, bound).internal_nodes():
        if node.label == LABEL_PRIME:
            count *= 2
        else:
            count *= factorial(len(node.children))
    return count


def enumerate_realizations(h: Hypergraph, bound: int = DEFAULT_BOUND) -> Iterator[Tournament]:
    """All realizations, each exactly once, in mixed-radix choice order.

    Tree nodes are visited in preorder; a prime node contributes the stored
    realization then its dual, an empty node its child permutations in
    lexicographic order.  Yields nothing when ``h`` is not realizable.
    """
    if not h.is_3_uniform:
        raise PreconditionError("input must be 3-uniform")
    prep = _prepare(h, bound)
    if isinstance(prep, NonRealizabilityWitness):
        return iter(())
    tree, prime_base = prep
    return _enumerate(h, tree, prime_base)


def _enumerate(h: Hypergraph, tree: DecompositionTree,
               prime_base: Mapping[int, Tournament]) -> Iterator[Tournament]:
    nodes = list(tree.internal_nodes())
    value_lists = []
    for node in nodes:
        if node.label == LABEL_PRIME:
            value_lists.append((False, True))
        else:
            value_lists.append(tuple(permutations(range(len(node.children)))))
    for combo in product(*value_lists):
        perms = {}
        flags = {}
        for node, value in zip(nodes, combo):
            key = int(node.members)
            if node.label == LABEL_PRIME:
                flags[key] = value
            else:
                perms[key] = value
        t = choice_to_tournament(h, tree, RealizationChoice(perms, flags, prime_base))
        assert c3_structure(t) == h
        yield t
