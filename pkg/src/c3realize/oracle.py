"""Independent brute-force ground truth for tests and derived examples.

Everything here avoids the decomposition/realization pipeline on purpose:
realizations are found by scanning all orientations, and the set-family laws
are checked directly from enumerated module sets.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .bitset import bit_list, full_mask, iter_bits
from .core import Hypergraph, Tournament
from .decomposition import DEFAULT_BOUND, _modules_within
from .errors import CapacityError

__all__ = [
    "MAX_EXHAUSTIVE_ORDER",
    "all_tournaments", "brute_force_realizations",
    "check_partitive", "check_covering_axioms", "AxiomReport",
    "random_tournament", "random_hypergraph",
]

MAX_EXHAUSTIVE_ORDER = 7


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def all_tournaments(n: int) -> Iterator[Tournament]:
    """All 2^(n(n-1)/2) tournaments on 0..n-1.

    Bit k of the enumeration counter orients the k-th pair in lexicographic
    order: bit set means low -> high.
    """
    if n > MAX_EXHAUSTIVE_ORDER:
        raise CapacityError("exhaustive tournament enumeration", n, MAX_EXHAUSTIVE_ORDER)
    pairs = _pairs(n)
    for code in range(1 << len(pairs)):
        succ = [0] * n
        for k, (i, j) in enumerate(pairs):
            if (code >> k) & 1:
                succ[i] |= 1 << j
            else:
                succ[j] |= 1 << i
        yield Tournament._from_succ(n, tuple(succ))


def _realizes(t_succ: tuple[int, ...], triples: list[tuple[int, int, int, int]],
              edges: frozenset[int]) -> bool:
    """Early-abort check that a tournament's 3-cycles are exactly ``edges``."""
    for u, v, w, mask in triples:
        k = ((t_succ[u] >> v) & 1) + ((t_succ[v] >> w) & 1) + ((t_succ[w] >> u) & 1)
        if (k == 0 or k == 3) != (mask in edges):
            return False
    return True


def _triples(n: int) -> list[tuple[int, int, int, int]]:
    return [(u, v, w, (1 << u) | (1 << v) | (1 << w))
            for u, v, w in combinations(range(n), 3)]


def brute_force_realizations(h: Hypergraph) -> list[Tournament]:
    """Exactly the tournaments whose 3-cycle triples equal the edge set."""
    if h.n > MAX_EXHAUSTIVE_ORDER:
        raise CapacityError("exhaustive realization search", h.n, MAX_EXHAUSTIVE_ORDER)
    if not h.is_3_uniform:
        return []
    triples = _triples(h.n)
    return [t for t in all_tournaments(h.n) if _realizes(t.succ, triples, h.edges)]


# --- set-family law checking -------------------------------------------------

class AxiomReport:
    """Outcome of an axiom check: a list of violations, empty means pass."""

    def __init__(self, checker: str, seed: int | None = None, samples: int | None = None):
        self.checker = checker
        self.seed = seed
        self.samples = samples
        self.checked = 0
        self.violations: list[dict] = []

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, axiom: str, **witnesses) -> None:
        entry = {"axiom": axiom}
        for key, value in witnesses.items():
            if isinstance(value, int):
                entry[key] = bit_list(value)
            else:
                entry[key] = value
        self.violations.append(entry)

    def to_json(self) -> dict:
        out = {
            "checker": self.checker,
            "checked": self.checked,
            "passed": self.passed,
            "violations": self.violations,
        }
        if self.seed is not None:
            out["seed"] = self.seed
        if self.samples is not None:
            out["samples"] = self.samples
        return out

    def __repr__(self) -> str:
        state = "pass" if self.passed else f"{len(self.violations)} violations"
        return f"AxiomReport({self.checker}: {state})"


def _closure_violations(report: AxiomReport, mods: frozenset[int], ground: int) -> None:
    """Partitive-family closure laws over an explicit module set."""
    if 0 not in mods:
        report.add("trivial-empty", family_missing=0)
    if ground not in mods:
        report.add("trivial-ground", family_missing=ground)
    for v in iter_bits(ground):
        if (1 << v) not in mods:
            report.add("trivial-singleton", family_missing=1 << v)
    ordered = sorted(mods)
    for m in ordered:
        for n_ in ordered:
            if n_ <= m:
                continue
            report.checked += 1
            if m & n_ not in mods:
                report.add("intersection", M=m, N=n_, missing=m & n_)
            if m & n_:
                if m | n_ not in mods:
                    report.add("overlapping-union", M=m, N=n_, missing=m | n_)
                if m & ~n_ and n_ & ~m and (m ^ n_) not in mods:
                    report.add("overlapping-symmetric-difference", M=m, N=n_, missing=m ^ n_)
            if m & ~n_ and (n_ & ~m) not in mods:
                report.add("difference", M=m, N=n_, missing=n_ & ~m)
            if n_ & ~m and (m & ~n_) not in mods:
                report.add("difference", M=n_, N=m, missing=m & ~n_)


def check_partitive(h: Hypergraph, bound: int = DEFAULT_BOUND) -> AxiomReport:
    """Verify the partitive-family laws of the module set of ``h``.

    Checks the trivial members and closure under intersection, union of
    intersecting pairs, difference (either side nonempty), and symmetric
    difference of overlapping pairs.  Any violation indicates a bug in the
    module predicate, not a property of the input.
    """
    report = AxiomReport("partitive")
    full = full_mask(h.n)
    mods = frozenset(_modules_within(h, full))
    _closure_violations(report, mods, full)
    return report


def check_covering_axioms(h: Hypergraph, samples: int = 500, seed: int = 0,
                          bound: int = DEFAULT_BOUND) -> AxiomReport:
    """Sample the modular-covering axioms of the induced-module assignment.

    Draws ``samples`` tuples (W, W', M, M') with W inside W', M a module of
    the structure induced on W and M' one induced on W', and checks:
    restriction (a module of the larger trace restricts to one of the
    smaller), induced-module transitivity (when W is itself a module of the
    larger trace, its modules are exactly the larger trace's modules inside
    W), disjoint extension, and intersecting union.  Module sets per vertex
    subset are enumerated exactly and cached; the seed is recorded.
    """
    if h.n > bound:
        raise CapacityError("module enumeration", h.n, bound)
    rng = random.Random(seed)
    report = AxiomReport("covering", seed=seed, samples=samples)
    if h.n == 0:
        return report
    full = full_mask(h.n)
    cache: dict[int, list[int]] = {}

    def modules_of(w: int) -> list[int]:
        got = cache.get(w)
        if got is None:
            got = cache[w] = _modules_within(h, w)
        return got

    for _ in range(samples):
        w_big = rng.getrandbits(h.n) & full
        w_small = rng.getrandbits(h.n) & w_big
        mods_big = modules_of(w_big)
        mods_small = modules_of(w_small)
        m_big = rng.choice(mods_big)
        m_small = rng.choice(mods_small)
        report.checked += 1

        if (m_big & w_small) not in mods_small:
            report.add("A2-restriction", W=w_small, W_prime=w_big,
                       M_prime=m_big, missing=m_big & w_small)
        if w_small in mods_big:
            inside = {m for m in mods_big if m & ~w_small == 0}
            if inside != set(mods_small):
                report.add("A3-trace-equality", W=w_small, W_prime=w_big,
                           only_in_big=[bit_list(m) for m in sorted(inside - set(mods_small))],
                           only_in_small=[bit_list(m) for m in sorted(set(mods_small) - inside)])
        if m_small & m_big == 0 and m_big & w_small:
            if m_small not in modules_of(w_small | m_big):
                report.add("A4-disjoint-extension", W=w_small, W_prime=w_big,
                           M=m_small, M_prime=m_big)
        if m_small & m_big:
            if (m_small | m_big) not in modules_of(w_small | m_big):
                report.add("A5-intersecting-union", W=w_small, W_prime=w_big,
                           M=m_small, M_prime=m_big)
    return report


# --- random instance generators -----------------------------------------------

def random_tournament(n: int, rng: random.Random) -> Tournament:
    """A uniformly random tournament on 0..n-1."""
    succ = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.getrandbits(1):
                succ[i] |= 1 << j
            else:
                succ[j] |= 1 << i
    return Tournament._from_succ(n, tuple(succ))


def random_hypergraph(n: int, rng: random.Random, max_edges: int | None = None,
                      sizes: tuple[int, ...] = (2, 3, 4)) -> Hypergraph:
    """A random hypergraph with edge sizes drawn from ``sizes``."""
    if max_edges is None:
        max_edges = max(1, n * 2)
    edges = set()
    for _ in range(rng.randrange(max_edges + 1)):
        k = rng.choice(sizes)
        if k > n:
            continue
        edges.add(sum(1 << v for v in rng.sample(range(n), k)))
    return Hypergraph._from_masks(n, frozenset(edges))
