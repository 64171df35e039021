"""Structural laws checked over exhaustive small cases and random samples."""

import random
from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from c3realize import (
    Hypergraph, ModularPartition, Tournament, all_tournaments,
    brute_force_realizations, c3_structure, check_covering_axioms,
    check_partitive, components, count_realizations, critical_family,
    decomposition_tree, dual, enumerate_modules, enumerate_realizations,
    induced_subhypergraph, is_linear_order, is_module, is_prime,
    maximal_proper_strong_modules, quotient, random_hypergraph,
    random_tournament, realize, strong_modules, tournament_decomposition_tree,
    tournament_is_prime, tournament_modules, tournament_strong_modules,
)
from c3realize.bitset import bit_list, iter_bits
from c3realize.decomposition import LABEL_COMPLETE, LABEL_EMPTY, LABEL_PRIME


def tournament_from_code(n, code):
    succ = [0] * n
    for k, (i, j) in enumerate(combinations(range(n), 2)):
        if (code >> k) & 1:
            succ[i] |= 1 << j
        else:
            succ[j] |= 1 << i
    return Tournament(n, succ)


@st.composite
def tournaments(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    code = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return tournament_from_code(n, code)


@st.composite
def hypergraphs(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    pool = [list(c) for k in (2, 3, 4) if k <= n
            for c in combinations(range(n), k)]
    if pool:
        edges = draw(st.lists(st.sampled_from(pool), max_size=8))
    else:
        edges = []
    return Hypergraph(n, edges)


class TestC3Laws:
    @settings(max_examples=60, deadline=None)
    @given(tournaments())
    def test_c3_is_self_dual(self, t):
        assert c3_structure(dual(t)) == c3_structure(t)

    @settings(max_examples=60, deadline=None)
    @given(tournaments(min_n=2), st.data())
    def test_c3_commutes_with_induced(self, t, data):
        w = data.draw(st.integers(1, t.vertex_mask))
        assert c3_structure(t.induced(w)) == \
            induced_subhypergraph(c3_structure(t), w)

    @settings(max_examples=60, deadline=None)
    @given(tournaments())
    def test_linear_order_iff_no_triples(self, t):
        assert is_linear_order(t) == (not c3_structure(t).edges)


class TestCriticalFamilies:
    @pytest.mark.parametrize("kind", ["T", "U", "W"])
    @pytest.mark.parametrize("n", [5, 7, 9])
    def test_prime_and_critical(self, kind, n):
        t = critical_family(kind, n)
        assert tournament_is_prime(t)
        for v in range(n):
            assert not tournament_is_prime(t.induced(t.vertex_mask & ~(1 << v)))

    def test_c3_structures_prime(self):
        for kind in ("T", "U", "W"):
            for n in (5, 7):
                assert is_prime(c3_structure(critical_family(kind, n)))

    def test_every_critical_5_tournament_is_matched(self):
        # exhaustive n=5: the three families cover all critical primes
        from c3realize import realize_critical
        matched = 0
        for t in all_tournaments(5):
            if not tournament_is_prime(t):
                continue
            if any(tournament_is_prime(t.induced(t.vertex_mask & ~(1 << v)))
                   for v in range(5)):
                continue
            got = realize_critical(c3_structure(t))
            assert isinstance(got, Tournament)
            matched += 1
        assert matched == 264


class TestFamilyLaws:
    @settings(max_examples=40, deadline=None)
    @given(hypergraphs())
    def test_modules_form_partitive_family(self, h):
        assert check_partitive(h).passed

    @settings(max_examples=25, deadline=None)
    @given(hypergraphs(max_n=5), st.integers(0, 10_000))
    def test_covering_axioms_sampled(self, h, seed):
        assert check_covering_axioms(h, samples=60, seed=seed).passed

    def test_tournament_modules_weakly_partitive(self):
        rng = random.Random(17)
        for _ in range(40):
            t = random_tournament(rng.randint(1, 6), rng)
            fam = {int(m) for m in tournament_modules(t)}
            assert 0 in fam and t.vertex_mask in fam
            for v in range(t.n):
                assert 1 << v in fam
            for m in fam:
                for n_ in fam:
                    assert m & n_ in fam
                    if m & n_:
                        assert m | n_ in fam
                    if m & ~n_:
                        assert n_ & ~m in fam

    def test_tournament_modules_are_hypergraph_modules(self):
        rng = random.Random(18)
        for _ in range(40):
            t = random_tournament(rng.randint(1, 6), rng)
            hm = enumerate_modules(c3_structure(t))
            assert tournament_modules(t) <= hm


def random_modular_partition(h, rng):
    """A modular partition: either the components, Pi, or one nontrivial
    module with singletons elsewhere."""
    choice = rng.randrange(3)
    if choice == 0:
        return ModularPartition(h, components(h))
    if choice == 1 and h.n >= 2:
        return maximal_proper_strong_modules(h)
    mods = [m for m in enumerate_modules(h)
            if 1 < len(m) < h.n]
    if not mods:
        return ModularPartition(h, [[v] for v in range(h.n)])
    m = rng.choice(sorted(mods))
    blocks = [list(m)] + [[v] for v in range(h.n) if v not in m]
    return ModularPartition(h, blocks)


class TestQuotientTransfer:
    def test_module_transfer_both_ways(self):
        rng = random.Random(19)
        for _ in range(40):
            h = random_hypergraph(rng.randint(1, 6), rng)
            p = random_modular_partition(h, rng)
            q = quotient(h, p)
            blocks = [int(b) for b in p.blocks]
            # down: a module of h maps to a module of the quotient
            for m in enumerate_modules(h):
                mp = 0
                for i, b in enumerate(blocks):
                    if int(m) & b:
                        mp |= 1 << i
                assert is_module(q, mp), (h, list(m))
            # up: a module of the quotient unions to a module of h
            for mq in enumerate_modules(q):
                union = 0
                for i in mq:
                    union |= blocks[i]
                assert is_module(h, union)

    def test_strong_module_transfer(self):
        rng = random.Random(20)
        for _ in range(30):
            h = random_hypergraph(rng.randint(2, 6), rng)
            p = maximal_proper_strong_modules(h)  # blocks are strong
            q = quotient(h, p)
            blocks = [int(b) for b in p.blocks]
            strong_h = strong_modules(h)
            strong_q = strong_modules(q)
            for m in strong_h:
                mp = 0
                for i, b in enumerate(blocks):
                    if int(m) & b:
                        mp |= 1 << i
                assert any(int(s) == mp for s in strong_q)
            for s in strong_q:
                union = 0
                for i in s:
                    union |= blocks[i]
                assert any(int(m) == union for m in strong_h)

    def test_transverse_property(self):
        rng = random.Random(21)
        for _ in range(40):
            h = random_hypergraph(rng.randint(1, 6), rng)
            p = random_modular_partition(h, rng)
            blocks = [int(b) for b in p.blocks]
            for e in h.edges:
                hit = [b for b in blocks if e & b]
                if len(hit) < 2:
                    continue
                assert all((e & b).bit_count() == 1 for b in hit)
                for combo in product(*[bit_list(b) for b in hit]):
                    assert h.has_edge(combo), (h, combo)


class TestGallaiClassification:
    def test_exactly_one_class_per_internal_node(self):
        rng = random.Random(22)
        for _ in range(40):
            h = random_hypergraph(rng.randint(1, 7), rng)
            tree = decomposition_tree(h)
            for node in tree.internal_nodes():
                blocks = [int(c.members) for c in node.children]
                sub_edges = [e for e in h.edges if e & ~int(node.members) == 0]
                qe = set()
                for e in sub_edges:
                    hit = sum(1 << i for i, b in enumerate(blocks) if e & b)
                    if hit.bit_count() >= 2:
                        qe.add(hit)
                k = len(blocks)
                is_empty = not qe
                is_complete = qe == {(1 << i) | (1 << j)
                                     for i in range(k) for j in range(i + 1, k)}
                q = Hypergraph._from_masks(k, frozenset(qe))
                is_pr = is_prime(q)
                assert [is_empty, is_complete, is_pr].count(True) == 1
                assert {LABEL_EMPTY: is_empty, LABEL_COMPLETE: is_complete,
                        LABEL_PRIME: is_pr}[node.label]

    def test_tree_restricted_to_strong_module_is_subtree(self):
        rng = random.Random(23)
        for _ in range(30):
            h = random_hypergraph(rng.randint(2, 6), rng)
            tree = decomposition_tree(h)
            for m in strong_modules(h):
                if len(m) < 1:
                    continue
                node = tree.lowest_node_containing(m)
                if int(node.members) != int(m):
                    continue
                # the subtree at m must equal the tree of the induced copy
                sub = h.induced(m)
                sub_tree = decomposition_tree(sub)
                labels = bit_list(int(m))

                def shape(x):
                    return (tuple(labels[i] for i in iter_bits(int(x.members))),
                            x.label, tuple(shape(c) for c in x.children))

                def shape_orig(x):
                    return (tuple(iter_bits(int(x.members))), x.label,
                            tuple(shape_orig(c) for c in x.children))

                assert shape_orig(node) == shape(sub_tree.root)

    def test_strong_modules_equal_tree_nodes(self):
        rng = random.Random(24)
        for _ in range(30):
            h = random_hypergraph(rng.randint(1, 6), rng)
            tree = decomposition_tree(h)
            assert tree.node_members() | {0} == \
                {int(m) for m in strong_modules(h)}
            t = random_tournament(rng.randint(1, 6), rng)
            ttree = tournament_decomposition_tree(t)
            assert ttree.node_members() | {0} == \
                {int(m) for m in tournament_strong_modules(t)}


class TestRealizationLaws:
    def test_round_trip_exhaustive_small(self):
        for n in (1, 2, 3, 4):
            for t in all_tournaments(n):
                h = c3_structure(t)
                got = realize(h)
                assert isinstance(got, Tournament)
                assert c3_structure(got) == h

    def test_count_matches_oracle_exhaustive_small(self):
        for n in (1, 2, 3, 4):
            seen = set()
            for t in all_tournaments(n):
                h = c3_structure(t)
                if h in seen:
                    continue
                seen.add(h)
                assert count_realizations(h) == len(brute_force_realizations(h))

    def test_round_trip_random_6_7(self):
        rng = random.Random(25)
        for n in (6, 7):
            for _ in range(25):
                t = random_tournament(n, rng)
                h = c3_structure(t)
                got = realize(h)
                assert isinstance(got, Tournament)
                assert c3_structure(got) == h

    def test_prime_realizable_has_two_dual_realizations(self):
        rng = random.Random(26)
        found = 0
        while found < 15:
            t = random_tournament(rng.randint(3, 6), rng)
            h = c3_structure(t)
            if not is_prime(h):
                continue
            found += 1
            got = list(enumerate_realizations(h))
            assert len(got) == 2
            assert got[0] == dual(got[1])

    def test_shared_strong_modules_and_primality(self):
        rng = random.Random(27)
        for _ in range(25):
            t = random_tournament(rng.randint(1, 6), rng)
            h = c3_structure(t)
            for s in enumerate_realizations(h):
                assert tournament_strong_modules(s) == strong_modules(h)
                assert tournament_is_prime(s) == is_prime(h)

    def test_realization_modules_and_empty_node_law(self):
        rng = random.Random(28)
        for _ in range(25):
            t = random_tournament(rng.randint(2, 6), rng)
            h = c3_structure(t)
            hm = enumerate_modules(h)
            tree = decomposition_tree(h)
            for s in enumerate_realizations(h):
                tm = tournament_modules(s)
                assert tm <= hm
                all_binary = all(len(x.children) == 2
                                 for x in tree.internal_nodes()
                                 if x.label == LABEL_EMPTY)
                assert (tm == hm) == all_binary
                for m in hm - tm:
                    node = tree.lowest_node_containing(m)
                    assert node.label == LABEL_EMPTY
                    assert len(node.children) >= 3
