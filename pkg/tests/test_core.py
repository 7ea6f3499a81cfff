import random
from collections import defaultdict, deque

import pytest

from actbij.core import (
    InvalidOrientedMatroid,
    SignedSubset,
    bases,
    compose,
    contract,
    delete,
    dual,
    fundamental_circuit,
    fundamental_cocircuit,
    is_acyclic,
    is_bounded,
    is_dual_bounded,
    is_totally_cyclic,
    om_from_lists,
    positive_circuits,
    positive_cocircuits,
    reorient,
)
from conftest import random_multigraph, random_om, subsets
from actbij.graphs import om_from_digraph


def ss(*signed):
    pos = frozenset(e for e in signed if e > 0)
    neg = frozenset(-e for e in signed if e < 0)
    return SignedSubset(pos, neg)


def u11():
    return om_from_lists(1, [], [ss(1)])


def u10():
    return om_from_lists(1, [ss(1)], [])


def k3_by_lists():
    return om_from_lists(
        3,
        [ss(1, -2, 3)],
        [ss(1, 2), ss(1, -3), ss(2, 3)],
    )


# ---------------------------------------------------------------- oracles

def digraph_fundamental_circuit(g, tree, e):
    """Fundamental cycle of edge e w.r.t. spanning forest `tree`, signed by
    traversing the cycle along e.  Independent of the matroid machinery."""
    tail, head = g.edges[e - 1]
    if tail == head:
        return ss(e)
    walk = defaultdict(list)
    for k in tree:
        t, h = g.edges[k - 1]
        walk[t].append((k, h, 1))
        walk[h].append((k, t, -1))
    prev = {head: None}
    queue = deque([head])
    while queue:
        u = queue.popleft()
        if u == tail:
            break
        for k, w, s in walk[u]:
            if w not in prev:
                prev[w] = (u, k, s)
                queue.append(w)
    pos, neg = {e}, set()
    node = tail
    while prev[node] is not None:
        u, k, s = prev[node]
        (pos if s > 0 else neg).add(k)
        node = u
    return SignedSubset(frozenset(pos), frozenset(neg))


def digraph_fundamental_cocircuit(g, tree, b):
    """Fundamental directed cut of tree edge b, signed away from the side
    containing b's tail, so that b is positive."""
    tail, head = g.edges[b - 1]
    adj = defaultdict(set)
    for k in tree:
        if k == b:
            continue
        t, h = g.edges[k - 1]
        adj[t].add(h)
        adj[h].add(t)
    side = {tail}
    queue = deque([tail])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in side:
                side.add(w)
                queue.append(w)
    pos, neg = set(), set()
    for k, (t, h) in enumerate(g.edges, start=1):
        if (t in side) and (h not in side):
            pos.add(k)
        elif (h in side) and (t not in side):
            neg.add(k)
    return SignedSubset(frozenset(pos), frozenset(neg))


# ------------------------------------------------------------ signed sets

def test_signed_subset_disjointness():
    with pytest.raises(ValueError):
        SignedSubset(frozenset({1}), frozenset({1}))


def test_canonical_representative():
    assert ss(-1, 2).canonical() == ss(1, -2)
    assert ss(1, -2).canonical() == ss(1, -2)


def test_compose_zero_identity():
    zero = SignedSubset(frozenset(), frozenset())
    x = ss(1, -2, 3)
    assert compose(x, zero) == x
    assert compose(zero, x) == x


def test_compose_first_argument_wins():
    assert compose(ss(1), ss(-1, 2)) == ss(1, 2)


def test_compose_associative():
    rng = random.Random(0)
    for _ in range(100):
        xs = [
            SignedSubset(
                frozenset(e for e in range(1, 6) if rng.random() < 0.3),
                frozenset(),
            )
            for _ in range(3)
        ]
        xs = [
            SignedSubset(x.positive, frozenset(e for e in range(1, 6) if rng.random() < 0.3) - x.positive)
            for x in xs
        ]
        a, b, c = xs
        assert compose(compose(a, b), c) == compose(a, compose(b, c))


def test_sign_string_round_trip():
    x = SignedSubset.from_string("++-000")
    assert x == ss(1, 2, -3)
    assert x.to_string(6) == "++-000"


# ------------------------------------------------------------ construction

def test_single_element_fixtures():
    assert u11().rank == 1
    assert u10().rank == 0


def test_k3_from_lists_rank():
    assert k3_by_lists().rank == 2


def test_k3_matches_graph_fixture(k3_om):
    assert k3_by_lists() == k3_om


def test_rejects_comparable_supports():
    with pytest.raises(InvalidOrientedMatroid):
        om_from_lists(3, [ss(1, 2), ss(1, 2, 3)], [])


def test_rejects_orthogonality_violation():
    # circuit and cocircuit agreeing in sign everywhere on their overlap
    with pytest.raises(InvalidOrientedMatroid):
        om_from_lists(3, [ss(1, -2, 3)], [ss(2, 3)])


def test_rejects_rank_mismatch():
    with pytest.raises(InvalidOrientedMatroid):
        om_from_lists(1, [], [])


def test_rejects_empty_support():
    with pytest.raises(InvalidOrientedMatroid):
        om_from_lists(2, [SignedSubset(frozenset(), frozenset())], [ss(1), ss(2)])


def test_rejects_conflicting_signatures():
    with pytest.raises(InvalidOrientedMatroid):
        om_from_lists(3, [ss(1, 2, 3), ss(1, -2, 3)], [])


# ----------------------------------------------------------------- duality

def test_dual_fixtures(k3_om):
    assert dual(u11()) == u10()
    d = dual(k3_om)
    assert d.rank == 1
    assert d.circuits == k3_om.cocircuits


def test_dual_involution_random():
    rng = random.Random(1)
    for _ in range(30):
        m = random_om(rng)
        assert dual(dual(m)) == m


# ----------------------------------------------------------- reorientation

def test_reorient_empty_and_involution(k4_om):
    assert reorient(k4_om, frozenset()) == k4_om
    rng = random.Random(2)
    for _ in range(20):
        m = random_om(rng)
        a = frozenset(e for e in range(1, m.n + 1) if rng.random() < 0.5)
        assert reorient(reorient(m, a), a) == m


def test_full_flip_is_global_negation(k3_om):
    flipped = reorient(k3_om, k3_om.ground_set)
    # canonical representatives absorb a global negation
    assert flipped == k3_om


def test_reorient_2_makes_k3_cyclic(k3_om):
    assert is_totally_cyclic(reorient(k3_om, {2}))


# ------------------------------------------------------------------ minors

def test_contract_k4_triangle(k4_om):
    m = contract(k4_om, {1, 2, 3})
    assert m.n == 3 and m.rank == 1
    assert sorted(sorted(c.support) for c in m.circuits) == [[1, 2], [1, 3], [2, 3]]


def test_delete_nothing(k4_om):
    assert delete(k4_om, frozenset()) == k4_om


def test_restrict_k4_to_triangle_is_k3(k3_om, k4_om):
    assert delete(k4_om, {4, 5, 6}) == k3_om


def _reindex(n, removed, target):
    kept = sorted(set(range(1, n + 1)) - removed)
    pos = {e: i for i, e in enumerate(kept, start=1)}
    return frozenset(pos[e] for e in target)


def test_minor_commutation_and_duality():
    rng = random.Random(3)
    for _ in range(25):
        m = random_om(rng, max_edges=8)
        elems = list(range(1, m.n + 1))
        rng.shuffle(elems)
        a = frozenset(elems[: m.n // 3])
        b = frozenset(elems[m.n // 3 : 2 * m.n // 3])
        del_first = contract(delete(m, a), _reindex(m.n, a, b))
        con_first = delete(contract(m, b), _reindex(m.n, b, a))
        assert del_first == con_first
        # (M/A)* = M* \ A
        assert dual(contract(m, a)) == delete(dual(m), a)


# ------------------------------------------------------------- positivity

def test_positivity_fixtures(k3_om):
    assert is_acyclic(k3_om) and not is_totally_cyclic(k3_om)
    assert is_totally_cyclic(u10()) and is_acyclic(u11())


def test_acyclic_iff_covered_by_positive_cocircuits():
    rng = random.Random(4)
    for _ in range(30):
        m = random_om(rng)
        loops = {e for c in m.circuits if len(c.support) == 1 for e in c.support}
        if loops or m.n == 0:
            continue
        covered = frozenset().union(
            frozenset(), *(d.support for d in positive_cocircuits(m))
        )
        assert is_acyclic(m) == (covered == m.ground_set)


# ------------------------------------------------------------------- bases

def test_bases_fixtures(k3_om, k4_om):
    assert [sorted(b) for b in bases(k3_om)] == [[1, 2], [1, 3], [2, 3]]
    assert len(bases(k4_om)) == 16
    assert list(bases(u10())) == [frozenset()]


# --------------------------------------------- fundamental circuits / cuts

def test_fundamental_circuit_frozen_values(k3_om, k4_om):
    assert fundamental_circuit(k4_om, frozenset({1, 2, 4}), 3) == ss(1, -2, 3)
    assert fundamental_cocircuit(k4_om, frozenset({1, 2, 4}), 1) == ss(1, -3, -5)
    assert fundamental_circuit(k3_om, frozenset({1, 3}), 2) == ss(-1, 2, -3)


def test_fundamental_preconditions(k3_om):
    with pytest.raises(ValueError):
        fundamental_circuit(k3_om, frozenset({1, 2}), 1)
    with pytest.raises(ValueError):
        fundamental_cocircuit(k3_om, frozenset({1, 2}), 3)


def test_fundamental_against_digraph_oracle():
    rng = random.Random(5)
    checked = 0
    while checked < 20:
        g = random_multigraph(rng, max_vertices=5, max_edges=8)
        m = om_from_digraph(g)
        if m.n == 0:
            continue
        for b in bases(m):
            for e in m.ground_set - b:
                want = digraph_fundamental_circuit(g, b, e).canonical()
                assert fundamental_circuit(m, b, e).canonical() == want
            for elt in b:
                want = digraph_fundamental_cocircuit(g, b, elt).canonical()
                assert fundamental_cocircuit(m, b, elt).canonical() == want
        checked += 1


def test_pivot_property():
    rng = random.Random(6)
    for _ in range(10):
        m = random_om(rng, max_edges=7)
        for b in bases(m):
            for elt in b:
                d = fundamental_cocircuit(m, b, elt)
                for e in m.ground_set - b:
                    c = fundamental_circuit(m, b, e)
                    assert (e in d.support) == (elt in c.support)


def test_compose_all_cocircuits_is_positive_for_optimal(k4_om):
    # the composed maximal covector of basis 136 in -_{3,5,6} is positive
    m = reorient(k4_om, {3, 5, 6})
    b = frozenset({1, 3, 6})
    cov = SignedSubset(frozenset(), frozenset())
    for elt in sorted(b):
        cov = compose(cov, fundamental_cocircuit(m, b, elt))
    assert cov == SignedSubset(m.ground_set, frozenset())


# ------------------------------------------------------------- boundedness

def test_boundedness_fixtures(k4_om):
    assert is_bounded(reorient(k4_om, {3, 5}), 1)
    assert is_bounded(reorient(k4_om, {3, 5, 6}), 1)
    assert not is_bounded(k4_om, 1)
    assert is_bounded(u11(), 1)
    assert is_dual_bounded(u10(), 1)
    assert is_dual_bounded(reorient(k4_om, {2, 4, 6}), 1)
