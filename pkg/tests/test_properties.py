"""Randomized invariants of the move-list model and the solvers."""

from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from pebbling import (
    Configuration,
    Demand,
    Graph,
    MoveList,
    apply_moves,
    gamma,
    is_cover_solvable,
    legal_moves,
    normalize_acyclic,
    oracle_solvable,
    solve_tree,
    verify_solution,
)


@st.composite
def connected_graphs(draw, max_n: int = 5):
    n = draw(st.integers(1, max_n))
    edges = [
        (draw(st.integers(0, v - 1)), v) for v in range(1, n)
    ]  # random spanning tree
    extra = draw(
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=4)
    )
    edges.extend((u, v) for u, v in extra if u != v)
    return Graph(n, edges)


@st.composite
def instances(draw, max_n: int = 5, max_pebbles: int = 8, max_demand: int = 3):
    g = draw(connected_graphs(max_n))
    counts = [0] * g.n
    for _ in range(draw(st.integers(0, max_pebbles))):
        counts[draw(st.integers(0, g.n - 1))] += 1
    demand = [0] * g.n
    for _ in range(draw(st.integers(0, max_demand))):
        demand[draw(st.integers(0, g.n - 1))] += 1
    return g, Configuration(tuple(counts)), Demand(tuple(demand))


@st.composite
def trees(draw, max_n: int = 7, max_pebbles: int = 10, max_demand: int = 4):
    n = draw(st.integers(1, max_n))
    g = Graph(n, [(draw(st.integers(0, v - 1)), v) for v in range(1, n)])
    counts = [0] * n
    for _ in range(draw(st.integers(0, max_pebbles))):
        counts[draw(st.integers(0, n - 1))] += 1
    demand = [0] * n
    for _ in range(draw(st.integers(0, max_demand))):
        demand[draw(st.integers(0, n - 1))] += 1
    return g, Configuration(tuple(counts)), Demand(tuple(demand))


@given(instances())
def test_single_move_never_raises_gamma(case):
    g, c, d = case
    for u, w in legal_moves(g, c):
        after = apply_moves(g, c, MoveList({(u, w): 1}))
        for v in range(g.n):
            assert not gamma(g, after, d, v) > gamma(g, c, d, v)


@given(instances())
def test_verify_iff_applied_configuration_contains_demand(case):
    g, c, d = case
    result = is_cover_solvable(g, c, d)
    if result.solvable:
        ml = result.certificate
        assert verify_solution(g, c, d, ml)
        assert apply_moves(g, c, ml).contains(d)


@given(instances(), st.data())
def test_verify_equals_contains_for_arbitrary_move_lists(case, data):
    g, c, d = case
    pairs = g.directed_edges()
    if not pairs:
        return
    picks = data.draw(st.lists(st.sampled_from(pairs), max_size=5))
    ml = MoveList([(u, w, 1) for u, w in picks])
    assert verify_solution(g, c, d, ml) == apply_moves(g, c, ml).contains(d)


@given(instances(), st.integers(0, 2))
def test_verification_depends_only_on_surplus(case, shift):
    g, c, d = case
    result = is_cover_solvable(g, c, d)
    if not result.solvable:
        return
    ml = result.certificate
    # replace (c, d) with (c - d + d', d'): same surplus, same verdict
    d2 = Demand(tuple(shift for _ in range(g.n)))
    c2 = Configuration(
        tuple(
            c.counts[v] - d.counts[v] + d2.counts[v] for v in range(g.n)
        ),
        extended=True,
    )
    assert verify_solution(g, c2, d2, ml)


@given(instances(), st.data())
def test_apply_moves_is_additive(case, data):
    g, c, d = case
    pairs = g.directed_edges()
    if not pairs:
        return
    def random_ml():
        picks = data.draw(
            st.lists(st.sampled_from(pairs), min_size=0, max_size=3)
        )
        return MoveList([(u, w, 1) for u, w in picks])
    ml1, ml2 = random_ml(), random_ml()
    chained = apply_moves(g, apply_moves(g, c, ml1), ml2)
    merged = apply_moves(g, c, ml1 + ml2)
    assert chained.counts == merged.counts


@given(instances())
@settings(max_examples=150)
def test_solver_certificates_match_oracle(case):
    g, c, d = case
    result = is_cover_solvable(g, c, d)
    assert result.solvable == oracle_solvable(g, c, d)


@given(instances(), st.data())
def test_normalize_acyclic_properties(case, data):
    g, c, d = case
    result = is_cover_solvable(g, c, d)
    if not result.solvable:
        return
    # perturb the certificate with a canceling pair to create cycles
    ml = result.certificate
    pairs = g.directed_edges()
    if pairs:
        u, w = data.draw(st.sampled_from(pairs))
        ml = ml + MoveList({(u, w): 1, (w, u): 1})
    if not verify_solution(g, c, d, ml):
        return
    out = normalize_acyclic(g, c, d, ml)
    assert verify_solution(g, c, d, out)
    assert out.total_moves <= ml.total_moves
    assert normalize_acyclic(g, c, d, out) == out


@given(trees())
@settings(max_examples=200)
def test_tree_solver_agrees_with_oracle(case):
    g, c, d = case
    assert solve_tree(g, c, d) == oracle_solvable(g, c, d)


@given(instances())
def test_monotonicity_in_pebbles(case):
    g, c, d = case
    result = is_cover_solvable(g, c, d)
    if not result.solvable:
        return
    bigger = Configuration(tuple(x + 1 for x in c.counts))
    assert is_cover_solvable(g, bigger, d).solvable


@given(instances())
def test_gamma_witness_is_sound(case):
    from pebbling import gamma_witness

    g, c, d = case
    if gamma_witness(g, c, d) is not None:
        assert not oracle_solvable(g, c, d)
