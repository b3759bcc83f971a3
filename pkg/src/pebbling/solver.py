"""Exact deciders for pebbling solvability.

Two independent engines answer the same question:

* :func:`oracle_solvable` walks the configuration space breadth-first,
  following the move-sequence definition verbatim.  It is the ground truth
  at small scale and the reference the move-list solver is tested against.

* :func:`is_cover_solvable` searches directly over move lists.  The move
  budget is iteratively deepened (doubling) up to ``|C| - |D|``, past which
  no list can work: each move loses one pebble net, so longer lists cannot
  end above the demand.  Per-directed-edge counts are branched in ascending
  (from, to) order with higher counts tried first, restricted to cycle-free
  supports; partial assignments are pruned as soon as the outstanding
  per-vertex deficits exceed the remaining budget, a vertex with no
  incoming edges left cannot reach its demand, or an exact potential (full
  or restricted to the still-assignable arcs) goes negative anywhere.

Trees additionally get a linear-step decision (:func:`solve_tree`) by
repeatedly folding a leaf's surplus (halved, floored) or deficit (doubled)
into its neighbour (:func:`collapse_leaf`).

The decision problem is NP-complete, so every search takes a node cap and
raises :class:`BudgetExceeded` rather than ever guessing; "gave up" is
never reported as "unsolvable".
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass

from .core import (
    Configuration,
    Demand,
    DimensionMismatch,
    Graph,
    MoveList,
    PebblingError,
    gamma_witness,
    verify_solution,
)

DEFAULT_NODE_CAP = 10_000_000
DEFAULT_STATE_CAP = 1_000_000


class BudgetExceeded(PebblingError):
    """A search hit its configured cap before reaching a verdict."""


class NotASolution(PebblingError):
    """The given move list does not solve the instance."""


class NotALeaf(PebblingError):
    """Leaf collapse was asked for a vertex of degree != 1."""


class SingletonGraph(PebblingError):
    """The last vertex of a graph cannot be collapsed away."""


class NotATree(PebblingError):
    """The tree solver was given a graph with a cycle."""


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an exact solvability query.

    ``certificate`` is present iff solvable and always verifies with an
    acyclic support; ``witness`` is set only when unsolvability was already
    decided by a negative potential at the root.
    """

    solvable: bool
    certificate: MoveList | None
    witness: int | None
    nodes_expanded: int
    max_depth: int

    @property
    def status(self) -> str:
        return "solvable" if self.solvable else "unsolvable"


@dataclass(frozen=True)
class CanonicalResult:
    """Per-vertex reachability verdicts plus the combined answer."""

    canonical: bool
    unreachable: tuple[int, ...]
    results: tuple[SolveResult, ...]


def _check(g: Graph, c: Configuration, d: Demand) -> None:
    if len(c.counts) != g.n or len(d.counts) != g.n:
        raise DimensionMismatch(
            f"graph has {g.n} vertices, got |c|={len(c.counts)}, |d|={len(d.counts)}"
        )


def oracle_solvable(
    g: Graph,
    c: Configuration,
    d: Demand,
    *,
    state_cap: int = DEFAULT_STATE_CAP,
) -> bool:
    """Breadth-first search over configurations reachable by legal moves.

    The literal definition of solvability: intended for small instances
    (roughly up to 9 vertices and 12 pebbles).  Visited configurations are
    memoized; termination is guaranteed because every move shrinks the
    pebble count.
    """
    _check(g, c, d)
    if c.has_negative:
        raise ValueError("the oracle needs a non-negative configuration")
    dc = d.counts
    start = c.counts
    if all(a >= b for a, b in zip(start, dc)):
        return True
    n = g.n
    neighbors = [g.neighbors(u) for u in range(n)]
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for u in range(n):
            if cur[u] < 2:
                continue
            for w in neighbors[u]:
                nxt = list(cur)
                nxt[u] -= 2
                nxt[w] += 1
                t = tuple(nxt)
                if t in seen:
                    continue
                if all(a >= b for a, b in zip(t, dc)):
                    return True
                seen.add(t)
                if len(seen) > state_cap:
                    raise BudgetExceeded(
                        f"oracle visited more than {state_cap} configurations"
                    )
                queue.append(t)
    return False


def is_cover_solvable(
    g: Graph,
    c: Configuration,
    d: Demand,
    *,
    node_cap: int = DEFAULT_NODE_CAP,
) -> SolveResult:
    """Exact decision by branch and bound over move lists.

    Accepts signed configurations.  When solvable, the returned certificate
    verifies, has a cycle-free support, and its total move count is within
    the deepening level at which it was found (so near-minimal, a byproduct
    of the schedule rather than a promise).
    """
    _check(g, c, d)
    n = g.n
    base = [c.counts[k] - d.counts[k] for k in range(n)]
    if all(x >= 0 for x in base):
        return SolveResult(True, MoveList(), None, 0, 0)
    witness = gamma_witness(g, c, d)
    if witness is not None:
        return SolveResult(False, None, witness, 0, 0)
    budget = sum(base)
    if budget <= 0:
        # too few pebbles to ever contain the demand: each move nets -1
        return SolveResult(False, None, None, 0, 0)

    edges = g.directed_edges()
    m_edges = len(edges)
    # one frame per edge position; keep headroom for large instances
    needed = 4 * m_edges + 1000
    if sys.getrecursionlimit() < needed:
        sys.setrecursionlimit(needed)
    diam = g.diameter
    # weight[x][z] = 2**(diam - dist(x, z)); potential numerators stay integral
    weight = [[1 << (diam - g.distance(x, z)) for z in range(n)] for x in range(n)]
    # per-edge potential delta for one move: +w at the head, -2w at the tail
    edge_delta = [
        [weight[w][z] - 2 * weight[u][z] for z in range(n)] for u, w in edges
    ]
    pot = [sum(base[x] * weight[x][z] for x in range(n)) for z in range(n)]

    # Position-restricted potentials: edges are assigned in one fixed order,
    # so at position p only the arcs edges[p:] remain usable.  A deficit at z
    # can then be served only along remaining arcs, halving per step; if the
    # restricted potential sum(val[x] * 2**-arcdist_p(x -> z)) is negative,
    # no completion fixes z.  arcdist is a directed BFS over reversed
    # remaining arcs; unreachable vertices weigh zero.
    res_weight: list[list[list[int]]] = []
    rev_adj: list[list[tuple[int, ...]]] = []
    for p in range(m_edges + 1):
        rev: list[list[int]] = [[] for _ in range(n)]
        for u, w in edges[p:]:
            rev[w].append(u)
        rev_adj.append([tuple(rev[a]) for a in range(n)])
        per_z: list[list[int]] = []
        for z in range(n):
            dist = [-1] * n
            dist[z] = 0
            queue = deque([z])
            while queue:
                a = queue.popleft()
                for b in rev[a]:
                    if dist[b] < 0:
                        dist[b] = dist[a] + 1
                        queue.append(b)
            per_z.append([0 if dist[x] < 0 else 1 << (n - dist[x]) for x in range(n)])
        res_weight.append(per_z)

    val = base[:]
    def_sum = sum(-x for x in val if x < 0)
    in_pending = [0] * n
    for _, w in edges:
        in_pending[w] += 1
    succ: list[set[int]] = [set() for _ in range(n)]
    counts = [0] * m_edges
    solution: list[int] | None = None
    nodes = 0
    max_depth = 0
    rng_n = range(n)

    def reaches(a: int, b: int) -> bool:
        if a == b:
            return True
        stack = [a]
        seen = {a}
        while stack:
            x = stack.pop()
            for y in succ[x]:
                if y == b:
                    return True
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    def search(p: int, r: int, depth: int) -> bool:
        nonlocal def_sum, nodes, max_depth, solution
        if def_sum == 0:
            # every deficit met; zeros on the remaining edges finish the list
            solution = counts[:]
            return True
        if def_sum > r:
            return False
        if depth > max_depth:
            max_depth = depth
        if p == m_edges:
            return False
        # every deficit must still be coverable through the remaining arcs
        per_z = res_weight[p]
        rev = rev_adj[p]
        for z in rng_n:
            if val[z] < 0:
                row = per_z[z]
                total = 0
                for x in rng_n:
                    vx = val[x]
                    if vx:
                        total += vx * row[x]
                if total < 0:
                    return False
                # sharper pass: an arc whose reverse already carries moves
                # would close a 2-cycle, so it cannot serve this deficit
                dist = [-1] * n
                dist[z] = 0
                queue = [z]
                total = 0
                shift = n
                while queue:
                    nxt: list[int] = []
                    for a in queue:
                        total += val[a] << (shift - dist[a])
                        sa = succ[a]
                        for b in rev[a]:
                            if dist[b] < 0 and b not in sa:
                                dist[b] = dist[a] + 1
                                nxt.append(b)
                    queue = nxt
                if total < 0:
                    return False
        u, w = edges[p]
        in_pending[w] -= 1
        try:
            vu = val[u]
            vw = val[w]
            # q is capped by u's worst-case balance: out-moves cost 2 apiece
            # and at most r - q future moves can feed u back.
            if in_pending[u] > 0:
                q_max = (vu + r) // 3
            else:
                q_max = vu // 2
            if q_max > r:
                q_max = r
            if q_max > 0 and reaches(w, u):
                q_max = 0  # a positive count here would close a cycle
            # w with no later in-edges must be lifted to balance by this edge
            q_min = -vw if in_pending[w] == 0 and vw < 0 else 0
            if q_max < q_min:
                return False
            delta = edge_delta[p]
            for q in range(q_max, q_min - 1, -1):
                nodes += 1
                if nodes > node_cap:
                    raise BudgetExceeded(f"solver exceeded node cap {node_cap}")
                if q == 0:
                    if search(p + 1, r, depth):
                        return True
                    continue
                nvu = vu - 2 * q
                nvw = vw + q
                # incremental deficit update: only u and w changed
                ndef = def_sum
                if vu < 0:
                    ndef += vu
                if nvu < 0:
                    ndef -= nvu
                if vw < 0:
                    ndef += vw
                if nvw < 0:
                    ndef -= nvw
                if ndef > r - q:
                    continue
                if in_pending[u] == 0 and nvu < 0:
                    continue
                # exact potential: prune if it dips below zero anywhere
                negative = False
                for z in rng_n:
                    t = pot[z] + q * delta[z]
                    pot[z] = t
                    if t < 0:
                        negative = True
                if negative:
                    for z in rng_n:
                        pot[z] -= q * delta[z]
                    continue
                val[u] = nvu
                val[w] = nvw
                old_def = def_sum
                def_sum = ndef
                added = w not in succ[u]
                if added:
                    succ[u].add(w)
                counts[p] = q
                found = search(p + 1, r - q, depth + q)
                counts[p] = 0
                if added:
                    succ[u].discard(w)
                val[u] = vu
                val[w] = vw
                def_sum = old_def
                for z in rng_n:
                    pot[z] -= q * delta[z]
                if found:
                    return True
            return False
        finally:
            in_pending[w] += 1

    # Deepen the move budget geometrically up to the pebble-loss bound; the
    # final level alone is exhaustive, so unsolvability costs one bounded
    # pass while solvable instances exit at a level near their minimum.
    level = 1
    while True:
        level = min(level, budget)
        if search(0, level, 0):
            assert solution is not None
            ml = MoveList(
                [(edges[i][0], edges[i][1], q) for i, q in enumerate(solution) if q]
            )
            return SolveResult(True, ml, None, nodes, max_depth)
        if level == budget:
            return SolveResult(False, None, None, nodes, max_depth)
        level <<= 1


def _support_cycle(succ: dict[int, list[int]]) -> list[int] | None:
    """Some directed cycle of the support digraph, as a vertex list."""
    color: dict[int, int] = {}
    stack_path: list[int] = []

    def dfs(x: int) -> list[int] | None:
        color[x] = 1
        stack_path.append(x)
        for y in succ.get(x, ()):
            if color.get(y, 0) == 1:
                return stack_path[stack_path.index(y):]
            if color.get(y, 0) == 0:
                cyc = dfs(y)
                if cyc is not None:
                    return cyc
        color[x] = 2
        stack_path.pop()
        return None

    for x in list(succ):
        if color.get(x, 0) == 0:
            cyc = dfs(x)
            if cyc is not None:
                return cyc
    return None


def normalize_acyclic(
    g: Graph, c: Configuration, d: Demand, ml: MoveList
) -> MoveList:
    """Cancel directed cycles out of a verifying move list.

    Subtracting one move around a directed cycle only raises the per-vertex
    tallies, so the result still verifies; repeating until no cycle remains
    yields an acyclic support without ever increasing the total move count.
    """
    if not verify_solution(g, c, d, ml):
        raise NotASolution("move list does not solve the instance")
    counts = {(u, w): q for u, w, q in ml.items()}
    while True:
        succ: dict[int, list[int]] = {}
        for (u, w), q in counts.items():
            if q > 0:
                succ.setdefault(u, []).append(w)
        cycle = _support_cycle(succ)
        if cycle is None:
            break
        pairs = list(zip(cycle, cycle[1:] + cycle[:1]))
        drop = min(counts[p] for p in pairs)
        for p in pairs:
            counts[p] -= drop
    return MoveList(counts)


def collapse_leaf(
    g: Graph, c: Configuration, d: Demand, leaf: int
) -> tuple[Graph, Configuration, Demand]:
    """Remove a degree-1 vertex, folding its balance into the neighbour.

    A surplus at the leaf is worth half, floored, to the neighbour; a
    deficit costs the neighbour double.  The folded configuration is
    solvable (in the signed sense) exactly when the original is, which is
    what makes the tree solver exact.
    """
    _check(g, c, d)
    if g.n == 1:
        raise SingletonGraph("cannot remove the last vertex")
    if not 0 <= leaf < g.n:
        raise ValueError(f"vertex {leaf} out of range")
    if g.degree(leaf) != 1:
        raise NotALeaf(f"vertex {leaf} has degree {g.degree(leaf)}")
    (nbr,) = g.neighbors(leaf)
    surplus = c.counts[leaf] - d.counts[leaf]
    credit = surplus // 2 if surplus >= 0 else 2 * surplus
    keep = [v for v in range(g.n) if v != leaf]
    h, remap = g.induced_subgraph(keep)
    new_counts = [c.counts[v] for v in keep]
    new_counts[remap[nbr]] += credit
    new_demand = tuple(d.counts[v] for v in keep)
    cfg = Configuration(
        tuple(new_counts),
        extended=c.extended or any(x < 0 for x in new_counts),
    )
    return h, cfg, Demand(new_demand)


def solve_tree(g: Graph, c: Configuration, d: Demand) -> bool:
    """Decide solvability on a tree by collapsing leaves, lowest index first.

    Runs in O(|V|) collapse steps and agrees with :func:`oracle_solvable`
    on non-negative inputs (a contract enforced by randomized testing, not
    assumed).
    """
    _check(g, c, d)
    if not g.is_tree:
        raise NotATree("graph has a cycle")
    while g.n > 1:
        leaf = min(v for v in range(g.n) if g.degree(v) == 1)
        g, c, d = collapse_leaf(g, c, d, leaf)
    return c.counts[0] >= d.counts[0]


def is_reachable(
    g: Graph,
    c: Configuration,
    target: int,
    *,
    node_cap: int = DEFAULT_NODE_CAP,
) -> SolveResult:
    """Can one pebble be moved onto ``target``?  Exact, with certificate."""
    return is_cover_solvable(
        g, c, Demand.reach(g.n, target), node_cap=node_cap
    )


def is_canonical_solvable(
    g: Graph,
    c: Configuration,
    *,
    node_cap: int = DEFAULT_NODE_CAP,
) -> CanonicalResult:
    """Is every vertex reachable?  Reports the unreachable ones."""
    if c.has_negative:
        raise ValueError("canonical solvability needs a non-negative configuration")
    results = tuple(
        is_reachable(g, c, v, node_cap=node_cap) for v in range(g.n)
    )
    unreachable = tuple(v for v, res in enumerate(results) if not res.solvable)
    return CanonicalResult(not unreachable, unreachable, results)
