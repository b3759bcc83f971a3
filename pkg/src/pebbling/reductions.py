"""Exact cover by 4-sets, and the three pebbling hardness constructions.

An exact-cover-by-4-sets instance is a universe of 4n elements together
with m >= n four-element subsets; a yes-instance admits n pairwise
disjoint subsets covering the universe.  The three builders here translate
such instances (or pebbling instances) into

* a unit-demand cover solvability instance that is solvable iff an exact
  cover exists (:func:`reduce_to_cover_solvability`),
* a canonical-solvability instance equivalent to a given unit-demand
  instance (:func:`reduce_cover_to_canonical`), and
* a reachability-number threshold instance whose cover pebbling number
  exceeds ``15m + 16n`` iff an exact cover exists
  (:func:`reduce_to_number_threshold`),

together with the explicit certificates and witness configurations their
correctness arguments use.  The biconditionals themselves are exercised by
the test suite at small scale; nothing here assumes them.

Elements and sets are 1-based in files and reports, 0-based in code.
Every built graph carries a name and a role tag per vertex so the
constructions can be audited against their drawings.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Configuration, Demand, Graph, MoveList, PebblingError


class MalformedInstance(PebblingError):
    """The exact-cover instance violates its shape constraints."""


class NotACover(PebblingError):
    """The provided set selection is not an exact cover."""


@dataclass(frozen=True)
class X4CInstance:
    """Universe {1 .. 4n} plus m four-element subsets, m >= n."""

    n: int
    sets: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise MalformedInstance("universe parameter n must be positive")
        object.__setattr__(
            self, "sets", tuple(frozenset(s) for s in self.sets)
        )
        if len(self.sets) < self.n:
            raise MalformedInstance(
                f"need at least n={self.n} sets, got {len(self.sets)}"
            )
        for i, s in enumerate(self.sets):
            if len(s) != 4:
                raise MalformedInstance(f"set {i + 1} has {len(s)} elements, not 4")
            if not all(1 <= e <= 4 * self.n for e in s):
                raise MalformedInstance(f"set {i + 1} leaves the universe 1..{4 * self.n}")

    @property
    def m(self) -> int:
        return len(self.sets)

    @property
    def universe(self) -> frozenset[int]:
        return frozenset(range(1, 4 * self.n + 1))


@dataclass(frozen=True)
class ReducedInstance:
    """A pebbling instance produced by one of the three constructions.

    ``vertex_names`` are unique, human-auditable labels ("t3", "b2'", ...)
    and ``vertex_roles`` tags each vertex with its construction class, so
    the role map covers every vertex exactly once.  ``demand`` is set for
    the cover construction; ``target`` for the canonical and threshold
    constructions; ``threshold`` only for the threshold construction.
    """

    kind: str
    graph: Graph
    config: Configuration
    vertex_names: tuple[str, ...]
    vertex_roles: tuple[str, ...]
    demand: Demand | None = None
    target: int | None = None
    threshold: int | None = None
    trivial: bool = False

    def __post_init__(self) -> None:
        if len(self.vertex_names) != self.graph.n or len(self.vertex_roles) != self.graph.n:
            raise ValueError("names and roles must cover every vertex exactly once")
        if len(set(self.vertex_names)) != self.graph.n:
            raise ValueError("vertex names must be unique")

    def index_of(self, name: str) -> int:
        return self.vertex_names.index(name)


def x4c_solve(inst: X4CInstance) -> list[int] | None:
    """Some exact cover as 0-based set indices, or None.

    Backtracks on the lowest uncovered element, trying the sets that
    contain it in ascending index order, so the returned cover is
    deterministic.
    """
    universe = inst.universe
    containing: dict[int, list[int]] = {e: [] for e in universe}
    for i, s in enumerate(inst.sets):
        for e in s:
            containing[e].append(i)

    def backtrack(covered: frozenset[int], chosen: list[int]) -> list[int] | None:
        if covered == universe:
            return chosen
        lowest = min(universe - covered)
        for i in containing[lowest]:
            s = inst.sets[i]
            if covered & s:
                continue
            found = backtrack(covered | s, chosen + [i])
            if found is not None:
                return found
        return None

    return backtrack(frozenset(), [])


def _check_cover(inst: X4CInstance, cover: list[int]) -> None:
    if len(set(cover)) != len(cover) or not all(0 <= i < inst.m for i in cover):
        raise NotACover("cover must be distinct valid set indices")
    union: set[int] = set()
    total = 0
    for i in cover:
        union.update(inst.sets[i])
        total += 4
    if total != len(union) or union != set(inst.universe):
        raise NotACover("selected sets do not partition the universe")


def reduce_to_cover_solvability(inst: X4CInstance) -> ReducedInstance:
    """Unit-demand cover solvability instance equivalent to ``inst``.

    Layout: element vertices T (degree to the B's that contain them), set
    vertices B each chained b - b' - b'' to a collector v, and a path of
    m - n further edges from v to a terminus w.  Pebbles: 9 on each b, 1 on
    the chain interiors and path interiors, ``2**(m-n) - (m-n) + 1`` on v,
    0 on T and w.  For m = n the path degenerates and w is identified with
    v, whose load becomes 2; that keeps the equivalence at the boundary
    (the collector then only has to end with a pebble on itself).
    """
    n, m = inst.n, inst.m
    span = m - n
    names: list[str] = []
    roles: list[str] = []
    for j in range(4 * n):
        names.append(f"t{j + 1}")
        roles.append("T")
    for i in range(m):
        names.append(f"b{i + 1}")
        roles.append("B")
    for i in range(m):
        names.append(f"b{i + 1}'")
        roles.append("B'")
    for i in range(m):
        names.append(f"b{i + 1}''")
        roles.append("B''")
    v = len(names)
    names.append("v")
    roles.append("v")
    interior = []
    for j in range(span - 1):
        interior.append(len(names))
        names.append(f"u{j + 1}")
        roles.append("u")
    if span > 0:
        w = len(names)
        names.append("w")
        roles.append("w")
    else:
        w = v

    t0, b0 = 0, 4 * n
    bp0, bpp0 = b0 + m, b0 + 2 * m
    edges: list[tuple[int, int]] = []
    for i, s in enumerate(inst.sets):
        for e in s:
            edges.append((b0 + i, t0 + e - 1))
    for i in range(m):
        edges.append((b0 + i, bp0 + i))
        edges.append((bp0 + i, bpp0 + i))
        edges.append((bpp0 + i, v))
    path = [v] + interior + ([w] if span > 0 else [])
    for a, b in zip(path, path[1:]):
        edges.append((a, b))

    counts = [0] * len(names)
    for i in range(m):
        counts[b0 + i] = 9
        counts[bp0 + i] = 1
        counts[bpp0 + i] = 1
    counts[v] = (1 << span) - span + 1
    for u in interior:
        counts[u] = 1

    graph = Graph(len(names), edges)
    return ReducedInstance(
        kind="cover",
        graph=graph,
        config=Configuration(tuple(counts)),
        vertex_names=tuple(names),
        vertex_roles=tuple(roles),
        demand=Demand.unit(graph.n),
    )


def cover_certificate_from_exact_cover(
    inst: X4CInstance, cover: list[int]
) -> MoveList:
    """The explicit move list that solves the reduced instance of a cover.

    Each covering set vertex spends 8 pebbles to put one pebble on each of
    its four element vertices; each spare set vertex pushes 8 pebbles down
    its chain (4, then 2, then 1 arriving at the collector); the collector
    cascades one pebble down the path, halving at every step.
    """
    _check_cover(inst, cover)
    n, m = inst.n, inst.m
    span = m - n
    t0, b0 = 0, 4 * n
    bp0, bpp0 = b0 + m, b0 + 2 * m
    v = b0 + 3 * m
    moves: dict[tuple[int, int], int] = {}
    in_cover = set(cover)
    for i in range(m):
        if i in in_cover:
            for e in inst.sets[i]:
                moves[b0 + i, t0 + e - 1] = 1
        else:
            moves[b0 + i, bp0 + i] = 4
            moves[bp0 + i, bpp0 + i] = 2
            moves[bpp0 + i, v] = 1
    path = [v] + [v + 1 + j for j in range(span - 1)] + ([v + span] if span else [])
    for step, (a, b) in enumerate(zip(path, path[1:])):
        moves[a, b] = 1 << (span - 1 - step)
    return MoveList(moves)


def reduce_cover_to_canonical(g: Graph, c: Configuration) -> ReducedInstance:
    """Canonical-solvability instance equivalent to unit-cover solvability.

    With at least ``2**n`` pebbles the input is already solvable, so the
    output is a trivially canonical single-vertex instance; a single-vertex
    input passes through unchanged (the two notions coincide there).
    Otherwise the graph is copied (one extra pebble per vertex), every copy
    vertex gets a length-n path of single pebbles to a hub carrying
    ``2**n - n``, and a bare length-n tail hangs off the hub; canonical
    solvability, reachability of the tail end, and unit-cover solvability
    of the input all coincide on the result.
    """
    if len(c.counts) != g.n:
        raise ValueError("configuration covers a different vertex set")
    if c.has_negative:
        raise ValueError("the canonical construction needs non-negative input")
    n = g.n
    if c.size >= (1 << n):
        triv = Graph(1)
        return ReducedInstance(
            kind="canonical",
            graph=triv,
            config=Configuration((1,)),
            vertex_names=("h1",),
            vertex_roles=("H",),
            target=0,
            trivial=True,
        )
    if n == 1:
        return ReducedInstance(
            kind="canonical",
            graph=g,
            config=c,
            vertex_names=("h1",),
            vertex_roles=("H",),
            target=0,
        )

    names: list[str] = [f"v{i + 1}'" for i in range(n)]
    roles: list[str] = ["H"] * n
    grid0 = n
    for i in range(n):
        for j in range(n):
            names.append(f"u{i + 1}_{j + 1}")
            roles.append("u_ij")
    hub = len(names)
    for k in range(n + 1):
        names.append(f"w{k}")
        roles.append("w_i")

    edges: list[tuple[int, int]] = list(g.edges)
    for i in range(n):
        row = grid0 + i * n
        edges.append((i, row))
        for j in range(n - 1):
            edges.append((row + j, row + j + 1))
        edges.append((row + n - 1, hub))
    for k in range(n):
        edges.append((hub + k, hub + k + 1))

    counts = [c.counts[i] + 1 for i in range(n)]
    counts += [1] * (n * n)
    counts += [(1 << n) - n] + [0] * n

    graph = Graph(len(names), edges)
    return ReducedInstance(
        kind="canonical",
        graph=graph,
        config=Configuration(tuple(counts)),
        vertex_names=tuple(names),
        vertex_roles=tuple(roles),
        target=hub + n,
    )


def reduce_to_number_threshold(inst: X4CInstance) -> ReducedInstance:
    """Reachability-number threshold instance for ``inst``.

    Element vertices all feed one target v, set vertices attach to their
    elements, and each set vertex trails a path of three pebble-storage
    vertices.  The claim under test: the cover pebbling number of reaching
    v exceeds ``15m + 16n`` exactly when an exact cover exists.  The
    instance itself carries no pebbles; witness configurations come from
    :func:`number_witness_config`.
    """
    n, m = inst.n, inst.m
    names: list[str] = []
    roles: list[str] = []
    for j in range(4 * n):
        names.append(f"t{j + 1}")
        roles.append("T")
    for i in range(m):
        names.append(f"b{i + 1}")
        roles.append("B")
    for i in range(m):
        names.append(f"b{i + 1}'")
        roles.append("B'")
    for i in range(m):
        names.append(f"b{i + 1}''")
        roles.append("B''")
    for i in range(m):
        names.append(f"b{i + 1}'''")
        roles.append("B'''")
    v = len(names)
    names.append("v")
    roles.append("v")

    t0, b0 = 0, 4 * n
    bp0, bpp0, bppp0 = b0 + m, b0 + 2 * m, b0 + 3 * m
    edges: list[tuple[int, int]] = [(t0 + j, v) for j in range(4 * n)]
    for i, s in enumerate(inst.sets):
        for e in s:
            edges.append((b0 + i, t0 + e - 1))
    for i in range(m):
        edges.append((b0 + i, bp0 + i))
        edges.append((bp0 + i, bpp0 + i))
        edges.append((bpp0 + i, bppp0 + i))

    graph = Graph(len(names), edges)
    return ReducedInstance(
        kind="number",
        graph=graph,
        config=Configuration.zero(graph.n),
        vertex_names=tuple(names),
        vertex_roles=tuple(roles),
        target=v,
        threshold=15 * m + 16 * n,
    )


def number_witness_config(inst: X4CInstance, cover: list[int]) -> Configuration:
    """The size ``31n + 15(m-n)`` configuration that cannot reach the target.

    31 pebbles on the path end below each covering set vertex, 15 below
    every other, nothing anywhere else.
    """
    _check_cover(inst, cover)
    n, m = inst.n, inst.m
    total_vertices = 4 * n + 4 * m + 1
    bppp0 = 4 * n + 3 * m
    counts = [0] * total_vertices
    in_cover = set(cover)
    for i in range(m):
        counts[bppp0 + i] = 31 if i in in_cover else 15
    return Configuration(tuple(counts))
