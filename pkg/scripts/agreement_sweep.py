#!/usr/bin/env python3
"""Randomized cross-validation of the solving engines.

Samples connected graphs with random configurations and demands, then checks
that the move-list solver, the breadth-first oracle, and (on trees) the
leaf-collapse solver all return the same verdict, that every certificate
verifies with an acyclic support, and that a negative potential is only ever
reported for oracle-unsolvable instances.

Example:
    python scripts/agreement_sweep.py --cases 2000 --max-vertices 6 --seed 7
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from pebbling import (
    Configuration,
    Demand,
    Graph,
    gamma_witness,
    is_cover_solvable,
    oracle_solvable,
    solve_tree,
    verify_solution,
)


def random_instance(rng: random.Random, max_n: int, max_pebbles: int, max_demand: int):
    n = rng.randint(1, max_n)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    for _ in range(rng.randint(0, n)):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.append((u, v))
    g = Graph(n, edges)
    counts = [0] * n
    for _ in range(rng.randint(0, max_pebbles)):
        counts[rng.randrange(n)] += 1
    demand = [0] * n
    for _ in range(rng.randint(0, max_demand)):
        demand[rng.randrange(n)] += 1
    return g, Configuration(tuple(counts)), Demand(tuple(demand))


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--cases", type=int, default=1000)
    parser.add_argument("--max-vertices", type=int, default=6)
    parser.add_argument("--max-pebbles", type=int, default=8)
    parser.add_argument("--max-demand", type=int, default=4)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    t0 = time.time()
    stats = {"solvable": 0, "unsolvable": 0, "witnessed": 0, "trees": 0}
    for case in range(args.cases):
        g, c, d = random_instance(rng, args.max_vertices, args.max_pebbles, args.max_demand)
        result = is_cover_solvable(g, c, d)
        reference = oracle_solvable(g, c, d)
        if result.solvable != reference:
            print(f"DISAGREEMENT at case {case}: {g} {c.counts} {d.counts}")
            return 1
        if result.solvable:
            stats["solvable"] += 1
            if not verify_solution(g, c, d, result.certificate):
                print(f"BAD CERTIFICATE at case {case}")
                return 1
        else:
            stats["unsolvable"] += 1
        if gamma_witness(g, c, d) is not None:
            stats["witnessed"] += 1
            if reference:
                print(f"UNSOUND POTENTIAL at case {case}")
                return 1
        if g.is_tree:
            stats["trees"] += 1
            if solve_tree(g, c, d) != reference:
                print(f"TREE DISAGREEMENT at case {case}")
                return 1
    elapsed = time.time() - t0
    print(
        f"{args.cases} cases in {elapsed:.1f}s | solvable={stats['solvable']} "
        f"unsolvable={stats['unsolvable']} (witnessed={stats['witnessed']}) "
        f"trees={stats['trees']} | all engines agree"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
