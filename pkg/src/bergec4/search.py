"""Exact extremal edge counts for BC4-free hypergraphs at desk scale.

Two independent routes: an exhaustive edge-subset sweep (n <= 6) and a pruned
depth-first branch-and-bound. Correctness never depends on pruning; every
prune rule carries its justifying lemma and is covered by oracle-equivalence
tests against the exhaustive sweep.
"""

from __future__ import annotations

import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations

from bergec4.berge import Bc4FreeBuilder
from bergec4.bounds import decimal_str, edge_ratio, upper_bound
from bergec4.hypergraph import Edge, Hypergraph


@dataclass(frozen=True)
class SearchResult:
    """Outcome for one n; optimal is False when a node budget cut the search."""

    n: int
    max_edges: int
    witness: Hypergraph
    optimal: bool
    nodes_explored: int
    elapsed: float = field(compare=False)


def _four_edges_support_c4(edges: tuple[Edge, Edge, Edge, Edge]) -> bool:
    """Do these four distinct edges carry a Berge C4 using all of them?

    Direct from the definition: fix the first edge at cycle position 0, try
    every order of the rest, and pick each cycle vertex from the intersection
    of consecutive edges. Intentionally independent of the matching-based
    detector so the two search routes stay separate oracles.
    """
    sets = [set(e) for e in edges]
    for order in permutations((1, 2, 3)):
        ring = [sets[0], sets[order[0]], sets[order[1]], sets[order[2]]]
        choices = [ring[i - 1] & ring[i] for i in range(4)]
        if any(not c for c in choices):
            continue
        for v0 in choices[0]:
            for v1 in choices[1]:
                if v1 == v0:
                    continue
                for v2 in choices[2]:
                    if v2 in (v0, v1):
                        continue
                    for v3 in choices[3]:
                        if v3 not in (v0, v1, v2):
                            return True
    return False


def brute_force_ex(n: int) -> SearchResult:
    """Exhaustive sweep of all edge subsets; exact for 3 <= n <= 6.

    A hypergraph contains a Berge C4 iff some 4 of its edges support one, so
    freeness of every subset follows from the 4-edge base cases: any subset
    with at least 5 edges is free iff removing any single edge leaves it free
    (checking 5 removals suffices, since a 4-edge subset must avoid one of
    any 5 chosen edges). Returns the lexicographically least maximizer.
    """
    if not 3 <= n <= 6:
        raise ValueError(f"brute force supports 3 <= n <= 6, got {n}")
    start = time.perf_counter()
    triples = list(combinations(range(n), 3))
    m = len(triples)
    free = bytearray(1 << m)
    best_mask = 0
    best_size = 0
    for mask in range(1 << m):
        pc = mask.bit_count()
        if pc <= 3:
            free[mask] = 1
        elif pc == 4:
            bits, rest = [], mask
            while rest:
                b = rest & -rest
                bits.append(b.bit_length() - 1)
                rest ^= b
            quad = tuple(triples[b] for b in bits)
            free[mask] = 0 if _four_edges_support_c4(quad) else 1
        else:
            ok, rest = 1, mask
            for _ in range(5):
                b = rest & -rest
                if not free[mask ^ b]:
                    ok = 0
                    break
                rest ^= b
            free[mask] = ok
        if free[mask] and pc > best_size:
            best_size, best_mask = pc, mask
        elif free[mask] and pc == best_size and pc:
            # lexicographically least edge-index tuple wins
            if _mask_bits(mask) < _mask_bits(best_mask):
                best_mask = mask
    witness = Hypergraph(n, [triples[b] for b in _mask_bits(best_mask)])
    return SearchResult(n, best_size, witness, True, 1 << m, time.perf_counter() - start)


def _mask_bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


class _Budget(Exception):
    pass


def _greedy(n: int, triples: list[Edge]) -> list[Edge]:
    builder = Bc4FreeBuilder(n)
    for t in triples:
        builder.try_add(t)
    return list(builder.edges)


def _explore_subtree(
    n: int,
    triples: list[Edge],
    prefix: list[Edge],
    start: int,
    seed_best: int,
    cap: int,
    budget: int | None,
) -> tuple[int, list[Edge] | None, int, bool]:
    """DFS over include/exclude decisions from `start`, after forcing `prefix`.

    Returns (best size found, witness when it beats seed_best, nodes,
    completed). The incumbent is local to the subtree (seeded with
    seed_best), never shared with sibling subtrees, so the visited node set
    is a pure function of the arguments and thread counts cannot change it.
    """
    m = len(triples)
    builder = Bc4FreeBuilder(n)
    for e in prefix:
        ok = builder.try_add(e)
        assert ok, "subtree prefix must be feasible"
    best = seed_best
    best_edges: list[Edge] | None = None
    nodes = 0

    def dfs(i: int) -> None:
        nonlocal best, best_edges, nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise _Budget
        size = len(builder)
        if best >= cap or size + (m - i) <= best:
            return
        if i == m:
            best = size
            best_edges = list(builder.edges)
            return
        if builder.try_add(triples[i]):
            dfs(i + 1)
            builder.pop()
        dfs(i + 1)

    completed = True
    try:
        dfs(start)
    except _Budget:
        completed = False
    return best, best_edges, nodes, completed


def branch_and_bound_ex(n: int, node_budget: int | None = None, threads: int = 1) -> SearchResult:
    """Pruned depth-first search over triples in lexicographic order.

    Prune rules, each with its lemma:
    - remaining-count: with r triples left, the current set can grow by at
      most r, so branches with size + r <= incumbent are dead;
    - analytic cap: every BC4-free hypergraph on n vertices satisfies the
      combined chain inequality (bounds module), so no branch can exceed
      floor(upper_bound(n)) and the search may stop at the cap;
    - first-edge pinning: relabeling the vertices of any edge of a nonempty
      maximizer to 0,1,2 yields an isomorphic maximizer whose
      lexicographically least edge is {0,1,2}, so the root edge is forced.

    Exploration is canonical and incumbents are never shared across
    top-level subtrees, so the result (witness and node count) is identical
    for any thread count; a finite node budget forces sequential execution
    so that nodes are charged in canonical order.
    """
    if n < 3:
        raise ValueError(f"branch and bound requires n >= 3, got {n}")
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    start_time = time.perf_counter()
    triples = list(combinations(range(n), 3))
    m = len(triples)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * m + 1000))
    cap = upper_bound(n).floor()
    greedy_edges = _greedy(n, triples)
    best_size = len(greedy_edges)
    best_edges = greedy_edges
    nodes_total = 0
    completed = True

    # the pinned root {0,1,2} plus each choice of second included triple
    subtrees = [(j, [triples[0], triples[j]]) for j in range(1, m)]
    run_parallel = threads > 1 and node_budget is None

    if run_parallel:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [
                pool.submit(_explore_subtree, n, triples, prefix, j + 1, best_size, cap, None)
                for j, prefix in subtrees
            ]
            outcomes = [f.result() for f in futures]
    else:
        outcomes = []
        remaining = node_budget
        for j, prefix in subtrees:
            if remaining is not None and remaining <= 0:
                completed = False
                break
            out = _explore_subtree(n, triples, prefix, j + 1, best_size, cap, remaining)
            outcomes.append(out)
            if remaining is not None:
                remaining -= out[2]

    for size, edges, nodes, done in outcomes:
        nodes_total += nodes
        if not done:
            completed = False
        if edges is not None and size > best_size:
            best_size, best_edges = size, edges
    witness = Hypergraph(n, best_edges)
    return SearchResult(n, best_size, witness, completed, nodes_total, time.perf_counter() - start_time)


def ex_table(n_max: int, budget: int | None = 200_000, threads: int = 1) -> list[SearchResult]:
    """Extremal values for n = 3..n_max: exhaustive where allowed, else pruned."""
    if n_max < 3:
        raise ValueError(f"n_max must be >= 3, got {n_max}")
    results = []
    for n in range(3, n_max + 1):
        if n <= 6:
            results.append(brute_force_ex(n))
        else:
            results.append(branch_and_bound_ex(n, node_budget=budget, threads=threads))
    return results


def format_ex_table(results: list[SearchResult]) -> str:
    """Tab-separated table: n, max_edges, optimal, upper_bound (6 decimals), ratio."""
    lines = ["n\tmax_edges\toptimal\tupper_bound\tratio"]
    for r in results:
        bound = upper_bound(r.n).decimal(6)
        ratio = decimal_str(edge_ratio(r.n, r.max_edges))
        flag = "true" if r.optimal else "false"
        lines.append(f"{r.n}\t{r.max_edges}\t{flag}\t{bound}\t{ratio}")
    return "\n".join(lines) + "\n"
