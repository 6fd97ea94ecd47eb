"""Block decomposition: maximal edge groups chained by shared vertex pairs.

Two edges are chained when they share exactly two vertices; blocks are the
connected components of that relation and partition the edge set. Blocks of
a BC4-free hypergraph are either "type 1" (one distinguished edge meets every
other edge in a pair and absorbs all pairwise intersections) or "type 2"
(the 4-vertex complete 3-graph minus one edge); arbitrary inputs may also
produce OTHER.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from bergec4.hypergraph import DegreeProfile, Edge, Hypergraph, degree_profile


class BlockType(enum.Enum):
    TYPE1 = "TYPE1"
    TYPE2 = "TYPE2"
    OTHER = "OTHER"


@dataclass(frozen=True)
class Block:
    """One block: member edge indices, covered vertices, shape, leaf edges."""

    edge_indices: tuple[int, ...]
    vertex_set: frozenset[int]
    classification: BlockType
    leaf_edges: tuple[int, ...]

    @property
    def edge_count(self) -> int:
        return len(self.edge_indices)

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_set)


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks in deterministic order plus the edge-index -> block-index map."""

    blocks: tuple[Block, ...]
    edge_to_block: tuple[int, ...]


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _leaf_positions(edges: Sequence[Edge]) -> list[int]:
    # an edge is a leaf iff it owns a vertex no other edge of the block touches
    count = Counter(v for e in edges for v in e)
    return [i for i, e in enumerate(edges) if any(count[v] == 1 for v in e)]


def _is_type1(edges: Sequence[Edge]) -> bool:
    sets = [frozenset(e) for e in edges]
    for anchor in sets:
        others = [f for f in sets if f != anchor]
        if any(len(anchor & f) != 2 for f in others):
            continue
        if all(f1 & f2 <= anchor for f1, f2 in combinations(others, 2)):
            return True
    return False


def _classify_edges(edges: Sequence[Edge]) -> BlockType:
    vertices = set()
    for e in edges:
        vertices.update(e)
    if len(edges) == 3 and len(vertices) == 4:
        # three distinct triples inside four vertices: all triples but one
        return BlockType.TYPE2
    if _is_type1(edges):
        return BlockType.TYPE1
    return BlockType.OTHER


def decompose(h: Hypergraph) -> BlockDecomposition:
    """Partition the edges into blocks, classified and with leaf edges marked.

    Union-find over edges keyed by their vertex pairs: edges sharing a pair
    share exactly two vertices, which is the chain relation.
    """
    uf = _UnionFind(h.edge_count)
    first_owner: dict[tuple[int, int], int] = {}
    for i, e in enumerate(h.edges):
        for p in combinations(e, 2):
            if p in first_owner:
                uf.union(first_owner[p], i)
            else:
                first_owner[p] = i
    groups: dict[int, list[int]] = {}
    for i in range(h.edge_count):
        groups.setdefault(uf.find(i), []).append(i)
    blocks: list[Block] = []
    edge_to_block = [0] * h.edge_count
    for root in sorted(groups, key=lambda r: min(groups[r])):
        indices = tuple(sorted(groups[root]))
        member_edges = [h.edges[i] for i in indices]
        vertex_set = frozenset(v for e in member_edges for v in e)
        leaves = tuple(indices[pos] for pos in _leaf_positions(member_edges))
        block = Block(indices, vertex_set, _classify_edges(member_edges), leaves)
        for i in indices:
            edge_to_block[i] = len(blocks)
        blocks.append(block)
    return BlockDecomposition(tuple(blocks), tuple(edge_to_block))


def leaf_edges(h: Hypergraph, block: Block) -> set[int]:
    """Edge indices of the block that own a vertex met by no other block edge."""
    member_edges = [h.edges[i] for i in block.edge_indices]
    return {block.edge_indices[pos] for pos in _leaf_positions(member_edges)}


def classify(h: Hypergraph, block: Block) -> BlockType:
    """Classify a block by direct definition testing (TYPE2 wins if both hold)."""
    return _classify_edges([h.edges[i] for i in block.edge_indices])


def block_degrees(h: Hypergraph, decomposition: BlockDecomposition) -> tuple[int, ...]:
    """Per-vertex count of blocks having some edge through the vertex."""
    out = [0] * h.n
    for block in decomposition.blocks:
        for v in block.vertex_set:
            out[v] += 1
    return tuple(out)


def full_degree_profile(h: Hypergraph, decomposition: BlockDecomposition | None = None) -> DegreeProfile:
    """Degree profile with the block-degree column attached."""
    if decomposition is None:
        decomposition = decompose(h)
    base = degree_profile(h)
    return DegreeProfile(base.hyper, base.shadow, base.excess, block_degrees(h, decomposition))


def excess_degree_within(h: Hypergraph, block: Block, v: int) -> int:
    """Excess degree of v in the subhypergraph induced by the block's edges."""
    if v not in block.vertex_set:
        raise ValueError(f"vertex {v} is not in the block")
    deg = 0
    partners: set[int] = set()
    for i in block.edge_indices:
        e = h.edges[i]
        if v in e:
            deg += 1
            partners.update(u for u in e if u != v)
    return len(partners) - deg
