"""Dense BC4-free constructions and a seeded random instance generator.

The dense family clones one side of a C4-free bipartite incidence graph: for
every vertex v on the cloned side a fresh v' is created and every graph edge
uv becomes the hyperedge {u, v, v'}. With the point/line incidence graph of
PG(2, q) this gives n = 3(q^2+q+1) vertices and (q+1)(q^2+q+1) edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
import random

from bergec4.berge import Bc4FreeBuilder, is_bc4_free
from bergec4.hypergraph import Hypergraph


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with 0-based ids on each side and no duplicate pairs."""

    left_count: int
    right_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.left_count and 0 <= v < self.right_count):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def is_c4_free(g: BipartiteGraph) -> bool:
    """True iff no two left vertices share two right neighbors."""
    nbrs: list[set[int]] = [set() for _ in range(g.left_count)]
    for u, v in g.edges:
        nbrs[u].add(v)
    for a, b in combinations(range(g.left_count), 2):
        if len(nbrs[a] & nbrs[b]) >= 2:
            return False
    return True


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    i = 2
    while i * i <= q:
        if q % i == 0:
            return False
        i += 1
    return True


# irreducible polynomials (coefficients low to high, monic) for the
# characteristic-2 extensions that have no x^2 - nonresidue form
_POLY_TABLE = {
    4: (2, [1, 1, 1]),  # x^2 + x + 1 over GF(2)
    8: (2, [1, 1, 0, 1]),  # x^3 + x + 1 over GF(2)
    16: (2, [1, 1, 0, 0, 1]),  # x^4 + x + 1 over GF(2)
}


class _Field:
    """Arithmetic tables for GF(q); elements are ints 0..q-1.

    Supported orders: any prime (modular arithmetic), any odd prime square
    (adjoining a square root of a non-residue), and 4, 8, 16 from the
    polynomial table. Anything else is rejected.
    """

    def __init__(self, q: int):
        if _is_prime(q):
            self.q = q
            self._mul = None  # prime field: compute directly
            self._p = q
            return
        p, k, poly = self._extension_parameters(q)
        self.q = q
        self._p = p
        digits = [self._digits(x, p, k) for x in range(q)]
        reduction = [(-c) % p for c in poly[:-1]]  # x^k = reduction in GF(p)
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(q):
                # schoolbook polynomial product, reduced degree by degree
                prod = [0] * (2 * k - 1)
                for i, ai in enumerate(digits[a]):
                    if ai:
                        for j, bj in enumerate(digits[b]):
                            prod[i + j] = (prod[i + j] + ai * bj) % p
                for d in range(2 * k - 2, k - 1, -1):
                    c = prod[d]
                    if c:
                        prod[d] = 0
                        for t, r in enumerate(reduction):
                            prod[d - k + t] = (prod[d - k + t] + c * r) % p
                mul[a][b] = self._value(prod[:k], p)
        self._mul = mul

    @staticmethod
    def _extension_parameters(q: int) -> tuple[int, int, list[int]]:
        if q in _POLY_TABLE:
            p, poly = _POLY_TABLE[q]
            return p, len(poly) - 1, poly
        root = 2
        while root * root < q:
            root += 1
        if root * root == q and _is_prime(root):
            # odd prime square: x^2 - r with r the least non-residue mod root
            residues = {(x * x) % root for x in range(root)}
            r = next(x for x in range(2, root) if x not in residues)
            return root, 2, [(-r) % root, 0, 1]
        raise ValueError(
            f"q={q} is not a supported prime power (primes, prime squares, 8, 16)"
        )

    @staticmethod
    def _digits(x: int, p: int, k: int) -> list[int]:
        out = []
        for _ in range(k):
            out.append(x % p)
            x //= p
        return out

    @staticmethod
    def _value(digits: list[int], p: int) -> int:
        x = 0
        for d in reversed(digits):
            x = x * p + d
        return x

    def add(self, a: int, b: int) -> int:
        if self._mul is None:
            return (a + b) % self.q
        p = self._p
        out, base = 0, 1
        while a or b:
            out += ((a + b) % p) * base
            a //= p
            b //= p
            base *= p
        return out

    def mul(self, a: int, b: int) -> int:
        if self._mul is None:
            return (a * b) % self.q
        return self._mul[a][b]


def projective_plane_incidence(q: int) -> BipartiteGraph:
    """Point/line incidence graph of PG(2, q): (q^2+q+1) + (q^2+q+1) vertices.

    Both points and lines are the canonical projective triples over GF(q);
    a point (x, y, z) lies on line (a, b, c) when ax + by + cz = 0. Two
    points share exactly one line, so the graph is C4-free (girth 6); this
    is asserted by a direct neighborhood check for q <= 16.
    """
    field = _Field(q)
    triples: list[tuple[int, int, int]] = [(1, 0, 0)]
    triples.extend((x, 1, 0) for x in range(q))
    triples.extend((x, y, 1) for x in range(q) for y in range(q))
    count = len(triples)
    assert count == q * q + q + 1
    edges = []
    for li, (a, b, c) in enumerate(triples):
        for pi, (x, y, z) in enumerate(triples):
            s = field.add(field.add(field.mul(a, x), field.mul(b, y)), field.mul(c, z))
            if s == 0:
                edges.append((pi, li))
    g = BipartiteGraph(count, count, tuple(sorted(edges)))
    assert g.edge_count == (q + 1) * count
    if q <= 16:
        assert is_c4_free(g), f"incidence graph for q={q} is not C4-free"
    return g


def expand_to_hypergraph(g: BipartiteGraph, cloned_side: str = "right") -> Hypergraph:
    """Clone one side: every graph edge uv becomes the hyperedge {u, v, v'}.

    Vertex layout: the uncloned side keeps ids 0..K-1, cloned-side originals
    follow, then their clones in the same order. The result has
    |other side| + 2*|cloned side| vertices and |E(g)| edges.
    """
    if cloned_side not in ("left", "right"):
        raise ValueError(f"cloned_side must be 'left' or 'right', got {cloned_side!r}")
    if cloned_side == "right":
        keep, cloned = g.left_count, g.right_count
        pairs = g.edges
    else:
        keep, cloned = g.right_count, g.left_count
        pairs = tuple((v, u) for u, v in g.edges)
    n = keep + 2 * cloned
    edges = [(u, keep + v, keep + cloned + v) for u, v in pairs]
    return Hypergraph(n, edges)


def lower_bound_construction(q: int) -> Hypergraph:
    """Cloned projective-plane incidence hypergraph: dense and BC4-free.

    n = 3(q^2+q+1), |E| = (q+1)(q^2+q+1); BC4-freeness is detector-checked
    at generation time for q <= 16.
    """
    g = projective_plane_incidence(q)
    h = expand_to_hypergraph(g, "right")
    count = q * q + q + 1
    assert h.n == 3 * count and h.edge_count == (q + 1) * count
    if q <= 16:
        assert is_bc4_free(h), f"construction for q={q} is not BC4-free"
    return h


def random_bc4free(n: int, target_m: int, seed: int) -> Hypergraph:
    """Greedy random BC4-free hypergraph, reproducible for a fixed seed.

    All C(n, 3) triples are shuffled with random.Random(seed) (Mersenne
    Twister, platform independent) and added greedily while the result stays
    BC4-free, stopping at target_m or exhaustion. The sample is biased by the
    greedy order; it is a falsification-test generator, not a uniform one.
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if target_m < 0:
        raise ValueError(f"target_m must be >= 0, got {target_m}")
    triples = list(combinations(range(n), 3))
    random.Random(seed).shuffle(triples)
    builder = Bc4FreeBuilder(n)
    for t in triples:
        if len(builder) >= target_m:
            break
        builder.try_add(t)
    return builder.to_hypergraph()
