"""Uniform hypergraphs: augmentation, blow-ups, copy search, Lagrangians.

The linear-independence hypergraph puts an edge on every independent
r-subset of the nonzero vectors of GF(2)^(r+k); stem augmentation turns
an s-uniform pattern into an r-uniform one by adding r - s shared fresh
vertices to every edge.  The Lagrangian is maximized by multiplicative
(replicator) ascent on the simplex with random restarts.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import OutOfRegimeError
from .gf2 import rank_ints

DEFAULT_COPY_BUDGET = 5_000_000
DEFAULT_EDGE_BUDGET = 5_000_000


@dataclass(frozen=True)
class UniformHypergraph:
    """r-uniform hypergraph on vertices 0..n_vertices-1; edges are sorted
    r-tuples of distinct vertices."""

    r: int
    n_vertices: int
    edges: frozenset

    def __post_init__(self):
        if self.r < 1 or self.n_vertices < 0:
            raise ValueError("need r >= 1 and a non-negative vertex count")
        for e in self.edges:
            if len(e) != self.r or list(e) != sorted(set(e)):
                raise ValueError(f"edge {e} is not a sorted {self.r}-tuple of distinct vertices")
            if e[0] < 0 or e[-1] >= self.n_vertices:
                raise ValueError(f"edge {e} leaves the vertex range")

    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n_vertices
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    def density(self) -> Fraction:
        """Edge count over C(n_vertices, r)."""
        total = math.comb(self.n_vertices, self.r)
        if total == 0:
            return Fraction(0)
        return Fraction(len(self.edges), total)


def complete(r: int, t: int) -> UniformHypergraph:
    """All r-subsets of t vertices."""
    if not 1 <= r <= t:
        raise ValueError("need 1 <= r <= t")
    return UniformHypergraph(
        r, t, frozenset(itertools.combinations(range(t), r)))


def augment(graph: UniformHypergraph, r: int) -> UniformHypergraph:
    """Raise uniformity to r by appending a stem of r - k fresh vertices
    (indices n..n+r-k-1) to every edge."""
    k = graph.r
    if r < k:
        raise ValueError("target uniformity must be at least the current one")
    stem = tuple(range(graph.n_vertices, graph.n_vertices + r - k))
    edges = frozenset(e + stem for e in graph.edges)
    return UniformHypergraph(r, graph.n_vertices + r - k, edges)


def augmented_complete(s: int, t: int, r: int) -> UniformHypergraph:
    """The complete s-uniform hypergraph on t vertices augmented to
    uniformity r: t leaves, r - s stem vertices, C(t, s) edges."""
    return augment(complete(s, t), r)


def complete_multipartite(class_sizes: tuple[int, ...] | list) -> UniformHypergraph:
    """k-uniform complete multipartite hypergraph with k + 1 classes:
    edges take at most one vertex per class.  Its edge count is
    sum_i prod_{j != i} size_j, the partition functional."""
    sizes = tuple(int(a) for a in class_sizes)
    if len(sizes) < 2 or any(a < 0 for a in sizes):
        raise ValueError("need at least two non-negative class sizes")
    k = len(sizes) - 1
    offsets = [0]
    for a in sizes:
        offsets.append(offsets[-1] + a)
    n = offsets[-1]
    edges = []
    for skip in range(len(sizes)):
        pools = [range(offsets[i], offsets[i + 1])
                 for i in range(len(sizes)) if i != skip]
        for combo in itertools.product(*pools):
            edges.append(tuple(sorted(combo)))
    return UniformHypergraph(k, n, frozenset(edges))


def linear_independence_hypergraph(r: int, k: int) -> UniformHypergraph:
    """Edges are the independent r-subsets of the nonzero vectors of
    GF(2)^(r+k); vertex i stands for the vector i + 1.  Materialized
    only for r + k <= 6; use linear_independence_density beyond."""
    if r < 1 or k < 0:
        raise ValueError("need r >= 1 and k >= 0")
    m = r + k
    if m > 6:
        raise OutOfRegimeError("materialized only for r + k <= 6")
    n = (1 << m) - 1
    edges = frozenset(
        tuple(v - 1 for v in combo)
        for combo in itertools.combinations(range(1, n + 1), r)
        if rank_ints(combo) == r)
    return UniformHypergraph(r, n, edges)


def linear_independence_density(r: int, k: int) -> Fraction:
    """Exact edge density of the linear-independence hypergraph, for
    r + k <= 20: independent r-subsets over all r-subsets.  Always
    strictly above 1 - 2^-k."""
    if r < 1 or k < 0:
        raise ValueError("need r >= 1 and k >= 0")
    m = r + k
    if m > 20:
        raise OutOfRegimeError("density supported for r + k <= 20")
    ordered = 1
    for i in range(r):
        ordered *= (1 << m) - (1 << i)
    unordered = ordered // math.factorial(r)
    return Fraction(unordered, math.comb((1 << m) - 1, r))


def blow_up(graph: UniformHypergraph, b: int,
            edge_budget: int = DEFAULT_EDGE_BUDGET) -> UniformHypergraph:
    """Replace each vertex v by b copies (v*b .. v*b+b-1); each edge by
    the b^r edges choosing one copy per original vertex."""
    if b < 1:
        raise ValueError("need b >= 1")
    r = graph.r
    total = len(graph.edges) * b ** r
    if total > edge_budget:
        raise OutOfRegimeError(f"blow-up would hold {total} edges")
    edges = []
    for e in graph.edges:
        for copies in itertools.product(range(b), repeat=r):
            edges.append(tuple(sorted(v * b + c for v, c in zip(e, copies))))
    return UniformHypergraph(r, graph.n_vertices * b, frozenset(edges))


def _twin_classes(graph: UniformHypergraph) -> list[int]:
    """class id per vertex; two vertices are twins when swapping them
    maps the edge set onto itself.  Passing swaps generate the full
    symmetric group inside each class, so ordering images inside a class
    is a sound symmetry break."""
    n = graph.n_vertices
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = graph.edges
    for u in range(n):
        for v in range(u + 1, n):
            if find(u) == find(v):
                continue
            swapped = frozenset(
                tuple(sorted(v if x == u else u if x == v else x for x in e))
                for e in edges)
            if swapped == edges:
                parent[find(v)] = find(u)
    return [find(x) for x in range(n)]


def contains_copy(big: UniformHypergraph, small: UniformHypergraph,
                  node_budget: int = DEFAULT_COPY_BUDGET) -> Optional[dict]:
    """An injective vertex map sending every edge of `small` to an edge
    of `big`, or None.  Backtracking assigns the most edge-constrained
    vertex first, prunes by degree, and breaks twin symmetry.

    Raises:
        OutOfRegimeError: when the node budget runs out, so an exhausted
        search is never mistaken for absence.
    """
    if big.r != small.r:
        raise ValueError("uniformities differ")
    m = small.n_vertices
    if m > big.n_vertices:
        return None
    if not small.edges:
        return {i: i for i in range(m)}

    small_deg = small.degrees()
    big_deg = big.degrees()
    small_edges = [tuple(e) for e in small.edges]

    # order: maximize edges fully anchored, then degree, then index
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < m:
        best_v, best_key = -1, None
        for v in range(m):
            if v in placed:
                continue
            anchored = sum(1 for e in small_edges
                           if v in e and all(x in placed or x == v for x in e))
            key = (anchored, small_deg[v], -v)
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        order.append(best_v)
        placed.add(best_v)

    position = {v: i for i, v in enumerate(order)}
    # edges checkable as soon as their last vertex (in assignment order)
    # is placed
    anchored_at: list[list[tuple]] = [[] for _ in range(m)]
    for e in small_edges:
        anchored_at[max(position[x] for x in e)].append(e)

    twin = _twin_classes(small)
    # for each vertex, the twin assigned most recently before it in the
    # assignment order (images must increase along each twin class)
    prev_twin: list[Optional[int]] = [None] * m
    last_seen: dict[int, int] = {}
    for i, v in enumerate(order):
        c = twin[v]
        if c in last_seen:
            prev_twin[i] = last_seen[c]
        last_seen[c] = v

    image: dict[int, int] = {}
    used: set[int] = set()
    edge_set = big.edges
    nodes = 0

    def dfs(i: int) -> bool:
        nonlocal nodes
        if i == m:
            return True
        v = order[i]
        floor = -1
        if prev_twin[i] is not None:
            floor = image[prev_twin[i]]
        for u in range(floor + 1, big.n_vertices):
            if u in used or big_deg[u] < small_deg[v]:
                continue
            nodes += 1
            if nodes > node_budget:
                raise OutOfRegimeError(
                    f"copy search exceeded the node budget {node_budget}")
            image[v] = u
            ok = True
            for e in anchored_at[i]:
                mapped = tuple(sorted(image[x] for x in e))
                if mapped not in edge_set:
                    ok = False
                    break
            if ok:
                used.add(u)
                if dfs(i + 1):
                    return True
                used.discard(u)
            del image[v]
        return False

    if dfs(0):
        return dict(image)
    return None


def lagrangian_polynomial(graph: UniformHypergraph, x) -> float:
    """sum over edges of the product of the entries of x on the edge."""
    if len(x) != graph.n_vertices:
        raise ValueError("need one weight per vertex")
    total = 0.0
    for e in graph.edges:
        p = 1.0
        for v in e:
            p *= x[v]
        total += p
    return total


@dataclass(frozen=True)
class LagrangianResult:
    value: float
    point: tuple
    restarts_used: int


def lagrangian(graph: UniformHypergraph, restarts: int = 64,
               tol: float = 1e-10, seed: int = 0,
               max_iters: int = 20_000) -> LagrangianResult:
    """Maximum of the edge polynomial over the probability simplex.

    Multiplicative ascent: x_i <- x_i * dP/dx_i / (r P); by homogeneity
    the update stays on the simplex and never decreases P, so each
    restart climbs until the value change drops below tol.  The best of
    `restarts` random interior starts is returned.
    """
    n = graph.n_vertices
    if n == 0 or not graph.edges:
        return LagrangianResult(0.0, (0.0,) * n, 0)
    r = graph.r
    edges = np.array(sorted(graph.edges), dtype=np.int64)
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    best_value = -1.0
    best_point = None
    for _ in range(restarts):
        x = rng.dirichlet(np.ones(n))
        x = np.clip(x, 1e-12, None)
        x /= x.sum()
        prev = -1.0
        for _ in range(max_iters):
            edge_weights = x[edges]
            products = edge_weights.prod(axis=1)
            value = products.sum()
            if value <= 0.0:
                break
            if abs(value - prev) < tol * max(value, 1.0):
                break
            prev = value
            grad = np.zeros(n)
            np.add.at(grad, edges, products[:, None] / edge_weights)
            x = x * grad / (r * value)
            # projection safeguard: keep strictly positive and on the simplex
            x = np.clip(x, 1e-300, None)
            s = x.sum()
            if not np.isfinite(s) or s <= 0.0:
                break
            x /= s
        value = float(lagrangian_polynomial(graph, x))
        if value > best_value:
            best_value = value
            best_point = x
    assert best_point is not None
    return LagrangianResult(best_value, tuple(float(v) for v in best_point),
                           restarts)


def basis_hypergraph(t: int) -> UniformHypergraph:
    """t-uniform hypergraph on the nonzero vectors of GF(2)^t whose edges
    are the bases; vertex i stands for the vector i + 1.  Its Lagrangian
    times t! equals the uniform basis probability."""
    if t < 1:
        raise ValueError("need t >= 1")
    if t > 4:
        raise OutOfRegimeError("basis hypergraph materialized for t <= 4 only")
    n = (1 << t) - 1
    edges = frozenset(
        tuple(v - 1 for v in combo)
        for combo in itertools.combinations(range(1, n + 1), t)
        if rank_ints(combo) == t)
    return UniformHypergraph(t, n, edges)
