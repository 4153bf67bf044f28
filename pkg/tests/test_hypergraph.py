"""Uniform hypergraphs: construction counts, copy containment and
Lagrangian optimization."""

import math
from fractions import Fraction

import pytest

from hypercube_codes.basisprob import uniform_basis_probability
from hypercube_codes.errors import OutOfRegimeError
from hypercube_codes.extremal import max_partition_product_sum
from hypercube_codes.gf2 import rank_ints
from hypercube_codes.hypergraph import (
    UniformHypergraph,
    augmented_complete,
    basis_hypergraph,
    blow_up,
    complete,
    complete_multipartite,
    contains_copy,
    lagrangian,
    lagrangian_polynomial,
    linear_independence_density,
    linear_independence_hypergraph,
)


def assert_valid_copy(big, small, image):
    assert image is not None
    assert len(set(image.values())) == small.n_vertices
    for edge in small.edges:
        mapped = tuple(sorted(image[v] for v in edge))
        assert mapped in big.edges


def test_hypergraph_validation_and_basics():
    tri = complete(2, 3)
    assert tri.n_vertices == 3
    assert tri.edge_count() == 3
    assert tri.degrees() == [2, 2, 2]
    assert tri.density() == Fraction(1)
    with pytest.raises(ValueError):
        UniformHypergraph(2, 3, frozenset({(0, 1, 2)}))
    with pytest.raises(ValueError):
        UniformHypergraph(2, 3, frozenset({(0, 3)}))
    with pytest.raises(ValueError):
        UniformHypergraph(2, 3, frozenset({(1, 0)}))


def test_complete_counts():
    assert complete(3, 5).edge_count() == 10
    assert complete(1, 4).edge_count() == 4
    assert complete(2, 4).density() == Fraction(1)


def test_stem_augmentation():
    # three pairs, each completed by the same two stem vertices
    aug = augmented_complete(2, 3, 4)
    assert aug.r == 4
    assert aug.n_vertices == 5
    assert aug.edges == frozenset({(0, 1, 3, 4), (0, 2, 3, 4), (1, 2, 3, 4)})
    # degenerate: no stem needed when r equals s
    assert augmented_complete(2, 4, 2).edges == complete(2, 4).edges


def test_complete_multipartite_counts():
    tri = complete_multipartite((2, 2, 1))
    assert tri.r == 2
    assert tri.n_vertices == 5
    assert tri.edge_count() == 2 * 1 + 2 * 1 + 2 * 2
    # the edge count is exactly the one-class-omitted product sum
    for d in range(2, 11):
        result = max_partition_product_sum(d)
        graph = complete_multipartite(result.parts)
        assert graph.edge_count() == result.value
    with pytest.raises(ValueError):
        complete_multipartite((3,))


def test_linear_independence_graph_small():
    pairs = linear_independence_hypergraph(2, 1)
    assert pairs.n_vertices == 7
    # two distinct nonzero vectors are always independent
    assert pairs.edge_count() == 21
    triples = linear_independence_hypergraph(3, 2)
    assert triples.n_vertices == 31
    assert triples.edge_count() == 4340
    assert math.comb(31, 3) == 4495
    for edge in list(triples.edges)[:50]:
        assert rank_ints(v + 1 for v in edge) == 3
    with pytest.raises(OutOfRegimeError):
        linear_independence_hypergraph(4, 3)


def test_linear_independence_density_matches_materialization():
    for r in (1, 2, 3):
        for k in (0, 1, 2, 3):
            if r + k > 6:
                continue
            graph = linear_independence_hypergraph(r, k)
            assert graph.density() == linear_independence_density(r, k)


def test_linear_independence_density_beats_threshold():
    for k in range(1, 13):
        for r in (1, 2, 5, 8):
            if r + k > 20:
                continue
            assert linear_independence_density(r, k) > 1 - Fraction(1, 1 << k)


def test_blow_up_counts_and_density():
    tri = complete(2, 3)
    doubled = blow_up(tri, 2)
    assert doubled.n_vertices == 6
    assert doubled.edge_count() == 12
    # the blown-up triangle density approaches 2/3 from above
    for b in range(1, 9):
        blown = blow_up(tri, b)
        assert blown.density() == Fraction(2 * b, 3 * b - 1)
    with pytest.raises(OutOfRegimeError):
        blow_up(complete(3, 12), 10, edge_budget=1000)


def test_blow_up_preserves_lagrangian():
    tri = complete(2, 3)
    base = lagrangian(tri, restarts=16).value
    blown = lagrangian(blow_up(tri, 3), restarts=16).value
    assert abs(base - blown) < 1e-8
    assert abs(base - 1 / 3) < 1e-9


def test_contains_copy_positive():
    big = complete(2, 5)
    small = complete(2, 3)
    image = contains_copy(big, small)
    assert_valid_copy(big, small, image)
    # a hypergraph contains itself
    self_image = contains_copy(small, small)
    assert_valid_copy(small, small, self_image)
    aug = augmented_complete(2, 3, 3)
    host = linear_independence_hypergraph(3, 1)
    found = contains_copy(host, aug)
    assert_valid_copy(host, aug, found)


def test_contains_copy_negative():
    hexagon = UniformHypergraph(2, 6, frozenset(
        {(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)}))
    assert contains_copy(hexagon, complete(2, 3)) is None
    assert contains_copy(complete(2, 3), complete(2, 4)) is None
    with pytest.raises(ValueError):
        contains_copy(complete(3, 5), complete(2, 3))  # arities differ


def test_contains_copy_edgeless_small():
    small = UniformHypergraph(2, 3, frozenset())
    image = contains_copy(complete(2, 4), small)
    assert image is not None
    assert len(set(image.values())) == 3
    assert contains_copy(complete(2, 2), small) is None  # too few vertices


def test_contains_copy_budget():
    with pytest.raises(OutOfRegimeError):
        contains_copy(complete(2, 7), complete(2, 5), node_budget=2)


def test_lagrangian_polynomial_evaluation():
    tri = complete(2, 3)
    assert lagrangian_polynomial(tri, [0.5, 0.5, 0.0]) == 0.25
    assert abs(lagrangian_polynomial(tri, [1 / 3] * 3) - 1 / 3) < 1e-12


def test_lagrangian_single_edge():
    for r in (1, 2, 3):
        single = complete(r, r)
        result = lagrangian(single, restarts=8)
        assert abs(result.value - r ** -r) < 1e-9
        assert abs(sum(result.point) - 1) < 1e-9


def test_lagrangian_complete_graphs():
    # lambda(K_t) = (t - 1) / (2 t) for 2-uniform cliques
    for t in (2, 3, 4, 5):
        value = lagrangian(complete(2, t), restarts=16).value
        assert abs(value - (t - 1) / (2 * t)) < 1e-8


def test_lagrangian_monotone_under_edge_addition():
    path = UniformHypergraph(2, 3, frozenset({(0, 1), (1, 2)}))
    tri = complete(2, 3)
    a = lagrangian(path, restarts=16).value
    b = lagrangian(tri, restarts=16).value
    assert b >= a - 1e-12
    assert abs(a - 0.25) < 1e-8  # best point uses one edge fully


def test_basis_hypergraph_counts():
    assert basis_hypergraph(1).edge_count() == 1
    assert basis_hypergraph(2).edge_count() == 3
    assert basis_hypergraph(3).edge_count() == 28
    assert basis_hypergraph(4).edge_count() == 840
    assert basis_hypergraph(3).n_vertices == 7
    with pytest.raises(OutOfRegimeError):
        basis_hypergraph(5)


def test_basis_lagrangian_matches_probability():
    # at the uniform point the edge polynomial counts ordered bases,
    # so t! times the Lagrangian reproduces the basis probability
    for t in (1, 2, 3):
        value = lagrangian(basis_hypergraph(t), restarts=32).value
        expected = float(uniform_basis_probability(t)) / math.factorial(t)
        assert abs(value - expected) < 1e-8
