"""Subcube enumeration, occupancy scans and the exact code search, all
checked against naive oracles."""

import random

import pytest

from hypercube_codes.codes import Code, weight_class_code
from hypercube_codes.cube import (
    Subcube,
    enumerate_subcubes,
    erasure_list_size,
    free_sets_colex,
    max_code_search,
    max_subcube_count,
    max_subcube_count_naive,
    subcube_at,
    subcube_count,
    subcube_total,
    verify_hitting,
)
from hypercube_codes.errors import OutOfRegimeError
from hypercube_codes.gf2 import BitWord


def random_code(rng, n, size):
    words = rng.sample(range(1 << n), size)
    return Code(n, frozenset(words))


def test_subcube_validation():
    cube = Subcube(4, (1, 3), 0b0001)
    assert cube.dim == 2
    assert cube.free_mask == 0b1010
    with pytest.raises(ValueError):
        Subcube(4, (3, 1), 0)
    with pytest.raises(ValueError):
        Subcube(4, (1, 4), 0)
    with pytest.raises(ValueError):
        Subcube(4, (1,), 0b0010)  # base set on a free coordinate


def test_subcube_vertices_and_contains():
    cube = Subcube(4, (1, 3), 0b0001)
    assert list(cube.vertices()) == [0b0001, 0b0011, 0b1001, 0b1011]
    for w in range(16):
        assert cube.contains(w) == (w in set(cube.vertices()))


def test_free_sets_colex_order():
    assert list(free_sets_colex(4, 2)) \
        == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
    assert list(free_sets_colex(3, 0)) == [()]
    assert len(list(free_sets_colex(8, 3))) == 56


def test_enumeration_counts():
    assert subcube_total(3, 1) == 12
    assert subcube_total(4, 2) == 24
    cubes = list(enumerate_subcubes(4, 2))
    assert len(cubes) == 24
    assert len(set(cubes)) == 24
    assert all(c.dim == 2 for c in cubes)
    with pytest.raises(ValueError):
        subcube_total(3, 4)


def test_enumeration_matches_unranking():
    for n, d in [(4, 2), (5, 1), (5, 3), (4, 0), (4, 4)]:
        for i, cube in enumerate(enumerate_subcubes(n, d)):
            assert subcube_at(n, d, i) == cube
        with pytest.raises(ValueError):
            subcube_at(n, d, subcube_total(n, d))


def test_enumeration_budget():
    with pytest.raises(OutOfRegimeError):
        list(enumerate_subcubes(10, 5, budget=10))


def test_subcube_count_trivials():
    code = Code(3, frozenset({0b000, 0b011, 0b111}))
    whole = Subcube(3, (0, 1, 2), 0)
    assert subcube_count(code, whole) == 3
    corner = Subcube(3, (), 0b100)
    assert subcube_count(code, corner) == 0
    with pytest.raises(ValueError):
        subcube_count(code, Subcube(4, (), 0))


def test_even_weight_code_meets_every_square_in_two_points():
    code = weight_class_code(4, 2, 0)
    for cube in enumerate_subcubes(4, 2):
        assert subcube_count(code, cube) == 2


def test_fast_scan_matches_naive_oracle():
    rng = random.Random(1234)
    for _ in range(12):
        n = rng.randint(5, 8)
        d = rng.randint(1, 3)
        code = random_code(rng, n, rng.randint(10, min(40, 1 << n)))
        report = max_subcube_count(code, d)
        naive_best, naive_witness = max_subcube_count_naive(code, d)
        assert report.max_count == naive_best
        assert report.witness == naive_witness
        assert sum(report.histogram.values()) == subcube_total(n, d)
        # every word lies in C(n, d) subcubes of dimension d
        weighted = sum(k * v for k, v in report.histogram.items())
        assert weighted == len(code) * len(list(free_sets_colex(n, d)))


def test_scan_thread_invariance():
    rng = random.Random(77)
    code = random_code(rng, 9, 60)
    one = max_subcube_count(code, 2, threads=1)
    many = max_subcube_count(code, 2, threads=4)
    assert one == many


def test_scan_budget_and_degenerate_dimensions():
    rng = random.Random(3)
    code = random_code(rng, 6, 10)
    with pytest.raises(OutOfRegimeError):
        max_subcube_count(code, 3, budget=100)
    whole = max_subcube_count(code, 6)
    assert whole.max_count == len(code)
    assert whole.witness == Subcube(6, tuple(range(6)), 0)
    points = max_subcube_count(code, 0)
    assert points.max_count == 1
    assert points.histogram == {0: 64 - 10, 1: 10}


def test_erasure_count_equals_subcube_count():
    # erasing coordinates of a codeword is the same as counting the
    # codewords of the subcube with those coordinates free
    rng = random.Random(2024)
    for _ in range(800):
        n = rng.randint(2, 8)
        code = random_code(rng, n, rng.randint(1, min(40, 1 << n)))
        word = rng.choice(sorted(code.words))
        d = rng.randint(0, min(3, n))
        erased = tuple(sorted(rng.sample(range(n), d)))
        mask = 0
        for c in erased:
            mask |= 1 << c
        cube = Subcube(n, erased, word & ~mask)
        direct = erasure_list_size(code, BitWord(word, n), erased)
        assert direct == subcube_count(code, cube)
        assert direct >= 1


def test_erasure_validation():
    code = Code(3, frozenset({0b000, 0b011}))
    with pytest.raises(ValueError):
        erasure_list_size(code, BitWord(0b111, 3), (0,))
    with pytest.raises(ValueError):
        erasure_list_size(code, BitWord(0, 3), (0, 0))
    with pytest.raises(ValueError):
        erasure_list_size(code, BitWord(0, 4), (0,))


def test_verify_hitting_exhaustive_three_cube():
    for bits in range(1 << 8):
        words = frozenset(w for w in range(8) if (bits >> w) & 1)
        code = Code(3, words)
        for d in (1, 2):
            report = verify_hitting(code, d)
            missed = [cube for cube in enumerate_subcubes(3, d)
                      if subcube_count(code, cube) == 0]
            assert report.hits_all == (not missed)
            if missed:
                assert report.missed == missed[0]
            else:
                assert report.missed is None


def test_verify_hitting_dimension_zero():
    full = Code(2, frozenset(range(4)))
    assert verify_hitting(full, 0).hits_all
    missing = Code(2, frozenset({0, 1, 3}))
    report = verify_hitting(missing, 0)
    assert not report.hits_all
    assert report.missed == Subcube(2, (), 2)


def test_max_code_small_values():
    # ceil(2^(n+1) / 3) words fit with three per square
    for n, value in [(2, 3), (3, 6), (4, 11)]:
        result = max_code_search(n, 2, 3)
        assert result.certified
        assert result.max_size == value
        assert value == -(-(1 << (n + 1)) // 3)
        assert len(result.witness) == value
        assert max_subcube_count(result.witness, 2).max_count <= 3


def test_max_code_full_cube_shortcut():
    result = max_code_search(3, 2, 4)
    assert result.certified
    assert result.max_size == 8
    result2 = max_code_search(4, 1, 2)
    assert result2.max_size == 16


def test_max_code_five_dimensional_branch_and_bound():
    result = max_code_search(5, 2, 3)
    assert result.certified
    assert result.max_size == 22
    assert max_subcube_count(result.witness, 2).max_count <= 3


def test_max_code_budget_degrades_to_uncertified():
    result = max_code_search(5, 2, 3, node_budget=50)
    assert not result.certified
    assert result.max_size <= 22
    assert max_subcube_count(result.witness, 2).max_count <= 3


def test_max_code_complement_hits_every_square():
    # at most three of the four vertices of any square are in the code,
    # so the complement meets every square
    result = max_code_search(4, 2, 3)
    complement = Code(4, frozenset(range(16)) - result.witness.words)
    assert len(complement) == 5
    assert verify_hitting(complement, 2).hits_all


def test_max_code_validation():
    with pytest.raises(ValueError):
        max_code_search(0, 0, 1)
    with pytest.raises(ValueError):
        max_code_search(3, 4, 1)
    with pytest.raises(OutOfRegimeError):
        max_code_search(6, 2, 3)
