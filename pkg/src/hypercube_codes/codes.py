"""Construction of dense codes with bounded subcube occupancy.

The layered construction assigns to every layer r a random nonzero
vector of GF(2)^r per coordinate and keeps the weight-r words whose
support vectors form a basis.  Taking the best weight-residue subcode
then caps how many codewords any small subcube can hold.  A complement
variant produces subcube hitting sets.  File round-tripping for codes
lives here as well.
"""

from __future__ import annotations

import itertools
import logging
import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

import numpy as np

from .basisprob import independent_draw_probability, limit_interval
from .errors import ConstructionError
from .gf2 import MAX_BITS, rank_ints

log = logging.getLogger(__name__)

MAX_N = 24

# Certified rational lower bound on the limit constant, used as the
# per-layer quality threshold for retries.
DENSITY_THRESHOLD: Fraction = limit_interval(40)[0]


@dataclass(frozen=True)
class Code:
    """A set of binary words on n coordinates, packed as ints."""

    n: int
    words: frozenset

    def __post_init__(self):
        if not 0 <= self.n <= MAX_BITS:
            raise ValueError(f"n must be in [0, {MAX_BITS}]")
        for w in self.words:
            if not 0 <= w < (1 << self.n):
                raise ValueError(f"word {w:#x} does not fit in {self.n} coordinates")

    def __len__(self) -> int:
        return len(self.words)

    def density(self) -> Fraction:
        return Fraction(len(self.words), 1 << self.n)


@dataclass(frozen=True)
class LayerAssignment:
    """Vectors drawn for one layer: coordinate i gets vectors[i], a
    nonzero element of GF(2)^weight."""

    n: int
    weight: int
    vectors: tuple[int, ...]
    seed: int
    retry: int

    def __post_init__(self):
        if len(self.vectors) != self.n:
            raise ValueError("need one vector per coordinate")
        for v in self.vectors:
            if not 1 <= v < (1 << self.weight):
                raise ValueError("layer vectors must be nonzero and fit the layer weight")


def _draw_layer(n: int, r: int, seed: int, retry: int) -> LayerAssignment:
    """Deterministic layer draw from a PCG64 stream keyed by (seed, layer,
    retry), so every layer and retry gets an independent substream."""
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, r, retry])))
    vectors = tuple(int(v) for v in rng.integers(1, 1 << r, size=n))
    return LayerAssignment(n, r, vectors, seed, retry)


def build_layer_vectors(n: int, seed: int = 0) -> dict[int, LayerAssignment]:
    """Fresh assignments for layers 1..n at retry index 0."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in [1, {MAX_N}]")
    return {r: _draw_layer(n, r, seed, 0) for r in range(1, n + 1)}


def layer_words(assignment: LayerAssignment) -> frozenset:
    """Weight-r words whose support vectors form a basis of GF(2)^r."""
    n, r = assignment.n, assignment.weight
    vectors = assignment.vectors
    out = []
    for support in itertools.combinations(range(n), r):
        if rank_ints(vectors[i] for i in support) == r:
            word = 0
            for i in support:
                word |= 1 << i
            out.append(word)
    return frozenset(out)


@dataclass(frozen=True)
class RetryPolicy:
    """Redraw layers whose keep-count is at most min_fraction of the
    layer size.  strict=True turns an exhausted budget into an error;
    otherwise the best draw is kept and the shortfall logged."""

    max_retries: int = 64
    strict: bool = False
    min_fraction: Fraction = field(default=DENSITY_THRESHOLD)


def layered_basis_code(layers: Mapping[int, LayerAssignment],
                       retry: Optional[RetryPolicy] = None) -> Code:
    """The union of the zero word and all per-layer basis-support words.

    With a retry policy, any layer r whose word count is not strictly
    above min_fraction * C(n, r) is redrawn with the next retry index,
    keeping the best draw seen.
    """
    if not layers:
        raise ValueError("need at least one layer")
    n = next(iter(layers.values())).n
    policy = retry if retry is not None else RetryPolicy()
    threshold = policy.min_fraction
    words: set[int] = {0}
    deficient: list[int] = []
    for r in sorted(layers):
        assignment = layers[r]
        if assignment.n != n:
            raise ValueError("layers disagree on the coordinate count")
        if assignment.weight != r:
            raise ValueError(f"layer {r} carries weight {assignment.weight}")
        target = threshold * math.comb(n, r)
        best = layer_words(assignment)
        attempt = assignment
        while len(best) <= target and attempt.retry < policy.max_retries:
            attempt = _draw_layer(n, r, assignment.seed, attempt.retry + 1)
            candidate = layer_words(attempt)
            if len(candidate) > len(best):
                best = candidate
        if len(best) <= target:
            deficient.append(r)
        words |= best
    if deficient:
        if policy.strict:
            raise ConstructionError(
                f"layers {deficient} stayed at or below the density threshold "
                f"after {policy.max_retries} retries")
        log.warning("layers %s below the density threshold; keeping best draws",
                    deficient)
    return Code(n, frozenset(words))


def residue_subcode(code: Code, modulus: int, residue: int) -> Code:
    """Codewords whose weight is congruent to residue mod modulus."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    if not 0 <= residue < modulus:
        raise ValueError("residue must lie in [0, modulus)")
    kept = frozenset(w for w in code.words if w.bit_count() % modulus == residue)
    return Code(code.n, kept)


@dataclass(frozen=True)
class ResidueSelection:
    code: Code
    residue: int


def best_residue_subcode(code: Code, modulus: int) -> ResidueSelection:
    """The largest weight-residue subcode; ties break to the smallest
    residue.  By pigeonhole its size is at least len(code) / modulus."""
    best: Optional[Code] = None
    best_residue = 0
    for residue in range(modulus):
        sub = residue_subcode(code, modulus, residue)
        if best is None or len(sub) > len(best):
            best = sub
            best_residue = residue
    assert best is not None
    return ResidueSelection(best, best_residue)


def weight_class_code(n: int, modulus: int, residue: int) -> Code:
    """All words of GF(2)^n whose weight is congruent to residue mod
    modulus.  modulus=2, residue=0 gives the even-weight code."""
    if not 0 <= n <= MAX_BITS:
        raise ValueError(f"n must be in [0, {MAX_BITS}]")
    if modulus < 1:
        raise ValueError("modulus must be positive")
    if not 0 <= residue < modulus:
        raise ValueError("residue must lie in [0, modulus)")
    words = frozenset(w for w in range(1 << n) if w.bit_count() % modulus == residue)
    return Code(n, words)


def expected_dependent_fraction(r: int, k: int) -> Fraction:
    """Expected fraction of weight-r supports whose drawn vectors in
    GF(2)^(r+k) are dependent; strictly below 2^-k for every r, k >= 1."""
    if r < 1 or k < 0:
        raise ValueError("need r >= 1 and k >= 0")
    return 1 - independent_draw_probability(r, r + k)


@dataclass(frozen=True)
class HittingSetResult:
    """small_layer_cutoff is the largest weight whose layer is included
    in full (-1 if none); above it only dependent-support words enter."""

    code: Code
    small_layer_cutoff: int
    target_size: int
    met_target: bool


def subcube_hitting_set(n: int, k: int, seed: int = 0) -> HittingSetResult:
    """A set meeting most subcubes while keeping density near 2^-k.

    Per layer r, each coordinate receives a random nonzero vector of
    GF(2)^(r+k) and the weight-r words with dependent support vectors are
    kept; low layers are included entirely, with the cutoff chosen as
    large as possible subject to the 2^(n-k) size target.  A missed
    target is reported, not fatal.
    """
    if n < 1 or k < 0 or n + k > MAX_N:
        raise ValueError(f"need n >= 1, k >= 0 and n + k <= {MAX_N}")
    dependent: dict[int, frozenset] = {}
    for r in range(1, n + 1):
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, r])))
        vectors = tuple(int(v) for v in rng.integers(1, 1 << (r + k), size=n))
        kept = []
        for support in itertools.combinations(range(n), r):
            if rank_ints(vectors[i] for i in support) < r:
                word = 0
                for i in support:
                    word |= 1 << i
                kept.append(word)
        dependent[r] = frozenset(kept)

    target = 1 << (n - k) if k <= n else 1
    tail = sum(len(dependent[r]) for r in range(1, n + 1))
    # raising the cutoff swaps a dependent subset for its full layer, so
    # the total size is non-decreasing in c; take the largest c that fits
    cutoff = -1
    running = tail
    prefix = 0
    for c in range(0, n + 1):
        prefix += math.comb(n, c)
        if c >= 1:
            running -= len(dependent[c])
        if prefix + running <= target:
            cutoff = c
    words: set[int] = set()
    for r in range(0, cutoff + 1):
        for support in itertools.combinations(range(n), r):
            word = 0
            for i in support:
                word |= 1 << i
            words.add(word)
    for r in range(cutoff + 1, n + 1):
        words |= dependent[r]
    met = len(words) <= target
    if not met:
        log.warning("hitting set size %d misses the target %d", len(words), target)
    return HittingSetResult(Code(n, frozenset(words)), cutoff, target, met)


def save_code(path, code: Code) -> None:
    """Write `n=<n>` then one 0/1 line per word, sorted by packed value;
    the leftmost character is coordinate 1."""
    lines = [f"n={code.n}"]
    for w in sorted(code.words):
        lines.append("".join("1" if (w >> i) & 1 else "0" for i in range(code.n)))
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def load_code(path) -> Code:
    """Inverse of save_code.  Duplicate lines are collapsed with a
    warning; malformed content raises ValueError with the line number."""
    with open(path, "r", encoding="ascii") as fh:
        raw = fh.read()
    lines = raw.splitlines()
    if not lines or not lines[0].startswith("n="):
        raise ValueError("line 1: expected header of the form n=<int>")
    try:
        n = int(lines[0][2:])
    except ValueError:
        raise ValueError("line 1: expected header of the form n=<int>") from None
    if not 0 <= n <= MAX_BITS:
        raise ValueError(f"line 1: n must be in [0, {MAX_BITS}]")
    words: list[int] = []
    for lineno, line in enumerate(lines[1:], start=2):
        if len(line) != n:
            raise ValueError(f"line {lineno}: expected {n} characters, got {len(line)}")
        word = 0
        for i, ch in enumerate(line):
            if ch == "1":
                word |= 1 << i
            elif ch != "0":
                raise ValueError(f"line {lineno}: invalid character {ch!r}")
        words.append(word)
    unique = frozenset(words)
    if len(unique) < len(words):
        warnings.warn(f"{len(words) - len(unique)} duplicate words collapsed on load")
    return Code(n, unique)
