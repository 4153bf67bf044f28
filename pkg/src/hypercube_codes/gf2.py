"""Bit-packed linear algebra over GF(2).

Binary vectors are stored as Python ints (bit i = coordinate i + 1),
either raw or wrapped in a BitWord carrying an explicit length.  A
GF2Matrix keeps a tuple of packed columns.  Everything here is pure and
deterministic: elimination always pivots on the lowest set bit, so equal
inputs give identical outputs on every platform.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import OutOfRegimeError

# Hard cap on vector length.  Single place to widen if longer words are
# ever needed; everything else derives its limits from this constant.
MAX_BITS = 64


@dataclass(frozen=True)
class BitWord:
    """A binary vector of length at most MAX_BITS packed into an int.

    Attributes:
        bits: packed payload, bit i holds coordinate i + 1.
        n: number of coordinates, 0 <= n <= MAX_BITS.
    """

    bits: int
    n: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_BITS:
            raise ValueError(f"word length must be in [0, {MAX_BITS}], got {self.n}")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"payload {self.bits:#x} does not fit in {self.n} bits")

    @classmethod
    def from01(cls, text: str) -> "BitWord":
        """Parse a 0/1 string; the leftmost character is coordinate 1."""
        bits = 0
        for i, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << i
            elif ch != "0":
                raise ValueError(f"expected 0/1 characters, got {ch!r} at position {i}")
        return cls(bits, len(text))

    def to01(self) -> str:
        """Inverse of from01."""
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.n))

    def get(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise ValueError(f"coordinate index {i} out of range")
        return (self.bits >> i) & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if (self.bits >> i) & 1)

    def __xor__(self, other: "BitWord") -> "BitWord":
        if self.n != other.n:
            raise ValueError("cannot xor words of different lengths")
        return BitWord(self.bits ^ other.bits, self.n)


def rank_ints(vectors: Iterable[int]) -> int:
    """GF(2) rank of a collection of packed int vectors.

    Pivots are chosen as the lowest set bit of each incoming vector after
    reduction, which makes the computation order-independent in value and
    fully deterministic in intermediate state.
    """
    pivots: dict[int, int] = {}
    rank = 0
    for v in vectors:
        while v:
            low = v & -v
            p = pivots.get(low)
            if p is None:
                pivots[low] = v
                rank += 1
                break
            v ^= p
    return rank


def is_basis(vectors: Sequence[BitWord]) -> bool:
    """True iff the t given words of length t form a basis of GF(2)^t."""
    t = len(vectors)
    for w in vectors:
        if w.n != t:
            raise ValueError(f"expected words of length {t}, got length {w.n}")
    return rank_ints(w.bits for w in vectors) == t


@dataclass(frozen=True)
class GF2Matrix:
    """A rows x cols matrix over GF(2), stored column-major.

    Attributes:
        rows: number of rows, 0 <= rows <= MAX_BITS.
        columns: tuple of packed columns, bit i of column j = entry (i, j).
    """

    rows: int
    columns: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.rows <= MAX_BITS:
            raise ValueError(f"row count must be in [0, {MAX_BITS}]")
        if len(self.columns) > MAX_BITS:
            raise ValueError(f"column count must be at most {MAX_BITS}")
        for j, c in enumerate(self.columns):
            if not 0 <= c < (1 << self.rows):
                raise ValueError(f"column {j} does not fit in {self.rows} rows")

    @property
    def cols(self) -> int:
        return len(self.columns)

    @classmethod
    def from_columns(cls, rows: int, columns: Iterable) -> "GF2Matrix":
        """Build from packed ints or BitWords of length `rows`."""
        packed = []
        for c in columns:
            if isinstance(c, BitWord):
                if c.n != rows:
                    raise ValueError("column word length does not match row count")
                packed.append(c.bits)
            else:
                packed.append(int(c))
        return cls(rows, tuple(packed))

    @classmethod
    def from_rows(cls, cols: int, rows: Iterable[int]) -> "GF2Matrix":
        """Build from packed row ints, bit j of each row = column j."""
        row_list = [int(r) for r in rows]
        for r in row_list:
            if not 0 <= r < (1 << cols):
                raise ValueError("row does not fit in the declared column count")
        columns = []
        for j in range(cols):
            c = 0
            for i, r in enumerate(row_list):
                c |= ((r >> j) & 1) << i
            columns.append(c)
        return cls(len(row_list), tuple(columns))

    @classmethod
    def identity(cls, k: int) -> "GF2Matrix":
        return cls(k, tuple(1 << i for i in range(k)))

    def column_word(self, j: int) -> BitWord:
        return BitWord(self.columns[j], self.rows)

    def column_words(self) -> list[BitWord]:
        return [BitWord(c, self.rows) for c in self.columns]

    def rows_as_ints(self) -> list[int]:
        """Rows as packed ints, bit j = entry in column j."""
        out = []
        for i in range(self.rows):
            r = 0
            for j, c in enumerate(self.columns):
                r |= ((c >> i) & 1) << j
            out.append(r)
        return out

    def transpose(self) -> "GF2Matrix":
        return GF2Matrix(self.cols, tuple(self.rows_as_ints()))


def rank(matrix: GF2Matrix) -> int:
    """Rank of the matrix (column rank == row rank)."""
    return rank_ints(matrix.columns)


def _kernel_of_rows(row_ints: Sequence[int], width: int) -> list[int]:
    """Basis of {x : r . x = 0 for every row r}, as packed ints.

    Rows are brought to reduced row echelon form scanning columns left to
    right; one kernel vector is emitted per free column, in ascending free
    column order.
    """
    reduced: list[int] = []
    pivot_cols: list[int] = []
    for r in row_ints:
        for pc, pr in zip(pivot_cols, reduced):
            if (r >> pc) & 1:
                r ^= pr
        if r == 0:
            continue
        col = (r & -r).bit_length() - 1
        # eliminate the new pivot column from earlier rows
        for i, pr in enumerate(reduced):
            if (pr >> col) & 1:
                reduced[i] = pr ^ r
        reduced.append(r)
        pivot_cols.append(col)
    order = sorted(range(len(pivot_cols)), key=lambda i: pivot_cols[i])
    reduced = [reduced[i] for i in order]
    pivot_cols = [pivot_cols[i] for i in order]
    pivot_set = set(pivot_cols)
    kernel = []
    for f in range(width):
        if f in pivot_set:
            continue
        v = 1 << f
        for pc, pr in zip(pivot_cols, reduced):
            if (pr >> f) & 1:
                v |= 1 << pc
        kernel.append(v)
    return kernel


def orthogonal_complement(matrix: GF2Matrix) -> GF2Matrix:
    """For a full-row-rank k x d matrix, the (d-k) x d matrix whose rows
    span the orthogonal complement of the row space.

    Raises:
        ValueError: if the input is rank deficient.
    """
    row_ints = matrix.rows_as_ints()
    if rank_ints(row_ints) < matrix.rows:
        raise ValueError("matrix must have full row rank")
    kernel = _kernel_of_rows(row_ints, matrix.cols)
    return GF2Matrix.from_rows(matrix.cols, kernel)


def count_nonsingular_submatrices(matrix: GF2Matrix) -> int:
    """Number of k-subsets of columns forming a nonsingular k x k submatrix,
    where k = rows.  Requires rows <= cols."""
    k = matrix.rows
    if k > matrix.cols:
        raise ValueError("need at least as many columns as rows")
    count = 0
    for sub in itertools.combinations(matrix.columns, k):
        if rank_ints(sub) == k:
            count += 1
    return count


def code_from_parity_check(matrix: GF2Matrix):
    """All length-t words x with A x^T = 0, where t = cols.

    Returns a Code on t coordinates; its size is 2 ** (t - rank(A)).
    """
    from .codes import Code  # deferred: codes builds on this module

    t = matrix.cols
    basis = _kernel_of_rows(matrix.rows_as_ints(), t)
    words = [0]
    for b in basis:
        words += [w ^ b for w in words]
    return Code(t, frozenset(words))


def min_distance(code) -> int:
    """Minimum Hamming distance between distinct codewords.

    Raises:
        ValueError: if the code has fewer than two words.
    """
    words = sorted(code.words)
    if len(words) < 2:
        raise ValueError("minimum distance needs at least two codewords")
    best = code.n + 1
    for i, x in enumerate(words):
        for y in words[i + 1:]:
            d = (x ^ y).bit_count()
            if d < best:
                best = d
    return best


def plotkin_bound(t: int, dmin: int) -> int:
    """Classical Plotkin upper bound on the size of a binary code of
    length t and minimum distance dmin.

    Even dmin with 2*dmin > t:      2 * floor(dmin / (2*dmin - t)).
    Odd dmin with 2*dmin + 1 > t:   2 * floor((dmin+1) / (2*dmin+1-t)).

    Raises:
        OutOfRegimeError: when (t, dmin) falls outside both cases.
    """
    if t < 1 or dmin < 1:
        raise ValueError("length and distance must be positive")
    if dmin % 2 == 0:
        gap = 2 * dmin - t
        if gap > 0:
            return 2 * (dmin // gap)
    else:
        gap = 2 * dmin + 1 - t
        if gap > 0:
            return 2 * ((dmin + 1) // gap)
    raise OutOfRegimeError(
        f"Plotkin bound undefined for length {t}, distance {dmin}")
