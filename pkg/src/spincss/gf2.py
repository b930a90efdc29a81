"""Dense binary linear algebra over GF(2).

Vectors are packed into single machine words (at most 64 coordinates), so
addition is one XOR and the inner product is the parity of one AND.  The
packing is an implementation detail: every operation behaves exactly like
the naive list-of-bits model.  Reductions follow a fixed reduced-row-echelon
pivot convention, so null spaces and independent-row selections are
reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapacityError

MAX_COLUMNS = 64


def _check_length(length: int) -> None:
    if length < 0:
        raise ValueError(f"vector length must be nonnegative, got {length}")
    if length > MAX_COLUMNS:
        raise CapacityError(f"vector length {length} exceeds the {MAX_COLUMNS}-column limit")


@dataclass(frozen=True, slots=True)
class BitVector:
    """Immutable vector over GF(2), packed into one word (bit j = coordinate j)."""

    length: int
    word: int

    def __post_init__(self):
        _check_length(self.length)
        if not 0 <= self.word < (1 << self.length):
            raise ValueError(f"word {self.word:#x} has bits outside length {self.length}")

    @classmethod
    def zeros(cls, length: int) -> "BitVector":
        return cls(length, 0)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVector":
        word = 0
        length = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"coordinate {length} is {b}, expected 0 or 1")
            word |= b << length
            length += 1
        return cls(length, word)

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "BitVector":
        _check_length(length)
        word = 0
        for i in support:
            if not 0 <= i < length:
                raise ValueError(f"support index {i} out of range for length {length}")
            word |= 1 << i
        return cls(length, word)

    def bit(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(f"index {i} out of range for length {self.length}")
        return (self.word >> i) & 1

    __getitem__ = bit

    def __len__(self) -> int:
        return self.length

    def bits(self) -> tuple[int, ...]:
        return tuple((self.word >> i) & 1 for i in range(self.length))

    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.length) if (self.word >> i) & 1)

    def weight(self) -> int:
        return self.word.bit_count()

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} vs {other.length}")
        return BitVector(self.length, self.word ^ other.word)

    def dot(self, other: "BitVector") -> int:
        """Parity inner product: popcount(a AND b) mod 2."""
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} vs {other.length}")
        return (self.word & other.word).bit_count() & 1

    def is_zero(self) -> bool:
        return self.word == 0

    def __repr__(self) -> str:
        return f"BitVector('{''.join(str(b) for b in self.bits())}')"


@dataclass(frozen=True, slots=True)
class BitMatrix:
    """Immutable matrix over GF(2): a tuple of equal-length rows."""

    rows: tuple[BitVector, ...]
    col_count: int

    def __post_init__(self):
        _check_length(self.col_count)
        for r, row in enumerate(self.rows):
            if row.length != self.col_count:
                raise ValueError(f"row {r} has length {row.length}, expected {self.col_count}")

    @classmethod
    def from_rows(cls, rows: Sequence[BitVector], col_count: int | None = None) -> "BitMatrix":
        rows = tuple(rows)
        if col_count is None:
            if not rows:
                raise ValueError("col_count is required for a matrix with no rows")
            col_count = rows[0].length
        return cls(rows, col_count)

    @classmethod
    def zeros(cls, row_count: int, col_count: int) -> "BitMatrix":
        return cls(tuple(BitVector.zeros(col_count) for _ in range(row_count)), col_count)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(tuple(BitVector(n, 1 << i) for i in range(n)), n)

    @property
    def row_count(self) -> int:
        return len(self.rows)

    def words(self) -> list[int]:
        return [r.word for r in self.rows]

    def transpose(self) -> "BitMatrix":
        cols = []
        for j in range(self.col_count):
            word = 0
            for i, row in enumerate(self.rows):
                word |= ((row.word >> j) & 1) << i
            cols.append(BitVector(self.row_count, word))
        return BitMatrix(tuple(cols), self.row_count)


def _rref(words: list[int], n_cols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form.

    Returns (reduced nonzero rows, pivot columns), pivots strictly increasing.
    """
    rows = list(words)
    pivot_cols: list[int] = []
    pivot_row = 0
    for col in range(n_cols):
        found = -1
        for r in range(pivot_row, len(rows)):
            if (rows[r] >> col) & 1:
                found = r
                break
        if found < 0:
            continue
        rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
        for r in range(len(rows)):
            if r != pivot_row and (rows[r] >> col) & 1:
                rows[r] ^= rows[pivot_row]
        pivot_cols.append(col)
        pivot_row += 1
    return rows[:pivot_row], pivot_cols


def rank(m: BitMatrix) -> int:
    """Dimension of the row space over GF(2)."""
    return len(_rref(m.words(), m.col_count)[1])


def null_space_basis(m: BitMatrix) -> list[BitVector]:
    """Canonical basis of {x : m @ x = 0 over GF(2)}.

    One basis vector per non-pivot column of the reduced echelon form, in
    increasing column order; size is always col_count - rank(m).
    """
    reduced, pivot_cols = _rref(m.words(), m.col_count)
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(m.col_count):
        if free in pivot_set:
            continue
        word = 1 << free
        for r, pc in enumerate(pivot_cols):
            if (reduced[r] >> free) & 1:
                word |= 1 << pc
        basis.append(BitVector(m.col_count, word))
    return basis


def in_span(v: BitVector, basis: Sequence[BitVector]) -> bool:
    """True iff v is a GF(2) combination of the given vectors.

    The vectors need not be independent; reduction handles duplicates.
    """
    for b in basis:
        if b.length != v.length:
            raise ValueError(f"length mismatch: {b.length} vs {v.length}")
    reduced, pivot_cols = _rref([b.word for b in basis], v.length)
    word = v.word
    for r, pc in enumerate(pivot_cols):
        if (word >> pc) & 1:
            word ^= reduced[r]
    return word == 0


def independent_row_indices(m: BitMatrix) -> list[int]:
    """Greedy scan in row order: the lexicographically first maximal independent row subset."""
    kept: list[int] = []
    reduced: list[int] = []  # kept rows, mutually reduced
    pivots: list[int] = []
    for i, row in enumerate(m.rows):
        word = row.word
        for r, pc in enumerate(pivots):
            if (word >> pc) & 1:
                word ^= reduced[r]
        if word == 0:
            continue
        pivot = (word & -word).bit_length() - 1
        for r in range(len(reduced)):
            if (reduced[r] >> pivot) & 1:
                reduced[r] ^= word
        reduced.append(word)
        pivots.append(pivot)
        kept.append(i)
    return kept
