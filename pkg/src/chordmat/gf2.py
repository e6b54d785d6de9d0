"""Dense GF(2) linear algebra on int bitsets.

Rows and vectors are Python ints; bit ``j`` holds coordinate ``j``.
Everything here is 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EnumerationCapExceeded

MAX_COLS = 64


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits_of(x: int) -> list[int]:
    """Positions of the set bits of ``x``, ascending."""
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


@dataclass(frozen=True)
class GF2Vector:
    bits: int
    length: int

    def __post_init__(self):
        if self.bits >> self.length:
            raise ValueError("vector has bits beyond its length")

    @classmethod
    def from_list(cls, entries: Sequence[int]) -> "GF2Vector":
        bits = 0
        for j, e in enumerate(entries):
            if e & 1:
                bits |= 1 << j
        return cls(bits, len(entries))

    def support(self) -> frozenset[int]:
        return frozenset(bits_of(self.bits))

    def to_list(self) -> list[int]:
        return [(self.bits >> j) & 1 for j in range(self.length)]

    def __iter__(self):
        return iter(self.to_list())

    def __len__(self):
        return self.length


@dataclass(frozen=True)
class GF2Matrix:
    rows: tuple[int, ...]
    n_cols: int

    def __post_init__(self):
        if self.n_cols > MAX_COLS:
            raise EnumerationCapExceeded(f"{self.n_cols} columns exceeds cap {MAX_COLS}")
        object.__setattr__(self, "rows", tuple(self.rows))
        limit = 1 << self.n_cols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise ValueError("row has bits beyond n_cols")

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]], n_cols: int | None = None) -> "GF2Matrix":
        if n_cols is None:
            n_cols = len(rows[0]) if rows else 0
        packed = []
        for row in rows:
            if len(row) != n_cols:
                raise ValueError("matrix is not rectangular")
            packed.append(GF2Vector.from_list(row).bits)
        return cls(tuple(packed), n_cols)

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "GF2Matrix":
        return cls.from_lists([[int(c) for c in s] for s in rows], len(rows[0]) if rows else 0)

    @classmethod
    def from_columns(cls, columns: Sequence[int], n_rows: int) -> "GF2Matrix":
        rows = [0] * n_rows
        for j, col in enumerate(columns):
            if col >> n_rows:
                raise ValueError("column has bits beyond n_rows")
            for i in bits_of(col):
                rows[i] |= 1 << j
        return cls(tuple(rows), len(columns))

    @classmethod
    def identity(cls, n: int) -> "GF2Matrix":
        return cls(tuple(1 << i for i in range(n)), n)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def column(self, j: int) -> int:
        """Column ``j`` packed with bit ``i`` = entry in row ``i``."""
        col = 0
        for i, r in enumerate(self.rows):
            if (r >> j) & 1:
                col |= 1 << i
        return col

    def columns(self) -> list[int]:
        return [self.column(j) for j in range(self.n_cols)]

    def to_strings(self) -> list[str]:
        return ["".join(str((r >> j) & 1) for j in range(self.n_cols)) for r in self.rows]

    def rref(self) -> tuple[list[int], list[int]]:
        return rref(self.rows, self.n_cols)

    def rank(self) -> int:
        return rank(self)

    def null_space(self) -> list[GF2Vector]:
        return null_space(self)


def rref(rows: Iterable[int], n_cols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form, leftmost pivot first.

    Returns the nonzero reduced rows and their pivot columns.
    """
    work = [r for r in rows]
    pivots = []
    top = 0
    for col in range(n_cols):
        bit = 1 << col
        pivot = next((i for i in range(top, len(work)) if work[i] & bit), None)
        if pivot is None:
            continue
        work[top], work[pivot] = work[pivot], work[top]
        for i in range(len(work)):
            if i != top and work[i] & bit:
                work[i] ^= work[top]
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return work[:top], pivots


def rank(m: GF2Matrix) -> int:
    return len(rref(m.rows, m.n_cols)[1])


def null_space(m: GF2Matrix) -> list[GF2Vector]:
    """Basis of ``{v : m v = 0}``, one vector per free column, in column order."""
    reduced, pivots = rref(m.rows, m.n_cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.n_cols):
        if free in pivot_set:
            continue
        v = 1 << free
        for row, p in zip(reduced, pivots):
            if (row >> free) & 1:
                v |= 1 << p
        basis.append(GF2Vector(v, m.n_cols))
    return basis


class XorBasis:
    """Incremental echelon basis of a subspace of GF(2)^k, keyed by leading bit."""

    __slots__ = ("_lead",)

    def __init__(self, vectors: Iterable[int] = ()):
        self._lead: dict[int, int] = {}
        for v in vectors:
            self.insert(v)

    def reduce(self, v: int) -> int:
        lead = self._lead
        while v:
            top = v.bit_length() - 1
            b = lead.get(top)
            if b is None:
                return v
            v ^= b
        return 0

    def insert(self, v: int) -> bool:
        v = self.reduce(v)
        if not v:
            return False
        self._lead[v.bit_length() - 1] = v
        return True

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0

    def __len__(self):
        return len(self._lead)


def vectors_rank(vectors: Iterable[int]) -> int:
    return len(XorBasis(vectors))


def in_column_span(m: GF2Matrix, cols: Iterable[int], v: int | GF2Vector) -> bool:
    """True iff column vector ``v`` lies in the span of the columns ``cols`` of ``m``."""
    if isinstance(v, GF2Vector):
        v = v.bits
    basis = XorBasis(m.column(j) for j in cols)
    return v in basis
