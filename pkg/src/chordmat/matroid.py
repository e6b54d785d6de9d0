"""Binary matroids from GF(2) matrices, plus a circuit-list matroid for
non-binary counterexamples.

Element sets cross the public API as frozensets of external labels
(1..n by default). Internally everything is an int bitmask over 0-based
positions; ``to_mask``/``to_set`` convert at the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import EnumerationCapExceeded, InvalidCircuitAxioms
from .gf2 import GF2Matrix, XorBasis, bits_of, popcount

CIRCUIT_CAP = 24  # max n - r for the cycle-space sweep
RANK_CAP = 12  # max rank for flat-lattice enumeration


def set_key(s: Iterable[int]) -> tuple:
    """Canonical sort key for an element set: by size, then lexicographic."""
    t = tuple(sorted(s))
    return (len(t), t)


def fmt_set(s: Iterable) -> str:
    return "{" + ",".join(str(e) for e in sorted(s)) + "}"


@dataclass(frozen=True)
class Flat:
    elements: frozenset
    rank: int

    def __contains__(self, e):
        return e in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))

    def __len__(self):
        return len(self.elements)

    def __str__(self):
        return fmt_set(self.elements)


class CircuitFamily:
    """An antichain of nonempty element sets."""

    def __init__(self, circuits: Iterable[Iterable[int]]):
        cs = frozenset(frozenset(c) for c in circuits)
        for c in cs:
            if not c:
                raise ValueError("empty circuit")
        ordered = sorted(cs, key=set_key)
        for a, b in combinations(ordered, 2):
            if a < b:
                raise ValueError(f"not an antichain: {fmt_set(a)} in {fmt_set(b)}")
        self._circuits = cs
        self._ordered = tuple(ordered)

    def __iter__(self) -> Iterator[frozenset]:
        return iter(self._ordered)

    def __len__(self):
        return len(self._circuits)

    def __contains__(self, c):
        return frozenset(c) in self._circuits

    def __eq__(self, other):
        if isinstance(other, CircuitFamily):
            return self._circuits == other._circuits
        return NotImplemented

    def __hash__(self):
        return hash(self._circuits)

    def __repr__(self):
        return "CircuitFamily([" + ", ".join(fmt_set(c) for c in self._ordered) + "])"

    def as_set(self) -> frozenset:
        return self._circuits

    def at_most(self, size: int) -> "CircuitFamily":
        """The subfamily of circuits with at most ``size`` elements."""
        return CircuitFamily(c for c in self._circuits if len(c) <= size)


@dataclass(frozen=True)
class FlatLattice:
    levels: tuple  # levels[k] = tuple of rank-k Flats, canonical order

    @property
    def rank(self) -> int:
        return len(self.levels) - 1

    def level(self, k: int) -> tuple:
        return self.levels[k]

    def all(self) -> list[Flat]:
        return [f for lvl in self.levels for f in lvl]

    def __len__(self):
        return sum(len(lvl) for lvl in self.levels)

    def __iter__(self):
        return iter(self.all())

    def covers(self) -> list[tuple[Flat, Flat]]:
        """Cover pairs (F, G): F strictly inside G, rank(G) = rank(F) + 1."""
        out = []
        for k in range(len(self.levels) - 1):
            for f in self.levels[k]:
                for g in self.levels[k + 1]:
                    if f.elements < g.elements:
                        out.append((f, g))
        return out


class Matroid:
    """Shared machinery. Subclasses provide ``rank_mask``, ``closure_mask``
    and ``_compute_circuits``."""

    n: int
    labels: tuple

    def _init_labels(self, n, labels):
        if labels is None:
            labels = tuple(range(1, n + 1))
        labels = tuple(labels)
        if len(labels) != n or len(set(labels)) != n:
            raise ValueError("labels must be n distinct values")
        self.n = n
        self.labels = labels
        self._pos = {lab: i for i, lab in enumerate(labels)}
        self._full = (1 << n) - 1
        self._rank_memo: dict[int, int] = {}

    # label <-> mask boundary

    def to_mask(self, x: Iterable) -> int:
        mask = 0
        for e in x:
            try:
                mask |= 1 << self._pos[e]
            except KeyError:
                raise ValueError(f"{e!r} is not an element of the ground set") from None
        return mask

    def to_set(self, mask: int) -> frozenset:
        return frozenset(self.labels[i] for i in bits_of(mask))

    def mask_key(self, mask: int) -> tuple:
        """Lexicographic key on the sorted external labels of ``mask``."""
        return tuple(sorted(self.labels[i] for i in bits_of(mask)))

    @property
    def full_mask(self) -> int:
        return self._full

    @property
    def ground_set(self) -> frozenset:
        return frozenset(self.labels)

    # mask-level primitives

    def rank_mask(self, x: int) -> int:
        raise NotImplementedError

    def closure_mask(self, x: int) -> int:
        raise NotImplementedError

    def _compute_circuits(self) -> tuple[int, ...]:
        raise NotImplementedError

    @cached_property
    def rank(self) -> int:
        return self.rank_mask(self._full)

    @cached_property
    def circuit_masks(self) -> tuple[int, ...]:
        """Circuits as masks, ordered by size then lexicographically."""
        cs = self._compute_circuits()
        return tuple(sorted(cs, key=lambda c: (popcount(c), self.mask_key(c))))

    @cached_property
    def circuit_mask_set(self) -> frozenset:
        return frozenset(self.circuit_masks)

    def is_flat_mask(self, x: int) -> bool:
        return self.closure_mask(x) == x

    @cached_property
    def flat_levels(self) -> tuple[tuple[int, ...], ...]:
        """Flat masks by rank, each level in canonical order."""
        if self.rank > RANK_CAP:
            raise EnumerationCapExceeded(f"rank {self.rank} exceeds flat cap {RANK_CAP}")
        levels = [(self.closure_mask(0),)]
        for _ in range(self.rank):
            seen = {}
            for f in levels[-1]:
                rest = self._full & ~f
                while rest:
                    low = rest & -rest
                    rest ^= low
                    g = self.closure_mask(f | low)
                    seen[g] = None
                    rest &= ~g
            levels.append(tuple(sorted(seen, key=self.mask_key)))
        return tuple(levels)

    @cached_property
    def flat_masks(self) -> tuple[int, ...]:
        return tuple(f for lvl in self.flat_levels for f in lvl)

    @cached_property
    def line_masks(self) -> tuple[int, ...]:
        """Nontrivial lines: rank-2 flats with at least 3 elements."""
        if self.rank < 2:
            return ()
        return tuple(f for f in self.flat_levels[2] if popcount(f) >= 3)

    # public set-level API

    def rank_of(self, x: Iterable) -> int:
        return self.rank_mask(self.to_mask(x))

    def closure(self, x: Iterable) -> Flat:
        c = self.closure_mask(self.to_mask(x))
        return Flat(self.to_set(c), self.rank_mask(c))

    def is_flat(self, x: Iterable) -> bool:
        return self.is_flat_mask(self.to_mask(x))

    def circuits(self) -> CircuitFamily:
        return CircuitFamily(self.to_set(c) for c in self.circuit_masks)

    def is_circuit(self, x: Iterable) -> bool:
        return self.to_mask(x) in self.circuit_mask_set

    def flats(self) -> FlatLattice:
        return FlatLattice(tuple(
            tuple(Flat(self.to_set(f), k) for f in lvl)
            for k, lvl in enumerate(self.flat_levels)
        ))

    def nontrivial_lines(self) -> list[Flat]:
        return [Flat(self.to_set(f), 2) for f in self.line_masks]

    def is_simple(self) -> bool:
        return all(popcount(c) >= 3 for c in self.circuit_masks)

    def is_independent_mask(self, x: int) -> bool:
        return self.rank_mask(x) == popcount(x)


class BinaryMatroid(Matroid):
    """Column matroid of a GF(2) matrix; element ``labels[j]`` is column ``j``."""

    def __init__(self, matrix: GF2Matrix, labels: Sequence | None = None):
        self.matrix = matrix
        self.columns = tuple(matrix.columns())
        self._init_labels(matrix.n_cols, labels)

    @classmethod
    def from_strings(cls, rows: Sequence[str], labels=None) -> "BinaryMatroid":
        return cls(GF2Matrix.from_strings(rows), labels)

    @classmethod
    def from_columns(cls, columns: Sequence[int], n_rows: int, labels=None) -> "BinaryMatroid":
        return cls(GF2Matrix.from_columns(columns, n_rows), labels)

    def __repr__(self):
        return f"BinaryMatroid(n={self.n}, rank={self.rank}, rows={self.matrix.to_strings()})"

    def rank_mask(self, x: int) -> int:
        r = self._rank_memo.get(x)
        if r is None:
            cols = self.columns
            r = len(XorBasis(cols[i] for i in bits_of(x)))
            self._rank_memo[x] = r
        return r

    def closure_mask(self, x: int) -> int:
        basis = XorBasis(self.columns[i] for i in bits_of(x))
        out = x
        for i, col in enumerate(self.columns):
            if not (x >> i) & 1 and col in basis:
                out |= 1 << i
        return out

    def _compute_circuits(self) -> tuple[int, ...]:
        basis = [v.bits for v in self.matrix.null_space()]
        k = len(basis)
        if k > CIRCUIT_CAP:
            raise EnumerationCapExceeded(f"cycle space dimension {k} exceeds cap {CIRCUIT_CAP}")
        # Gray-code sweep over the cycle space.
        supports = []
        v = 0
        for step in range(1, 1 << k):
            v ^= basis[(step & -step).bit_length() - 1]
            supports.append(v)
        supports.sort(key=popcount)
        minimal: list[int] = []
        for s in supports:
            if not any(c & s == c for c in minimal):
                minimal.append(s)
        return tuple(minimal)

    def is_simple(self) -> bool:
        cols = self.columns
        return 0 not in cols and len(set(cols)) == len(cols)

    def dual(self) -> "BinaryMatroid":
        """Represented by a basis of the orthogonal complement of the row space."""
        rows = tuple(v.bits for v in self.matrix.null_space())
        return BinaryMatroid(GF2Matrix(rows, self.n), self.labels)

    def restriction(self, x: Iterable) -> "BinaryMatroid":
        idx = bits_of(self.to_mask(x))
        return BinaryMatroid.from_columns(
            [self.columns[i] for i in idx], self.matrix.n_rows, [self.labels[i] for i in idx]
        )

    def restriction_mask(self, x: int) -> "BinaryMatroid":
        return self.restriction(self.to_set(x))


class GeneralMatroid(Matroid):
    """Matroid given by its circuit list; axioms checked by brute force."""

    def __init__(self, n: int, circuits: Iterable[Iterable], labels=None):
        self._init_labels(n, labels)
        masks = []
        for c in circuits:
            masks.append(self.to_mask(c))
        self._given = tuple(dict.fromkeys(masks))
        self._validate()

    def __repr__(self):
        return f"GeneralMatroid(n={self.n}, circuits={self.circuits()!r})"

    def _validate(self):
        cs = self._given
        for c in cs:
            if c == 0:
                raise InvalidCircuitAxioms("empty circuit")
        for a, b in combinations(cs, 2):
            if a & b == a or a & b == b:
                raise InvalidCircuitAxioms(
                    f"not an antichain: {fmt_set(self.to_set(a))}, {fmt_set(self.to_set(b))}",
                    (self.to_set(a), self.to_set(b)),
                )
            common = a & b
            for e in bits_of(common):
                rest = (a | b) & ~(1 << e)
                if not any(c & rest == c for c in cs):
                    raise InvalidCircuitAxioms(
                        f"circuit elimination fails for {fmt_set(self.to_set(a))}, "
                        f"{fmt_set(self.to_set(b))} at {self.labels[e]}",
                        (self.to_set(a), self.to_set(b)),
                    )

    def _compute_circuits(self):
        return self._given

    def is_independent_mask(self, x: int) -> bool:
        return not any(c & x == c for c in self._given)

    def rank_mask(self, x: int) -> int:
        # Greedy growth gives a maximal independent subset; all have equal size.
        r = self._rank_memo.get(x)
        if r is None:
            indep = 0
            for i in bits_of(x):
                if self.is_independent_mask(indep | (1 << i)):
                    indep |= 1 << i
            r = popcount(indep)
            self._rank_memo[x] = r
        return r

    def restriction(self, x: Iterable) -> "GeneralMatroid":
        mask = self.to_mask(x)
        idx = bits_of(mask)
        labels = [self.labels[i] for i in idx]
        inside = [self.to_set(c) for c in self._given if c & mask == c]
        return GeneralMatroid(len(idx), inside, labels)

    def restriction_mask(self, x: int) -> "GeneralMatroid":
        return self.restriction(self.to_set(x))

    def closure_mask(self, x: int) -> int:
        """X plus every e such that some circuit C has C minus X equal to {e}."""
        out = x
        for c in self._given:
            outside = c & ~x
            if outside and outside & (outside - 1) == 0:
                out |= outside
        return out


def general_from_circuits(n: int, circuits: Iterable[Iterable], labels=None) -> GeneralMatroid:
    return GeneralMatroid(n, circuits, labels)


def as_general(m: Matroid) -> GeneralMatroid:
    """Circuit-list copy of ``m``; its closure uses the circuit formula."""
    return GeneralMatroid(m.n, [m.to_set(c) for c in m.circuit_masks], m.labels)


def decompose_into_circuits(m: Matroid, x: Iterable | int) -> list[frozenset] | None:
    """Split ``x`` into pairwise disjoint circuits of ``m``, or None if impossible."""
    mask = x if isinstance(x, int) else m.to_mask(x)
    circuits = m.circuit_masks

    def search(rest):
        if not rest:
            return []
        low = rest & -rest
        for c in circuits:
            if c & low and c & rest == c:
                tail = search(rest & ~c)
                if tail is not None:
                    return [c] + tail
        return None

    parts = search(mask)
    if parts is None:
        return None
    return [m.to_set(c) for c in parts]


def satisfies_binary_circuit_law(m: Matroid) -> bool:
    """Symmetric difference of any two distinct circuits is a disjoint union of circuits."""
    for a, b in combinations(m.circuit_masks, 2):
        if decompose_into_circuits(m, a ^ b) is None:
            return False
    return True


def free_matroid(n: int) -> BinaryMatroid:
    return BinaryMatroid(GF2Matrix.identity(n))


__all__ = [
    "BinaryMatroid", "CircuitFamily", "Flat", "FlatLattice", "GeneralMatroid", "Matroid",
    "as_general", "decompose_into_circuits", "fmt_set", "free_matroid",
    "general_from_circuits", "satisfies_binary_circuit_law", "set_key",
]
