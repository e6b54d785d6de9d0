"""Chords, ell-chordality, ell-closedness and the split-closure of circuit families."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import EnumerationCapExceeded, NotACircuit, NotSimple, SeedNotCircuits
from .gf2 import bits_of, popcount
from .matroid import BinaryMatroid, CircuitFamily, Matroid, fmt_set

SUBSET_CAP = 20  # max n for the 2^n sweep in is_ell_closed


@dataclass(frozen=True)
class ChordWitness:
    chord: object
    c1: frozenset
    c2: frozenset

    def __str__(self):
        return f"chord {self.chord}: {fmt_set(self.c1)} + {fmt_set(self.c2)}"


def _require_simple(m: Matroid):
    if not m.is_simple():
        raise NotSimple("matroid has loops or parallel elements")


def _split_by_search(m: Matroid, c: int) -> tuple[int, int, int] | None:
    """First (chord, c1, c2) by increasing chord, then lexicographic c1."""
    cset = m.circuit_mask_set
    outside = m.full_mask & ~c
    for i in bits_of(outside):
        bit = 1 << i
        for c1 in sorted((d for d in m.circuit_masks if d & bit), key=m.mask_key):
            if c1 & ~c != bit:
                continue
            c2 = c1 ^ c
            if c2 in cset:
                return i, c1, c2
    return None


def _split_by_closure(m: Matroid, c: int) -> tuple[int, int, int] | None:
    # binary shortcut: a chord exists iff cl(C) is strictly bigger than C
    extra = m.closure_mask(c) & ~c
    if not extra:
        return None
    i = bits_of(extra)[0]
    bit = 1 << i
    cset = m.circuit_mask_set
    for d in sorted((d for d in m.circuit_masks if d & bit), key=m.mask_key):
        if d & ~c == bit and (d ^ c) in cset:
            return i, d, d ^ c
    # unreachable for binary matroids; fall back to the exhaustive route
    return _split_by_search(m, c)


def has_chord_mask(m: Matroid, c: int) -> bool:
    """Pair search, no closure shortcut."""
    cset = m.circuit_mask_set
    for c1 in m.circuit_masks:
        out = c1 & ~c
        if out and out & (out - 1) == 0 and (c1 ^ c) in cset:
            return True
    return False


def find_chord(m: Matroid, c: Iterable, method: str = "auto") -> ChordWitness | None:
    """Return a chord splitting circuit ``c``, or None.

    ``method="auto"`` uses the closure test on binary matroids and pair search
    otherwise; ``"search"`` and ``"closure"`` force a route.
    """
    mask = m.to_mask(c)
    if mask not in m.circuit_mask_set:
        raise NotACircuit(f"{fmt_set(m.to_set(mask))} is not a circuit")
    if method == "auto":
        method = "closure" if isinstance(m, BinaryMatroid) else "search"
    if method == "closure":
        found = _split_by_closure(m, mask)
    elif method == "search":
        found = _split_by_search(m, mask)
    else:
        raise ValueError(f"unknown method {method!r}")
    if found is None:
        return None
    i, c1, c2 = found
    return ChordWitness(m.labels[i], m.to_set(c1), m.to_set(c2))


def chordless_circuit(m: Matroid, ell: int) -> frozenset | None:
    """First circuit with at least ``ell`` elements that has no chord."""
    for c in m.circuit_masks:
        if popcount(c) >= ell and not has_chord_mask(m, c):
            return m.to_set(c)
    return None


def is_ell_chordal(m: Matroid, ell: int) -> bool:
    if ell < 2:
        raise ValueError("ell must be at least 2")
    _require_simple(m)
    return chordless_circuit(m, ell) is None


def is_chordal(m: Matroid) -> bool:
    return is_ell_chordal(m, 4)


def ell_closed_counterexample(m: Matroid, ell: int) -> frozenset | None:
    """A non-closed set X passing the small-circuit test, or None if m is ell-closed.

    The test on X: no circuit with at most ell+1 elements has exactly one
    element outside X.
    """
    if ell < 2:
        raise ValueError("ell must be at least 2")
    if m.n > SUBSET_CAP:
        raise EnumerationCapExceeded(f"2^{m.n} subsets exceeds cap 2^{SUBSET_CAP}")
    small = [c for c in m.circuit_masks if popcount(c) <= ell + 1]
    for x in range(1 << m.n):
        ok = True
        for c in small:
            out = c & ~x
            if out and out & (out - 1) == 0:
                ok = False
                break
        if ok and m.closure_mask(x) != x:
            return m.to_set(x)
    return None


def is_ell_closed(m: Matroid, ell: int) -> bool:
    return ell_closed_counterexample(m, ell) is None


def _delta_closure_masks(m: Matroid, seed: set[int]) -> set[int]:
    have = set(seed)
    pending = sorted(
        (c for c in m.circuit_masks if c not in have), key=lambda c: (popcount(c), m.mask_key(c))
    )
    changed = True
    while changed:
        changed = False
        rest = []
        for c in pending:
            split = False
            for c1 in have:
                out = c1 & ~c
                if out and out & (out - 1) == 0 and (c1 ^ c) in have:
                    split = True
                    break
            if split:
                have.add(c)
                changed = True
            else:
                rest.append(c)
        pending = rest
    return have


def delta_closure(m: Matroid, seed: Iterable[Iterable]) -> CircuitFamily:
    """Smallest circuit family containing ``seed`` and every circuit that
    splits into two of its members."""
    masks = {m.to_mask(c) for c in seed}
    bad = [c for c in masks if c not in m.circuit_mask_set]
    if bad:
        raise SeedNotCircuits(f"{fmt_set(m.to_set(bad[0]))} is not a circuit")
    return CircuitFamily(m.to_set(c) for c in _delta_closure_masks(m, masks))


def is_delta_generated(m: Matroid, ell: int) -> bool:
    """Whether the circuits of size at most ell+1 generate all circuits."""
    seed = {c for c in m.circuit_masks if popcount(c) <= ell + 1}
    return len(_delta_closure_masks(m, seed)) == len(m.circuit_masks)


@dataclass(frozen=True)
class EquivalenceReport:
    ell: int
    ell_closed: bool
    chordal_ell2: bool
    delta_generated: bool

    @property
    def agree(self) -> bool:
        return self.ell_closed == self.chordal_ell2 == self.delta_generated


def equivalence_report(m: Matroid, ell: int) -> EquivalenceReport:
    """Evaluate ell-closed, (ell+2)-chordal, and generation of all circuits
    from those of size at most ell+1. On simple binary matroids the three
    always agree."""
    _require_simple(m)
    return EquivalenceReport(
        ell=ell,
        ell_closed=is_ell_closed(m, ell),
        chordal_ell2=is_ell_chordal(m, ell + 2),
        delta_generated=is_delta_generated(m, ell),
    )
