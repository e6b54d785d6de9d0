"""Modular flats, M-chains and M-partitions, and deformations between chains.

An M-chain is a maximal chain of modular flats from cl(empty) to the ground
set. Chains are searched top-down: pick a modular hyperplane, then recurse
into the restriction to it. A flat that is modular in the restriction to a
modular flat is modular in the whole matroid, so the search visits exactly
the M-chains.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import DifferentMatroids, InvalidChain, NoPathFound, NotAFlat, NotSimple
from .gf2 import bits_of
from .matroid import Flat, Matroid, fmt_set


@dataclass(frozen=True)
class MChain:
    flats: tuple  # F_0 < F_1 < ... < F_r, each a frozenset

    @property
    def rank(self) -> int:
        return len(self.flats) - 1

    def __str__(self):
        return " < ".join(fmt_set(f) for f in self.flats)

    def key(self) -> tuple:
        return tuple(tuple(sorted(f)) for f in self.flats)


@dataclass(frozen=True)
class MPartition:
    blocks: tuple  # P_1, ..., P_r

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __str__(self):
        return " | ".join(fmt_set(b) for b in self.blocks)

    def block_of(self, e) -> int:
        """1-based index of the block containing ``e``."""
        for i, b in enumerate(self.blocks, 1):
            if e in b:
                return i
        raise KeyError(e)


def _memo(m: Matroid, name: str) -> dict:
    d = m.__dict__.get(name)
    if d is None:
        d = m.__dict__[name] = {}
    return d


def _flat_mask(m: Matroid, f) -> int:
    mask = m.to_mask(f.elements if isinstance(f, Flat) else f)
    if not m.is_flat_mask(mask):
        raise NotAFlat(f"{fmt_set(m.to_set(mask))} is not a flat")
    return mask


def _modular_pair(m: Matroid, a: int, b: int) -> bool:
    r = m.rank_mask
    return r(a) + r(b) == r(a | b) + r(a & b)


def _flats_below(m: Matroid, top: int) -> tuple[int, ...]:
    memo = _memo(m, "_flats_below_memo")
    out = memo.get(top)
    if out is None:
        out = memo[top] = tuple(f for f in m.flat_masks if f & top == f)
    return out


def _modular_below(m: Matroid, f: int, top: int) -> bool:
    """Is flat ``f`` modular in the restriction of ``m`` to the flat ``top``?"""
    memo = _memo(m, "_modular_memo")
    key = (f, top)
    res = memo.get(key)
    if res is None:
        res = memo[key] = all(_modular_pair(m, f, g) for g in _flats_below(m, top))
    return res


def is_modular_pair(m: Matroid, f1, f2) -> bool:
    return _modular_pair(m, _flat_mask(m, f1), _flat_mask(m, f2))


def is_modular_flat(m: Matroid, f) -> bool:
    return _modular_below(m, _flat_mask(m, f), m.full_mask)


def modular_flats(m: Matroid) -> list[Flat]:
    full = m.full_mask
    return [
        Flat(m.to_set(f), m.rank_mask(f)) for f in m.flat_masks if _modular_below(m, f, full)
    ]


def _require_simple(m: Matroid):
    if not m.is_simple():
        raise NotSimple("matroid has loops or parallel elements")


def _chains_below(m: Matroid, top: int, k: int, first_only: bool):
    """Yield bottom-up mask chains ending at ``top`` (rank ``k``)."""
    if k == 0:
        yield [top]
        return
    for h in m.flat_levels[k - 1]:
        if h & top != h or not _modular_below(m, h, top):
            continue
        for chain in _chains_below(m, h, k - 1, first_only):
            yield chain + [top]
            if first_only:
                return


def _to_chain(m: Matroid, masks) -> MChain:
    return MChain(tuple(m.to_set(f) for f in masks))


def find_mchain(m: Matroid) -> MChain | None:
    """First M-chain in lexicographic hyperplane order, or None."""
    _require_simple(m)
    for chain in _chains_below(m, m.full_mask, m.rank, True):
        return _to_chain(m, chain)
    return None


def is_supersolvable(m: Matroid) -> bool:
    return find_mchain(m) is not None


def all_mchains(m: Matroid) -> list[MChain]:
    _require_simple(m)
    chains = [_to_chain(m, c) for c in _chains_below(m, m.full_mask, m.rank, False)]
    chains.sort(key=MChain.key)
    return chains


def check_mchain(m: Matroid, chain: MChain | Iterable) -> MChain:
    """Validate a chain against ``m`` from scratch; return it as an MChain."""
    flats = chain.flats if isinstance(chain, MChain) else tuple(frozenset(f) for f in chain)
    masks = [m.to_mask(f) for f in flats]
    if not masks or masks[0] != m.closure_mask(0):
        raise InvalidChain("chain must start at the closure of the empty set")
    if masks[-1] != m.full_mask:
        raise InvalidChain("chain must end at the ground set")
    if len(masks) != m.rank + 1:
        raise InvalidChain(f"chain has {len(masks)} flats, expected {m.rank + 1}")
    for i, f in enumerate(masks):
        s = fmt_set(m.to_set(f))
        if not m.is_flat_mask(f):
            raise InvalidChain(f"{s} is not a flat")
        if m.rank_mask(f) != i:
            raise InvalidChain(f"{s} has rank {m.rank_mask(f)}, expected {i}")
        if i and masks[i - 1] & f != masks[i - 1]:
            raise InvalidChain("chain is not nested")
        if not _modular_below(m, f, m.full_mask):
            raise InvalidChain(f"{s} is not modular")
    return MChain(tuple(frozenset(f) for f in flats))


def mpartition(c: MChain) -> MPartition:
    return MPartition(tuple(c.flats[i] - c.flats[i - 1] for i in range(1, len(c.flats))))


def chain_from_partition(p: MPartition, bottom: frozenset = frozenset()) -> MChain:
    flats = [frozenset(bottom)]
    for b in p.blocks:
        flats.append(flats[-1] | b)
    return MChain(tuple(flats))


def restrict_chain(m: Matroid, c: MChain, f) -> MChain:
    """Intersect every flat of ``c`` with the flat ``f``, drop repeats, and
    check the result is an M-chain of the restriction to ``f``."""
    fset = m.to_set(_flat_mask(m, f))
    out = []
    for g in c.flats:
        h = g & fset
        if not out or out[-1] != h:
            out.append(h)
    return check_mchain(m.restriction(fset), out)


def is_elementary_deformation(c1: MChain, c2: MChain) -> bool:
    """True iff the chains are equal or differ in exactly one flat."""
    if len(c1.flats) != len(c2.flats) or c1.flats[-1] != c2.flats[-1]:
        raise DifferentMatroids("chains do not come from the same matroid")
    return len(set(c1.flats) ^ set(c2.flats)) in (0, 2)


def _deformation_adjacency(chains: list[MChain]) -> list[set[int]]:
    # Chains of equal length differing in one flat differ at one rank position.
    adj = [set() for _ in chains]
    if not chains:
        return adj
    r = chains[0].rank
    for pos in range(1, r):
        buckets: dict[tuple, list[int]] = {}
        for i, c in enumerate(chains):
            buckets.setdefault(c.flats[:pos] + c.flats[pos + 1:], []).append(i)
        for idx in buckets.values():
            for a in idx:
                adj[a].update(b for b in idx if b != a)
    return adj


def deformation_components(m: Matroid) -> list[list[MChain]]:
    """Connected components of the M-chains under elementary deformation."""
    chains = all_mchains(m)
    adj = _deformation_adjacency(chains)
    seen = [False] * len(chains)
    comps = []
    for s in range(len(chains)):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [], deque([s])
        while queue:
            a = queue.popleft()
            comp.append(chains[a])
            for b in sorted(adj[a]):
                if not seen[b]:
                    seen[b] = True
                    queue.append(b)
        comps.append(comp)
    return comps


def deformation_path(m: Matroid, c1: MChain, c2: MChain) -> list[MChain]:
    """Shortest sequence of elementary deformations from ``c1`` to ``c2``."""
    c1, c2 = check_mchain(m, c1), check_mchain(m, c2)
    if c1 == c2:
        return [c1]
    chains = all_mchains(m)
    index = {c: i for i, c in enumerate(chains)}
    adj = _deformation_adjacency(chains)
    start, goal = index[c1], index[c2]
    parent = {start: None}
    queue = deque([start])
    while queue:
        a = queue.popleft()
        if a == goal:
            path = []
            while a is not None:
                path.append(chains[a])
                a = parent[a]
            return path[::-1]
        for b in sorted(adj[a]):
            if b not in parent:
                parent[b] = a
                queue.append(b)
    raise NoPathFound(f"no deformation path from {c1} to {c2}")


def line_meets_two_blocks(m: Matroid, p: MPartition) -> bool:
    """Every nontrivial line meets exactly two blocks, one point in the
    lower block and two in the higher."""
    block_masks = [m.to_mask(b) for b in p.blocks]
    for line in m.line_masks:
        counts = [len(bits_of(line & b)) for b in block_masks]
        hit = [(i, k) for i, k in enumerate(counts) if k]
        if len(hit) != 2 or hit[0][1] != 1 or hit[1][1] != 2:
            return False
    return True
