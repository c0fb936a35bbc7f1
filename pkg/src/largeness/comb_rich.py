"""Combinatorially rich sets over N.

A family ``L`` is a finite set of equal-length sequences ``f: {1..m} -> N``.
Its block at ``(a, H)`` is ``{a + sum_{t in H} f(t) : f in L}``.  This module
searches for blocks inside a set, normalizes families up to translation,
builds bucketed translate families, and greedily splits a set into parts
each of which carries a witness block for a translate of every family.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import kernels
from .errors import ConfigError, WitnessExhausted
from .finite_sums import ad_nat_family, default_branch_seeds

log = logging.getLogger(__name__)

DEFAULT_SPLIT_AMAX = 1 << 20
DEFAULT_RETRY_CAP = 40
ARRAY_CAP = 1 << 26
MODES = ("disjoint", "almost-disjoint")


@dataclass(frozen=True, order=True)
class SeqFamily:
    members: tuple  # sorted, duplicate-free tuple of equal-length int tuples

    @classmethod
    def of(cls, rows: Iterable[Sequence[int]]) -> "SeqFamily":
        rows = sorted({tuple(int(v) for v in r) for r in rows})
        if not rows:
            raise ConfigError("a family needs at least one sequence")
        m = len(rows[0])
        if m == 0 or any(len(r) != m for r in rows):
            raise ConfigError("all sequences in a family must share a positive length")
        return cls(tuple(rows))

    @property
    def length(self) -> int:
        return len(self.members[0])

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def min_entry(self) -> int:
        return min(min(r) for r in self.members)

    def shift(self, b: int) -> "SeqFamily":
        """``L + b``: add ``b`` to every entry of every member."""
        return SeqFamily(tuple(tuple(v + b for v in r) for r in self.members))

    def sort_key(self) -> tuple:
        return (self.size, self.members)

    def to_json(self) -> list:
        return [list(r) for r in self.members]


@dataclass(frozen=True)
class CrSchedule:
    table: tuple  # ((n, r_n), ...)

    @classmethod
    def default(cls, n_max: int) -> "CrSchedule":
        """``r_n = 2**n + 1``."""
        return cls(tuple((n, 2 ** n + 1) for n in range(1, n_max + 1)))

    @classmethod
    def from_mapping(cls, mapping) -> "CrSchedule":
        items = tuple(sorted((int(n), int(r)) for n, r in dict(mapping).items()))
        if any(n < 1 or r < 1 for n, r in items):
            raise ConfigError("schedule entries must be positive")
        return cls(items)

    def r(self, n: int) -> int:
        for k, v in self.table:
            if k == n:
                return v
        raise ConfigError(f"schedule has no entry for n = {n}")

    def to_json(self) -> dict:
        return {str(n): r for n, r in self.table}


@dataclass(frozen=True)
class CrWitness:
    a: int
    H: tuple

    def __post_init__(self):
        if not self.H:
            raise ConfigError("H must be non-empty")

    def to_json(self) -> dict:
        return {"a": self.a, "H": list(self.H)}


def sl_block(L: SeqFamily, w: CrWitness) -> frozenset:
    m = L.length
    if any(not 1 <= t <= m for t in w.H):
        raise ConfigError(f"H = {list(w.H)} is outside 1..{m}")
    return frozenset(w.a + sum(r[t - 1] for t in w.H) for r in L.members)


@lru_cache(maxsize=None)
def h_order(m: int) -> tuple:
    """Non-empty subsets of ``{1..m}``, by size then lexicographically."""
    return tuple(H for k in range(1, m + 1) for H in itertools.combinations(range(1, m + 1), k))


@lru_cache(maxsize=None)
def _h_arrays(m: int):
    order = h_order(m)
    masks = np.array([sum(1 << (t - 1) for t in H) for H in order], dtype=np.int64)
    sizes = np.array([len(H) for H in order], dtype=np.int64)
    return masks, sizes


def cr_witness_search(A, L: SeqFamily, a_max: int) -> CrWitness | None:
    """Least ``(a, H)`` (``a`` first, then ``H`` by size and lex) with the block
    inside ``A``; ``None`` when no ``a <= a_max`` works."""
    if a_max < 1:
        raise ConfigError("a_max must be >= 1")
    order = h_order(L.length)
    sums = [sorted({sum(r[t - 1] for t in H) for r in L.members}) for H in order]
    for a in range(1, a_max + 1):
        for H, ss in zip(order, sums):
            if all((a + v) in A for v in ss):
                return CrWitness(a, H)
    return None


def translate_class_rep(L: SeqFamily) -> SeqFamily:
    """The translate of ``L`` whose smallest entry is 1."""
    return L.shift(1 - L.min_entry)


def enumerate_families(schedule: CrSchedule, n_max: int, entry_horizon: int) -> Iterator[SeqFamily]:
    """All families with ``n <= n_max`` members of length ``r_n`` and entries in
    ``1..entry_horizon``, by ``n`` then lexicographically."""
    if entry_horizon < 1:
        raise ConfigError("entry horizon must be >= 1")
    for n in range(1, n_max + 1):
        m = schedule.r(n)
        seqs = list(itertools.product(range(1, entry_horizon + 1), repeat=m))
        for combo in itertools.combinations(seqs, n):
            yield SeqFamily(combo)


def bucket_offsets(buckets: int, entry_horizon: int, mode: str, seeds: Sequence[str] | None = None) -> list[int]:
    """One translation offset per bucket, each at least ``entry_horizon``.

    ``disjoint``: the least such offset in residue class ``i`` mod ``buckets``.
    ``almost-disjoint``: the first prefix code of branch ``i`` reaching the
    horizon that no earlier bucket already took.
    """
    if buckets < 1:
        raise ConfigError("buckets must be >= 1")
    if mode == "disjoint":
        out = []
        for i in range(buckets):
            o = entry_horizon + ((i - entry_horizon) % buckets)
            out.append(o)
        return out
    if mode == "almost-disjoint":
        w = max(1, (buckets - 1).bit_length())
        fam = ad_nat_family(seeds if seeds is not None else default_branch_seeds(buckets, w))
        if len(fam) != buckets:
            raise ConfigError(f"expected {buckets} branch seeds")
        taken: set = set()
        out = []
        for i in range(buckets):
            n = 1
            while fam.member(i, n) < entry_horizon or fam.member(i, n) in taken:
                n += 1
            taken.add(fam.member(i, n))
            out.append(fam.member(i, n))
        return out
    raise ConfigError(f"unknown mode {mode!r}; expected one of {MODES}")


def lem1_families(
    schedule: CrSchedule,
    n_max: int,
    buckets: int,
    mode: str,
    entry_horizon: int,
    seeds: Sequence[str] | None = None,
) -> list[list[SeqFamily]]:
    """Per bucket, one translate of every class representative.

    Offsets are at least ``entry_horizon`` so every enumerated family ``L``
    has a translate ``L + a`` (``a >= 1``) in each bucket.
    """
    reps = dict.fromkeys(translate_class_rep(L) for L in enumerate_families(schedule, n_max, entry_horizon))
    if not reps:
        raise ConfigError("entry horizon covers no family")
    offs = bucket_offsets(buckets, entry_horizon, mode, seeds)
    return [[R.shift(o) for R in reps] for o in offs]


# -- greedy splitter ----------------------------------------------------------

@dataclass(frozen=True)
class CrLedgerEntry:
    family: SeqFamily
    a: int
    H: tuple
    block: tuple
    part: int | None  # 0-based part, or None for a family outside every bucket

    def to_json(self) -> list:
        return [self.family.to_json(), self.a, list(self.H), list(self.block), self.part]


@dataclass
class CrSplitResult:
    parts: list  # per part: sorted list of ints
    ledger: list  # CrLedgerEntry in processing order
    enumerated: list  # the enumerated families, in order
    offsets: list
    bounds: dict = field(default_factory=dict)


class _Board:
    """Occupancy, membership and skip arrays over ``0..lim-1``."""

    def __init__(self, A, lim: int):
        self.A = A
        self.lim = 0
        self.occ = np.zeros(0, dtype=np.uint8)
        self._resize(lim)

    def _resize(self, lim: int) -> None:
        occ = np.zeros(lim, dtype=np.uint8)
        occ[: self.lim] = self.occ
        amask = self.A.mask(lim - 1).astype(np.uint8)
        idx = np.arange(lim + 1, dtype=np.int64)
        usable = np.zeros(lim + 1, dtype=bool)
        usable[:lim] = (amask == 1) & (occ == 0)
        usable[lim] = True
        self.nxt = np.where(usable, idx, idx + 1)
        self.occ, self.amask, self.lim = occ, amask, lim

    def grow(self, need: int) -> None:
        lim = max(2 * self.lim, need)
        if lim > ARRAY_CAP:
            raise WitnessExhausted(f"search region would exceed {ARRAY_CAP} slots", None)
        self._resize(lim)

    def take(self, values) -> None:
        for v in values:
            self.occ[v] = 1
            self.nxt[v] = v + 1


def _place(board: _Board, L: SeqFamily, a_max: int, retry_cap: int) -> CrWitness:
    arr = np.array(L.members, dtype=np.int64)
    masks, sizes = _h_arrays(L.length)
    top = int(arr.sum(axis=1).max())
    b = 0
    retries = 0
    while True:
        c, h = kernels.cr_scan(arr, masks, sizes, board.occ, board.amask, board.nxt, a_max, b)
        if c == -2:
            board.grow(int(sizes.max()) * b + a_max + top + 2)
            continue
        if c >= 1:
            H = h_order(L.length)[h]
            return CrWitness(int(c) + len(H) * b, H)
        retries += 1
        if retries > retry_cap:
            raise WitnessExhausted(
                f"no block for family {L.to_json()} after {retry_cap} translation retries", L
            )
        b = 1 if b == 0 else 2 * b


def cr_split(
    A,
    schedule: CrSchedule,
    n_max: int,
    entry_horizon: int,
    parts: int,
    mode: str = "disjoint",
    a_max: int = DEFAULT_SPLIT_AMAX,
    retry_cap: int = DEFAULT_RETRY_CAP,
    seeds: Sequence[str] | None = None,
) -> CrSplitResult:
    """Greedy split of ``A`` into ``parts`` disjoint pieces, each holding a
    block for a translate of every enumerated family.

    Processes the enumerated families together with one bucket translate of
    each class representative per part, in (size, lex) order.  Each family
    gets the least block inside ``A`` that avoids every earlier block; if the
    search window ``a <= a_max`` is full, the family is translated by ``b``
    (doubling from 1) and the witness converted back through
    ``block(L + b, (c, H)) = block(L, (c + |H| b, H))``.
    """
    if parts < 1:
        raise ConfigError("parts must be >= 1")
    if a_max < 1 or retry_cap < 0:
        raise ConfigError("a_max must be >= 1 and retry_cap >= 0")
    enumerated = list(enumerate_families(schedule, n_max, entry_horizon))
    if not enumerated:
        raise ConfigError("entry horizon covers no family")
    offsets = bucket_offsets(parts, entry_horizon, mode, seeds)
    reps = dict.fromkeys(translate_class_rep(L) for L in enumerated)
    assignment: dict = {L: None for L in enumerated}
    for p, o in enumerate(offsets):
        for R in reps:
            assignment[R.shift(o)] = p
    work = sorted(assignment, key=SeqFamily.sort_key)
    log.info("cr_split: %d families (%d enumerated)", len(work), len(enumerated))

    board = _Board(A, 4096)
    ledger = []
    buckets: list[list[int]] = [[] for _ in range(parts)]
    for L in work:
        w = _place(board, L, a_max, retry_cap)
        block = tuple(sorted(sl_block(L, w)))
        board.take(block)
        part = assignment[L]
        if part is not None:
            buckets[part].extend(block)
        ledger.append(CrLedgerEntry(L, w.a, w.H, block, part))
    return CrSplitResult(
        parts=[sorted(b) for b in buckets],
        ledger=ledger,
        enumerated=enumerated,
        offsets=offsets,
        bounds={
            "nMax": n_max,
            "entryHorizon": entry_horizon,
            "parts": parts,
            "mode": mode,
            "aMax": a_max,
            "retryCap": retry_cap,
        },
    )
