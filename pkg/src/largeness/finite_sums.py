"""Finite sums: FS tables, IP witnesses, the greedy IP splitter, sum
subsystems with finiteness / uniqueness of finite sums, and almost disjoint
IP families.

Index sets are 1-based sorted tuples.  Everywhere a choice is made the least
candidate in enumeration order wins, so every construction is reproducible.
"""

from __future__ import annotations

import hashlib
import json
import math
import re
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import kernels
from .errors import ConfigError, DepthCapError, PoolExhausted, TailExhausted, UniquenessViolation
from .semigroups import Naturals, Semigroup
from .sets import FS_DEPTH_CAP

TABLE_INLINE_MAX = 12
_DP_BIT_LIMIT = 1 << 20


def mask_to_H(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def H_to_mask(H: Sequence[int]) -> int:
    m = 0
    for t in H:
        m |= 1 << (t - 1)
    return m


def _table_by_mask(s: Semigroup, xs: Sequence) -> list:
    """Entry ``m`` is the increasing-order sum over the bits of ``m``."""
    if isinstance(s, Naturals):
        sums = kernels.fs_sums(xs) if max(xs) <= (1 << 62) else None
        if sums is not None:
            return sums.tolist()
    n = 1 << len(xs)
    out: list = [None] * n
    for mask in range(1, n):
        top = mask.bit_length() - 1
        rest = mask ^ (1 << top)
        out[mask] = xs[top] if rest == 0 else s.add(out[rest], xs[top])
    return out


@dataclass
class FsSystem:
    semigroup: Semigroup
    generators: tuple
    sums: dict  # H -> sum
    source_indices: tuple | None = None  # 1-based positions in a pool, when drawn from one

    @property
    def values(self) -> set:
        return set(self.sums.values())

    def table(self) -> list:
        return sorted(self.sums.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def to_json(self) -> dict:
        s = self.semigroup
        rows = [[list(H), s.encode(v)] for H, v in self.table()]
        d = {
            "semigroup": s.name,
            "generators": [s.encode(x) for x in self.generators],
            "size": len(rows),
        }
        if self.source_indices is not None:
            d["sourceIndices"] = list(self.source_indices)
        if len(self.generators) <= TABLE_INLINE_MAX:
            d["table"] = rows
        else:
            d["tableHash"] = table_hash(rows)
        return d


def table_hash(rows) -> str:
    blob = json.dumps(rows, sort_keys=True, separators=(",", ":")).encode()
    return "sha256:" + hashlib.sha256(blob).hexdigest()


def fs_set(s: Semigroup, xs: Sequence, depth_cap: int = FS_DEPTH_CAP) -> FsSystem:
    """All ``2**len(xs) - 1`` pairs (H, sum over H in increasing index order)."""
    xs = tuple(xs)
    if not xs:
        raise ConfigError("fs_set needs at least one generator")
    if len(xs) > depth_cap:
        raise DepthCapError(f"{len(xs)} generators exceed the depth cap {depth_cap}")
    by_mask = _table_by_mask(s, xs)
    sums = {mask_to_H(m): by_mask[m] for m in range(1, len(by_mask))}
    return FsSystem(s, xs, sums)


# -- IP witnesses -------------------------------------------------------------

def ip_witness_search(A, depth: int, horizon: int, max_nodes: int | None = None):
    """Depth-first, least-index-first search for ``<x_1..x_depth>`` drawn from
    the members of ``A`` among the first ``horizon`` elements, with strictly
    increasing enumeration index, all finite sums in ``A`` and pairwise
    distinct.  Returns the sequence, or ``None`` when nothing exists inside the
    bounds (which is no evidence that ``A`` is not an IP set).
    """
    if depth < 1:
        raise ConfigError("depth must be >= 1")
    s = A.semigroup
    cands = A.members(horizon)
    nodes = 0

    def extend(start: int, seq: list, sums: list, seen: set):
        nonlocal nodes
        if len(seq) == depth:
            return list(seq)
        for i in range(start, len(cands)):
            nodes += 1
            if max_nodes is not None and nodes > max_nodes:
                return None
            x = cands[i]
            new = [x] + [s.add(z, x) for z in sums]
            new_set = set(new)
            if len(new_set) != len(new) or not new_set.isdisjoint(seen):
                continue
            if not all(v in A for v in new):
                continue
            seq.append(x)
            found = extend(i + 1, seq, sums + new, seen | new_set)
            if found is not None:
                return found
            seq.pop()
        return None

    return extend(0, [], [], set())


# -- avoidance sets -----------------------------------------------------------

@dataclass
class Avoid:
    """Finite forbidden set plus solution sets that were cut by a horizon.

    For each ``(z, w)`` in ``open_pairs`` every ``y`` with ``z + y == w`` is
    forbidden; membership is decided exactly by evaluating the operation.
    """

    explicit: set = field(default_factory=set)
    open_pairs: list = field(default_factory=list)

    def forbids(self, s: Semigroup, y) -> bool:
        if y in self.explicit:
            return True
        return any(s.eq(s.add(z, y), w) for z, w in self.open_pairs)


def _left_solutions_into(s: Semigroup, froms, tos, avoid: Avoid) -> None:
    """Add ``{y : z + y = w, z in froms, w in tos}`` to ``avoid``."""
    if not froms or not tos:
        return
    if isinstance(s, Naturals):
        hi = np.fromiter(tos, dtype=object)
        lo = np.fromiter(froms, dtype=object)
        if max(tos) < (1 << 62) and max(froms) < (1 << 62):
            avoid.explicit.update(kernels.positive_differences(hi.astype(np.int64), lo.astype(np.int64)).tolist())
        else:
            avoid.explicit.update(w - z for w in tos for z in froms if w > z)
        return
    for z in froms:
        for w in tos:
            sol = s.solve_left(z, w)
            if sol.truncated:
                avoid.open_pairs.append((z, w))
            else:
                avoid.explicit.update(sol.elements)


def _extend_fs(s: Semigroup, vals: list, x) -> list:
    return vals + [x] + [s.add(v, x) for v in vals]


# -- splitting an IP set ----------------------------------------------------

def ip_split(s: Semigroup, xs: Sequence, parts: int, out_len: int) -> list[FsSystem]:
    """Split the pool ``xs`` into ``parts`` generator sequences of length
    ``out_len`` with pairwise disjoint finite-sum sets.

    Round-robin over parts; each pick is the least-index unused pool element
    outside every current FS set and outside the left solutions
    ``{y : z + y = w}`` with ``z`` in the current part's FS and ``w`` in any
    other part's FS.  Every pick is a distinct pool position, so each part's
    FS lies inside FS(xs) whenever the operation is commutative.
    """
    if parts < 1 or out_len < 1:
        raise ConfigError("parts and out_len must be >= 1")
    pool = list(xs)
    used = [False] * len(pool)
    picks: list[list[int]] = [[] for _ in range(parts)]
    fs_vals: list[list] = [[] for _ in range(parts)]
    for r in range(out_len):
        for p in range(parts):
            avoid = Avoid()
            for q in range(parts):
                avoid.explicit.update(fs_vals[q])
                if q != p:
                    _left_solutions_into(s, fs_vals[p], fs_vals[q], avoid)
            chosen = None
            for i, y in enumerate(pool):
                if not used[i] and not avoid.forbids(s, y):
                    chosen = i
                    break
            if chosen is None:
                raise PoolExhausted(
                    f"pool exhausted at round {r + 1}, part {p + 1}",
                    {"round": r + 1, "part": p + 1, "picks": [[i + 1 for i in pk] for pk in picks]},
                )
            used[chosen] = True
            picks[p].append(chosen)
            fs_vals[p] = _extend_fs(s, fs_vals[p], pool[chosen])
    out = []
    for pk in picks:
        fs = fs_set(s, [pool[i] for i in pk])
        fs.source_indices = tuple(i + 1 for i in pk)
        out.append(fs)
    return out


# -- sum subsystems ---------------------------------------------------------

@dataclass
class SumSubsystem:
    source: tuple
    blocks: tuple  # tuple of 1-based index tuples
    derived: tuple

    def to_json(self, s: Semigroup) -> dict:
        return {
            "source": [s.encode(x) for x in self.source],
            "blocks": [list(b) for b in self.blocks],
            "derived": [s.encode(y) for y in self.derived],
        }


def _least_tail_sum(s: Semigroup, xs: tuple, start: int, avoid: Avoid, window: int):
    """Least admissible finite sum of ``xs[start:]`` (0-based start).

    Ties in value go to the colexicographically least index set, i.e. the
    one with the smallest maximum, then the smallest next-largest, and so on.
    Returns ``(value, H)`` with 1-based ``H`` or ``None``.
    """
    tail = xs[start:]
    if not tail:
        return None
    if isinstance(s, Naturals) and not avoid.open_pairs and sum(tail) <= _DP_BIT_LIMIT:
        return _least_tail_sum_bitset(tail, start, avoid.explicit)
    tail = tail[:window]
    by_mask = _table_by_mask(s, tail)
    masks = sorted(range(1, len(by_mask)), key=lambda m: (s.key(by_mask[m]), m))
    for m in masks:
        v = by_mask[m]
        if not avoid.forbids(s, v):
            return v, tuple(start + t for t in mask_to_H(m))
    return None


def _least_tail_sum_bitset(tail: tuple, start: int, excluded: set):
    # prefix[j]: subset sums reachable with tail[:j+1]; bit v <-> value v
    prefix = []
    reach = 1
    for x in tail:
        reach |= reach << x
        prefix.append(reach)
    total = sum(tail)
    bad = 1
    for v in excluded:
        if 0 < v <= total:
            bad |= 1 << v
    free = reach & ~bad
    if not free:
        return None
    v = (free & -free).bit_length() - 1
    H = []
    rem = v
    hi = len(tail)
    while rem:
        j = next(j for j in range(hi) if prefix[j] >> rem & 1)
        H.append(start + j + 1)
        rem -= tail[j]
        hi = j
    return v, tuple(sorted(H))


def _build_subsystem(s: Semigroup, xs: Sequence, out_len: int, window: int) -> SumSubsystem:
    xs = tuple(xs)
    if out_len < 1:
        raise ConfigError("out_len must be >= 1")
    if not xs:
        raise TailExhausted("empty source sequence", {"built": 0})
    blocks = [(1,)]
    ys = [xs[0]]
    fs_vals = [xs[0]]
    while len(ys) < out_len:
        avoid = Avoid(explicit=set(fs_vals))
        _left_solutions_into(s, fs_vals, fs_vals, avoid)
        pick = _least_tail_sum(s, xs, blocks[-1][-1], avoid, window)
        if pick is None:
            raise TailExhausted(
                f"source exhausted after {len(ys)} of {out_len} blocks",
                {"built": len(ys), "blocks": [list(b) for b in blocks]},
            )
        y, H = pick
        blocks.append(H)
        ys.append(y)
        fs_vals = _extend_fs(s, fs_vals, y)
    return SumSubsystem(xs, tuple(blocks), tuple(ys))


def ffs_subsystem(s: Semigroup, xs: Sequence, out_len: int, window: int = FS_DEPTH_CAP) -> SumSubsystem:
    """Sum subsystem of ``xs`` with finiteness of finite sums.

    ``y_1 = x_1``; then each ``y_{k+1}`` is the least finite sum of the part
    of ``xs`` after the previous block that avoids both FS(y_1..y_k) and
    ``Y = {y : z + y = w for z, w in FS(y_1..y_k)}``.
    """
    return _build_subsystem(s, xs, out_len, window)


def check_ffs(s: Semigroup, ys: Sequence, depth_cap: int = FS_DEPTH_CAP):
    """``None`` if ``ys`` has finiteness of finite sums, else the least
    ``(H1, H2)`` (tuple order, ``H1 < H2``) with equal sums and different maxima."""
    groups = _sum_groups(s, ys, depth_cap)
    best = None
    for Hs in groups:
        Hs.sort()
        for i, H1 in enumerate(Hs):
            partner = next((H2 for H2 in Hs[i + 1 :] if H2[-1] != H1[-1]), None)
            if partner is not None:
                cand = (H1, partner)
                if best is None or cand < best:
                    best = cand
                break
    return best


def _sum_groups(s: Semigroup, ys: Sequence, depth_cap: int) -> list[list]:
    fs = fs_set(s, ys, depth_cap)
    by_val: dict = {}
    for H, v in fs.sums.items():
        by_val.setdefault(v, []).append(H)
    return [Hs for Hs in by_val.values() if len(Hs) > 1]


def first_repeated_sum(s: Semigroup, ys: Sequence, depth_cap: int = FS_DEPTH_CAP):
    """Least pair ``(H1, H2)`` of distinct index sets with equal sums, or ``None``."""
    best = None
    for Hs in _sum_groups(s, ys, depth_cap):
        Hs.sort()
        cand = (Hs[0], Hs[1])
        if best is None or cand < best:
            best = cand
    return best


def ufs_subsystem(s: Semigroup, xs: Sequence, out_len: int, window: int = FS_DEPTH_CAP) -> SumSubsystem:
    """Same construction as :func:`ffs_subsystem`; the result is then checked
    for uniqueness of finite sums.  That holds when the semigroup is right
    cancellative and has no idempotent (N qualifies); otherwise the check
    raises :class:`UniquenessViolation` with the offending pair."""
    sub = _build_subsystem(s, xs, out_len, window)
    bad = first_repeated_sum(s, sub.derived)
    if bad is not None:
        H1, H2 = bad
        raise UniquenessViolation(H1, H2, s.fold(sub.derived[t - 1] for t in H1))
    return sub


# -- almost disjoint families of N ---------------------------------------------

_SEED_RE = re.compile(r"^([01]*)\(([01]+)\)$")


@dataclass(frozen=True)
class Branch:
    """Eventually periodic infinite binary sequence ``prefix cycle cycle ...``."""

    prefix: str
    cycle: str

    @classmethod
    def parse(cls, seed: str) -> "Branch":
        m = _SEED_RE.match(seed.replace(" ", ""))
        if not m:
            raise ConfigError(f"bad branch seed {seed!r}; expected e.g. '0(1)' or '(0)'")
        return cls(m.group(1), m.group(2))

    def bits(self, n: int) -> str:
        out = self.prefix[:n]
        while len(out) < n:
            out += self.cycle
        return out[:n]

    def code(self, n: int) -> int:
        """Integer code of the length-``n`` prefix: binary ``1`` followed by it."""
        return int("1" + self.bits(n), 2)

    def __str__(self) -> str:
        return f"{self.prefix}({self.cycle})"


def _agree_len(a: Branch, b: Branch) -> int | None:
    """Length of the common prefix, or ``None`` if the sequences are equal."""
    bound = max(len(a.prefix), len(b.prefix)) + math.lcm(len(a.cycle), len(b.cycle))
    sa, sb = a.bits(bound), b.bits(bound)
    for i in range(bound):
        if sa[i] != sb[i]:
            return i
    return None


@dataclass(frozen=True)
class AdNatFamily:
    branches: tuple

    def member(self, i: int, n: int) -> int:
        """The ``n``-th (1-based) element of the ``i``-th set."""
        return self.branches[i].code(n)

    def members(self, i: int, count: int) -> list[int]:
        return [self.member(i, n) for n in range(1, count + 1)]

    def common_prefix(self, i: int, j: int) -> int:
        return _agree_len(self.branches[i], self.branches[j])

    def __len__(self) -> int:
        return len(self.branches)


def ad_nat_family(seeds: Sequence[str]) -> AdNatFamily:
    """Almost disjoint family of subsets of N indexed by binary branches.

    Branch ``i``'s set is ``{code(prefix of length n) : n >= 1}``; two
    branches share exactly the codes of their common prefixes.
    """
    branches = tuple(Branch.parse(sd) if isinstance(sd, str) else sd for sd in seeds)
    if not branches:
        raise ConfigError("need at least one branch seed")
    for i in range(len(branches)):
        for j in range(i + 1, len(branches)):
            if _agree_len(branches[i], branches[j]) is None:
                raise ConfigError(f"branch seeds {branches[i]} and {branches[j]} denote the same sequence")
    return AdNatFamily(branches)


def default_branch_seeds(m: int, depth: int) -> list[str]:
    """``m`` distinct branches: the top bit splits them in two halves and the
    remaining distinguishing bits sit at the end of the first ``depth`` bits,
    so truncations to ``depth`` members overlap as little as the tree allows
    while using few distinct codes."""
    if m < 1:
        raise ConfigError("m must be >= 1")
    if m == 1:
        return ["(0)"]
    w = max(1, (m - 1).bit_length())
    seeds = []
    for i in range(m):
        bits = format(i, f"0{w}b")
        seeds.append(bits[0] + "0" * max(depth - w, 0) + bits[1:] + "(0)")
    return seeds


@dataclass
class IpAdFamily:
    subsystem: SumSubsystem
    seeds: tuple
    index_sets: tuple  # per member: 1-based positions into subsystem.derived
    systems: list

    def to_json(self, s: Semigroup) -> dict:
        return {
            "subsystem": self.subsystem.to_json(s),
            "seeds": list(self.seeds),
            "indexSets": [list(ix) for ix in self.index_sets],
            "systems": [fs.to_json() for fs in self.systems],
        }


def ip_ad_family(s: Semigroup, xs: Sequence, m: int, trunc: int, seeds: Sequence[str] | None = None) -> IpAdFamily:
    """``m`` IP sets inside FS(xs), pairwise meeting only in sums whose
    largest index is shared.

    Builds an FFS subsystem ``ys`` of ``xs``, takes the first ``trunc`` members
    of ``m`` almost disjoint subsets of N, relabels the codes they use as
    ``1..K`` in increasing order (a bijection, so intersections are kept), and
    returns FS of each selected subsequence of ``ys``.
    """
    if m < 1 or trunc < 1:
        raise ConfigError("m and trunc must be >= 1")
    seeds = list(seeds) if seeds is not None else default_branch_seeds(m, trunc)
    if len(seeds) != m:
        raise ConfigError(f"expected {m} branch seeds, got {len(seeds)}")
    fam = ad_nat_family(seeds)
    codes = [fam.members(i, trunc) for i in range(m)]
    universe = sorted(set().union(*codes))
    rank = {c: r + 1 for r, c in enumerate(universe)}
    sub = ffs_subsystem(s, xs, len(universe))
    index_sets = tuple(tuple(sorted(rank[c] for c in cs)) for cs in codes)
    systems = []
    for ix in index_sets:
        fs = fs_set(s, [sub.derived[t - 1] for t in ix])
        fs.source_indices = ix
        systems.append(fs)
    return IpAdFamily(sub, tuple(str(b) for b in fam.branches), index_sets, systems)
