"""Polynomial largeness over N.

Polynomials have non-negative integer coefficients and no constant term, so
they map N into N and evaluation is exact Python integer arithmetic.  Blocks:

* ``srl_block(R, L, (a, H)) = {a + f(sum_{t in H} g(t)) : f in R, g in L}``
* ``sr_block(R, a, x) = {a + f(x) : f in R}``
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import ConfigError, WitnessExhausted

log = logging.getLogger(__name__)

DEFAULT_SUM_MAX = 256
DEMO_SUBSYSTEM_CAP = 16


# -- polynomials --------------------------------------------------------------

@dataclass(frozen=True, order=True)
class IntPoly:
    coeffs: tuple  # (c_1, ..., c_d), c_k multiplies x**k; no trailing zeros

    @classmethod
    def of(cls, coeffs: Iterable[int]) -> "IntPoly":
        cs = [int(c) for c in coeffs]
        if any(c < 0 for c in cs):
            raise ConfigError(f"coefficients must be non-negative: {cs}")
        while cs and cs[-1] == 0:
            cs.pop()
        if not cs:
            raise ConfigError("the zero polynomial is not allowed")
        return cls(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    @property
    def weight(self) -> int:
        return self.degree + sum(self.coeffs)

    def key(self) -> tuple:
        return (self.degree, self.coeffs)

    def __call__(self, x: int) -> int:
        return poly_eval(self, x)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(self.degree, other.degree)
        a = self.coeffs + (0,) * (n - self.degree)
        b = other.coeffs + (0,) * (n - other.degree)
        return IntPoly.of(x + y for x, y in zip(a, b))

    def to_json(self) -> list:
        return list(self.coeffs)

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs, start=1):
            if c:
                mono = "x" if k == 1 else f"x^{k}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)


def poly_eval(f: IntPoly, x: int) -> int:
    acc = 0
    for c in reversed(f.coeffs):
        acc = (acc + c) * x
    return acc


@dataclass(frozen=True)
class PolyFamily:
    members: tuple  # IntPoly, sorted by (degree, coeffs), no duplicates

    @classmethod
    def of(cls, polys: Iterable) -> "PolyFamily":
        ps = {p if isinstance(p, IntPoly) else IntPoly.of(p) for p in polys}
        if not ps:
            raise ConfigError("a polynomial family needs at least one member")
        return cls(tuple(sorted(ps, key=IntPoly.key)))

    @property
    def weight(self) -> int:
        return sum(p.weight for p in self.members)

    def sort_key(self) -> tuple:
        return (self.weight, tuple(p.key() for p in self.members))

    def issuperset(self, other: "PolyFamily") -> bool:
        return set(other.members) <= set(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def to_json(self) -> list:
        return [p.to_json() for p in self.members]


@dataclass(frozen=True)
class SeqList:
    members: tuple  # tuple of equal-length tuples of positive ints

    @classmethod
    def of(cls, rows: Iterable[Sequence[int]]) -> "SeqList":
        rows = sorted({tuple(int(v) for v in r) for r in rows})
        if not rows:
            raise ConfigError("a sequence list needs at least one sequence")
        T = len(rows[0])
        if T == 0 or any(len(r) != T for r in rows):
            raise ConfigError("all sequences must share a positive truncation length")
        if any(v < 1 for r in rows for v in r):
            raise ConfigError("sequence entries must be positive")
        return cls(tuple(rows))

    @property
    def length(self) -> int:
        return len(self.members[0])

    def to_json(self) -> list:
        return [list(r) for r in self.members]


@dataclass(frozen=True)
class JpWitness:
    a: int
    H: tuple

    def to_json(self) -> dict:
        return {"a": self.a, "H": list(self.H)}


# -- blocks and witness searches ----------------------------------------------

def _hsum(g: Sequence[int], H: Sequence[int]) -> int:
    return sum(g[t - 1] for t in H)


def srl_block(R: PolyFamily, L: SeqList, w: JpWitness) -> frozenset:
    if not w.H or any(not 1 <= t <= L.length for t in w.H):
        raise ConfigError(f"H = {list(w.H)} is outside 1..{L.length}")
    return frozenset(w.a + poly_eval(f, _hsum(g, w.H)) for f in R for g in L.members)


def sr_block(R: PolyFamily, a: int, x: int) -> frozenset:
    return frozenset(a + poly_eval(f, x) for f in R)


def _admissible_H(L: SeqList, min_h: int, sum_max: int) -> Iterator[tuple]:
    """Subsets of ``{min_h+1..T}`` by size then lex whose sums stay within
    ``sum_max`` for every row."""
    pool = list(range(min_h + 1, L.length + 1))
    for k in range(1, len(pool) + 1):
        if any(sum(sorted(g[t - 1] for t in pool)[:k]) > sum_max for g in L.members):
            return
        for H in itertools.combinations(pool, k):
            if all(_hsum(g, H) <= sum_max for g in L.members):
                yield H


def jp_witness_search(
    A,
    R: PolyFamily,
    L: SeqList,
    min_h: int = 0,
    a_max: int = 100,
    sum_max: int = DEFAULT_SUM_MAX,
) -> JpWitness | None:
    """Least ``(a, H)`` (``a`` first, then ``H`` by size and lex) with
    ``min H > min_h`` and the block inside ``A``."""
    if not 0 <= min_h < L.length:
        raise ConfigError(f"min_h must lie in 0..{L.length - 1}")
    if a_max < 1:
        raise ConfigError("a_max must be >= 1")
    cands = [
        (H, sorted({poly_eval(f, _hsum(g, H)) for f in R for g in L.members}))
        for H in _admissible_H(L, min_h, sum_max)
    ]
    for a in range(1, a_max + 1):
        for H, vals in cands:
            if all((a + v) in A for v in vals):
                return JpWitness(a, H)
    return None


def pp_witness(A, R: PolyFamily, a_max: int, x_max: int, avoid=frozenset()) -> tuple[int, int] | None:
    """Least ``(a, x)`` (``a`` first) with ``sr_block(R, a, x)`` inside ``A``
    and disjoint from ``avoid``."""
    for a in range(1, a_max + 1):
        for x in range(1, x_max + 1):
            if all(v in A and v not in avoid for v in sr_block(R, a, x)):
                return a, x
    return None


@dataclass(frozen=True)
class AnchoredWitness:
    b: int
    x: int
    inner_a: int  # witness a for the shifted family
    anchor: IntPoly  # the member f used for the shift

    def to_json(self) -> dict:
        return {"b": self.b, "x": self.x, "innerA": self.inner_a, "anchor": self.anchor.to_json()}


def shifted_family(R: PolyFamily, f: IntPoly) -> PolyFamily:
    """``{f} ∪ {f + h : h in R}``."""
    return PolyFamily.of([f] + [f + h for h in R])


def pp_witness_anchored(A, R: PolyFamily, a_max: int, x_max: int) -> AnchoredWitness | None:
    """Witness ``(b, x)`` with ``b`` itself in ``A``.

    With ``f`` the least member of ``R``, a plain witness ``(a, x)`` for
    ``{f} ∪ (f + R)`` gives ``b = a + f(x)`` in ``A`` and
    ``b + h(x) = a + (f + h)(x)`` in ``A`` for every ``h``.
    """
    f = R.members[0]
    hit = pp_witness(A, shifted_family(R, f), a_max, x_max)
    if hit is None:
        return None
    a, x = hit
    return AnchoredWitness(a + poly_eval(f, x), x, a, f)


def pvdw_search(A, R: PolyFamily, ys: Sequence[int], a_max: int) -> JpWitness | None:
    """Least ``(a, H)`` with ``a + f(sum_{n in H} y_n)`` in ``A`` for all ``f``."""
    ys = [int(y) for y in ys]
    if not ys:
        raise ConfigError("ys must be non-empty")
    L = SeqList.of([ys])
    return jp_witness_search(A, R, L, 0, a_max, sum_max=sum(ys))


# -- increasing sum subsystems and finite deletion ------------------------------

@dataclass
class IncreasingSubsystem:
    blocks: tuple
    derived: SeqList

    def to_json(self) -> dict:
        return {"blocks": [list(K) for K in self.blocks], "derived": self.derived.to_json()}


def _increasing_blocks(L: SeqList, out_len: int | None) -> list[tuple]:
    rows = L.members
    T = L.length
    blocks: list[tuple] = []
    prev = [0] * len(rows)
    start = 1
    while out_len is None or len(blocks) < out_len:
        end = start
        sums = [0] * len(rows)
        while end <= T:
            sums = [s + r[end - 1] for s, r in zip(sums, rows)]
            if all(s > p for s, p in zip(sums, prev)):
                break
            end += 1
        if end > T:
            break
        blocks.append(tuple(range(start, end + 1)))
        prev = sums
        start = end + 1
    return blocks


def increasing_subsystem(L: SeqList, out_len: int | None = None) -> IncreasingSubsystem:
    """Greedy contiguous blocks ``K_1, K_2, ...`` with every row's block sum
    strictly increasing.  ``out_len=None`` takes as many as the truncation
    allows (at least one)."""
    blocks = _increasing_blocks(L, out_len)
    if (out_len is not None and len(blocks) < out_len) or not blocks:
        raise WitnessExhausted(
            f"truncation length {L.length} supports only {len(blocks)} increasing blocks",
            L.to_json(),
        )
    derived = SeqList(tuple(tuple(_hsum(r, K) for K in blocks) for r in L.members))
    return IncreasingSubsystem(tuple(blocks), derived)


@dataclass
class JpRobustReport:
    subsystem: IncreasingSubsystem
    removed: tuple
    trials: list  # dicts: trial, minH, a, H, rowSums, block, meetsB

    @property
    def avoiding(self) -> int:
        return sum(not t["meetsB"] for t in self.trials)

    @property
    def last_meeting(self) -> int | None:
        hits = [t["trial"] for t in self.trials if t["meetsB"]]
        return hits[-1] if hits else None

    def to_json(self) -> dict:
        return {
            "subsystem": self.subsystem.to_json(),
            "removed": list(self.removed),
            "trials": self.trials,
            "avoidingCount": self.avoiding,
            "lastTrialMeetingRemoved": self.last_meeting,
        }


def jp_minus_finite_demo(
    A,
    B: Iterable[int],
    R: PolyFamily,
    L: SeqList,
    trials: int,
    a_max: int = 100,
    sum_max: int | None = None,
    out_len: int | None = None,
) -> JpRobustReport:
    """Witnesses for ``A`` over an increasing subsystem of ``L`` with
    escalating ``min H``, recording which blocks meet the finite set ``B``.

    Trial ``n`` requires ``min H > max(n - 1, max H_{n-1})``, so the row sums
    over successive ``H`` strictly increase and the blocks drift upward.
    """
    if trials < 1:
        raise ConfigError("trials must be >= 1")
    removed = tuple(sorted(set(int(b) for b in B)))
    bset = set(removed)
    cap = out_len if out_len is not None else None
    sub = increasing_subsystem(L, cap)
    if out_len is None and len(sub.blocks) > DEMO_SUBSYSTEM_CAP:
        sub = increasing_subsystem(L, DEMO_SUBSYSTEM_CAP)
    Lp = sub.derived
    if sum_max is None:
        sum_max = max(sum(r) for r in Lp.members)
    out = []
    prev_max = 0
    for n in range(1, trials + 1):
        floor = max(n - 1, prev_max)
        if floor >= Lp.length:
            raise WitnessExhausted(f"trial {n}: subsystem of length {Lp.length} exhausted", n)
        w = jp_witness_search(A, R, Lp, floor, a_max, sum_max)
        if w is None:
            raise WitnessExhausted(f"trial {n}: no witness with min H > {floor} within bounds", n)
        block = sorted(srl_block(R, Lp, w))
        out.append(
            {
                "trial": n,
                "minH": floor,
                "a": w.a,
                "H": list(w.H),
                "rowSums": [_hsum(g, w.H) for g in Lp.members],
                "block": block,
                "meetsB": any(v in bset for v in block),
            }
        )
        prev_max = max(w.H)
    return JpRobustReport(sub, removed, out)


# -- families of polynomials ----------------------------------------------------

def enumerate_polys(degree_max: int, coeff_max: int) -> list[IntPoly]:
    if degree_max < 1 or coeff_max < 1:
        raise ConfigError("degree and coefficient bounds must be >= 1")
    polys = {
        IntPoly.of(cs)
        for cs in itertools.product(range(coeff_max + 1), repeat=degree_max)
        if any(cs)
    }
    return sorted(polys, key=IntPoly.key)


def enumerate_poly_families(degree_max: int, coeff_max: int, size_max: int) -> list[PolyFamily]:
    """All families of at most ``size_max`` polynomials, by (total weight, lex)
    where a polynomial weighs its degree plus its coefficient sum."""
    if size_max < 1:
        raise ConfigError("size_max must be >= 1")
    polys = enumerate_polys(degree_max, coeff_max)
    fams = [
        PolyFamily(combo)
        for k in range(1, min(size_max, len(polys)) + 1)
        for combo in itertools.combinations(polys, k)
    ]
    fams.sort(key=PolyFamily.sort_key)
    return fams


def superset_cofinal_buckets(
    stream: Sequence[PolyFamily],
    buckets: int,
    horizon: int | None = None,
    targets: Sequence[PolyFamily] | None = None,
) -> list[list[int]]:
    """Disjoint index sets into ``stream`` such that every target family has a
    superset in every bucket.

    Dovetails over (target, bucket) in order; a pair already served by an
    assigned superset is skipped, otherwise the least unassigned index (below
    ``horizon``) holding a superset goes to that bucket.
    """
    if buckets < 1:
        raise ConfigError("buckets must be >= 1")
    horizon = len(stream) if horizon is None else min(horizon, len(stream))
    targets = list(stream[:horizon]) if targets is None else list(targets)
    owner: dict[int, int] = {}
    assigned: list[list[int]] = [[] for _ in range(buckets)]
    for R in targets:
        for i in range(buckets):
            if any(stream[j].issuperset(R) for j in assigned[i]):
                continue
            j = next((j for j in range(horizon) if j not in owner and stream[j].issuperset(R)), None)
            if j is None:
                raise ConfigError(
                    f"horizon {horizon} has no free superset of {R.to_json()} for bucket {i}"
                )
            owner[j] = i
            assigned[i].append(j)
    return [sorted(b) for b in assigned]


@dataclass(frozen=True)
class PpLedgerEntry:
    family: PolyFamily
    a: int
    x: int
    block: tuple
    part: int

    def to_json(self) -> list:
        return [self.family.to_json(), self.a, self.x, list(self.block), self.part]


@dataclass
class PpSplitResult:
    parts: list
    ledger: list
    targets: list
    bounds: dict = field(default_factory=dict)


def pp_split(
    A,
    parts: int,
    degree_max: int,
    coeff_max: int,
    size_max: int,
    a_max: int = 16,
    x_max: int = 16,
    retry_cap: int = 8,
) -> PpSplitResult:
    """Greedy split of ``A`` into ``parts`` disjoint pieces, each containing a
    block ``sr_block(G, a, x)`` for some superset ``G`` of every enumerated
    family (so also ``sr_block(R, a, x)`` itself).

    The superset pool holds families one size larger with coefficients up
    to ``coeff_max + parts - 1``.  Blocks are assigned in stream order; each is the least witness inside
    ``A`` avoiding all earlier blocks, with ``a_max`` and ``x_max`` doubled on
    failure up to ``retry_cap`` times.
    """
    if parts < 1:
        raise ConfigError("parts must be >= 1")
    targets = enumerate_poly_families(degree_max, coeff_max, size_max)
    # supersets come from one size up and ``parts - 1`` extra coefficient
    # values, so even the family of all small polynomials has enough of them
    pool = targets if parts == 1 else enumerate_poly_families(degree_max, coeff_max + parts - 1, size_max + 1)
    buckets = superset_cofinal_buckets(pool, parts, targets=targets)
    part_of = {j: i for i, b in enumerate(buckets) for j in b}
    taken: set = set()
    ledger = []
    per_part: list[list[int]] = [[] for _ in range(parts)]
    for j in sorted(part_of):
        G = pool[j]
        am, xm = a_max, x_max
        hit = pp_witness(A, G, am, xm, taken)
        retries = 0
        while hit is None:
            retries += 1
            if retries > retry_cap:
                raise WitnessExhausted(f"no disjoint witness for family {G.to_json()}", G.to_json())
            am, xm = 2 * am, 2 * xm
            hit = pp_witness(A, G, am, xm, taken)
        a, x = hit
        block = tuple(sorted(sr_block(G, a, x)))
        taken.update(block)
        per_part[part_of[j]].extend(block)
        ledger.append(PpLedgerEntry(G, a, x, block, part_of[j]))
    return PpSplitResult(
        parts=[sorted(p) for p in per_part],
        ledger=ledger,
        targets=targets,
        bounds={
            "parts": parts,
            "degreeMax": degree_max,
            "coeffMax": coeff_max,
            "sizeMax": size_max,
            "aMax": a_max,
            "xMax": x_max,
            "retryCap": retry_cap,
        },
    )


# -- piecewise syndeticity heuristic --------------------------------------------

@dataclass(frozen=True)
class PwsVerdict:
    passed: bool
    window_start: int | None
    gap_bound: int
    window_len: int
    horizon: int

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "windowStart": self.window_start,
            "gapBound": self.gap_bound,
            "windowLen": self.window_len,
            "horizon": self.horizon,
        }


def pws_check(A, gap_bound: int, window_len: int, horizon: int) -> PwsVerdict:
    """Pass iff some window ``[s, s + window_len - 1]`` inside ``1..horizon``
    has a member of ``A`` in each of its length-``gap_bound`` subintervals.
    Advisory evidence only."""
    if gap_bound < 1 or window_len < 1 or horizon < 1:
        raise ConfigError("gap bound, window length and horizon must be >= 1")
    b = min(gap_bound, window_len)
    mask = A.mask(horizon)[1:].astype(np.int64)  # mask[i] <-> value i + 1
    csum = np.concatenate(([0], np.cumsum(mask)))
    n_starts = horizon - b + 1
    if window_len > horizon or n_starts < 1:
        return PwsVerdict(False, None, gap_bound, window_len, horizon)
    ok = (csum[b:] - csum[:-b])[:n_starts] > 0  # ok[t] <-> A meets [t+1, t+b]
    need = window_len - b + 1
    run = 0
    for t, good in enumerate(ok.tolist()):
        run = run + 1 if good else 0
        if run >= need:
            return PwsVerdict(True, t - need + 2, gap_bound, window_len, horizon)
    return PwsVerdict(False, None, gap_bound, window_len, horizon)
