"""Executable commutative semigroups and brute-force law checkers.

Instances
---------
``Naturals``
    (N, +) with N = {1, 2, ...}; Python ints, so values never overflow.
``OrdinalLevels``
    The semigroup on elements alpha_n (a level alpha and an index n >= 1) with
    alpha_n + beta_m = the element of larger level, and alpha_n + alpha_m =
    alpha_{n+m}.  Levels are truncated to ``level_bound`` for enumeration;
    the operation itself is total on every representable pair.
``MaxSemigroup``, ``LeftProjection``
    Finite fixtures: max on {1..n} (every element idempotent) and x * y = x
    (associative but not commutative).
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, NamedTuple

import numpy as np

from . import kernels
from .errors import ConfigError, IdxOverflowError

IDX_MAX = (1 << 61) - 1


class ExElement(NamedTuple):
    level: int
    idx: int

    def __repr__(self) -> str:
        return f"{self.level}_{self.idx}"


@dataclass(frozen=True)
class Solutions:
    """Left solution set {x : a + x = b} cut at the instance's horizon."""

    elements: frozenset
    truncated: bool = False

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements


class Semigroup:
    """Base class.  Subclasses implement ``add``, ``enumerate`` and ``key``.

    ``enumerate(limit)`` returns the first ``limit`` elements in the
    instance's fixed order; ``key`` maps an element to its position in that
    order (used for every least-first tie break).
    """

    name = "semigroup"
    finite = False

    def add(self, x, y):
        raise NotImplementedError

    def eq(self, x, y) -> bool:
        return x == y

    def enumerate(self, limit: int) -> list:
        raise NotImplementedError

    def key(self, x):
        return x

    def is_element(self, x) -> bool:
        return True

    def horizon(self) -> int:
        """Number of elements ``solve_left`` scans when filtering."""
        return 10_000

    def solve_left(self, a, b) -> Solutions:
        """Direct filtration of the enumerated universe."""
        universe = self.enumerate(self.horizon())
        found = frozenset(x for x in universe if self.eq(self.add(a, x), b))
        return Solutions(found, truncated=not self.finite)

    def fold(self, xs):
        it = iter(xs)
        acc = next(it)
        for x in it:
            acc = self.add(acc, x)
        return acc

    def encode(self, x) -> Any:
        return x

    def decode(self, raw) -> Any:
        return raw

    def __repr__(self) -> str:
        return self.name


class Naturals(Semigroup):
    name = "nat"

    def add(self, x: int, y: int) -> int:
        return x + y

    def enumerate(self, limit: int) -> list[int]:
        return list(range(1, limit + 1))

    def is_element(self, x) -> bool:
        return isinstance(x, (int, np.integer)) and not isinstance(x, bool) and x >= 1

    def solve_left(self, a: int, b: int) -> Solutions:
        return Solutions(frozenset([b - a]) if b > a else frozenset())

    def decode(self, raw) -> int:
        if not self.is_element(raw):
            raise ConfigError(f"{raw!r} is not a positive integer")
        return int(raw)


class OrdinalLevels(Semigroup):
    """Levels ``0 .. level_bound-1`` by indices ``1 .. idx_bound`` for enumeration."""

    finite = False

    def __init__(self, level_bound: int, idx_bound: int):
        if level_bound < 1 or idx_bound < 1:
            raise ConfigError("ex(levelBound, idxBound) needs both bounds >= 1")
        if idx_bound > IDX_MAX:
            raise ConfigError(f"idx_bound exceeds {IDX_MAX}")
        self.level_bound = level_bound
        self.idx_bound = idx_bound
        self.name = f"ex({level_bound},{idx_bound})"

    def add(self, x: ExElement, y: ExElement) -> ExElement:
        if x.level < y.level:
            return y
        if y.level < x.level:
            return x
        idx = x.idx + y.idx
        if idx > IDX_MAX:
            raise IdxOverflowError(f"{x!r} + {y!r}: index {idx} exceeds {IDX_MAX}")
        return ExElement(x.level, idx)

    def enumerate(self, limit: int) -> list[ExElement]:
        out = []
        for level in range(self.level_bound):
            for idx in range(1, self.idx_bound + 1):
                if len(out) >= limit:
                    return out
                out.append(ExElement(level, idx))
        return out

    def key(self, x: ExElement):
        return (x.level, x.idx)

    def is_element(self, x) -> bool:
        return isinstance(x, tuple) and len(x) == 2 and x[0] >= 0 and 1 <= x[1] <= IDX_MAX

    def horizon(self) -> int:
        return self.level_bound * self.idx_bound

    def solve_left(self, a: ExElement, b: ExElement) -> Solutions:
        if a.level < b.level:
            return Solutions(frozenset([b]))
        if a.level > b.level:
            return Solutions(frozenset())
        if a.idx < b.idx:
            return Solutions(frozenset([ExElement(a.level, b.idx - a.idx)]))
        if a.idx > b.idx:
            return Solutions(frozenset())
        # a == b: every element of a strictly lower level; infinite unless level 0
        below = frozenset(
            ExElement(g, k) for g in range(a.level) for k in range(1, self.idx_bound + 1)
        )
        return Solutions(below, truncated=a.level > 0)

    def encode(self, x: ExElement) -> list[int]:
        return [x.level, x.idx]

    def decode(self, raw) -> ExElement:
        if not (isinstance(raw, (list, tuple)) and len(raw) == 2 and self.is_element(tuple(raw))):
            raise ConfigError(f"{raw!r} is not a [level, idx] pair")
        return ExElement(int(raw[0]), int(raw[1]))


class MaxSemigroup(Semigroup):
    finite = True

    def __init__(self, n: int):
        self.n = n
        self.name = f"max({n})"

    def add(self, x: int, y: int) -> int:
        return max(x, y)

    def enumerate(self, limit: int) -> list[int]:
        return list(range(1, min(limit, self.n) + 1))

    def is_element(self, x) -> bool:
        return isinstance(x, int) and 1 <= x <= self.n

    def horizon(self) -> int:
        return self.n


class LeftProjection(Semigroup):
    """x * y = x.  Not commutative; a fixture for the law checker."""

    finite = True

    def __init__(self, n: int):
        self.n = n
        self.name = f"leftproj({n})"

    def add(self, x: int, y: int) -> int:
        return x

    def enumerate(self, limit: int) -> list[int]:
        return list(range(1, min(limit, self.n) + 1))

    def is_element(self, x) -> bool:
        return isinstance(x, int) and 1 <= x <= self.n

    def horizon(self) -> int:
        return self.n


NAT = Naturals()

_KEY_RE = re.compile(r"^\s*(nat|ex|max|leftproj)\s*(?:\(\s*([\d\s,]*)\))?\s*$")


def semigroup_from_key(key: str) -> Semigroup:
    """``"nat"``, ``"ex(4,6)"``, ``"max(10)"`` or ``"leftproj(5)"``."""
    m = _KEY_RE.match(key or "")
    if not m:
        raise ConfigError(f"unknown semigroup key {key!r}")
    kind, args = m.group(1), m.group(2)
    nums = [int(a) for a in args.split(",") if a.strip()] if args else []
    if kind == "nat" and not nums:
        return NAT
    if kind == "ex" and len(nums) == 2:
        return OrdinalLevels(*nums)
    if kind == "max" and len(nums) == 1:
        return MaxSemigroup(nums[0])
    if kind == "leftproj" and len(nums) == 1:
        return LeftProjection(nums[0])
    raise ConfigError(f"bad arguments in semigroup key {key!r}")


def sg_add(s: Semigroup, x, y):
    return s.add(x, y)


def sg_solve_left(s: Semigroup, a, b) -> Solutions:
    return s.solve_left(a, b)


@dataclass
class LawReport:
    law: str
    sample_size: int
    checked: int
    violation_count: int = 0
    violations: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.violation_count == 0

    def to_json(self, s: Semigroup) -> dict:
        return {
            "law": self.law,
            "sampleSize": self.sample_size,
            "checked": self.checked,
            "violationCount": self.violation_count,
            "violations": [[s.encode(x) for x in t] for t in self.violations],
            "holds": self.holds,
        }


def check_laws(s: Semigroup, sample_size: int, max_report: int = 20, use_kernel: bool = True) -> list[LawReport]:
    """Commutativity, associativity and absence of idempotents over all
    pairs/triples of the first ``sample_size`` enumerated elements."""
    if sample_size < 1:
        raise ConfigError("sample_size must be >= 1")
    sample = s.enumerate(sample_size)
    n = len(sample)
    if use_kernel and isinstance(s, OrdinalLevels):
        levels = [x.level for x in sample]
        idxs = [x.idx for x in sample]
        cn, cex, an, aex, idn, iex = kernels.ex_law_scan(levels, idxs, max_report)
        pick = lambda t: tuple(sample[i] for i in t)  # noqa: E731
        return [
            LawReport("commutative", n, n * n, int(cn), [pick(t) for t in cex]),
            LawReport("associative", n, n ** 3, int(an), [pick(t) for t in aex]),
            LawReport("no-idempotent", n, n, int(idn), [pick(t) for t in iex]),
        ]
    return _check_laws_generic(s, sample, max_report)


def _check_laws_generic(s: Semigroup, sample: list, max_report: int) -> list[LawReport]:
    n = len(sample)
    comm = LawReport("commutative", n, n * n)
    assoc = LawReport("associative", n, n ** 3)
    idem = LawReport("no-idempotent", n, n)

    def hit(report, t):
        report.violation_count += 1
        if len(report.violations) < max_report:
            report.violations.append(t)

    for x in sample:
        if s.eq(s.add(x, x), x):
            hit(idem, (x,))
    for x, y in itertools.product(sample, repeat=2):
        xy = s.add(x, y)
        if not s.eq(xy, s.add(y, x)):
            hit(comm, (x, y))
        for z in sample:
            if not s.eq(s.add(xy, z), s.add(x, s.add(y, z))):
                hit(assoc, (x, y, z))
    return [comm, assoc, idem]


@dataclass
class CancelProfile:
    """Distribution of |{x : a + x = b}| over sampled pairs (a, b)."""

    sample_size: int
    histogram: dict[int, int]
    truncated_pairs: list[tuple]
    max_finite_size: int

    @property
    def left_cancellative(self) -> bool:
        return not self.truncated_pairs and self.max_finite_size <= 1

    @property
    def weakly_left_cancellative(self) -> bool:
        return not self.truncated_pairs

    @property
    def classification(self) -> str:
        if self.left_cancellative:
            return "left-cancellative"
        if self.weakly_left_cancellative:
            return "weakly-left-cancellative"
        return "not-weakly-left-cancellative"

    def as_law_report(self) -> LawReport:
        return LawReport(
            "weak-left-cancellative-profile",
            self.sample_size,
            self.sample_size ** 2,
            len(self.truncated_pairs),
            list(self.truncated_pairs[:20]),
        )

    def to_json(self, s: Semigroup) -> dict:
        return {
            "sampleSize": self.sample_size,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "truncatedCount": len(self.truncated_pairs),
            "truncatedPairs": [[s.encode(a), s.encode(b)] for a, b in self.truncated_pairs],
            "maxFiniteSize": self.max_finite_size,
            "classification": self.classification,
        }


def cancellativity_profile(s: Semigroup, sample_size: int) -> CancelProfile:
    if sample_size < 1:
        raise ConfigError("sample_size must be >= 1")
    sample = s.enumerate(sample_size)
    hist: Counter = Counter()
    truncated = []
    biggest = 0
    for a, b in itertools.product(sample, repeat=2):
        sol = s.solve_left(a, b)
        if sol.truncated:
            truncated.append((a, b))
        else:
            hist[len(sol)] += 1
            biggest = max(biggest, len(sol))
    return CancelProfile(len(sample), dict(hist), truncated, biggest)
