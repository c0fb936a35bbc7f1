"""Independent re-checks of constructed witnesses.

Each checker consumes raw outputs (generators, index sets, witness tuples,
blocks) plus set membership, and recomputes everything with its own small
evaluators.  Nothing here calls back into the constructing code.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class Verification:
    checks: list = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> "Verification":
        self.checks.append(Check(name, bool(passed), detail))
        return self

    def extend(self, other: "Verification") -> "Verification":
        self.checks.extend(other.checks)
        return self

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> list:
        return [c.to_json() for c in self.checks]


# -- finite sums ----------------------------------------------------------------

def fs_oracle(add, xs) -> set:
    """FS(x_1..x_k) = FS(x_1..x_{k-1}) ∪ {x_k} ∪ (FS(x_1..x_{k-1}) + x_k)."""
    if not xs:
        return set()
    prev = fs_oracle(add, xs[:-1])
    last = xs[-1]
    return prev | {last} | {add(v, last) for v in prev}


def _fold(add, vals):
    acc = vals[0]
    for v in vals[1:]:
        acc = add(acc, v)
    return acc


def indexed_sums(add, xs) -> dict:
    """Map each non-empty index set (1-based, sorted) to its increasing-order sum."""
    out = {}
    k = len(xs)
    for r in range(1, k + 1):
        for H in itertools.combinations(range(1, k + 1), r):
            out[H] = _fold(add, [xs[t - 1] for t in H])
    return out


def check_fs_table(s, generators, table) -> Verification:
    v = Verification()
    ref = indexed_sums(s.add, list(generators))
    v.add("fs-size", len(table) == 2 ** len(generators) - 1, f"{len(table)} entries")
    bad = [H for H, val in table.items() if H not in ref or not s.eq(ref[H], val)]
    v.add("fs-recompute", not bad, f"first mismatch {list(bad[0])}" if bad else "")
    v.add("fs-oracle", set(ref.values()) == fs_oracle(s.add, list(generators)))
    return v


def check_ip_witness(A, xs) -> Verification:
    s = A.semigroup
    vals = fs_oracle(s.add, list(xs))
    outside = [x for x in vals if x not in A]
    v = Verification()
    v.add("witness-length", len(xs) >= 1, f"{len(xs)} generators")
    v.add("fs-inside-set", not outside, f"{len(outside)} sums outside" if outside else "")
    return v


def check_ip_split(s, pool, generator_lists, source_indices) -> Verification:
    v = Verification()
    used = [i for ix in source_indices for i in ix]
    v.add("distinct-pool-positions", len(used) == len(set(used)))
    v.add(
        "generators-from-pool",
        all(s.eq(pool[i - 1], g) for ix, gens in zip(source_indices, generator_lists) for i, g in zip(ix, gens)),
    )
    fs = [fs_oracle(s.add, list(g)) for g in generator_lists]
    clash = [(i, j) for i, j in itertools.combinations(range(len(fs)), 2) if fs[i] & fs[j]]
    v.add("pairwise-disjoint", not clash, f"parts {clash[0]} meet" if clash else "")
    # each part's sum over H is the sum of the pool over the matching positions
    inside = True
    for ix, gens in zip(source_indices, generator_lists):
        for H, val in indexed_sums(s.add, list(gens)).items():
            pos = sorted(ix[t - 1] for t in H)
            if not s.eq(_fold(s.add, [pool[p - 1] for p in pos]), val):
                inside = False
                break
    v.add("inside-fs-of-pool", inside)
    return v


def check_subsystem(s, source, blocks, derived) -> Verification:
    v = Verification()
    sep = all(max(blocks[i]) < min(blocks[i + 1]) for i in range(len(blocks) - 1))
    v.add("blocks-separated", sep)
    in_range = all(1 <= t <= len(source) for H in blocks for t in H)
    v.add("blocks-in-range", in_range)
    ok = in_range and all(
        s.eq(_fold(s.add, [source[t - 1] for t in sorted(H)]), y) for H, y in zip(blocks, derived)
    )
    v.add("derived-recompute", ok and len(blocks) == len(derived))
    return v


def ffs_violation(s, ys):
    """Least pair with equal sums and different maxima, found by direct grouping."""
    by_val = defaultdict(list)
    for H, val in indexed_sums(s.add, list(ys)).items():
        by_val[val].append(H)
    worst = None
    for Hs in by_val.values():
        for H1, H2 in itertools.combinations(sorted(Hs), 2):
            if H1[-1] != H2[-1]:
                if worst is None or (H1, H2) < worst:
                    worst = (H1, H2)
    return worst


def check_ffs(s, ys) -> Verification:
    bad = ffs_violation(s, ys)
    return Verification().add("ffs", bad is None, f"{bad}" if bad else "")


def check_ufs(s, ys) -> Verification:
    sums = list(indexed_sums(s.add, list(ys)).values())
    distinct = len(set(sums)) == len(sums)
    return Verification().add("ufs", distinct, f"{len(set(sums))} distinct of {len(sums)}")


def check_ip_ad(s, ys, index_sets) -> Verification:
    """Shared sums between two members must come from index sets whose
    largest index is the same and lies in both selections."""
    v = check_ffs(s, ys)
    tables = [indexed_sums(s.add, [ys[t - 1] for t in ix]) for ix in index_sets]
    ok = True
    detail = ""
    sizes = []
    bounded = True
    for i, j in itertools.combinations(range(len(index_sets)), 2):
        shared_idx = set(index_sets[i]) & set(index_sets[j])
        vals_i = defaultdict(list)
        for H, val in tables[i].items():
            vals_i[val].append(index_sets[i][H[-1] - 1])
        shared_vals = set()
        for H, val in tables[j].items():
            if val in vals_i:
                shared_vals.add(val)
                top_j = index_sets[j][H[-1] - 1]
                if any(top_i != top_j or top_i not in shared_idx for top_i in vals_i[val]):
                    ok = False
                    detail = f"members {i} and {j} share {val!r} without a shared top index"
        sizes.append([i, j, len(shared_vals), len(shared_idx)])
        bounded = bounded and len(shared_vals) <= 2 ** len(shared_idx) - 1
    v.add("shared-sums-have-shared-top-index", ok, detail)
    # [i, j, |FS_i ∩ FS_j|, |shared indices|]; shared sums are sums over shared indices
    v.add("intersection-within-shared-sums", bounded, str(sizes))
    return v


# -- combinatorially rich -------------------------------------------------------

def block_of(rows, a, H) -> set:
    return {a + sum(r[t - 1] for t in H) for r in rows}


def check_cr_split(A, enumerated, ledger, parts, parts_count) -> Verification:
    """``enumerated``: list of row tuples; ``ledger``: (rows, a, H, block, part)."""
    v = Verification()
    seen: dict = {}
    clash = None
    recompute_ok = True
    inside_ok = True
    for rows, a, H, block, part in ledger:
        if block_of(rows, a, H) != set(block):
            recompute_ok = False
        if any(x not in A for x in block):
            inside_ok = False
        for x in block:
            if x in seen and clash is None:
                clash = (seen[x], rows, x)
            seen[x] = rows
    v.add("blocks-recompute", recompute_ok)
    v.add("blocks-inside-set", inside_ok)
    v.add("blocks-disjoint", clash is None, f"value {clash[2]} reused" if clash else "")
    claimed = [set() for _ in range(parts_count)]
    for rows, a, H, block, part in ledger:
        if part is not None:
            claimed[part].update(block)
    v.add("parts-match-ledger", [sorted(c) for c in claimed] == [sorted(p) for p in parts])

    def normal(rows):
        low = min(min(r) for r in rows)
        return tuple(tuple(x - low for x in r) for r in rows), low

    best: dict = {}  # (class, part) -> largest base offset available
    for rows, a, H, block, part in ledger:
        if part is None:
            continue
        cls, low = normal(rows)
        key = (cls, part)
        best[key] = max(best.get(key, low), low)
    missing = 0
    first = None
    for rows in enumerated:
        cls, low = normal(rows)
        for p in range(parts_count):
            if best.get((cls, p), low) <= low:
                missing += 1
                if first is None:
                    first = (rows, p)
    v.add(
        "per-part-translate-coverage",
        missing == 0,
        f"{missing} (family, part) pairs uncovered, first {first}" if missing else f"{len(enumerated)} families x {parts_count} parts",
    )
    return v


# -- polynomial ---------------------------------------------------------------

def peval(coeffs, x) -> int:
    return sum(c * x ** (k + 1) for k, c in enumerate(coeffs))


def check_srl(A, polys, rows, a, H, min_h=0) -> Verification:
    vals = {a + peval(f, sum(g[t - 1] for t in H)) for f in polys for g in rows}
    v = Verification()
    v.add("H-above-floor", bool(H) and min(H) > min_h)
    v.add("block-inside-set", all(x in A for x in vals), f"block {sorted(vals)}")
    return v


def check_sr(A, polys, a, x) -> Verification:
    vals = {a + peval(f, x) for f in polys}
    return Verification().add("block-inside-set", all(y in A for y in vals), f"block {sorted(vals)}")


def check_anchored(A, polys, b, x, inner_a, anchor) -> Verification:
    v = check_sr(A, polys, b, x)
    v.add("anchor-in-set", b in A)
    v.add("anchor-from-shifted-witness", b == inner_a + peval(anchor, x))
    return v


def check_increasing(rows, blocks, derived) -> Verification:
    v = Verification()
    v.add("blocks-separated", all(max(blocks[i]) < min(blocks[i + 1]) for i in range(len(blocks) - 1)))
    sums = [[sum(r[t - 1] for t in K) for K in blocks] for r in rows]
    v.add("derived-recompute", [list(d) for d in derived] == sums)
    v.add("row-sums-increase", all(s[i] < s[i + 1] for s in sums for i in range(len(s) - 1)))
    return v


def check_pp_split(A, targets, ledger, parts, parts_count) -> Verification:
    """``targets``: list of polynomial lists; ``ledger``: (polys, a, x, block, part)."""
    v = Verification()
    seen: set = set()
    disjoint = True
    recompute = True
    for polys, a, x, block, part in ledger:
        if {a + peval(f, x) for f in polys} != set(block):
            recompute = False
        if seen & set(block):
            disjoint = False
        seen |= set(block)
    v.add("blocks-recompute", recompute)
    v.add("blocks-disjoint", disjoint)
    v.add("blocks-inside-set", all(y in A for y in seen))
    claimed = [set() for _ in range(parts_count)]
    for polys, a, x, block, part in ledger:
        claimed[part].update(block)
    v.add("parts-match-ledger", [sorted(c) for c in claimed] == [sorted(p) for p in parts])
    missing = []
    for R in targets:
        Rset = {tuple(f) for f in R}
        for p in range(parts_count):
            hit = any(
                part == p
                and Rset <= {tuple(f) for f in polys}
                and {a + peval(f, x) for f in R} <= set(block)
                for polys, a, x, block, part in ledger
            )
            if not hit:
                missing.append((R, p))
    v.add(
        "per-part-coverage",
        not missing,
        f"first uncovered {missing[0]}" if missing else f"{len(targets)} families x {parts_count} parts",
    )
    return v


# -- semigroup laws ---------------------------------------------------------------

def law_counts(s, sample) -> dict:
    """Plain triple loop: violation counts of each law over ``sample``."""
    comm = assoc = idem = 0
    for x in sample:
        if s.add(x, x) == x:
            idem += 1
        for y in sample:
            xy = s.add(x, y)
            if xy != s.add(y, x):
                comm += 1
            for z in sample:
                if s.add(xy, z) != s.add(x, s.add(y, z)):
                    assoc += 1
    return {"commutative": comm, "associative": assoc, "no-idempotent": idem}


def check_law_counts(s, sample, claimed: dict) -> Verification:
    ref = law_counts(s, sample)
    v = Verification()
    for law, n in ref.items():
        v.add(f"{law}-recount", claimed.get(law) == n, f"{n} violations")
    return v


def check_cancel_profile(s, sample, histogram: dict, truncated_pairs) -> Verification:
    universe = s.enumerate(min(s.horizon(), 4096))
    trunc = {tuple(p) for p in truncated_pairs}
    hist: dict = defaultdict(int)
    trunc_ok = True
    for a in sample:
        for b in sample:
            n = sum(1 for x in universe if s.add(a, x) == b)
            if (a, b) in trunc:
                trunc_ok = trunc_ok and n > 0
            else:
                hist[n] += 1
    v = Verification()
    v.add("finite-solution-sizes", dict(hist) == {int(k): c for k, c in histogram.items()})
    v.add("truncated-sets-nonempty", trunc_ok)
    return v


def window_exists(A, gap_bound: int, window_len: int, horizon: int) -> bool:
    """Brute force: some window in 1..horizon with a member in every length-b stretch."""
    b = min(gap_bound, window_len)
    for s in range(1, horizon - window_len + 2):
        if all(any((t + u) in A for u in range(b)) for t in range(s, s + window_len - b + 1)):
            return True
    return False
