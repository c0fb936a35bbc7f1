"""Command-line harness: every subcommand runs one construction or search,
re-verifies the result independently, and writes a canonical JSON report.

Exit codes: 0 verified, 1 verification failed, 2 usage or configuration
error, 3 search exhausted within the given bounds.  ``LARGENESS_LOG`` sets
the log level (e.g. ``INFO``, ``DEBUG``); logs go to stderr.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

import click

from . import __version__, comb_rich, finite_sums, poly, semigroups, sets, verify
from .errors import ConfigError, IdxOverflowError, LargenessError, SearchExhausted, UniquenessViolation

log = logging.getLogger("largeness")

EXIT_OK, EXIT_FAILED, EXIT_CONFIG, EXIT_EXHAUSTED = 0, 1, 2, 3
INLINE_LIMIT = 4096


class NotFound(Exception):
    """A bounded search came back empty."""


@dataclass(frozen=True)
class RunConfig:
    command: str
    bounds: dict = field(default_factory=dict)
    inputs: dict = field(default_factory=dict)
    seed: int = 0
    output_path: str | None = None

    def validate(self) -> None:
        if self.command not in HANDLERS:
            raise ConfigError(f"unknown command {self.command!r}")
        for name, val in self.bounds.items():
            if not isinstance(val, int) or isinstance(val, bool) or val < 1:
                raise ConfigError(f"bound {name} must be a positive integer, got {val!r}")
        if not isinstance(self.seed, int) or self.seed < 0:
            raise ConfigError("seed must be a non-negative integer")
        if self.inputs.get("set") is not None:
            sets.parse_setspec(self.inputs["set"])

    def to_json(self) -> dict:
        return {"command": self.command, "bounds": self.bounds, "inputs": self.inputs, "seed": self.seed}


@dataclass
class Certificate:
    config: RunConfig
    claim: str = ""
    evidence: dict = field(default_factory=dict)
    verification: verify.Verification | None = None
    status: str = "verified"
    error: dict | None = None

    @property
    def exit_code(self) -> int:
        return {
            "verified": EXIT_OK,
            "verification-failed": EXIT_FAILED,
            "config-error": EXIT_CONFIG,
            "exhausted": EXIT_EXHAUSTED,
        }[self.status]

    def to_json(self) -> dict:
        d = {
            "version": __version__,
            "config": self.config.to_json(),
            "claim": self.claim,
            "restrictedTo": self.config.bounds,
            "evidence": self.evidence,
            "status": self.status,
            "verification": "pass" if self.status == "verified" else "fail",
            "checks": self.verification.to_json() if self.verification else [],
        }
        if self.error is not None:
            d["error"] = self.error
        return d


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True, separators=(",", ": ")) + "\n"


def emit_report(cert: Certificate, path: str | os.PathLike | None) -> str:
    text = canonical_json(cert.to_json())
    if path is None or str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")
    return text


def digest(obj) -> str:
    blob = json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()
    return "sha256:" + hashlib.sha256(blob).hexdigest()


def compact(rows: list) -> dict | list:
    """Inline small lists; replace large ones by a count and content hash."""
    if len(rows) <= INLINE_LIMIT:
        return rows
    return {"count": len(rows), "hash": digest(rows), "head": rows[:8]}


def run(config: RunConfig) -> Certificate:
    cert = Certificate(config)
    try:
        config.validate()
        claim, evidence, ver = HANDLERS[config.command](config)
        cert.claim, cert.evidence, cert.verification = claim, evidence, ver
        cert.status = "verified" if ver.passed else "verification-failed"
    except NotFound as exc:
        cert.status = "exhausted"
        cert.error = {"type": "NotFound", "message": str(exc)}
    except SearchExhausted as exc:
        cert.status = "exhausted"
        cert.error = {"type": type(exc).__name__, "message": str(exc), "stage": _plain(getattr(exc, "stage", None))}
    except UniquenessViolation as exc:
        cert.status = "verification-failed"
        cert.error = {"type": "UniquenessViolation", "message": str(exc), "pair": [list(h) for h in exc.pair]}
    except (ConfigError, IdxOverflowError) as exc:
        cert.status = "config-error"
        cert.error = {"type": type(exc).__name__, "message": str(exc)}
    except LargenessError as exc:
        cert.status = "verification-failed"
        cert.error = {"type": type(exc).__name__, "message": str(exc)}
    log.info("%s: %s", config.command, cert.status)
    return cert


def _plain(obj):
    return json.loads(json.dumps(obj, default=str))


# -- input helpers ------------------------------------------------------------

def _set(cfg: RunConfig) -> sets.SetSpec:
    raw = cfg.inputs.get("set")
    return sets.naturals() if raw is None else sets.parse_setspec(raw)


def _sg(cfg: RunConfig) -> semigroups.Semigroup:
    return semigroups.semigroup_from_key(cfg.inputs.get("semigroup", "nat"))


def _elements(s: semigroups.Semigroup, raw, what: str) -> list:
    if not isinstance(raw, list) or not raw:
        raise ConfigError(f"{what} must be a non-empty JSON list")
    return [s.decode(x) for x in raw]


def _need(cfg: RunConfig, key: str):
    if key not in cfg.inputs or cfg.inputs[key] is None:
        raise ConfigError(f"missing input --{key}")
    return cfg.inputs[key]


def _polys(cfg: RunConfig) -> poly.PolyFamily:
    raw = _need(cfg, "polys")
    if not isinstance(raw, list):
        raise ConfigError("--polys must be a JSON list of coefficient lists")
    return poly.PolyFamily.of(raw)


def _seqs(cfg: RunConfig) -> poly.SeqList:
    raw = _need(cfg, "seqs")
    if not isinstance(raw, list):
        raise ConfigError("--seqs must be a JSON list of sequences")
    return poly.SeqList.of(raw)


def _pool(cfg: RunConfig, s) -> list:
    if cfg.inputs.get("generators") is not None:
        return _elements(s, cfg.inputs["generators"], "--generators")
    A = _set(cfg)
    if A.kind == "fs":
        return list(A.generators)
    raise ConfigError("give --generators or an fs-kind --set")


def _bounds_text(cfg: RunConfig) -> str:
    return ", ".join(f"{k}={v}" for k, v in sorted(cfg.bounds.items()))


# -- handlers ---------------------------------------------------------------------

def _law_check(cfg):
    s = _sg(cfg)
    n = cfg.bounds.get("sampleSize", 24)
    reports = semigroups.check_laws(s, n)
    sample = s.enumerate(n)
    ver = verify.check_law_counts(s, sample, {r.law: r.violation_count for r in reports})
    for r in reports:
        ver.add(f"{r.law}-holds", r.holds, f"{r.checked} cases")
    claim = f"law-check {s.name}: commutative, associative, no idempotent on the first {len(sample)} elements"
    return claim, {"semigroup": s.name, "reports": [r.to_json(s) for r in reports]}, ver


def _cancel_profile(cfg):
    s = _sg(cfg)
    n = cfg.bounds.get("sampleSize", 24)
    prof = semigroups.cancellativity_profile(s, n)
    sample = s.enumerate(n)
    ver = verify.check_cancel_profile(s, sample, prof.histogram, prof.truncated_pairs)
    claim = f"cancel-profile {s.name}: {prof.classification} on the first {len(sample)} elements"
    return claim, {"semigroup": s.name, "profile": prof.to_json(s)}, ver


def _fs(cfg):
    s = _sg(cfg)
    xs = _pool(cfg, s)
    fs = finite_sums.fs_set(s, xs)
    ver = verify.check_fs_table(s, xs, fs.sums)
    return f"fs: {len(fs.sums)} finite sums of {len(xs)} generators", {"fs": fs.to_json()}, ver


def _ip_search(cfg):
    A = _set(cfg)
    depth, horizon = cfg.bounds.get("depth", 5), cfg.bounds.get("horizon", 100)
    xs = finite_sums.ip_witness_search(A, depth, horizon)
    if xs is None:
        raise NotFound(f"no IP witness of depth {depth} among the first {horizon} elements")
    s = A.semigroup
    ver = verify.check_ip_witness(A, xs)
    claim = f"ip-search: all finite sums of a length-{depth} sequence lie in the set ({_bounds_text(cfg)})"
    return claim, {"set": A.to_json(), "generators": [s.encode(x) for x in xs]}, ver


def _ip_split(cfg):
    s = _sg(cfg) if cfg.inputs.get("generators") is not None else _set(cfg).semigroup
    xs = _pool(cfg, s)
    parts, out_len = cfg.bounds.get("parts", 2), cfg.bounds.get("outLen", 3)
    systems = finite_sums.ip_split(s, xs, parts, out_len)
    ver = verify.check_ip_split(s, xs, [f.generators for f in systems], [f.source_indices for f in systems])
    claim = f"ip-split: {parts} parts with pairwise disjoint FS sets inside FS(pool) ({_bounds_text(cfg)})"
    return claim, {"pool": [s.encode(x) for x in xs], "systems": [f.to_json() for f in systems]}, ver


def _subsystem(cfg, unique: bool):
    s = _sg(cfg)
    xs = _pool(cfg, s)
    out_len = cfg.bounds.get("outLen", 3)
    build = finite_sums.ufs_subsystem if unique else finite_sums.ffs_subsystem
    sub = build(s, xs, out_len)
    ver = verify.check_subsystem(s, sub.source, sub.blocks, sub.derived)
    ver.extend(verify.check_ufs(s, sub.derived) if unique else verify.check_ffs(s, sub.derived))
    kind = "uniqueness" if unique else "finiteness"
    claim = f"{'ufs' if unique else 'ffs'}: sum subsystem of length {out_len} with {kind} of finite sums"
    return claim, {"subsystem": sub.to_json(s)}, ver


def _ip_ad(cfg):
    s = _sg(cfg)
    xs = _pool(cfg, s)
    m, trunc = cfg.bounds.get("m", 2), cfg.bounds.get("trunc", 4)
    fam = finite_sums.ip_ad_family(s, xs, m, trunc, cfg.inputs.get("seeds"))
    ys = list(fam.subsystem.derived)
    ver = verify.check_subsystem(s, fam.subsystem.source, fam.subsystem.blocks, fam.subsystem.derived)
    ver.extend(verify.check_ip_ad(s, ys, fam.index_sets))
    for ix, fs in zip(fam.index_sets, fam.systems):
        ver.extend(verify.check_fs_table(s, [ys[t - 1] for t in ix], fs.sums))
    claim = f"ip-ad: {m} FS truncations meeting only in sums with a shared top index ({_bounds_text(cfg)})"
    return claim, {"family": fam.to_json(s)}, ver


def _cr_search(cfg):
    A = _set(cfg)
    L = comb_rich.SeqFamily.of(_need(cfg, "family"))
    a_max = cfg.bounds.get("aMax", 64)
    w = comb_rich.cr_witness_search(A, L, a_max)
    if w is None:
        raise NotFound(f"no (a, H) with a <= {a_max}")
    block = sorted(verify.block_of(L.members, w.a, w.H))
    ver = verify.Verification().add("block-inside-set", all(x in A for x in block), f"block {block}")
    claim = f"cr-search: block of the family inside the set ({_bounds_text(cfg)})"
    return claim, {"family": L.to_json(), "witness": w.to_json(), "block": block}, ver


def _cr_split(cfg):
    A = _set(cfg)
    b = cfg.bounds
    n_max = b.get("nMax", 1)
    sched_raw = cfg.inputs.get("schedule")
    sched = comb_rich.CrSchedule.from_mapping(sched_raw) if sched_raw else comb_rich.CrSchedule.default(n_max)
    res = comb_rich.cr_split(
        A,
        sched,
        n_max,
        b.get("entryHorizon", 2),
        b.get("parts", 2),
        cfg.inputs.get("mode", "disjoint"),
        b.get("aMax", comb_rich.DEFAULT_SPLIT_AMAX),
        b.get("retryCap", comb_rich.DEFAULT_RETRY_CAP),
    )
    ledger_raw = [(e.family.members, e.a, e.H, e.block, e.part) for e in res.ledger]
    ver = verify.check_cr_split(A, [L.members for L in res.enumerated], ledger_raw, res.parts, len(res.parts))
    evidence = {
        "schedule": sched.to_json(),
        "offsets": res.offsets,
        "enumeratedCount": len(res.enumerated),
        "ledger": compact([e.to_json() for e in res.ledger]),
        "parts": [compact(p) for p in res.parts],
    }
    claim = (
        f"cr-split: {len(res.parts)} disjoint parts, each with a block for a translate of every "
        f"enumerated family ({_bounds_text(cfg)})"
    )
    return claim, evidence, ver


def _jp_search(cfg):
    A = _set(cfg)
    R, L = _polys(cfg), _seqs(cfg)
    min_h = int(cfg.inputs.get("minH", 0))
    w = poly.jp_witness_search(
        A, R, L, min_h, cfg.bounds.get("aMax", 100), cfg.bounds.get("sumMax", poly.DEFAULT_SUM_MAX)
    )
    if w is None:
        raise NotFound("no (a, H) within bounds")
    ver = verify.check_srl(A, R.to_json(), L.members, w.a, w.H, min_h)
    block = sorted(poly.srl_block(R, L, w))
    claim = f"jp-search: block a + f(sum_H g) inside the set with min H > {min_h} ({_bounds_text(cfg)})"
    return claim, {"polys": R.to_json(), "seqs": L.to_json(), "witness": w.to_json(), "block": block}, ver


def _jp_robust(cfg):
    A = _set(cfg)
    R, L = _polys(cfg), _seqs(cfg)
    removed = cfg.inputs.get("remove") or []
    rep = poly.jp_minus_finite_demo(
        A, removed, R, L, cfg.bounds.get("trials", 4), cfg.bounds.get("aMax", 100), cfg.bounds.get("sumMax")
    )
    Lp = rep.subsystem.derived
    ver = verify.check_increasing(L.members, rep.subsystem.blocks, Lp.members)
    prev = None
    for t in rep.trials:
        ver.extend(verify.check_srl(A, R.to_json(), Lp.members, t["a"], tuple(t["H"]), t["minH"]))
        if prev is not None:
            ver.add(f"trial-{t['trial']}-row-sums-grow", all(x > y for x, y in zip(t["rowSums"], prev)))
        prev = t["rowSums"]
    claim = (
        f"jp-robust: {rep.avoiding} of {len(rep.trials)} witness blocks avoid the removed set "
        f"({_bounds_text(cfg)})"
    )
    return claim, rep.to_json(), ver


def _pp_search(cfg):
    A = _set(cfg)
    R = _polys(cfg)
    hit = poly.pp_witness(A, R, cfg.bounds.get("aMax", 50), cfg.bounds.get("xMax", 50))
    if hit is None:
        raise NotFound("no (a, x) within bounds")
    a, x = hit
    ver = verify.check_sr(A, R.to_json(), a, x)
    claim = f"pp-search: a + f(x) inside the set for every f ({_bounds_text(cfg)})"
    return claim, {"polys": R.to_json(), "a": a, "x": x, "block": sorted(poly.sr_block(R, a, x))}, ver


def _pp_anchored(cfg):
    A = _set(cfg)
    R = _polys(cfg)
    w = poly.pp_witness_anchored(A, R, cfg.bounds.get("aMax", 50), cfg.bounds.get("xMax", 50))
    if w is None:
        raise NotFound("no anchored witness within bounds")
    ver = verify.check_anchored(A, R.to_json(), w.b, w.x, w.inner_a, w.anchor.to_json())
    claim = f"pp-anchored: b in the set and b + f(x) in the set for every f ({_bounds_text(cfg)})"
    return claim, {"polys": R.to_json(), "witness": w.to_json(), "block": sorted(poly.sr_block(R, w.b, w.x))}, ver


def _pp_split(cfg):
    A = _set(cfg)
    b = cfg.bounds
    res = poly.pp_split(
        A,
        b.get("parts", 2),
        b.get("degreeMax", 2),
        b.get("coeffMax", 2),
        b.get("sizeMax", 2),
        b.get("aMax", 16),
        b.get("xMax", 16),
        b.get("retryCap", 8),
    )
    ledger_raw = [(e.family.to_json(), e.a, e.x, e.block, e.part) for e in res.ledger]
    ver = verify.check_pp_split(A, [R.to_json() for R in res.targets], ledger_raw, res.parts, len(res.parts))
    evidence = {
        "targetCount": len(res.targets),
        "ledger": compact([e.to_json() for e in res.ledger]),
        "parts": [compact(p) for p in res.parts],
    }
    claim = (
        f"pp-split: {len(res.parts)} disjoint parts, each covering every enumerated polynomial family "
        f"({_bounds_text(cfg)})"
    )
    return claim, evidence, ver


def _pvdw(cfg):
    A = _set(cfg)
    R = _polys(cfg)
    ys = _need(cfg, "ys")
    w = poly.pvdw_search(A, R, ys, cfg.bounds.get("aMax", 50))
    if w is None:
        raise NotFound("no (a, H) within bounds")
    ver = verify.check_srl(A, R.to_json(), [tuple(ys)], w.a, w.H)
    evidence = {"polys": R.to_json(), "ys": ys, "witness": w.to_json()}
    if {"gapBound", "windowLen", "horizon"} <= set(cfg.bounds):
        evidence["advisory"] = poly.pws_check(
            A, cfg.bounds["gapBound"], cfg.bounds["windowLen"], cfg.bounds["horizon"]
        ).to_json()
    claim = f"pvdw: a + f(sum_H y) inside the set for every f ({_bounds_text(cfg)})"
    return claim, evidence, ver


def _pws_check(cfg):
    A = _set(cfg)
    gb, wl, hz = cfg.bounds.get("gapBound", 3), cfg.bounds.get("windowLen", 30), cfg.bounds.get("horizon", 1000)
    verdict = poly.pws_check(A, gb, wl, hz)
    if not verdict.passed:
        raise NotFound(f"no window of length {wl} with gaps <= {gb} below {hz}")
    ver = verify.Verification().add("window-recheck", verify.window_exists(A, gb, wl, hz))
    claim = f"pws-check: a window of length {wl} with gaps at most {gb} exists below {hz} (advisory)"
    return claim, {"verdict": verdict.to_json()}, ver


HANDLERS: dict[str, Callable] = {
    "law-check": _law_check,
    "cancel-profile": _cancel_profile,
    "fs": _fs,
    "ip-search": _ip_search,
    "ip-split": _ip_split,
    "ffs": lambda c: _subsystem(c, unique=False),
    "ufs": lambda c: _subsystem(c, unique=True),
    "ip-ad": _ip_ad,
    "cr-search": _cr_search,
    "cr-split": _cr_split,
    "jp-search": _jp_search,
    "jp-robust": _jp_robust,
    "pp-search": _pp_search,
    "pp-anchored": _pp_anchored,
    "pp-split": _pp_split,
    "pvdw": _pvdw,
    "pws-check": _pws_check,
}


# -- click layer ----------------------------------------------------------------

def _load_json_arg(ctx, param, value):
    if value is None:
        return None
    text = value
    if value.startswith("@"):
        try:
            text = Path(value[1:]).read_text(encoding="utf-8")
        except OSError as exc:
            raise click.BadParameter(str(exc)) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise click.BadParameter(f"invalid JSON: {exc.msg}") from exc


def _load_set_arg(ctx, param, value):
    if value is None:
        return None
    if value.lstrip().startswith("{"):
        return _load_json_arg(ctx, param, value)
    return _load_json_arg(ctx, param, "@" + value)


def _common(f):
    f = click.option("--seed", type=click.IntRange(min=0), default=0, show_default=True, help="Recorded seed.")(f)
    f = click.option("--out", "out", type=click.Path(dir_okay=False), default=None, help="Report path (default stdout).")(f)
    f = click.option("--semigroup", default="nat", show_default=True, help="Semigroup key, e.g. nat, ex(4,6).")(f)
    f = click.option("--set", "set_", callback=_load_set_arg, default=None, help="SetSpec JSON file (or inline JSON).")(f)
    return f


def _json_opt(name: str, help_: str):
    return click.option(name, callback=_load_json_arg, default=None, help=help_ + " JSON (inline or @file).")


def _execute(command: str, bounds: dict, inputs: dict, set_, semigroup, out, seed) -> None:
    inputs = dict(inputs)
    inputs["semigroup"] = semigroup
    if set_ is not None:
        inputs["set"] = set_
    inputs = {k: v for k, v in inputs.items() if v is not None}
    bounds = {k: v for k, v in bounds.items() if v is not None}
    cfg = RunConfig(command, bounds, inputs, seed, out)
    cert = run(cfg)
    emit_report(cert, out)
    if cert.status != "verified":
        msg = cert.error["message"] if cert.error else "verification failed"
        click.echo(f"{command}: {cert.status}: {msg}", err=True)
    sys.exit(cert.exit_code)


def _setup_logging() -> None:
    level = os.environ.get("LARGENESS_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


@click.group()
@click.version_option(__version__)
def main():
    """Witness searches, splitters and certificates for largeness notions."""
    _setup_logging()


Pos = click.IntRange(min=1)


@main.command("law-check")
@_common
@click.option("--sample-size", type=Pos, default=24, show_default=True)
def law_check_cmd(set_, semigroup, out, seed, sample_size):
    """Exhaustive commutativity / associativity / idempotent check."""
    _execute("law-check", {"sampleSize": sample_size}, {}, set_, semigroup, out, seed)


@main.command("cancel-profile")
@_common
@click.option("--sample-size", type=Pos, default=24, show_default=True)
def cancel_profile_cmd(set_, semigroup, out, seed, sample_size):
    """Sizes of left solution sets over sampled pairs."""
    _execute("cancel-profile", {"sampleSize": sample_size}, {}, set_, semigroup, out, seed)


@main.command("fs")
@_common
@_json_opt("--generators", "Generator list")
def fs_cmd(set_, semigroup, out, seed, generators):
    """Full finite-sums table of a generator sequence."""
    _execute("fs", {}, {"generators": generators}, set_, semigroup, out, seed)


@main.command("ip-search")
@_common
@click.option("--depth", type=Pos, default=5, show_default=True)
@click.option("--horizon", type=Pos, default=100, show_default=True)
def ip_search_cmd(set_, semigroup, out, seed, depth, horizon):
    """Search for a finite IP witness inside a set."""
    _execute("ip-search", {"depth": depth, "horizon": horizon}, {}, set_, semigroup, out, seed)


@main.command("ip-split")
@_common
@_json_opt("--generators", "Pool of generators")
@click.option("--parts", type=Pos, default=2, show_default=True)
@click.option("--out-len", type=Pos, default=3, show_default=True)
def ip_split_cmd(set_, semigroup, out, seed, generators, parts, out_len):
    """Split FS(pool) into parts with disjoint FS sets."""
    _execute("ip-split", {"parts": parts, "outLen": out_len}, {"generators": generators}, set_, semigroup, out, seed)


@main.command("ffs")
@_common
@_json_opt("--generators", "Source sequence")
@click.option("--out-len", type=Pos, default=3, show_default=True)
def ffs_cmd(set_, semigroup, out, seed, generators, out_len):
    """Sum subsystem with finiteness of finite sums."""
    _execute("ffs", {"outLen": out_len}, {"generators": generators}, set_, semigroup, out, seed)


@main.command("ufs")
@_common
@_json_opt("--generators", "Source sequence")
@click.option("--out-len", type=Pos, default=3, show_default=True)
def ufs_cmd(set_, semigroup, out, seed, generators, out_len):
    """Sum subsystem with uniqueness of finite sums."""
    _execute("ufs", {"outLen": out_len}, {"generators": generators}, set_, semigroup, out, seed)


@main.command("ip-ad")
@_common
@_json_opt("--generators", "Source sequence")
@_json_opt("--seeds", "Branch seeds such as [\"0(1)\", \"(0)\"]")
@click.option("--m", "m", type=Pos, default=2, show_default=True)
@click.option("--trunc", type=Pos, default=4, show_default=True)
def ip_ad_cmd(set_, semigroup, out, seed, generators, seeds, m, trunc):
    """Almost disjoint FS truncations inside FS(source)."""
    _execute("ip-ad", {"m": m, "trunc": trunc}, {"generators": generators, "seeds": seeds}, set_, semigroup, out, seed)


@main.command("cr-search")
@_common
@_json_opt("--family", "Sequence family")
@click.option("--amax", type=Pos, default=64, show_default=True)
def cr_search_cmd(set_, semigroup, out, seed, family, amax):
    """Least (a, H) putting a family's block inside the set."""
    _execute("cr-search", {"aMax": amax}, {"family": family}, set_, semigroup, out, seed)


@main.command("cr-split")
@_common
@_json_opt("--schedule", "Map n -> r_n")
@click.option("--nmax", type=Pos, default=1, show_default=True)
@click.option("--entry-horizon", type=Pos, default=2, show_default=True)
@click.option("--parts", type=Pos, default=2, show_default=True)
@click.option("--mode", type=click.Choice(comb_rich.MODES), default="disjoint", show_default=True)
@click.option("--amax", type=Pos, default=comb_rich.DEFAULT_SPLIT_AMAX, show_default=True)
@click.option("--retry-cap", type=Pos, default=comb_rich.DEFAULT_RETRY_CAP, show_default=True)
def cr_split_cmd(set_, semigroup, out, seed, schedule, nmax, entry_horizon, parts, mode, amax, retry_cap):
    """Greedy split into disjoint parts, each with blocks for every family."""
    bounds = {"nMax": nmax, "entryHorizon": entry_horizon, "parts": parts, "aMax": amax, "retryCap": retry_cap}
    _execute("cr-split", bounds, {"schedule": schedule, "mode": mode}, set_, semigroup, out, seed)


@main.command("jp-search")
@_common
@_json_opt("--polys", "Polynomial family as coefficient lists")
@_json_opt("--seqs", "Sequence list")
@click.option("--min-h", type=click.IntRange(min=0), default=0, show_default=True)
@click.option("--amax", type=Pos, default=100, show_default=True)
@click.option("--sum-max", type=Pos, default=poly.DEFAULT_SUM_MAX, show_default=True)
def jp_search_cmd(set_, semigroup, out, seed, polys, seqs, min_h, amax, sum_max):
    """Least (a, H) with the polynomial block inside the set."""
    _execute(
        "jp-search", {"aMax": amax, "sumMax": sum_max}, {"polys": polys, "seqs": seqs, "minH": min_h},
        set_, semigroup, out, seed,
    )


@main.command("jp-robust")
@_common
@_json_opt("--polys", "Polynomial family as coefficient lists")
@_json_opt("--seqs", "Sequence list")
@_json_opt("--remove", "Finite list of removed values")
@click.option("--trials", type=Pos, default=4, show_default=True)
@click.option("--amax", type=Pos, default=100, show_default=True)
@click.option("--sum-max", type=Pos, default=None)
def jp_robust_cmd(set_, semigroup, out, seed, polys, seqs, remove, trials, amax, sum_max):
    """Witnesses with escalating min H and their overlap with a finite set."""
    _execute(
        "jp-robust", {"trials": trials, "aMax": amax, "sumMax": sum_max},
        {"polys": polys, "seqs": seqs, "remove": remove}, set_, semigroup, out, seed,
    )


@main.command("pp-search")
@_common
@_json_opt("--polys", "Polynomial family as coefficient lists")
@click.option("--amax", type=Pos, default=50, show_default=True)
@click.option("--xmax", type=Pos, default=50, show_default=True)
def pp_search_cmd(set_, semigroup, out, seed, polys, amax, xmax):
    """Least (a, x) with a + f(x) inside the set for all f."""
    _execute("pp-search", {"aMax": amax, "xMax": xmax}, {"polys": polys}, set_, semigroup, out, seed)


@main.command("pp-anchored")
@_common
@_json_opt("--polys", "Polynomial family as coefficient lists")
@click.option("--amax", type=Pos, default=50, show_default=True)
@click.option("--xmax", type=Pos, default=50, show_default=True)
def pp_anchored_cmd(set_, semigroup, out, seed, polys, amax, xmax):
    """Witness (b, x) with b itself in the set."""
    _execute("pp-anchored", {"aMax": amax, "xMax": xmax}, {"polys": polys}, set_, semigroup, out, seed)


@main.command("pp-split")
@_common
@click.option("--parts", type=Pos, default=2, show_default=True)
@click.option("--degree-max", type=Pos, default=2, show_default=True)
@click.option("--coeff-max", type=Pos, default=2, show_default=True)
@click.option("--size-max", type=Pos, default=2, show_default=True)
@click.option("--amax", type=Pos, default=16, show_default=True)
@click.option("--xmax", type=Pos, default=16, show_default=True)
@click.option("--retry-cap", type=Pos, default=8, show_default=True)
def pp_split_cmd(set_, semigroup, out, seed, parts, degree_max, coeff_max, size_max, amax, xmax, retry_cap):
    """Greedy split into disjoint parts covering every polynomial family."""
    bounds = {
        "parts": parts, "degreeMax": degree_max, "coeffMax": coeff_max, "sizeMax": size_max,
        "aMax": amax, "xMax": xmax, "retryCap": retry_cap,
    }
    _execute("pp-split", bounds, {}, set_, semigroup, out, seed)


@main.command("pvdw")
@_common
@_json_opt("--polys", "Polynomial family as coefficient lists")
@_json_opt("--ys", "Sequence y_1..y_k")
@click.option("--amax", type=Pos, default=50, show_default=True)
@click.option("--gap-bound", type=Pos, default=None, help="Advisory syndeticity check (with the next two).")
@click.option("--window-len", type=Pos, default=None)
@click.option("--horizon", type=Pos, default=None)
def pvdw_cmd(set_, semigroup, out, seed, polys, ys, amax, gap_bound, window_len, horizon):
    """Least (a, H) with a + f(sum_H y) inside the set for all f."""
    bounds = {"aMax": amax, "gapBound": gap_bound, "windowLen": window_len, "horizon": horizon}
    _execute("pvdw", bounds, {"polys": polys, "ys": ys}, set_, semigroup, out, seed)


@main.command("pws-check")
@_common
@click.option("--gap-bound", type=Pos, default=3, show_default=True)
@click.option("--window-len", type=Pos, default=30, show_default=True)
@click.option("--horizon", type=Pos, default=1000, show_default=True)
def pws_check_cmd(set_, semigroup, out, seed, gap_bound, window_len, horizon):
    """Desk-scale bounded-gap window check."""
    bounds = {"gapBound": gap_bound, "windowLen": window_len, "horizon": horizon}
    _execute("pws-check", bounds, {}, set_, semigroup, out, seed)


if __name__ == "__main__":  # pragma: no cover
    main()
